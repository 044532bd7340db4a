import numpy as np
import pytest

from srsscrypt import LogisticParams, SrssKey, _fallback

try:
    from srsscrypt import _kernels
except ImportError:  # pure-Python install
    _kernels = None

BACKENDS = [pytest.param(_fallback, id="python")]
if _kernels is not None:
    BACKENDS.append(pytest.param(_kernels, id="compiled"))


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param


def random_key(rng, sbox=None, distinct=False):
    mods = (rng.choice(256, size=3, replace=False) if distinct else rng.integers(0, 256, size=3)).tolist()
    chaos = LogisticParams(float(rng.uniform(3.9, 3.9999)), float(rng.uniform(0.01, 0.99)),
                           int(rng.integers(0, 2000)))
    kwargs = {} if sbox is None else {"sbox": sbox}
    return SrssKey(chaos, *mods, **kwargs)


@pytest.fixture
def rng():
    return np.random.default_rng(20241016)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
