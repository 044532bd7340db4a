"""Kernel selection.

The compiled extension is used when it imports; ``SRSSCRYPT_PURE_PYTHON=1``
forces the numpy fallback.
"""

import os

from . import _fallback

if os.environ.get("SRSSCRYPT_PURE_PYTHON", "") not in ("", "0"):
    kernels = _fallback
else:
    try:
        from . import _kernels as kernels
    except ImportError:  # extension not built
        kernels = _fallback

BACKEND = "compiled" if kernels is not _fallback else "python"
