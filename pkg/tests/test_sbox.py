import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from srsscrypt.chaos import LogisticParams
from srsscrypt.errors import IndexOutOfRange, InvalidParams, NotBijective, ParseError
from srsscrypt.sbox import (
    SBox,
    aes_sbox,
    default_sbox_set,
    generate_chaotic_sbox,
    identity_sbox,
    invert,
    lookup,
    parse_sbox,
    serialize_sbox,
    validate,
)

from oracles import aes_sbox_from_field

AES_FROM_FIELD = aes_sbox_from_field()


def test_embedded_aes_matches_field_construction():
    assert aes_sbox().flat.tolist() == AES_FROM_FIELD


def test_validate():
    assert validate(list(range(256))) == identity_sbox()
    assert validate(AES_FROM_FIELD) == aes_sbox()
    bad = list(range(256))
    bad[5] = 0
    with pytest.raises(NotBijective) as err:
        validate(bad)
    assert err.value.duplicate == 0
    with pytest.raises(InvalidParams):
        validate(list(range(255)))
    with pytest.raises(InvalidParams):
        validate([v + 1 for v in range(256)])


def test_table_is_read_only():
    with pytest.raises(ValueError):
        aes_sbox().flat[0] = 1


def test_lookup():
    assert lookup(identity_sbox(), 10, 11) == 171
    assert lookup(aes_sbox(), 0, 0) == 0x63
    assert aes_sbox().grid[0xA, 0xB] == aes_sbox().lookup(0xA, 0xB)
    for p, q in [(16, 0), (0, 16), (-1, 0)]:
        with pytest.raises(IndexOutOfRange):
            lookup(aes_sbox(), p, q)


def test_inverse():
    assert np.array_equal(identity_sbox().inverse(), np.arange(256))
    assert aes_sbox().inverse()[0x63] == 0x00
    fwd, inv = aes_sbox().flat, aes_sbox().inverse()
    for v in range(256):
        assert inv[fwd[v]] == v
        assert fwd[inv[v]] == v
    assert invert(invert(aes_sbox())) == aes_sbox()


def test_chaotic_sbox():
    k = LogisticParams(3.99, 0.37, 1000)
    a = generate_chaotic_sbox(k)
    assert a == generate_chaotic_sbox(k)
    assert sorted(a.flat.tolist()) == list(range(256))
    assert a != generate_chaotic_sbox(LogisticParams(3.99, 0.38, 1000))


@settings(max_examples=30, deadline=None)
@given(st.floats(3.6, 3.9999), st.floats(0.001, 0.999), st.integers(0, 200))
def test_chaotic_sbox_always_valid_and_invertible(mu, x0, discard):
    s = generate_chaotic_sbox(LogisticParams(mu, x0, discard))
    assert np.array_equal(s.inverse()[s.flat], np.arange(256))


def test_default_set():
    boxes = default_sbox_set()
    assert len(boxes) == 3 and boxes[0] == aes_sbox()
    assert len({b.flat.tobytes() for b in boxes}) == 3


def test_serialize_format():
    text = serialize_sbox(identity_sbox())
    assert text.startswith("00 01 02 03")
    lines = text.splitlines()
    assert len(lines) == 16 and all(len(line.split()) == 16 for line in lines)
    assert lines[15].endswith("fe ff")


def test_parse_round_trip_and_comments():
    text = "# the AES box\n" + serialize_sbox(aes_sbox()).upper().replace(" ", "\t")
    assert parse_sbox(text) == aes_sbox()


@pytest.mark.parametrize("text", [
    " ".join(f"{v:02x}" for v in range(255)),
    " ".join(f"{v:02x}" for v in range(256)) + " 00",
    " ".join(f"{v:02x}" for v in range(255)) + " zz",
    " ".join(f"{v:02x}" for v in range(255)) + " 100",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_sbox(text)


def test_parse_rejects_duplicates():
    with pytest.raises(NotBijective):
        parse_sbox(" ".join(["00"] * 256))


@settings(max_examples=30, deadline=None)
@given(st.permutations(list(range(256))))
def test_round_trip_any_permutation(perm):
    s = SBox(perm)
    assert parse_sbox(serialize_sbox(s)) == s
