"""Chaos-driven single-round single-S-box image encryption and its analysis tools."""

from ._backend import BACKEND
from .analysis import (
    GlcmConfig,
    SecurityReport,
    build_report,
    glcm,
    glcm_contrast,
    glcm_correlation,
    glcm_energy,
    glcm_homogeneity,
    histogram,
    key_space,
    shannon_entropy,
)
from .baselines import (
    decrypt_multi_round,
    decrypt_multi_sbox,
    decrypt_single_sbox,
    encrypt_multi_round,
    encrypt_multi_sbox,
    encrypt_single_sbox,
)
from .chaos import (
    DEFAULT_PARAMS,
    LogisticParams,
    generate_index_sequence,
    generate_operation_sequence,
    iterate_logistic,
    quantize_to_trits,
)
from .errors import (
    DegenerateOrbit,
    EmptyImage,
    IndexOutOfRange,
    InvalidKey,
    InvalidParams,
    InvalidTrit,
    NoPairs,
    NotBijective,
    ParseError,
    SrssError,
    ZeroVariance,
)
from .image import nibble_split
from .imgio import read_pgm, synth, write_pgm
from .sbox import (
    SBox,
    aes_sbox,
    default_sbox_set,
    generate_chaotic_sbox,
    identity_sbox,
    invert,
    parse_sbox,
    serialize_sbox,
    validate,
)
from .srss import SrssKey, cross_apply, srss_decrypt, srss_encrypt

__version__ = "0.1.0"
