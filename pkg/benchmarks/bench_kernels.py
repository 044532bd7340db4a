"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--size 512] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from srsscrypt import _fallback
from srsscrypt.sbox import aes_sbox

try:
    from srsscrypt import _kernels
except ImportError:
    _kernels = None


def cases(size):
    rng = np.random.default_rng(0)
    img = rng.integers(0, 256, (size, size), dtype=np.uint8)
    ops = rng.integers(0, 3, img.size).astype(np.int64)
    mods = np.array([0x0F, 0xF0, 0xAA], dtype=np.uint8)
    binned = (img >> 5).astype(np.uint8)
    box = aes_sbox()
    return {
        "logistic_orbit": lambda k: k.logistic_orbit(3.99, 0.37, 1000, img.size),
        "srss_forward": lambda k: k.srss_forward(img, box.flat, mods, ops),
        "srss_inverse": lambda k: k.srss_inverse(img, box.inverse(), mods, ops),
        "glcm_counts": lambda k: k.glcm_counts(binned, 8, 0, 1),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=512, help="image side length")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = [("python", _fallback)] + ([("compiled", _kernels)] if _kernels else [])
    print(f"{args.size}x{args.size} image, best of {args.repeat}")
    print(f"{'kernel':<16}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for name, fn in cases(args.size).items():
        times = [min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)) for _, mod in backends]
        row = f"{name:<16}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)
    if _kernels is None:
        print("compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
