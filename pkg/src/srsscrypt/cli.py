"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 validation error (bad key, S-box,
file), 4 runtime error (degenerate chaotic orbit, ...).
"""

from __future__ import annotations

import argparse
import logging
import sys

import numpy as np

from . import analysis, baselines, imgio
from .chaos import LogisticParams, generate_operation_sequence
from .errors import SrssRuntimeError, ValidationError
from .sbox import default_sbox_set, generate_chaotic_sbox, load_sbox, serialize_sbox
from .srss import SrssKey, load_key, serialize_key, srss_decrypt, srss_encrypt

log = logging.getLogger("srsscrypt")

SCHEMES = ("srss", "single", "multi", "multiround")


class UsageError(Exception):
    pass


def _warn_weak_key(key: SrssKey) -> None:
    if key.m1 == key.m2 == key.m3:
        log.warning("m1 == m2 == m3: the operation selector has no effect")
    if not key.chaos.chaotic:
        log.warning("mu = %r lies outside the chaotic band [3.57, 4)", key.chaos.mu)


def _sboxes(arg: str | None):
    if not arg:
        return default_sbox_set()
    return [load_sbox(part.strip()) for part in arg.split(",") if part.strip()]


def _rounds(args) -> int:
    if args.rounds < 1:
        raise UsageError("--rounds must be at least 1")
    return args.rounds


def _apply(args, decrypt: bool):
    img = imgio.load_pgm(args.inp)
    key = load_key(args.key)
    _warn_weak_key(key)
    scheme = args.scheme
    if scheme == "srss":
        out = (srss_decrypt if decrypt else srss_encrypt)(img, key)
    elif scheme == "single":
        fn = baselines.decrypt_single_sbox if decrypt else baselines.encrypt_single_sbox
        out = fn(img, key.sbox)
    elif scheme == "multi":
        fn = baselines.decrypt_multi_sbox if decrypt else baselines.encrypt_multi_sbox
        out = fn(img, _sboxes(args.sboxes), key.chaos)
    else:
        sboxes, rounds = _sboxes(args.sboxes), _rounds(args)
        if decrypt:
            out = baselines.decrypt_multi_round(img, sboxes, rounds, key.chaos)
        else:
            out = baselines.encrypt_multi_round(img, sboxes, rounds, key.chaos)[-1]
    imgio.save_pgm(args.out, out, "P2" if args.ascii else "P5")
    return 0


def _glcm_config(args) -> analysis.GlcmConfig:
    try:
        dr, dc = (int(v) for v in args.glcm_offset.split(","))
    except ValueError:
        raise UsageError(f"--glcm-offset expects 'dr,dc', got {args.glcm_offset!r}") from None
    return analysis.GlcmConfig(levels=args.glcm_levels, offset=(dr, dc), symmetric=args.symmetric)


def _emit(rows, args) -> None:
    sys.stdout.write(analysis.format_table(rows))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(analysis.reports_to_csv(rows))


def cmd_analyze(args):
    cfg = _glcm_config(args)
    img = imgio.load_pgm(args.inp)
    _emit([(args.inp, analysis.build_report(img, cfg))], args)
    return 0


def cmd_compare(args):
    cfg = _glcm_config(args)
    plain = imgio.load_pgm(args.plain)
    schemes = [s.strip() for s in args.schemes.split(",") if s.strip()]
    unknown = [s for s in schemes if s not in SCHEMES]
    if unknown:
        raise UsageError(f"unknown scheme(s): {', '.join(unknown)}")
    key = load_key(args.key)
    _warn_weak_key(key)
    rows = [("plain", analysis.build_report(plain, cfg))]
    for scheme in schemes:
        if scheme == "srss":
            rows.append(("srss", analysis.build_report(srss_encrypt(plain, key), cfg)))
        elif scheme == "single":
            rows.append(("single", analysis.build_report(baselines.encrypt_single_sbox(plain, key.sbox), cfg)))
        elif scheme == "multi":
            out = baselines.encrypt_multi_sbox(plain, _sboxes(args.sboxes), key.chaos)
            rows.append(("multi", analysis.build_report(out, cfg)))
        else:
            outs = baselines.encrypt_multi_round(plain, _sboxes(args.sboxes), _rounds(args), key.chaos)
            rows.extend((f"round{r}", analysis.build_report(o, cfg)) for r, o in enumerate(outs, 1))
    _emit(rows, args)
    return 0


def cmd_gen_sbox(args):
    sbox = generate_chaotic_sbox(LogisticParams(args.mu, args.x0, args.discard))
    text = f"# chaotic S-box: mu={args.mu!r} x0={args.x0!r} discard={args.discard}\n" + serialize_sbox(sbox)
    _write_text(args.out, text)
    return 0


def cmd_gen_image(args):
    try:
        width, height = (int(v) for v in args.size.lower().split("x"))
    except ValueError:
        raise UsageError(f"--size expects WIDTHxHEIGHT, got {args.size!r}") from None
    img = imgio.synth(args.kind, width, height, args.seed, value=args.value, cell=args.cell)
    imgio.save_pgm(args.out, img, "P2" if args.ascii else "P5")
    return 0


def _balanced(params: LogisticParams, n: int = 10_000) -> bool:
    # periodic windows inside the chaotic band give lopsided or constant selectors
    freq = np.bincount(generate_operation_sequence(params, n), minlength=3) / n
    return bool(np.all((freq >= 0.30) & (freq <= 0.37)))


def cmd_gen_key(args):
    rng = np.random.default_rng(args.seed)
    while True:
        params = LogisticParams(float(rng.uniform(3.9, 3.9999)), float(rng.uniform(0.05, 0.95)), args.discard)
        if _balanced(params):
            break
        log.debug("redrawing key: mu=%r sits in a periodic window", params.mu)
    mods = rng.choice(256, size=3, replace=False).tolist()
    key = SrssKey(params, *mods, sbox=load_sbox(args.sbox), sbox_ref=args.sbox)
    _write_text(args.out, serialize_key(key))
    return 0


def _write_text(path, text):
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _add_glcm_flags(p):
    p.add_argument("--glcm-levels", type=int, default=8)
    p.add_argument("--glcm-offset", default="0,1", help="row,column offset (default 0,1)")
    p.add_argument("--symmetric", action="store_true", help="count each pair in both directions")
    p.add_argument("--csv", help="also write the report as CSV")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srsscrypt", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, decrypt in (("encrypt", False), ("decrypt", True)):
        p = sub.add_parser(name, help=f"{name} a PGM image")
        p.add_argument("--in", dest="inp", required=True)
        p.add_argument("--out", required=True)
        p.add_argument("--key", required=True, help="key file (mu, x0, discard, m1, m2, m3, sbox)")
        p.add_argument("--scheme", choices=SCHEMES, default="srss")
        p.add_argument("--rounds", type=int, default=5, help="rounds for the multiround scheme")
        p.add_argument("--sboxes", help="comma-separated S-box files or 'aes' (multi schemes)")
        p.add_argument("--ascii", action="store_true", help="write P2 instead of P5")
        p.set_defaults(func=lambda a, d=decrypt: _apply(a, d))

    p = sub.add_parser("analyze", help="entropy and GLCM metrics of one image")
    p.add_argument("--in", dest="inp", required=True)
    _add_glcm_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("compare", help="metrics of a plaintext and its encryptions")
    p.add_argument("--plain", required=True)
    p.add_argument("--schemes", default="srss,multiround")
    p.add_argument("--key", required=True)
    p.add_argument("--rounds", type=int, default=5)
    p.add_argument("--sboxes")
    _add_glcm_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gen-sbox", help="keyed chaotic S-box")
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--x0", type=float, required=True)
    p.add_argument("--discard", type=int, default=1000)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen_sbox)

    p = sub.add_parser("gen-image", help="synthetic test image")
    p.add_argument("--kind", choices=imgio.SYNTH_KINDS, default="disks")
    p.add_argument("--size", default="256x256")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--value", type=int, default=0, help="pixel value for --kind constant")
    p.add_argument("--cell", type=int, default=1, help="square size for --kind checkerboard")
    p.add_argument("--ascii", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen_image)

    p = sub.add_parser("gen-key", help="random SRSS key file")
    p.add_argument("--seed", type=int)
    p.add_argument("--discard", type=int, default=1000)
    p.add_argument("--sbox", default="aes")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen_key)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(name)s: %(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"srsscrypt: error: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, OSError) as exc:
        print(f"srsscrypt: error: {exc}", file=sys.stderr)
        return 3
    except SrssRuntimeError as exc:
        print(f"srsscrypt: error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
