"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse or validation
error, 3 unsupported case (eigenvalues outside L, undecided norm guard,
enumeration budget exceeded, missing witness).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import islice

from . import serialize as ser
from .circles import Circle, circle_classify, circle_points
from .errors import (
    HypothesisError,
    MissingWitnessError,
    NotFoundWithinBound,
    NotInLError,
    UnhandledConfigurationError,
    UnknownVerdictError,
)
from .fields import QQ, FieldError, QuadraticExtension, parse_field_spec, parse_ground_spec
from .krange import char2_reduce, is_singleton_K, k_range_exhaustive, k_range_sample
from .normsets import DEFAULT_HEIGHT_BOUND, in_delta, in_delta_n
from .numrange import classify_2x2, classify_corank1, num_range_exhaustive, num_range_sample
from .tables import BudgetExceeded
from . import verify

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_UNSUPPORTED = 0, 1, 2, 3

UNSUPPORTED = (
    NotInLError,
    UnknownVerdictError,
    UnhandledConfigurationError,
    HypothesisError,
    MissingWitnessError,
    NotFoundWithinBound,
    BudgetExceeded,
)


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _extension(spec: str) -> QuadraticExtension:
    L = parse_field_spec(spec)
    if not isinstance(L, QuadraticExtension):
        raise UsageError(f"{spec} names a ground field; an extension clause is required")
    return L


def _scalar(L: QuadraticExtension, text: str):
    """``x``, ``x,y`` or a JSON pair ``["x", "y"]``."""
    text = text.strip()
    if text.startswith("["):
        return L.parse(json.loads(text))
    if "," in text:
        return L.parse(text.split(","))
    return L.parse(text)


def _load_matrix(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(obj) -> str:
    return ser.dumps(obj)


# ---------------------------------------------------------------------------


def cmd_delta(args) -> tuple[int, str]:
    L = _extension(args.field)
    k = L.ground.parse(args.k)
    if args.n is None or args.n == 1:
        v = in_delta(L, k, bound=args.bound)
    else:
        v = in_delta_n(L, k, args.n, bound=args.bound)
    return EXIT_OK, _emit(ser.verdict_to_json(v))


def cmd_circle(args) -> tuple[int, str]:
    L = _extension(args.field)
    C = Circle(_scalar(L, args.center), L.ground.parse(args.c))
    witness = _scalar(L, args.witness) if args.witness else None
    stream = circle_points(C, witness)
    points = list(stream) if L.is_finite and args.points is None else list(islice(stream, args.points or 100))
    if args.csv:
        return EXIT_OK, ser.points_to_csv(points, with_approx=args.approx).rstrip("\n")
    kind = circle_classify(C)
    out = {"kind": kind.kind, "bounded": kind.bounded, "points": ser.to_json(points)}
    if args.approx:
        out["approx_lossy"] = [ser.approx(z) for z in points]
    return EXIT_OK, _emit(out)


def cmd_numrange(args) -> tuple[int, str]:
    L = _extension(args.field)
    M = ser.matrix_from_json(L, _load_matrix(args.matrix))
    mode = args.mode or ("exhaustive" if L.is_finite else "sample")
    extra = {}
    if mode == "exhaustive":
        if not L.is_finite:
            raise UsageError("exhaustive mode needs a finite field")
        desc = num_range_exhaustive(M)
        points = list(desc.points)
    elif mode == "classify":
        if M.n > 2:
            r = classify_corank1(M)
            desc = r.description
            extra = {"case": r.case, "eigenvalue": ser.to_json(r.c), "block": ser.matrix_to_json(r.block)}
        else:
            desc = classify_2x2(M)
        points = desc.enumerate() if L.is_finite else desc.sample(args.count)
    elif mode == "sample":
        points = [v for _, v in num_range_sample(M, args.count)]
        desc = None
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown mode {mode}")
    if args.csv:
        return EXIT_OK, ser.points_to_csv(points, with_approx=args.approx).rstrip("\n")
    out = ser.description_to_json(desc) if desc is not None else {"variant": "Sampled", "points": ser.to_json(points)}
    out.update(extra)
    if mode == "classify":
        out["points"] = ser.to_json(points)
    if args.approx and not L.is_finite:
        out["approx_lossy"] = [ser.approx(z) for z in points]
    return EXIT_OK, _emit(out)


def cmd_knumrange(args) -> tuple[int, str]:
    K = parse_ground_spec(args.field)
    M = ser.kmatrix_from_json(K, _load_matrix(args.matrix))
    mode = args.mode or ("exhaustive" if K.is_finite else "sample")
    if mode == "structural":
        c = is_singleton_K(M)
        return EXIT_OK, _emit({"singleton": None if c is None else K.format(c)})
    if mode == "sample":
        if K is not QQ:
            raise UsageError("sample mode needs K = Q")
        return EXIT_OK, _emit(ser.krange_to_json(K, k_range_sample(M, args.count)))
    if not K.is_finite:
        raise UsageError(f"{mode} mode needs a finite field")
    if mode == "char2":
        if K.characteristic != 2:
            raise UsageError("char2 mode needs characteristic 2")
        red = char2_reduce(M)
        out = ser.krange_to_json(K, red.result)
        out.update(
            degree=red.degree,
            polynomial=[[list(m), K.format(c)] for m, c in sorted(red.poly.items())],
        )
        return EXIT_OK, _emit(out)
    return EXIT_OK, _emit(ser.krange_to_json(K, k_range_exhaustive(M)))


def cmd_verify(args) -> tuple[int, str]:
    if args.field:
        results = verify.run_for_field(_extension(args.field), seed=args.seed)
    else:
        results = verify.run_all(seed=args.seed)
    table = verify.format_table(results)
    return (EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY), table


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="field spec, e.g. Q[sqrt=-1], F[3][sqrt=2], F[2^2][as=2]")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--budget", type=_positive, help="enumeration cap (overrides NUMRANGE_BUDGET)")
    common.add_argument("--bound", type=_positive, default=DEFAULT_HEIGHT_BOUND, help="witness height bound")

    p = argparse.ArgumentParser(prog="galrange", description="Numerical ranges over quadratic Galois extensions.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("delta", parents=[common], help="decide k in the norm set (or a sum of n norms)")
    d.add_argument("--k", required=True)
    d.add_argument("--n", type=_positive)

    c = sub.add_parser("circle", parents=[common], help="points of a circle sigma(z - center)(z - center) = c")
    c.add_argument("--center", required=True, help="x, x,y or a JSON pair")
    c.add_argument("--c", required=True, help="squared radius in K")
    c.add_argument("--points", type=_positive)
    c.add_argument("--witness", help="a known point of the circle (needed over Q when c != 0)")
    c.add_argument("--csv", action="store_true")
    c.add_argument("--approx", action="store_true", help="add lossy floating coordinates (Q only)")

    n = sub.add_parser("numrange", parents=[common], help="numerical range of a matrix over L")
    n.add_argument("--matrix", required=True, help='JSON file {"n": N, "entries": [[[x, y], ...], ...]}')
    n.add_argument("--mode", choices=["exhaustive", "classify", "sample"])
    n.add_argument("--count", type=_positive, default=100)
    fmt = n.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--csv", action="store_true")
    n.add_argument("--approx", action="store_true", help="add lossy floating coordinates (Q only)")

    k = sub.add_parser("knumrange", parents=[common], help="values of the quadratic form on the K-sphere")
    k.add_argument("--matrix", required=True)
    k.add_argument("--mode", choices=["exhaustive", "structural", "sample", "char2"])
    k.add_argument("--count", type=_positive, default=100)

    sub.add_parser("verify", parents=[common], help="run the theorem-check suite")
    return p


COMMANDS = {
    "delta": cmd_delta,
    "circle": cmd_circle,
    "numrange": cmd_numrange,
    "knumrange": cmd_knumrange,
    "verify": cmd_verify,
}


def run(argv=None) -> tuple[int, str]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_PARSE if exc.code else EXIT_OK), ""
    if args.command != "verify" and not args.field:
        return EXIT_PARSE, "error: --field is required"
    saved = os.environ.get("NUMRANGE_BUDGET")
    if args.budget is not None:
        os.environ["NUMRANGE_BUDGET"] = str(args.budget)
    try:
        return COMMANDS[args.command](args)
    except UNSUPPORTED as exc:
        return EXIT_UNSUPPORTED, f"unsupported: {type(exc).__name__}: {exc}"
    except (UsageError, FieldError, ValueError, ZeroDivisionError, json.JSONDecodeError) as exc:
        return EXIT_PARSE, f"error: {exc}"
    finally:
        if saved is None:
            os.environ.pop("NUMRANGE_BUDGET", None)
        else:
            os.environ["NUMRANGE_BUDGET"] = saved


def main(argv=None) -> int:
    code, text = run(argv)
    if text:
        stream = sys.stdout if code in (EXIT_OK, EXIT_VERIFY) else sys.stderr
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
