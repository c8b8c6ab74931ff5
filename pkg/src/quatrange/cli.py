"""Command-line front end.

Exit codes: 0 success, 2 usage or input error, 3 negative verdict
(NotCertified, non-member, failed oracle check).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import io as qio
from .complex_nr import Certificate, boundary, certify_convexity, chi_boundary, nr_of_chi
from .oracle import SUITES, run_suite
from .quat_nr import bild_real, member_real, sample
from .quaternion import canonical_rep, format_real, parse_quaternion
from .region import real_axis_section, real_projection
from .shapes import classify

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE = 0, 2, 3
DEFAULT_SEED = 42
SEED_ENV = "QUATRANGE_SEED"


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _nonnegative_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {text}")
    return value


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def build_parser(default_seed: int = DEFAULT_SEED) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatrange",
        description="Complex and quaternionic numerical ranges of matrices.",
        epilog=f"Matrices are JSON {{\"n\", \"entries\"}} files or whitespace grids. "
        f"{SEED_ENV} overrides the default seed ({DEFAULT_SEED}).",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, help_text: str, matrix: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        if matrix:
            p.add_argument("--matrix", required=True, type=Path, metavar="FILE", help="matrix file (JSON or grid)")
        p.add_argument("--out", type=Path, metavar="PATH", help="write the main output here instead of stdout")
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    def sweep_opts(p, exact: bool = False):
        # plot data defaults to exactly M directions; verdicts default to a refined sweep
        default = "0, exactly M directions" if exact else "1e-7 * max(1, ||A||_F)"
        p.add_argument("--angles", type=_positive_int, default=720, metavar="M", help="sweep directions (default 720)")
        p.add_argument(
            "--max-error", type=_nonnegative_float, default=0.0 if exact else None, metavar="E",
            help=f"bisect sweep arcs until the Hausdorff error bound is below E (default {default})",
        )

    p = add("boundary", "Vertices of the complex numerical range W_C(A) as CSV re,im.")
    sweep_opts(p, exact=True)
    p.add_argument("--descriptor", type=Path, metavar="PATH", help="also write the region descriptor JSON {kind, tol}")

    p = add("chi", "Complex numerical range of chi(A), the 2n x 2n complex form of A, as CSV re,im.")
    sweep_opts(p, exact=True)
    p.add_argument("--direct", action="store_true", help="sweep chi(A) itself instead of hulling W_C(A) with its mirror")
    p.add_argument("--descriptor", type=Path, metavar="PATH", help="also write the region descriptor JSON {kind, tol}")

    p = add("certify", "Sufficient convexity test for W_H(A), complex A. Exit 0 Certified, 3 NotCertified.")
    sweep_opts(p)
    p.add_argument("--tol", type=_positive_float, default=1e-7, help="interval comparison tolerance (default 1e-7)")

    p = add("classify", "Closed-form shape of W_H(A) for the supported matrix families.")
    p.add_argument("--angles", type=_positive_int, default=720, metavar="M", help="sweep directions (default 720)")
    p.add_argument("--tol", type=_positive_float, default=1e-7, help="structural tolerance (default 1e-7)")

    p = add("sample", "Values x*Ax at uniform unit vectors x of H^n, as CSV a0,a1,a2,a3.")
    p.add_argument("--count", type=_positive_int, default=100_000, metavar="N", help="number of samples (default 100000)")
    p.add_argument("--seed", type=int, default=default_seed, metavar="S")
    p.add_argument("--workers", type=_positive_int, default=1, metavar="W", help="worker w uses seed S + w")

    p = add("member", "Whether a quaternion lies in W_H(A), real A. Exit 0 member, 3 non-member.")
    sweep_opts(p)
    p.add_argument("--q", required=True, metavar="QUATERNION", help='e.g. "1+2i-3j+0.5k"')
    p.add_argument("--tol", type=_positive_float, default=1e-7, help="membership tolerance (default 1e-7)")

    p = add("oracle", "Run the sampling oracle. Exit 0 iff every check passes.", matrix=False)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--seed", type=int, default=default_seed, metavar="S")
    p.add_argument("--count", type=_positive_int, default=100_000, metavar="N", help="samples per check (default 100000)")
    p.add_argument("--angles", type=_positive_int, default=720, metavar="M")
    p.add_argument("--timings", action="store_true", help="include runtimes (output is then not reproducible)")
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _region_output(args, approx) -> int:
    region = approx.region
    if args.descriptor is not None:
        args.descriptor.write_text(qio.region_descriptor(region))
    csv_text = qio.region_to_csv(region)
    if args.json:
        info = {
            "kind": region.kind.value,
            "tol": region.tol,
            "angles": approx.angles,
            "max_support_error": approx.max_support_error,
            "vertices": [[z.real, z.imag] for z in region.vertices.tolist()],
        }
        _emit(_dumps(info), args.out)
    else:
        _emit(csv_text, args.out)
    return EXIT_OK


def _cmd_boundary(args, A) -> int:
    return _region_output(args, boundary(A, args.angles, args.max_error))


def _cmd_chi(args, A) -> int:
    fn = chi_boundary if args.direct else nr_of_chi
    return _region_output(args, fn(A, args.angles, args.max_error))


def _cmd_certify(args, A) -> int:
    cert = certify_convexity(A, args.angles, args.tol, args.max_error)
    if args.json:
        region = boundary(A, args.angles, args.max_error).region
        section = real_axis_section(region, args.tol)
        _emit(_dumps({
            "certificate": cert.value,
            "real_projection": list(real_projection(region)),
            "real_axis_section": list(section) if section is not None else None,
            "tol": args.tol,
        }), args.out)
    else:
        _emit(cert.value + "\n", args.out)
    return EXIT_OK if cert is Certificate.CERTIFIED else EXIT_NEGATIVE


def _cmd_classify(args, A) -> int:
    shape = classify(A, args.tol, args.angles)
    d = shape.to_dict()
    if args.json:
        _emit(_dumps(d), args.out)
    else:
        fields = " ".join(f"{k}={v}" for k, v in d.items() if k not in ("tag", "vertices"))
        _emit(f"{d['tag']} {fields}".rstrip() + "\n", args.out)
    return EXIT_OK


def _cmd_sample(args, A) -> int:
    cloud = sample(A, args.count, args.seed, args.workers)
    if args.json:
        _emit(_dumps({"n": cloud.n, "seed": cloud.seed, "workers": cloud.workers,
                      "points": cloud.points.tolist()}), args.out)
    else:
        _emit(qio.samples_to_csv(cloud.points), args.out)
    return EXIT_OK


def _cmd_member(args, A) -> int:
    try:
        q = parse_quaternion(args.q)
    except ValueError as exc:
        raise UsageError(f"--q: {exc}") from None
    inside = member_real(A, q, args.angles, args.tol, args.max_error)
    if args.json:
        z = canonical_rep(q)
        region = bild_real(A, args.angles, args.max_error).region
        _emit(_dumps({
            "member": inside,
            "canonical_rep": [z.real, z.imag],
            "distance": float(region.distance(z)),
            "tol": args.tol,
        }), args.out)
    else:
        _emit(("member" if inside else "non-member") + "\n", args.out)
    return EXIT_OK if inside else EXIT_NEGATIVE


def _cmd_oracle(args) -> int:
    reports = run_suite(args.suite, args.seed, args.count, args.angles)
    if args.json:
        _emit(_dumps([r.to_dict(args.timings) for r in reports]), args.out)
    else:
        lines = []
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            detail = ", ".join(f"{c.name} {format_real(c.value)} <= {format_real(c.bound)}" for c in r.checks)
            timing = f" ({r.runtime:.2f} s)" if args.timings else ""
            lines.append(f"{status} {r.claim} {r.matrix}: {detail}{timing}\n")
        _emit("".join(lines), args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NEGATIVE


COMMANDS = {
    "boundary": _cmd_boundary,
    "chi": _cmd_chi,
    "certify": _cmd_certify,
    "classify": _cmd_classify,
    "sample": _cmd_sample,
    "member": _cmd_member,
}


def run(argv: list[str] | None = None) -> int:
    """Parse ``argv`` and execute; returns the process exit code."""
    try:
        parser = build_parser(_default_seed())
    except UsageError as exc:
        print(f"quatrange: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "oracle":
            return _cmd_oracle(args)
        A = qio.load_matrix(args.matrix)
        return COMMANDS[args.command](args, A)
    except (UsageError, OSError, ValueError) as exc:
        # MatrixFormatError, FieldError and ShapeError are ValueErrors
        print(f"quatrange {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
