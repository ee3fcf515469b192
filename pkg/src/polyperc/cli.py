"""Command-line front end.

Every command reads plain-text files, writes plain text to stdout (or a
file via --out), and signals its outcome through the exit code:

    0  success / equivalent / feasible
    1  semantic negative: counterexample found, system infeasible
    2  unreadable or unparsable input
    3  dimension or precondition violation
    4  scheme that cannot be synthesized
    5  size cap exceeded
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .errors import ParseError, PolypercError, PreconditionError, SchemeError
from .feasibility import (
    DEFAULT_CONSTRAINT_CAP,
    InequalitySystem,
    is_feasible,
    witness,
)
from .geometry import format_point, parse_halfspace_block, parse_point
from .indexing import format_scheme, parse_scheme
from .network import format_network, parse_network
from .polyhedra import (
    Mode,
    PresentedPolyhedron,
    cnf_to_dnf,
    complement_poly,
    dnf_to_cnf,
    format_bundle,
    intersection,
    parse_bundle,
    union,
)
from .transform import (
    DEFAULT_ENUM_CAP,
    ConstantNetwork,
    build_cnf_network,
    build_dnf_network,
    check_equivalence,
    extract_scheme,
    normalize_three_layers,
    prune_empty_cells,
)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _read_points(path: str):
    points = []
    for lineno, line in enumerate(_read(path).splitlines(), 1):
        if line.strip():
            points.append(parse_point(line, lineno))
    return points


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_eval(args) -> int:
    network = parse_network(_read(args.network))
    lines = []
    for point in _read_points(args.points):
        bits = network.forward(point)
        lines.append(" ".join(str(b) for b in bits))
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def _cmd_member(args) -> int:
    bundle = parse_bundle(_read(args.bundle))
    lines = [str(bundle.member(point)) for point in _read_points(args.points)]
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def _cmd_synth(args) -> int:
    halfspaces = parse_halfspace_block(_read(args.halfspaces).splitlines())
    scheme = parse_scheme(_read(args.scheme))
    build = build_dnf_network if args.mode == "dnf" else build_cnf_network
    _emit(format_network(build(halfspaces, scheme)), args.out)
    return 0


def _cmd_extract(args) -> int:
    network = parse_network(_read(args.network))
    report = extract_scheme(network, prune=args.prune, cap=args.cap)
    if report.accepted_count == 0 and not args.permissive_constants:
        raise SchemeError("empty scheme: the network is constantly 0")
    bundle = PresentedPolyhedron(
        network.layers[0].units, report.scheme, Mode.DNF
    )
    _emit(format_bundle(bundle), args.out)
    return 0


def _cmd_normalize(args) -> int:
    network = parse_network(_read(args.network))
    result = normalize_three_layers(
        network, permit_constant=args.permissive_constants, cap=args.cap
    )
    if isinstance(result, ConstantNetwork):
        text = f"CONSTANT={result.value}\nINPUTS={result.input_dim}\n"
    else:
        text = format_network(result)
    _emit(text, args.out)
    return 0


def _cmd_algebra(args) -> int:
    first = parse_bundle(_read(args.bundle))
    if args.op in ("union", "intersect"):
        if args.other is None:
            raise PreconditionError(f"algebra {args.op} needs two bundles")
        second = parse_bundle(_read(args.other))
        result = (union if args.op == "union" else intersection)(first, second)
    elif args.other is not None:
        raise PreconditionError(f"algebra {args.op} takes one bundle")
    elif args.op == "complement":
        result = complement_poly(first)
    elif args.op == "to-dnf":
        result = cnf_to_dnf(first)
    else:
        result = dnf_to_cnf(first)
    _emit(format_bundle(result), args.out)
    return 0


def _cmd_equiv(args) -> int:
    left = parse_network(_read(args.left))
    right = parse_network(_read(args.right))
    result = check_equivalence(
        left,
        right,
        mode=args.mode,
        seed=args.seed,
        samples=args.samples,
        cap=args.cap,
    )
    if result.equivalent:
        _emit("EQUIVALENT\n", args.out)
        return 0
    if result.counterexample_bits is not None:
        lines = ["COUNTEREXAMPLE b=" + format_point(result.counterexample_bits)]
        if result.counterexample_point is not None:
            lines.append("WITNESS=" + format_point(result.counterexample_point))
    else:
        lines = ["COUNTEREXAMPLE x=" + format_point(result.counterexample_point)]
    _emit("".join(line + "\n" for line in lines), args.out)
    return 1


def _cmd_prune(args) -> int:
    halfspaces = parse_halfspace_block(_read(args.halfspaces).splitlines())
    scheme = parse_scheme(_read(args.scheme))
    if scheme.ambient != len(halfspaces):
        raise PreconditionError(
            f"scheme over {scheme.ambient} with {len(halfspaces)} half-spaces"
        )
    _emit(format_scheme(prune_empty_cells(halfspaces, scheme)), args.out)
    return 0


def _cmd_feasible(args) -> int:
    halfspaces = parse_halfspace_block(_read(args.halfspaces).splitlines())
    system = InequalitySystem(tuple((h.form, h.kind) for h in halfspaces))
    if not is_feasible(system, args.cap):
        _emit("INFEASIBLE\n", args.out)
        return 1
    point = witness(system, args.cap)
    _emit(f"FEASIBLE\nWITNESS={format_point(point)}\n", args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyperc",
        description=(
            "Exact conversions between half-space presentations of polyhedra "
            "and single-output threshold networks."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", "-o", help="write output to a file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="forward pass on points")
    p.add_argument("network")
    p.add_argument("points")
    p.set_defaults(run=_cmd_eval)

    p = sub.add_parser("member", parents=[common], help="polyhedron membership bits")
    p.add_argument("bundle")
    p.add_argument("points")
    p.set_defaults(run=_cmd_member)

    p = sub.add_parser("synth", parents=[common], help="scheme to 3-layer network")
    p.add_argument("halfspaces")
    p.add_argument("scheme")
    p.add_argument("--mode", choices=("dnf", "cnf"), default="dnf")
    p.set_defaults(run=_cmd_synth)

    p = sub.add_parser("extract", parents=[common], help="network to polyhedron bundle")
    p.add_argument("network")
    p.add_argument("--prune", action="store_true", help="drop unrealizable cells")
    p.add_argument("--cap", type=_positive, default=DEFAULT_ENUM_CAP)
    p.add_argument("--permissive-constants", action="store_true")
    p.set_defaults(run=_cmd_extract)

    p = sub.add_parser("normalize", parents=[common], help="equivalent 3-layer network")
    p.add_argument("network")
    p.add_argument("--cap", type=_positive, default=DEFAULT_ENUM_CAP)
    p.add_argument("--permissive-constants", action="store_true")
    p.set_defaults(run=_cmd_normalize)

    p = sub.add_parser("algebra", parents=[common], help="set operations on bundles")
    p.add_argument(
        "op", choices=("union", "intersect", "complement", "to-dnf", "to-cnf")
    )
    p.add_argument("bundle")
    p.add_argument("other", nargs="?")
    p.set_defaults(run=_cmd_algebra)

    p = sub.add_parser("equiv", parents=[common], help="compare two networks")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--mode", choices=("sampled", "exact"), default="exact")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--samples", type=_positive, default=200)
    p.add_argument("--cap", type=_positive, default=DEFAULT_ENUM_CAP)
    p.set_defaults(run=_cmd_equiv)

    p = sub.add_parser("prune", parents=[common], help="drop empty selected cells")
    p.add_argument("halfspaces")
    p.add_argument("scheme")
    p.set_defaults(run=_cmd_prune)

    p = sub.add_parser("feasible", parents=[common], help="decide a half-space system")
    p.add_argument("halfspaces")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CONSTRAINT_CAP)
    p.set_defaults(run=_cmd_feasible)

    return parser


def console_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except PolypercError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


def main() -> None:
    sys.exit(console_main())


if __name__ == "__main__":
    main()
