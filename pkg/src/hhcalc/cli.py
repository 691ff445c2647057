"""``hhcalc`` command line.

Exit codes: 0 success, 1 computation error, 2 usage or schema error.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from hhcalc import equivariant, hkr, hodge, orbifold, scenarios, sod
from hhcalc import jsonio as J
from hhcalc.errors import HHCalcError, Inconsistent, UsageError
from hhcalc.gradedvec import GradedDims, GradedInterval

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2


def parse_weights(text: str) -> tuple[int, ...]:
    """``"1,1,2"`` or the shorthand ``"1^6,2"`` (six ones, then a two)."""
    weights: list[int] = []
    for token in text.split(","):
        token = token.strip()
        base, _, reps = token.partition("^")
        try:
            w, r = int(base), int(reps) if reps else 1
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad weight {token!r}") from None
        if w < 1 or r < 1:
            raise argparse.ArgumentTypeError(f"weights and repeat counts must be positive: {token!r}")
        weights.extend([w] * r)
    return tuple(weights)


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.format == "json":
        print(J.dumps(payload))
    else:
        print(text)


def _interval_text(iv: GradedInterval) -> str:
    if iv.is_exact:
        return str(iv.lo)
    parts = []
    for i in iv.degrees:
        lo, hi = iv.at(i)
        parts.append(f"  degree {i:>3}: {lo}" if lo == hi else f"  degree {i:>3}: [{lo}, {hi}]")
    return "\n".join(parts)


def cmd_hodge(args: argparse.Namespace) -> int:
    spec = hodge.VarietySpec(args.weights, args.degree)
    diamond = hodge.hodge_hypersurface(spec)
    payload = J.diamond_to_json(diamond)
    payload["metadata"] = {
        "spec": J.spec_to_json(spec),
        "euler_characteristic": diamond.euler(),
        "assumptions": [hodge.CHARACTERISTIC_ASSUMPTION]
        + ([] if spec.is_projective else ["general member is quasi-smooth"]),
    }
    _emit(args, payload, diamond.pretty())
    return EXIT_OK


def cmd_hh(args: argparse.Namespace) -> int:
    if args.from_hodge is None and args.from_polyvectors is None:
        raise UsageError("give --from-hodge and/or --from-polyvectors")
    payload: dict = {"metadata": {"assumptions": [hodge.CHARACTERISTIC_ASSUMPTION]}}
    lines = []
    cohomology: dict[str, GradedDims] = {}
    if args.from_hodge is not None:
        diamond = J.diamond_from_json(J.load(args.from_hodge), args.from_hodge)
        hom = hkr.hh_homology(diamond)
        payload["homology"] = J.graded_to_json(hom, sod.HOMOLOGY)
        lines.append(f"HH_*   = {hom}")
        if args.cy_shift is not None:
            cohomology["cy-shift"] = hkr.cy_shift(hom, args.cy_shift)
        if args.trivial_canonical:
            table = hkr.polyvectors_trivial_canonical(diamond)
            cohomology["trivial-canonical"] = hkr.hh_cohomology_from_polyvectors(table)
    elif args.cy_shift is not None or args.trivial_canonical:
        raise UsageError("--cy-shift and --trivial-canonical need --from-hodge")
    if args.from_polyvectors is not None:
        table = J.polyvectors_from_json(J.load(args.from_polyvectors), args.from_polyvectors)
        cohomology["polyvectors"] = hkr.hh_cohomology_from_polyvectors(table)
    if cohomology:
        values = set(cohomology.values())
        if len(values) > 1:
            detail = "; ".join(f"{how}: {v}" for how, v in cohomology.items())
            raise Inconsistent(min(d for v in values for d in v.support), detail)
        (coh,) = values
        payload["cohomology"] = J.graded_to_json(coh, sod.COHOMOLOGY)
        lines.append(f"HH^*   = {coh}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_sod(args: argparse.Namespace) -> int:
    spec = J.sod_from_json(J.load(args.spec), args.spec)
    res = sod.residual(spec)
    _emit(args, {"residual": J.graded_to_json(res, sod.HOMOLOGY)}, f"HH_*(residual) = {res}")
    return EXIT_OK


def cmd_split(args: argparse.Namespace) -> int:
    known = J.graded_from_json(J.load(args.cg), args.cg)
    hom = J.graded_from_json(J.load(args.hom), args.hom)
    bounds = None
    if args.coh_bounds is not None:
        bounds = J.interval_from_json(J.load(args.coh_bounds), args.coh_bounds)
    result = equivariant.solve_z2_split(known, hom, args.shift, bounds)
    text = (
        f"HH^*(C):\n{_interval_text(result.hh_coh)}\n"
        f"HH_*(C)^Z/2 (homological degrees):\n{_interval_text(result.invariant_hom)}"
    )
    _emit(args, J.split_to_json(result), text)
    return EXIT_OK


def cmd_serre(args: argparse.Namespace) -> int:
    s = equivariant.SerreDescriptor(args.n, args.q)
    p, q = equivariant.fractional_cy_relation(s)
    inv = equivariant.invariant_serre(s)
    payload = {
        "serre": J.serre_to_json(s),
        "fractional_cy": {"p": p, "q": q},
        "invariant_category": J.serre_to_json(inv),
    }
    text = (
        f"S^{q} = [{p}]\n"
        f"invariant category C^Z/{s.twist_order_q}: Serre functor [{inv.shift_n}] (Calabi-Yau)"
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_orbifold(args: argparse.Namespace) -> int:
    data = J.data_from_json(J.load(args.data), args.data)
    result = orbifold.orbifold_hh(data)
    _emit(args, J.interval_to_json(result), f"HH^*([X/G]):\n{_interval_text(result)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        names = scenarios.available()
        _emit(args, {"scenarios": names}, "\n".join(names))
        return EXIT_OK
    if args.scenario is None:
        raise UsageError("name a scenario, or pass --list")
    report = scenarios.run_scenario(args.scenario)
    _emit(args, report.to_json(), report.to_text())
    return EXIT_OK if report.passed else EXIT_COMPUTE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(
        prog="hhcalc",
        description="Hochschild (co)homology dimension data for hypersurfaces, "
        "semiorthogonal components and categories of invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hodge", parents=[common], help="Hodge diamond of a hypersurface")
    p.add_argument("--weights", type=parse_weights, required=True, help="e.g. 1,1,1,1,1,1 or 1^6,2")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("hh", parents=[common], help="HKR: Hochschild (co)homology dimensions")
    p.add_argument("--from-hodge", metavar="DIAMOND.json")
    p.add_argument("--from-polyvectors", metavar="TABLE.json")
    p.add_argument("--cy-shift", type=int, metavar="N", help="Serre functor is [N]")
    p.add_argument("--trivial-canonical", action="store_true")
    p.set_defaults(func=cmd_hh)

    p = sub.add_parser("sod", parents=[common], help="semiorthogonal decompositions")
    sod_sub = p.add_subparsers(dest="sod_command", required=True)
    r = sod_sub.add_parser("residual", parents=[common], help="HH_* of the residual component")
    r.add_argument("spec", metavar="SPEC.json")
    r.set_defaults(func=cmd_sod)

    p = sub.add_parser("split", parents=[common], help="solve the Z/2 fractional-CY splitting")
    p.add_argument("--cg", required=True, metavar="GRADED.json", help="HH^* of the invariant category")
    p.add_argument("--hom", required=True, metavar="GRADED.json", help="HH_* of C")
    p.add_argument("--shift", type=int, required=True, metavar="N", help="S_C = sigma o [N]")
    p.add_argument("--coh-bounds", metavar="INTERVAL.json", help="prior bounds on HH^*(C)")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("serre", parents=[common], help="fractional Calabi-Yau bookkeeping")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=1)
    p.set_defaults(func=cmd_serre)

    p = sub.add_parser("orbifold", parents=[common], help="orbifold HKR from fixed-locus data")
    p.add_argument("data", metavar="DATA.json")
    p.set_defaults(func=cmd_orbifold)

    p = sub.add_parser("verify", parents=[common], help="run a regression scenario")
    p.add_argument("scenario", nargs="?")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hhcalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HHCalcError as exc:
        print(f"hhcalc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
