"""Command-line front end.

Subcommands: decompose, suspension, homology, classify, snf, parse.
Output is deterministic (identical invocations print identical bytes);
--json swaps the text for a single-line JSON document.  Errors print one
``error: ...`` line on stderr — exit 1 for flag misuse, exit 2 when the
described manifold or matrix is rejected.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decomposer, homology
from .classifier import (
    EquivalenceVerdict,
    classify,
    parse_group,
)
from .manifold import ManifoldSpec, parse_pi1, render_pi1, validate
from .terms import SYMBOLIC, GaugeExpr, Moore, SpaceTerm, Sphere, SuspCP2


class UsageError(Exception):
    """Bad flags; exits 1 (semantic rejections exit 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2; we reserve that
        raise UsageError(message)


def _stabilization_arg(text: str):
    if text == "symbolic":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'symbolic', got {text!r}")


def _primes_arg(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated prime list, got {text!r}")


def _add_spec_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--pi1", default="1", help="fundamental group, e.g. 1, Z*Z, Z/9*Z")
    sub.add_argument("--b2", type=int, default=0, help="second Betti number")
    sub.add_argument("--sigma-f", choices=["trivial", "nontrivial"], dest="sigma_f")
    sub.add_argument("--spin", choices=["true", "false"], help="alias for --sigma-f")


def _spec_from_args(args: argparse.Namespace) -> ManifoldSpec:
    trivial = None if args.sigma_f is None else args.sigma_f == "trivial"
    spin = None if args.spin is None else args.spin == "true"
    if trivial is not None and spin is not None and trivial != spin:
        raise UsageError("conflicting --sigma-f and --spin")
    if trivial is None:
        trivial = True if spin is None else spin
    return ManifoldSpec(parse_pi1(args.pi1), args.b2, trivial)


def build_parser() -> _Parser:
    parser = _Parser(prog="gauge4", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("decompose", help="split the suspension and the gauge group")
    _add_spec_flags(p)
    p.add_argument("--t", type=int, default=0, help="bundle class over the 4-cell")
    p.add_argument("--d", type=_stabilization_arg, default=None,
                   help="stabilization count, or 'symbolic' (the default)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_decompose)

    p = subs.add_parser("suspension", help="just the suspension half")
    _add_spec_flags(p)
    p.add_argument("--d", type=_stabilization_arg, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_suspension)

    p = subs.add_parser("homology", help="integral homology of the manifold")
    _add_spec_flags(p)
    p.add_argument("--suspension", action="store_true", help="homology after suspending")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_homology)

    p = subs.add_parser("classify", help="are G_t and G_s homotopy equivalent?")
    _add_spec_flags(p)
    p.add_argument("--group", required=True, help="SU(n), Sp(n), or G2")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--primes", type=_primes_arg, default=(),
                   help="comma-separated primes for local verdicts")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_classify)

    p = subs.add_parser("snf", help="Smith normal form of an integer matrix")
    p.add_argument("--matrix", required=True, help='row-major, e.g. "[[1,0],[0,1]]"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_snf)

    p = subs.add_parser("parse", help="echo the normalized manifold description")
    _add_spec_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_parse)

    return parser


# --------------------------------------------------------------------------
# JSON helpers


def _atom_json(atom: SpaceTerm) -> dict:
    if isinstance(atom, Sphere):
        return {"kind": "sphere", "dim": atom.dim, "modulus": None}
    if isinstance(atom, Moore):
        return {"kind": "moore", "dim": atom.dim, "modulus": atom.modulus}
    if isinstance(atom, SuspCP2):
        return {"kind": "susp_cp2", "dim": 5, "modulus": None}
    raise ValueError(f"no JSON form for {atom!r}")


def _gauge_json(expr: GaugeExpr) -> dict:
    return {
        "base": expr.base,
        "t": expr.t,
        "factors": [
            {"loop_order": f.loop_order, "modulus": f.modulus} for f in expr.factors
        ],
        "stabilization": expr.stabilization,
    }


def _verdict_json(v: EquivalenceVerdict) -> dict:
    rule = None
    if v.rule_used is not None:
        rule = {
            "k": v.rule_used.k,
            "scope": v.rule_used.scope,
            "odd_prime_bound": v.rule_used.odd_prime_bound,
            "iff": v.rule_used.iff,
        }
    return {
        "integral": v.integral,
        "local": {str(p): verdict for p, verdict in sorted(v.local.items())},
        "rule": rule,
        "stabilized": v.stabilized,
    }


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# --------------------------------------------------------------------------
# command handlers (each returns the text to print)


def _cmd_decompose(args: argparse.Namespace) -> str:
    spec = _spec_from_args(args)
    dec = decomposer.decompose(spec, args.t, d=args.d)
    if args.json:
        return _dump(
            {
                "case": dec.case_used.value,
                "suspension": [_atom_json(a) for a in decomposer.presentation_summands(dec.suspension)],
                "gauge": _gauge_json(dec.gauge),
            }
        )
    return decomposer.render_decomposition(dec)


def _cmd_suspension(args: argparse.Namespace) -> str:
    spec = _spec_from_args(args)
    dec = decomposer.decompose(spec, 0, d=args.d)
    if args.json:
        return _dump(
            {
                "case": dec.case_used.value,
                "suspension": [_atom_json(a) for a in decomposer.presentation_summands(dec.suspension)],
                "stabilization": dec.stabilization,
            }
        )
    return decomposer.render_suspension_half(dec)


def _cmd_homology(args: argparse.Namespace) -> str:
    spec = _spec_from_args(args)
    g = homology.homology_of_manifold(spec)
    if args.suspension:
        g = homology.suspend(g)
    if args.json:
        return _dump(
            {
                "homology": [
                    {"degree": i, "rank": rank, "torsion": list(torsion)}
                    for i, (rank, torsion) in enumerate(g.groups)
                ]
            }
        )
    return homology.render_graded(g)


def _render_rule_line(v: EquivalenceVerdict) -> str:
    rule = v.rule_used
    if rule is None:
        return "rule: none"
    line = f"rule: k={rule.k}, {rule.scope}"
    if rule.odd_prime_bound is not None:
        line += f", odd primes p with (p-1)^2+1 >= {rule.odd_prime_bound}"
    return line


def _cmd_classify(args: argparse.Namespace) -> str:
    spec = _spec_from_args(args)
    group = parse_group(args.group)
    verdict = classify(group, spec, args.t, args.s, args.primes)
    if args.json:
        return _dump({"verdict": _verdict_json(verdict)})
    lines = [_render_rule_line(verdict), f"integral: {verdict.integral}"]
    lines += [f"p={p}: {v}" for p, v in sorted(verdict.local.items())]
    lines.append(f"stabilized: {'yes' if verdict.stabilized else 'no'}")
    return "\n".join(lines)


def _cmd_snf(args: argparse.Namespace) -> str:
    result = homology.smith_normal_form(homology.parse_matrix(args.matrix))
    if args.json:
        return _dump(
            {"invariant_factors": list(result.invariant_factors), "rank": result.rank}
        )
    return " ".join(str(d) for d in result.invariant_factors)


def _cmd_parse(args: argparse.Namespace) -> str:
    spec = _spec_from_args(args)
    validate(spec)
    flag = "trivial" if spec.sigma_f_trivial else "nontrivial"
    if args.json:
        return _dump(
            {
                "pi1": render_pi1(spec.pi1),
                "free_rank": spec.pi1.free_rank,
                "cyclic_factors": [list(f) for f in spec.pi1.cyclic_factors],
                "b2": spec.b2,
                "sigma_f_trivial": spec.sigma_f_trivial,
            }
        )
    return f"pi1 = {render_pi1(spec.pi1)}; b2 = {spec.b2}; sigma-f = {flag}"


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        out = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
