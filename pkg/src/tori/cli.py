"""Command-line front end: ``torus local|global|h1|isogeny|catalog``.

Exit codes: 0 success, 2 input error, 3 internal cross-check failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import assembly, catalog, io, lattice, local
from .abelian import FinAbGroup
from .errors import InternalError, InvalidInput, TorusError
from .groups import Subgroup, cyclic
from .isogeny import isogenous

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


def fmt_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def group_json(G: FinAbGroup) -> dict:
    return {"free_rank": str(G.free_rank),
            "invariant_factors": [str(d) for d in G.invariant_factors],
            "notation": str(G)}


def _emit(args, human: list[tuple[str, object]], machine: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(machine, ensure_ascii=False, indent=1))
    else:
        for k, v in human:
            print(f"{k}: {v}")


def _bool(b: bool) -> str:
    return "true" if b else "false"


def cmd_local(args) -> int:
    doc = io.load(args.file)
    if doc.local is None:
        raise io.InputError("local", "missing field (document has no local block)")
    r = local.local_report(doc.local)
    human = [("good_reduction", _bool(r.good_reduction)),
             ("l_factor_at_1", fmt_rational(r.l_factor_at_1)),
             ("component_group", r.component_group),
             ("shyr_factor", r.shyr_factor),
             ("h1_inertia", r.h1_inertia),
             ("geometric_component_group", r.geometric_component_group)]
    if not r.q_is_prime_power:
        human.append(("warning", f"residue_q = {doc.local.residue_q} is not a prime power"))
    machine = {"good_reduction": r.good_reduction,
               "l_factor_at_1": fmt_rational(r.l_factor_at_1),
               "component_group": group_json(r.component_group),
               "shyr_factor": str(r.shyr_factor),
               "h1_inertia": group_json(r.h1_inertia),
               "geometric_component_group": group_json(r.geometric_component_group),
               "q_is_prime_power": r.q_is_prime_power}
    _emit(args, human, machine)
    return EXIT_OK


def render_value(v: assembly.SymbolicValue, spec: assembly.GlobalTorusSpec) -> str:
    c = fmt_rational(v.coefficient)
    if spec.case == "F":
        return f"{c} · (ln {spec.constants_q})^{v.lnq_exponent}"
    return f"{c} · |{spec.discriminant}|^({v.sqrt_disc_exponent}/2) · C_infinity"


def cmd_global(args) -> int:
    doc = io.load(args.file)
    spec = doc.global_spec
    if spec is None:
        raise io.InputError("global", "missing field (document has no global block)")
    factors = assembly.local_factors(spec)
    value = assembly.shyr_invariant(spec)
    disc = assembly.quasi_discriminant(value)
    human = [("case", spec.case), ("dimension", spec.dimension),
             ("pole_order", assembly.pole_order(spec))]
    human += [(f"local_factor[{lbl}]", f) for lbl, f in factors]
    human += [("finite_part", assembly.finite_part(spec)),
              ("coefficient", fmt_rational(value.coefficient)),
              ("lnq_exponent", value.lnq_exponent),
              ("sqrt_disc_exponent", value.sqrt_disc_exponent)]
    if spec.case == "N":
        human.append(("C_infinity", "unevaluated"))
    human += [("shyr_invariant", render_value(value, spec)),
              ("quasi_discriminant", render_value(disc, spec).replace(
                  "· C_infinity", "· C_infinity^-2"))]
    machine = {"case": spec.case, "dimension": str(spec.dimension),
               "pole_order": str(assembly.pole_order(spec)),
               "local_factors": {lbl: str(f) for lbl, f in factors},
               "finite_part": str(assembly.finite_part(spec)),
               "shyr_invariant": value.to_json(),
               "quasi_discriminant": disc.to_json()}
    if spec.case == "N":
        machine["C_infinity"] = "unevaluated"
    _emit(args, human, machine)
    return EXIT_OK


def _subgroup_arg(doc: io.InputDocument, spec: str | None) -> Subgroup:
    G = doc.group
    if spec:
        try:
            return Subgroup(G, tuple(int(x) for x in spec.split(",")))
        except ValueError as e:
            raise io.InputError("--subgroup", str(e)) from e
    if doc.local is not None:
        return doc.local.inertia
    return Subgroup.whole(G)


def cmd_h1(args) -> int:
    doc = io.load(args.file)
    H = _subgroup_arg(doc, args.subgroup)
    result = lattice.h1(doc.lattice, H)
    if args.json:
        print(json.dumps(group_json(result), ensure_ascii=False))
    else:
        print(result)
    return EXIT_OK


def cmd_isogeny(args) -> int:
    a, b = io.load(args.file1), io.load(args.file2)
    iso = [int(x) for x in args.isomorphism.split(",")] if args.isomorphism else None
    ok = isogenous(a.lattice, b.lattice, iso)
    if args.json:
        print(json.dumps({"isogenous": ok}))
    else:
        print(f"isogenous: {_bool(ok)}")
    return EXIT_OK


CATALOG = {
    # name: (number of integer params, builder(params) -> lattice)
    "split": (2, lambda n, d: catalog.split_torus(cyclic(n), d)),
    "weil": (1, lambda n: catalog.weil_restriction(cyclic(n))),
    "norm_one": (1, lambda n: catalog.norm_one_torus(cyclic(n))),
}


def cmd_catalog(args) -> int:
    if args.name not in CATALOG:
        raise io.InputError("name", f"unknown catalog entry {args.name!r}; "
                                    f"choose from {sorted(CATALOG)}")
    arity, build = CATALOG[args.name]
    if len(args.params) != arity:
        raise io.InputError("params", f"{args.name} takes {arity} integer parameter(s): "
                                      "group order" + (" and rank" if arity == 2 else ""))
    params = [int(p) for p in args.params]
    if params[0] < 1 or any(p < 0 for p in params):
        raise io.InputError("params", "group order must be >= 1 and rank >= 0")
    L = build(*params)
    G = L.group
    n = G.order
    e = n if args.ramification is None else args.ramification
    if e < 1 or n % e:
        raise io.InputError("--ramification", f"must divide the group order {n}")
    # cyclic group: the subgroup of order e is generated by sigma^(n/e)
    I = Subgroup.generated(G, [(n // e) % n])
    data = local.LocalTorusData(L, I, 1 % n, args.q)
    spec = None
    if args.global_case:
        place = assembly.PlaceData("p", Subgroup.whole(G), I, 1 % n, args.q)
        spec = assembly.GlobalTorusSpec(args.global_case, L, (place,), constants_q=args.q,
                                        genus=args.genus, discriminant=args.discriminant)
    io.save(args.output, io.dump_document(L, data, spec))
    print(f"wrote {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="torus", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("local", help="local invariants at one place")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_local)

    s = sub.add_parser("global", help="global Shyr invariant")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_global)

    s = sub.add_parser("h1", help="first cohomology of a subgroup on the character lattice")
    s.add_argument("file")
    s.add_argument("--subgroup", help="comma-separated elements (default: inertia, "
                                      "or the whole group)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_h1)

    s = sub.add_parser("isogeny", help="decide isogeny by character equality")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--isomorphism", help="comma-separated images of file1's elements "
                                         "in file2's group")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_isogeny)

    s = sub.add_parser("catalog", help="write a standard torus (cyclic group) to a file")
    s.add_argument("name", help="split | weil | norm_one")
    s.add_argument("params", nargs="*", help="group order n (and rank d for split)")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--ramification", type=int, help="order e of inertia (default: n)")
    s.add_argument("--q", type=int, default=3, help="residue field size (default 3)")
    s.add_argument("--global", dest="global_case", choices=["F", "N"],
                   help="also write a global block with one place")
    s.add_argument("--genus", type=int, default=0)
    s.add_argument("--discriminant", type=int, default=-3)
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalError as e:
        print(f"error: internal cross-check failed: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InvalidInput, TorusError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
