"""Command-line front end.

Exit codes: 0 all checks passed, 1 a verified identity failed, 2 parse
error, 3 constraint violation (bad q/n combination), 4 size guard
exceeded, 5 non-standard conic model.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .cohomology import (FiniteAbelianGroup, Cochain, cohomology_rank,
                         cocycles_cohomologous, cup_product_boxtimes,
                         epsilon_cocycle, extension_factor_set,
                         identity_character, lhs_edge_map,
                         verify_coboundary_identity)
from .conic import (ConicBundle, ConicModelError, check_artin,
                    component_torsor, count_fiber_points, discriminant_places)
from .finitefield import FiniteField, ResidueClass, is_prime
from .parsing import ParseError, parse_place, parse_ratfunc, parse_symbol_sum
from .ratfunc import Place
from .residues import (SymbolClass, ramification_divisor, reciprocity_sum,
                       residue_cocycle_route, tame_residue)
from .snf import TableSizeError

EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_CONSTRAINT = 3
EXIT_SIZE = 4
EXIT_CONIC = 5


class ConstraintError(ValueError):
    pass


def _field_for(q: int, n: int | None = None, odd: bool = False) -> FiniteField:
    if not is_prime(q):
        raise ConstraintError(f"q={q} must be prime")
    if odd and q == 2:
        raise ConstraintError("odd characteristic required")
    if n is not None:
        if n < 2:
            raise ConstraintError("n must be >= 2")
        if (q - 1) % n != 0:
            raise ConstraintError(f"n must divide q-1 (got n={n}, q={q})")
    return FiniteField(q)


def _residue_json(r: ResidueClass) -> dict:
    return {"value": r.value, "n": r.n, "zeta": r.zeta.key()}


def _emit(args, payload: dict, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)
    return 0 if payload["pass"] else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------


def cmd_residue(args) -> int:
    F = _field_for(args.q, args.n)
    alpha = parse_symbol_sum(args.symbol, F, args.n)
    P = parse_place(args.place, F)
    r = tame_residue(alpha, P)
    payload = {
        "command": "residue",
        "params": {"q": args.q, "n": args.n, "symbol": args.symbol,
                   "place": str(P)},
        "results": {"residue": _residue_json(r)},
        "pass": True,
    }
    return _emit(args, payload, [f"{r.value} (zeta={r.zeta!r})"])


def cmd_ramification(args) -> int:
    F = _field_for(args.q, args.n)
    alpha = parse_symbol_sum(args.symbol, F, args.n)
    div = ramification_divisor(alpha)
    payload = {
        "command": "ramification",
        "params": {"q": args.q, "n": args.n, "symbol": args.symbol},
        "results": {"divisor": [{"place": str(P),
                                 "residue": _residue_json(r)}
                                for P, r in div.items()]},
        "pass": True,
    }
    return _emit(args, payload, [repr(div)])


def cmd_reciprocity(args) -> int:
    F = _field_for(args.q, args.n)
    alpha = parse_symbol_sum(args.symbol, F, args.n)
    div = ramification_divisor(alpha) if alpha.terms else None
    total = (reciprocity_sum(alpha) if alpha.terms
             else ResidueClass(args.n, 0, F.zeta(args.n)))
    ok = total.is_zero()
    lines = []
    if div is not None:
        for P, r in div.items():
            lines.append(f"  {P}: {r.value}")
    lines.append(f"sum={total.value}")
    payload = {
        "command": "reciprocity",
        "params": {"q": args.q, "n": args.n, "symbol": args.symbol},
        "results": {"sum": _residue_json(total)},
        "pass": ok,
    }
    return _emit(args, payload, lines)


def cmd_cohomology(args) -> int:
    n = args.n
    if n < 2:
        raise ConstraintError("n must be >= 2")
    results: dict = {}
    lines = []
    ok = True
    if args.subcommand == "edge":
        edge = lhs_edge_map(cup_product_boxtimes(n))
        ok = edge == identity_character(n)
        results["edge_values"] = [edge((b,)) for b in range(n)]
        lines.append(f"1_boxtimes_1 -> {'1' if ok else results['edge_values']}"
                     f" : {'PASS' if ok else 'FAIL'}")
    elif args.subcommand == "epsilon":
        ok = verify_coboundary_identity(n)
        eps = epsilon_cocycle(n)
        results["epsilon"] = [[str(eps[(b, b2)]) for b2 in range(n)]
                              for b in range(n)]
        lines.append(f"coboundary identity {'PASS' if ok else 'FAIL'}")
    elif args.subcommand == "gamma":
        if args.gamma_q is None:
            raise ConstraintError("gamma requires --q")
        _field_for(args.gamma_q, n)
        s = extension_factor_set(n, args.gamma_q)
        target = -1 * cup_product_boxtimes(n)
        zero = Cochain(FiniteAbelianGroup((n, n)), 2, n)
        matches = cocycles_cohomologous(s, target)
        nontrivial = not cocycles_cohomologous(s, zero)
        ok = matches and nontrivial
        results["cohomologous_to_minus_boxtimes"] = matches
        results["nontrivial"] = nontrivial
        lines.append(f"factor set ~ -(1x1) : {'PASS' if ok else 'FAIL'}")
    elif args.subcommand == "rank":
        factors = ([int(x) for x in args.factors.split(",")]
                   if args.factors else [n])
        m = args.m if args.m else n
        ranks = cohomology_rank(FiniteAbelianGroup(factors), m, args.degree)
        results["invariant_factors"] = ranks
        lines.append(f"H^{args.degree}({' x '.join(f'Z/{f}' for f in factors)},"
                     f" Z/{m}) = {ranks}")
    payload = {
        "command": f"cohomology {args.subcommand}",
        "params": {"n": n, "q": args.gamma_q},
        "results": results,
        "pass": ok,
    }
    return _emit(args, payload, lines)


def cmd_conic(args) -> int:
    F = _field_for(args.q, n=2, odd=True)
    a = parse_ratfunc(args.a, F)
    b = parse_ratfunc(args.b, F)
    if a.is_zero() or b.is_zero():
        raise ParseError("conic coefficients must be nonzero")
    C = ConicBundle(a, b)
    rows = check_artin(C)
    ok = all(agree for _, _, _, agree in rows)
    lines = []
    if not rows:
        lines.append("unramified everywhere")
    for P, geo, res, agree in rows:
        lines.append(f"  place={P} geometric={geo.value} residue={res.value} "
                     f"agree={str(agree).lower()}")
    payload = {
        "command": "conic",
        "params": {"q": args.q, "a": args.a, "b": args.b},
        "results": {"places": [{"place": str(P),
                                "geometric": _residue_json(geo),
                                "residue": _residue_json(res),
                                "agree": agree}
                               for P, geo, res, agree in rows]},
        "pass": ok,
    }
    return _emit(args, payload, lines)


def cmd_selftest(args) -> int:
    from .poly import Poly
    from .ratfunc import RatFunc
    seed = int(os.environ.get("BRAUER_SEED", "0"))
    rng = random.Random(seed)
    failures = []
    lines = []

    def rand_ratfunc(F, q, max_deg=4):
        while True:
            num = Poly(F, [rng.randrange(q) for _ in range(rng.randrange(1, max_deg + 2))])
            den = Poly(F, [rng.randrange(q) for _ in range(rng.randrange(1, max_deg + 2))])
            if not num.is_zero() and not den.is_zero():
                f = RatFunc(num, den)
                if not f.is_zero():
                    return f

    for q in (5, 13):
        F = FiniteField(q)
        for _ in range(args.rounds):
            n = rng.choice([m for m in (2, 4) if (q - 1) % m == 0])
            a, b = rand_ratfunc(F, q), rand_ratfunc(F, q)
            if not reciprocity_sum(SymbolClass.symbol(a, b, n)).is_zero():
                failures.append(f"reciprocity ({a},{b})_{n} over F_{q}")
            if a != 1 and not (1 - a).is_zero():
                if ramification_divisor(
                        SymbolClass.symbol(a, 1 - a, n)).entries:
                    failures.append(f"steinberg a={a} over F_{q}")
            Ca = rand_ratfunc(F, q)
            Cb = rand_ratfunc(F, q)
            C = ConicBundle(Ca, Cb)
            for P in discriminant_places(C):
                if component_torsor(C, P) != tame_residue(C.symbol(), P):
                    failures.append(f"conic ({Ca},{Cb}) at {P} over F_{q}")
        lines.append(f"F_{q}: {args.rounds} rounds done")
    ok = not failures
    lines.append("selftest " + ("PASS" if ok else "FAIL"))
    lines.extend(failures)
    payload = {
        "command": "selftest",
        "params": {"seed": seed, "rounds": args.rounds},
        "results": {"failures": failures},
        "pass": ok,
    }
    return _emit(args, payload, lines)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauer",
        description="Residues of n-torsion Brauer classes over F_q(t): "
                    "tame symbols, cocycle calculus, conic bundles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("residue", help="residue of a symbol sum at a place")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--symbol", required=True)
    p.add_argument("--place", required=True)
    add_format(p)
    p.set_defaults(func=cmd_residue)

    p = sub.add_parser("ramification", help="full ramification divisor")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--symbol", required=True)
    add_format(p)
    p.set_defaults(func=cmd_ramification)

    p = sub.add_parser("reciprocity", help="sum of corestricted residues")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--symbol", required=True)
    add_format(p)
    p.set_defaults(func=cmd_reciprocity)

    p = sub.add_parser("cohomology", help="cocycle-level verifications")
    p.add_argument("subcommand", choices=("edge", "epsilon", "gamma", "rank"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, dest="gamma_q")
    p.add_argument("--factors", help="cyclic factors for rank, e.g. 2,2")
    p.add_argument("--m", type=int, help="coefficient modulus for rank")
    p.add_argument("--degree", type=int, default=2, help="degree for rank")
    add_format(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("conic", help="geometric vs cohomological residues")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    add_format(p)
    p.set_defaults(func=cmd_conic)

    p = sub.add_parser("selftest", help="randomized property suites "
                                        "(seed via BRAUER_SEED)")
    p.add_argument("--rounds", type=int, default=25)
    add_format(p)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ConstraintError as exc:
        print(f"constraint violation: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except TableSizeError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except ConicModelError as exc:
        print(f"conic model: {exc}", file=sys.stderr)
        return EXIT_CONIC
    except (ValueError, ZeroDivisionError) as exc:
        print(f"constraint violation: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT


if __name__ == "__main__":
    sys.exit(main())
