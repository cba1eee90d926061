"""Command-line front end.  Every subcommand emits machine-readable output
(JSON by default, schema-tagged); reporting a hypothesis violation is a
successful computation (exit 0).  Exit 2 means the input itself was invalid,
exit 3 a cap or refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from random import Random

from . import _config, bounds, ffpoly, search, setfam, witness
from .errors import (
    BasisDegenerate,
    BoundViolation,
    DegreeExceedsModulus,
    DimensionOverflow,
    DomainMismatch,
    FamilyParseError,
    LevelOutOfRange,
    LintersectError,
    NonPrimeModulus,
    NotAlmostInitial,
    ParamOutOfRange,
    ResidueOutOfRange,
    SearchCapExceeded,
)
from .randfam import random_admissible_family

SCHEMA = "1"

_VALIDATION_ERRORS = (
    FamilyParseError,
    NonPrimeModulus,
    ResidueOutOfRange,
    DegreeExceedsModulus,
    BasisDegenerate,
    LevelOutOfRange,
    ParamOutOfRange,
    NotAlmostInitial,
    DomainMismatch,
)
_REFUSAL_ERRORS = (DimensionOverflow, SearchCapExceeded)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def _emit_json(payload: dict) -> None:
    payload = {"schema": SCHEMA, **payload}
    print(json.dumps(payload, indent=2, sort_keys=True))


def _emit_csv(rows: list[dict]) -> None:
    if not rows:
        return
    keys = list(rows[0].keys())
    print(",".join(keys))
    for row in rows:
        print(",".join(str(int(v) if isinstance(v, bool) else v)
                       for v in (row[k] for k in keys)))


def _load_family(args) -> setfam.SetFamily:
    if getattr(args, "family_json", None):
        text = _read(args.family_json)
        return setfam.family_from_json(json.loads(text))
    if not getattr(args, "family", None):
        raise ParamOutOfRange("a family file is required (--family or --family-json)")
    return setfam.parse_family(_read(args.family))


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ParamOutOfRange(f"cannot read {path}: {e}") from None


def cmd_bsupp(args) -> int:
    p = None if args.integers else args.p
    if p is None and not args.integers:
        raise ParamOutOfRange("give --p PRIME or --integers")
    L = ffpoly.residue_set(args.L, p)
    P = ffpoly.annihilator_poly(L, p)
    exp = ffpoly.to_binomial_basis(P, len(L), p)
    payload = {
        "domain": "integers" if p is None else f"mod {p}",
        "p": p,
        "L": list(L),
        "power_coeffs": list(P.coeffs),
        "binomial_coeffs": list(exp.coeffs),
        "support": list(exp.support()),
    }
    if args.format == "text":
        print(f"P(t) coefficients (ascending): {list(P.coeffs)}")
        print(f"binomial coefficients c_0..c_{len(L)}: {list(exp.coeffs)}")
        print(f"support: {list(exp.support())}")
    else:
        _emit_json(payload)
    return 0


_THEOREMS = {
    "abs-classic": lambda F, a: bounds.check_abs_classic(F, a.K, a.L),
    "multilevel": lambda F, a: bounds.check_multilevel(F, a.K, a.L),
    "modular-multilevel": lambda F, a: bounds.check_modular_multilevel(F, a.K, a.L, _need_p(a)),
    "coeff": lambda F, a: bounds.check_coeff_sensitive(F, a.K, a.L, _need_p(a)),
    "coeff-nonshadow": lambda F, a: bounds.check_coeff_sensitive(
        F, a.K, a.L, _need_p(a), with_nonshadows=True
    ),
    "almost-initial": lambda F, a: bounds.check_almost_initial(F, a.K, a.L, _need_p(a)),
    "consecutive": lambda F, a: bounds.check_consecutive(F, a.K, a.L, _need_p(a)),
    "nonmodular-support": lambda F, a: bounds.check_nonmodular_support(F, a.K, a.L),
}


def _need_p(args) -> int:
    if args.p is None:
        raise ParamOutOfRange(f"theorem {args.theorem!r} needs --p PRIME")
    return args.p


def cmd_bound(args) -> int:
    F = _load_family(args)
    report = _THEOREMS[args.theorem](F, args)
    if args.format == "text":
        d = report.to_dict()
        for key in ("theorem", "hypotheses_ok", "violated", "lhs", "rhs", "slack",
                    "shadow_lhs", "shadow_rhs", "bsupp"):
            print(f"{key}: {d[key]}")
    else:
        _emit_json(report.to_dict())
    return 0


def cmd_certificate(args) -> int:
    F = _load_family(args)
    cap = args.matrix_cap
    if args.kind == "gram":
        gw = witness.gram_witness(F, args.L, _need_p_kind(args))
        _emit_json(gw.to_dict())
        return 0
    if args.kind == "incidence":
        cert = witness.incidence_independence(
            F, args.L, _need_p_kind(args),
            with_nonshadows=args.with_nonshadows,
            matrix_cap=cap, keep_matrix=args.include_matrix,
        )
        _emit_json(cert.to_dict())
        return 0
    # polynomial witness family
    if args.p is None:
        report = bounds.check_multilevel(F, args.K, args.L)
    else:
        report = bounds.check_modular_multilevel(F, args.K, args.L, args.p)
    W = witness.build_witness(F, args.K, args.L, p=args.p, strict=False)
    cert = witness.verify_independence(W, matrix_cap=cap,
                                       keep_matrix=args.include_matrix)
    payload = cert.to_dict()
    payload["hypotheses_ok"] = report.hypotheses_ok
    payload["violated"] = list(report.violated)
    _emit_json(payload)
    return 0


def _need_p_kind(args) -> int:
    if args.p is None:
        raise ParamOutOfRange(f"certificate kind {args.kind!r} needs --p PRIME")
    return args.p


def cmd_shadow(args) -> int:
    F = _load_family(args)
    if args.t is not None and not 0 <= args.t <= F.n:
        raise LevelOutOfRange(f"level {args.t} outside 0..{F.n}")
    levels = [args.t] if args.t is not None else list(range(F.n + 1))
    stats = setfam.level_stats(F, levels)
    rows = [
        {"level": x.level, "shadow": x.shadow_count, "nonshadow": x.nonshadow_count}
        for x in stats
    ]
    if args.format == "csv":
        _emit_csv(rows)
    elif args.format == "text":
        print(f"{'level':>5} {'shadow':>8} {'nonshadow':>10}")
        for r in rows:
            print(f"{r['level']:>5} {r['shadow']:>8} {r['nonshadow']:>10}")
    else:
        _emit_json({"n": F.n, "family_size": len(F), "levels": rows})
    return 0


def cmd_search(args) -> int:
    problem = search.make_problem(args.n, args.K, args.L, p=args.p,
                                  cap=args.search_cap)
    res = search.max_family(
        problem,
        time_budget=args.time_budget,
        use_theorem_cutoff=not args.no_theorem_cutoff,
    )
    d = res.to_dict()
    d.update({"n": args.n, "p": args.p, "K": list(problem.K), "L": list(problem.L),
              "mode": "exact" if args.p is None else "modular"})
    if args.format == "csv":
        flat = {k: d[k] for k in ("n", "max_size", "vertex_count",
                                  "nodes_explored", "proof_of_optimality")}
        flat["bound_used"] = d["bound_used"] if d["bound_used"] is not None else ""
        _emit_csv([flat])
    else:
        _emit_json(d)
    return 0


def cmd_sweep(args) -> int:
    if args.kind == "sharpness":
        rows = [r.to_dict() for r in search.sharpness_sweep(
            args.n_max, args.s_max, time_budget=args.time_budget)]
    else:
        if args.p is None:
            raise ParamOutOfRange("unattainability sweep needs --p PRIME")
        rows = [r.to_dict() for r in search.unattainability_sweep(
            args.p, args.n_max, time_budget=args.time_budget)]
    if args.format == "csv":
        flat = []
        for r in rows:
            r = dict(r)
            if "K" in r:
                r["K"] = " ".join(str(x) for x in r["K"])
            flat.append(r)
        _emit_csv(flat)
    else:
        _emit_json({"kind": args.kind, "rows": rows})
    return 0


def cmd_gen(args) -> int:
    rng = Random(args.seed)
    F = random_admissible_family(rng, args.n, args.K, args.L, p=args.p,
                                 target=args.target)
    sys.stdout.write(setfam.format_family(F))
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="lintersect",
        description="Restricted-intersection family toolkit: binomial supports, "
                    "shadow bounds, independence certificates, extremal search.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_family_opts(p):
        p.add_argument("--family", help="family file path, or - for stdin")
        p.add_argument("--family-json", help='JSON family file {"n":..,"sets":[[..],..]}')

    sp = sub.add_parser("bsupp", help="binomial expansion and support of the annihilator")
    sp.add_argument("--L", type=_int_list, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--integers", action="store_true", help="integer domain instead of mod p")
    sp.add_argument("--format", choices=["json", "text"], default="json")
    sp.set_defaults(func=cmd_bsupp)

    sp = sub.add_parser("bound", help="evaluate one theorem on a family")
    sp.add_argument("--theorem", choices=sorted(_THEOREMS), required=True)
    add_family_opts(sp)
    sp.add_argument("--L", type=_int_list, required=True)
    sp.add_argument("--K", type=_int_list, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--format", choices=["json", "text"], default="json")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("certificate", help="build and rank-verify a witness")
    sp.add_argument("--kind", choices=["witness", "gram", "incidence"], default="witness")
    add_family_opts(sp)
    sp.add_argument("--L", type=_int_list, required=True)
    sp.add_argument("--K", type=_int_list, default=[])
    sp.add_argument("--p", type=int)
    sp.add_argument("--with-nonshadows", action="store_true")
    sp.add_argument("--include-matrix", action="store_true")
    sp.add_argument("--matrix-cap", type=int, default=None)
    sp.set_defaults(func=cmd_certificate)

    sp = sub.add_parser("shadow", help="per-level shadow / non-shadow table")
    add_family_opts(sp)
    sp.add_argument("--t", type=int, default=None, help="single level (default: all)")
    sp.add_argument("--format", choices=["json", "csv", "text"], default="json")
    sp.set_defaults(func=cmd_shadow)

    sp = sub.add_parser("search", help="maximum admissible family (exact search)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--L", type=_int_list, required=True)
    sp.add_argument("--K", type=_int_list, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--time-budget", type=float, default=None)
    sp.add_argument("--search-cap", type=int, default=None)
    sp.add_argument("--no-theorem-cutoff", action="store_true")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("sweep", help="sharpness / unattainability tables")
    sp.add_argument("kind", choices=["sharpness", "unattainability"])
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--s-max", type=int, default=3)
    sp.add_argument("--p", type=int)
    sp.add_argument("--time-budget", type=float, default=None)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("gen", help="seeded random admissible family (text format)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--L", type=_int_list, required=True)
    sp.add_argument("--K", type=_int_list, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--target", type=int, default=None)
    sp.set_defaults(func=cmd_gen)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _REFUSAL_ERRORS as e:
        print(f"refused: {e}", file=sys.stderr)
        return 3
    except _VALIDATION_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as e:
        print(f"error: bad JSON family: {e}", file=sys.stderr)
        return 2
    except BoundViolation as e:
        print(f"BOUND VIOLATION: {e}", file=sys.stderr)
        return 1
    except LintersectError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
