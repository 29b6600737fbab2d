"""Command-line front end.

Subcommands: classify, gmin, witness, verify, catalog, cyclo, crt.
Exit codes: 0 = realizable / verified, 1 = not realizable / mismatch,
2 = input error, 3 = verification skipped (enumeration budget).

The enumeration budget defaults to 10**6 roots of unity; override with
``--budget`` or the RINGUNITS_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import classify, cycring, groups
from .cycring import BudgetError
from .numth import cyclotomic_poly

BUDGET_ENV = "RINGUNITS_BUDGET"

CLASS_NAMES = ("domain0", "domainp", "domain-int", "torsion-free", "reduced")


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return cycring.DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{BUDGET_ENV} must be an integer, got {raw!r}")


def _parse_group(text: str) -> groups.FGAbelianGroup:
    try:
        return groups.parse_group(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _decide(g: groups.FGAbelianGroup, cls: str, mode: str, budget: int) -> classify.Verdict:
    if cls == "domain0":
        return classify.decide_domain_char0(g)
    if cls == "domainp":
        return classify.decide_domain_charp(g)
    if cls == "domain-int":
        return classify.decide_domain_integral_over_Z(g)
    if cls == "torsion-free":
        return classify.decide_torsion_free(g, budget=budget)
    if cls == "reduced":
        return classify.decide_reduced(g, mode=mode, budget=budget)
    raise SystemExit(f"unknown class {cls!r}")


def _verdict_json(cls: str, g: groups.FGAbelianGroup, v: classify.Verdict) -> str:
    return json.dumps(
        {"class": cls, "group": str(g), **v.to_dict()}, indent=2, sort_keys=False
    )


def cmd_classify(args) -> int:
    g = _parse_group(args.group)
    mode = "any"
    if args.char0:
        mode = "char0"
    if args.positive_char:
        mode = "positive_char"
    v = _decide(g, args.cls, mode, args.budget)
    if args.json:
        print(_verdict_json(args.cls, g, v))
    else:
        print(f"group: {g}")
        print(f"class: {args.cls}" + (f" ({mode})" if args.cls == "reduced" else ""))
        print(f"realizable: {'yes' if v.realizable else 'no'} ({v.reason})")
        if v.min_rank is not None:
            print(f"min_rank: {v.min_rank}")
        if v.witness is not None:
            w = v.witness
            print(f"witness: {w.kind}" + (f", moduli {list(w.moduli)}" if w.moduli else ""))
            for gen in w.generators:
                print(f"  generator {gen}")
            if w.laurent_vars:
                print(f"  laurent variables: {w.laurent_vars}")
            if w.notes:
                print(f"  notes: {w.notes}")
    return 0 if v.realizable else 1


def cmd_gmin(args) -> int:
    g = _parse_group(args.group)
    try:
        sd = groups.standard_decomposition(g.torsion)
    except groups.OddOrderError as exc:
        print(f"not defined: {exc}", file=sys.stderr)
        return 1
    gt = groups.g_min(g.torsion)
    moduli = classify.witness_moduli(g.torsion)
    if args.json:
        print(
            json.dumps(
                {
                    "group": str(g.torsion),
                    "g": gt,
                    "eps": sd.eps,
                    "sigma": sd.sigma,
                    "two_exponents": list(sd.two_exponents),
                    "odd_parts": [list(p) for p in sd.odd_parts],
                    "witness_moduli": list(moduli),
                },
                indent=2,
            )
        )
    else:
        print(f"T = {g.torsion}")
        print(
            f"standard decomposition: eps={sd.eps} sigma={sd.sigma} "
            f"two_exponents={list(sd.two_exponents)} odd_parts={list(sd.odd_parts)} "
            f"(s={sd.s}, s0={sd.s0}, rho={sd.rho}, d={sd.d})"
        )
        print(f"g = {gt}")
        print(f"witness moduli: {list(moduli)}")
    return 0


def cmd_witness(args) -> int:
    g = _parse_group(args.group)
    try:
        w = classify.build_witness(g.torsion, budget=args.budget, verify=True)
    except groups.OddOrderError as exc:
        print(f"no witness: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"group": str(g.torsion), **w.to_dict()}, indent=2))
    else:
        print(f"T = {g.torsion}")
        print(f"kind: {w.kind}")
        print(f"moduli: {list(w.moduli)}")
        for gen in w.generators:
            print(f"  generator {gen}")
        print(f"verified: {w.verified}")
        if w.notes:
            print(f"notes: {w.notes}")
    return 0 if w.verified is not False else 1


def cmd_verify(args) -> int:
    g = _parse_group(args.group)
    try:
        w = classify.build_witness(g.torsion, budget=args.budget, verify=False)
    except groups.OddOrderError as exc:
        print(f"no witness: {exc}", file=sys.stderr)
        return 1
    print(f"T = {g.torsion}")
    print(f"witness: {w.kind} over moduli {list(w.moduli)}")
    try:
        got = classify.verify_witness_group(w, budget=args.budget)
    except BudgetError as exc:
        print(f"UNVERIFIED: {exc}")
        return 3
    if got == g.torsion:
        print(f"PASS: torsion units of the witness order are {got}")
        return 0
    print(f"FAIL: enumeration found {got}, expected {g.torsion}")
    return 1


def cmd_catalog(args) -> int:
    cls = args.cls
    rows = []
    for t in groups.abelian_groups_upto(args.max_order):
        g = groups.FGAbelianGroup(t, args.max_rank)
        v = _decide(g, cls, "any", args.budget)
        mr = "-" if v.min_rank is None else str(v.min_rank)
        rows.append((t.order, str(t), "yes" if v.realizable else "no", mr))
    print(f"# class={cls} max_order={args.max_order} max_rank={args.max_rank}")
    print(f"{'order':<6} {'group':<26} {'realizable':<11} min_rank")
    for order, name, real, mr in rows:
        print(f"{order:<6} {name:<26} {real:<11} {mr}")
    return 0


def cmd_cyclo(args) -> int:
    if args.n < 1:
        print("error: n must be >= 1", file=sys.stderr)
        return 2
    print(cyclotomic_poly(args.n))
    return 0


def cmd_crt(args) -> int:
    moduli = args.moduli
    try:
        if len(moduli) >= 2:
            surj = cycring.crt_is_surjective(moduli)
        else:
            surj = True  # psi is the identity on a single factor
        lat = cycring.psi_image(moduli)
        res = cycring.torsion_units_of_quotient(moduli, budget=args.budget)
    except (ValueError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"moduli: {list(moduli)}")
    print(f"surjective: {'yes' if surj else 'no'}")
    print(f"index: {lat.index()}")
    print(f"torsion units: {res.group} (order {res.group.order})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringunits",
        description="Decide which finitely generated abelian groups are unit groups "
        "of integral domains, torsion-free rings and reduced rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p):
        p.add_argument(
            "--budget",
            type=int,
            default=_default_budget(),
            help="max roots of unity to enumerate (default 10^6, env RINGUNITS_BUDGET)",
        )

    p = sub.add_parser("classify", help="decide one group against one ring class")
    p.add_argument("group")
    p.add_argument("--class", dest="cls", choices=CLASS_NAMES, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--char0", action="store_true", help="reduced: characteristic 0 only")
    p.add_argument(
        "--positive-char", action="store_true", help="reduced: positive characteristic only"
    )
    add_budget(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gmin", help="minimal torsion-free rank and standard decomposition")
    p.add_argument("group")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gmin)

    p = sub.add_parser("witness", help="build (and self-verify) the witness order")
    p.add_argument("group")
    p.add_argument("--json", action="store_true")
    add_budget(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="brute-force check the witness order for a group")
    p.add_argument("group")
    add_budget(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="tabulate a class over all small groups")
    p.add_argument("--max-order", type=int, default=12)
    p.add_argument("--class", dest="cls", choices=CLASS_NAMES, default="torsion-free")
    p.add_argument("--max-rank", type=int, default=0)
    add_budget(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("cyclo", help="print the n-th cyclotomic polynomial")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_cyclo)

    p = sub.add_parser("crt", help="CRT map of Z[x]/(prod Phi_m): surjectivity, index, torsion")
    p.add_argument("moduli", type=int, nargs="+")
    add_budget(p)
    p.set_defaults(func=cmd_crt)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
