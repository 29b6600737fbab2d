"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.  Every tolerance and time bound is pinned here.

Known red assertion (criterion 4, middle clause): the expected torsion of
Z[x]/(Phi_3 Phi_9) is recorded as C9.  No correct enumeration can return
that group: -1 is a unit of order 2 in every characteristic-zero ring, so
the torsion subgroup of the unit group always has even order, and the
exhaustive enumeration finds <-x> = C18 (= C2 x C9; the class of x has
order 9 and -x order 18).  The expectation is kept as stated rather than
silently corrected; the verified C18 value is asserted in
tests/test_cycring.py.
"""

import time
from itertools import combinations, product

from ringunits.classify import (
    admissibility,
    build_witness,
    decide_domain_char0,
    decide_reduced,
    min_rank_search,
    minimal_order_moduli,
    witness_moduli,
)
from ringunits.cycring import (
    CycloElem,
    maximal_order_rank,
    norm_of_phi_eval,
    psi_image,
    rational_crt_contains,
    roots_of_unity,
    subring_span,
    torsion_units_of_quotient,
    torsion_units_of_subring,
)
from ringunits.groups import (
    FGAbelianGroup,
    abelian_groups_upto,
    field_units_group,
    g_min,
    is_rank_zero_family,
    parse_group,
)
from ringunits.numth import euler_phi, prime_power_ratio, unit_rank


def T(text):
    return parse_group(text).torsion


def report(name, checks, elapsed=None, limit=None):
    if limit is not None:
        checks = checks + [(f"runtime {elapsed:.3f}s < {limit}s", elapsed < limit, "")]
    ok = all(c[1] for c in checks)
    for label, good, detail in checks:
        mark = "ok  " if good else "FAIL"
        print(f"    {mark} {label}" + (f": {detail}" if detail else ""))
    print(f"{'PASS' if ok else 'FAIL'} {name}")
    assert ok, f"{name}: " + "; ".join(l for l, good, _ in checks if not good)


def test_criterion_01_g_values():
    t0 = time.perf_counter()
    a = g_min(T("C2 x C8 x C5"))
    b = g_min(T("C8 x C5"))
    el = time.perf_counter() - t0
    checks = [
        ("g(C2 x C8 x C5) = 2", a == 2, f"got {a}"),
        ("g(C8 x C5) = 7", b == 7, f"got {b}"),
    ]
    report("criterion 1: minimal ranks of the two flagship groups", checks, el, 0.1)


def test_criterion_02_rank_zero_family():
    t0 = time.perf_counter()
    mismatches = [
        str(t)
        for t in abelian_groups_upto(200)
        if t.order % 2 == 0 and is_rank_zero_family(t) != (g_min(t) == 0)
    ]
    el = time.perf_counter() - t0
    checks = [("zero mismatches over even |T| <= 200", not mismatches, str(mismatches))]
    report("criterion 2: g = 0 exactly on the C2^a x C4^b x C3^c family", checks, el, 10.0)


def test_criterion_03_rank0_domains():
    realizable = [n for n in range(1, 101) if decide_domain_char0(parse_group(f"C{n}")).realizable]
    checks = [("rank-0 domains among cyclic <= 100 are C2, C4, C6", realizable == [2, 4, 6], str(realizable))]
    report("criterion 3: finite unit groups of characteristic-zero domains", checks)


def test_criterion_04_quotient_torsion():
    checks = []
    for moduli, expect in [([3, 4], "C6 x C4"), ([3, 9], "C9"), ([1, 5], "C10")]:
        t0 = time.perf_counter()
        got = torsion_units_of_quotient(moduli).group
        el = time.perf_counter() - t0
        want = T(expect)
        checks.append(
            (
                f"torsion of Z[x]/(Phi_{moduli[0]} Phi_{moduli[1]}) = {expect}",
                got == want and el < 1.0,
                f"got {got} in {el:.3f}s",
            )
        )
    report("criterion 4: quotient-ring torsion by brute force", checks)


def test_criterion_05_relative_tower_battery():
    t0 = time.perf_counter()
    checks = []
    for p, l, a, b in [(5, 2, 1, 0), (3, 6, 2, 1), (2, 4, 3, 2)]:
        l1 = l // p**b
        big = l1 * p**a
        moduli = (l, big)
        gens = [CycloElem.diagonal_root(moduli, l), CycloElem.root_at(moduli, 1, p**a)]
        res = torsion_units_of_subring(moduli, gens)
        want = T(f"C{l} x C{p ** a}")
        rank = maximal_order_rank(moduli)
        want_rank = unit_rank(l) + (euler_phi(big) // 2 - 1)
        full = subring_span(moduli, gens).is_full_rank()
        checks.append(
            (
                f"(p,l,a,b)=({p},{l},{a},{b}): torsion C{l} x C{p**a}, rank {want_rank}",
                res.group == want and rank == want_rank and full,
                f"got {res.group}, rank {rank}, full_rank={full}",
            )
        )
    el = time.perf_counter() - t0
    report("criterion 5: units of Z[zeta_l][x]/((x-1)Psi) instances", checks, el, 30.0)


def test_criterion_06_witness_battery():
    t0 = time.perf_counter()
    battery = [
        "C2",
        "C4",
        "C2 x C4",
        "C6",
        "C2 x C3 x C3",
        "C2 x C3 x C9",
        "C8",
        "C2 x C8 x C5",
        "C2 x C3 x C5",
    ]
    checks = []
    for name in battery:
        t = T(name)
        w = build_witness(t)
        rank_ok = maximal_order_rank(witness_moduli(t)) == g_min(t)
        checks.append(
            (
                f"{name}: witness verifies and rank(M_T) = g(T)",
                w.verified is True and rank_ok,
                f"verified={w.verified}, moduli={list(w.moduli)}",
            )
        )
    el = time.perf_counter() - t0
    report("criterion 6: explicit orders realize every battery group", checks, el, 60.0)


def test_criterion_07_minimality_search():
    t0 = time.perf_counter()
    checks = []
    for name in ["C2", "C2 x C3", "C2 x C2", "C8 x C5"]:
        t = T(name)
        rank, argmin = min_rank_search(t, 40, 3)
        want = maximal_order_rank(minimal_order_moduli(t))
        checks.append(
            (
                f"{name}: search minimum {rank} = rank of the canonical product",
                rank == want,
                f"minimizer {list(argmin)}",
            )
        )
    rank, argmin = min_rank_search(T("C8 x C5"), 40, 3)
    checks.append(("C8 x C5: unique minimizer is [40]", argmin == (40,), str(list(argmin))))
    el = time.perf_counter() - t0
    report("criterion 7: bounded exhaustive minimality", checks, el, 60.0)


def test_criterion_08_resultant_dichotomy():
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 31):
        for m in range(1, n):
            got = norm_of_phi_eval(n, m)
            pp = prime_power_ratio(n, m)
            want = pp[0] ** euler_phi(m) if pp else 1
            if got != want:
                bad.append((n, m, got, want))
    el = time.perf_counter() - t0
    checks = [("zero exceptions over 1 <= m < n <= 30", not bad, str(bad[:5]))]
    report("criterion 8: |Res(Phi_m, Phi_n)| follows the prime-power dichotomy", checks, el, 5.0)


def test_criterion_09_phi_inequalities():
    def half_minus_one(n):
        return euler_phi(n) // 2 - 1

    violations = []
    for delta in range(1, 5):
        for k in range(1, 4):
            for primes in combinations([3, 5, 7, 11], k):
                for exps in product([1, 2], repeat=k):
                    odd = 1
                    for q, e in zip(primes, exps):
                        odd *= q**e
                    lhs = half_minus_one(2**delta * odd)
                    rhs1 = sum(half_minus_one(2**delta * q**e) for q, e in zip(primes, exps))
                    if lhs < rhs1:
                        violations.append(("first", delta, primes, exps))
                    if delta >= 2:
                        rhs2 = sum(
                            half_minus_one(2 ** (delta - 1) * q**e) for q, e in zip(primes, exps)
                        ) + half_minus_one(2**delta)
                        if lhs < rhs2:
                            violations.append(("second", delta, primes, exps))
    checks = [("zero violations on the stated grid", not violations, str(violations[:5]))]
    report("criterion 9: rank superadditivity inequalities", checks)


def test_criterion_10_cross_oracle():
    t0 = time.perf_counter()
    lists = []

    def rec(start, acc, deg):
        if acc:
            lists.append(tuple(acc))
        for m in range(start, 21):
            d = euler_phi(m)
            if deg + d <= 12:
                acc.append(m)
                rec(m + 1, acc, deg + d)
                acc.pop()

    rec(1, [], 0)
    disagreements = 0
    elements = 0
    for ms in lists:
        lat = psi_image(ms)
        for _, u in roots_of_unity(ms):
            elements += 1
            if lat.contains(u.coords()) != rational_crt_contains(ms, u):
                disagreements += 1
    el = time.perf_counter() - t0
    checks = [
        (
            f"lattice membership = rational-CRT integrality on {elements} elements "
            f"across {len(lists)} moduli lists",
            disagreements == 0,
            f"{disagreements} disagreements",
        )
    ]
    report("criterion 10: two independent membership routes agree", checks, el, None)


def test_criterion_11_admissibility_regression():
    rep_bad = admissibility([8, 10], T("C8 x C5"))
    rep_good = admissibility([40], T("C8 x C5"))
    checks = [
        (
            "[8, 10] rejected, specifically on the 2^eps | n_j condition",
            not rep_bad.admissible and rep_bad.conditions == (True, False, True, True),
            str(rep_bad.conditions),
        ),
        ("[40] accepted", rep_good.admissible, str(rep_good.conditions)),
    ]
    report("criterion 11: hosting conditions for C8 x C5", checks)


def test_criterion_12_reduced_rings():
    checks = []
    v = decide_reduced(FGAbelianGroup(T("C2 x C2 x C3"), 0), mode="char0")
    checks.append(("C2 x C2 x C3 at rank 0 realizable in char 0", v.realizable, v.reason))
    for mode in ("char0", "positive_char", "any"):
        v = decide_reduced(FGAbelianGroup(T("C5"), 0), mode=mode)
        checks.append((f"C5 not realizable ({mode})", not v.realizable, v.reason))
    battery_group = field_units_group([3, 4, 5, 7, 8, 9])
    for rank in range(4):
        v = decide_reduced(FGAbelianGroup(battery_group, rank), mode="positive_char")
        checks.append(
            (
                f"prod F_q^* for q in (3,4,5,7,8,9) with rank {rank} (positive char)",
                v.realizable,
                v.reason,
            )
        )
    report("criterion 12: reduced-ring deciders", checks)
