"""Exact computation in products of cyclotomic rings.

``M = Z[zeta_{m_1}] x ... x Z[zeta_{m_r}]`` is coordinatized by the
concatenated power bases ``zeta_{m_i}^k, 0 <= k < phi(m_i)``, so an
element is a vector of ``d = sum phi(m_i)`` integers and every reduction
is an exact division by the (monic) cyclotomic polynomial.  Repeated
moduli are allowed for products (witness orders need them); the quotient
-ring operations, which model ``Z[x]/(Phi_{m_1} ... Phi_{m_r})``, insist
on distinct moduli.

The membership machinery keeps two independent routes:

* the canonical route: the Z-span of the images ``psi(x^k)`` (or of the
  monomial products of subring generators) as an integer lattice in
  Hermite normal form, membership by triangular back-substitution;
* the rational-CRT oracle: solve for the unique rational polynomial of
  degree < d hitting the prescribed residues mod each Phi_{m_i} and test
  whether its coefficients are integers.

Both must agree on quotient-ring lattices; the acceptance suite checks
that exhaustively on small products.

Torsion units are always found by exhausting the group U of roots of
unity of M (component i contributes lcm(2, m_i) roots) and filtering by
lattice membership; the filtered set is asserted to be closed under
multiplication and inverses before its isomorphism type is recovered from
its d-torsion counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product as iproduct
from typing import Iterable, Optional, Sequence

from . import groups
from .numth import (
    IntPoly,
    RatPoly,
    cyclotomic_poly,
    euler_phi,
    prime_power_ratio,
    rat_xgcd,
    resultant,
    unit_rank,
)

DEFAULT_BUDGET = 10**6


class BudgetError(RuntimeError):
    """An enumeration would exceed the configured budget."""


def root_order(m: int) -> int:
    """Number of roots of unity in Z[zeta_m]: lcm(2, m)."""
    return math.lcm(2, m)


@lru_cache(maxsize=None)
def zeta_power(m: int, k: int) -> IntPoly:
    """zeta_L^k as an element of Z[zeta_m], where L = lcm(2, m).

    For odd m the generator is realized as zeta_{2m} = -zeta_m^{(m+1)/2}.
    """
    L = root_order(m)
    k %= L
    if m % 2 == 0:
        return IntPoly.monomial(k) % cyclotomic_poly(m)
    sign = -1 if k % 2 else 1
    expo = (k * ((m + 1) // 2)) % m
    return (IntPoly.monomial(expo) * sign) % cyclotomic_poly(m)


def zeta_in(m: int, n: int) -> IntPoly:
    """zeta_n inside Z[zeta_m]; requires n | lcm(2, m)."""
    L = root_order(m)
    if L % n != 0:
        raise ValueError(f"zeta_{n} does not live in Z[zeta_{m}]")
    return zeta_power(m, L // n)


class CycloElem:
    """Element of prod Z[zeta_{m_i}], component i reduced mod Phi_{m_i}."""

    __slots__ = ("moduli", "comps")

    def __init__(self, moduli: Sequence[int], comps: Iterable[IntPoly]):
        self.moduli = tuple(moduli)
        cs = tuple(c % cyclotomic_poly(m) for c, m in zip(comps, self.moduli, strict=True))
        self.comps = cs

    @classmethod
    def one(cls, moduli: Sequence[int]) -> CycloElem:
        return cls(moduli, [IntPoly.const(1)] * len(moduli))

    @classmethod
    def from_root_exponents(cls, moduli: Sequence[int], exps: Sequence[int]) -> CycloElem:
        """Component i is zeta_{L_i}^{exps[i]} with L_i = lcm(2, m_i)."""
        return cls(moduli, [zeta_power(m, k) for m, k in zip(moduli, exps, strict=True)])

    @classmethod
    def diagonal_root(cls, moduli: Sequence[int], n: int, positions=None) -> CycloElem:
        """zeta_n at the given positions (all, if omitted), 1 elsewhere."""
        pos = set(range(len(moduli))) if positions is None else set(positions)
        comps = [
            zeta_in(m, n) if i in pos else IntPoly.const(1) for i, m in enumerate(moduli)
        ]
        return cls(moduli, comps)

    @classmethod
    def root_at(cls, moduli: Sequence[int], i: int, n: int) -> CycloElem:
        return cls.diagonal_root(moduli, n, positions=(i,))

    def __mul__(self, other: CycloElem) -> CycloElem:
        if self.moduli != other.moduli:
            raise ValueError("elements live in different products")
        return CycloElem(self.moduli, [a * b for a, b in zip(self.comps, other.comps)])

    def __pow__(self, e: int) -> CycloElem:
        if e < 0:
            raise ValueError("only nonnegative powers are supported")
        out = CycloElem.one(self.moduli)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    @property
    def is_one(self) -> bool:
        return all(c.coeffs == (1,) for c in self.comps)

    def order(self) -> Optional[int]:
        """Multiplicative order, or None if the element is not torsion."""
        cap = reduce(math.lcm, (root_order(m) for m in self.moduli), 1)
        acc = self
        for k in range(1, cap + 1):
            if acc.is_one:
                return k
            acc = acc * self
        return None

    def coords(self) -> tuple[int, ...]:
        out = []
        for m, c in zip(self.moduli, self.comps):
            phi = euler_phi(m)
            out.extend(c.coeffs + (0,) * (phi - len(c.coeffs)))
        return tuple(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CycloElem)
            and self.moduli == other.moduli
            and self.comps == other.comps
        )

    def __hash__(self) -> int:
        return hash((self.moduli, self.comps))

    def __str__(self) -> str:
        from .numth import format_poly

        return "(" + ", ".join(
            format_poly(c.coeffs, var=f"z{m}") for m, c in zip(self.moduli, self.comps)
        ) + ")"

    def __repr__(self) -> str:
        return f"CycloElem({list(self.moduli)}, {[list(c.coeffs) for c in self.comps]})"


# ----------------------------------------------------------------------
# Integer lattices (Hermite normal form)


def hnf(rows: Iterable[Sequence[int]], ncols: int) -> list[tuple[int, tuple[int, ...]]]:
    """Row-style Hermite normal form: [(pivot_col, row), ...].

    Pivots are positive, entries above a pivot are reduced into
    [0, pivot), rows are ordered by pivot column.  The result is the
    unique canonical basis of the row lattice.
    """
    work = [list(r) for r in rows if any(r)]
    res: list[tuple[int, list[int]]] = []
    for col in range(ncols):
        sel = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not sel:
            work = rest
            continue
        while len(sel) > 1:
            sel.sort(key=lambda r: abs(r[col]))
            piv = sel[0]
            if piv[col] < 0:
                for j in range(ncols):
                    piv[j] = -piv[j]
            nxt = [piv]
            for r in sel[1:]:
                q = r[col] // piv[col]
                if q:
                    for j in range(col, ncols):
                        r[j] -= q * piv[j]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            sel = nxt
        piv = sel[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        res.append((col, piv))
        work = rest
    for i in range(len(res) - 1, -1, -1):
        c, row = res[i]
        for k in range(i):
            above = res[k][1]
            q = above[c] // row[c]
            if q:
                for j in range(c, ncols):
                    above[j] -= q * row[j]
    return [(c, tuple(r)) for c, r in res]


class IntegerLattice:
    """Z-span of integer row vectors, held in canonical (Hermite) form."""

    __slots__ = ("ncols", "basis")

    def __init__(self, rows: Iterable[Sequence[int]], ncols: int):
        self.ncols = ncols
        self.basis = hnf(rows, ncols)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_full_rank(self) -> bool:
        return self.rank == self.ncols

    def index(self) -> Optional[int]:
        """Index in Z^ncols (product of pivots), or None if not full rank."""
        if not self.is_full_rank():
            return None
        out = 1
        for c, row in self.basis:
            out *= row[c]
        return out

    def contains(self, vec: Sequence[int]) -> bool:
        v = list(vec)
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        for c, row in self.basis:
            if v[c] % row[c] != 0:
                return False
            q = v[c] // row[c]
            if q:
                for j in range(c, self.ncols):
                    v[j] -= q * row[j]
        return not any(v)

    def dump(self) -> str:
        """One canonical generator per line, entries space-separated."""
        return "\n".join(" ".join(str(x) for x in row) for _, row in self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntegerLattice)
            and self.ncols == other.ncols
            and self.basis == other.basis
        )


# ----------------------------------------------------------------------
# The CRT map psi and its image


def _require_distinct(moduli: Sequence[int]) -> tuple[int, ...]:
    ms = tuple(moduli)
    if not ms:
        raise ValueError("need at least one modulus")
    if any(m < 1 for m in ms):
        raise ValueError("moduli must be positive")
    if len(set(ms)) != len(ms):
        raise ValueError("quotient-ring moduli must be distinct")
    return ms


def total_degree(moduli: Sequence[int]) -> int:
    return sum(euler_phi(m) for m in moduli)


def crt_is_surjective(moduli: Sequence[int]) -> bool:
    """Is Z[x]/(prod Phi_{m_i}) -> prod Z[zeta_{m_i}] onto?

    True exactly when no ratio of two moduli is a prime power.
    """
    ms = sorted(_require_distinct(moduli))
    if len(ms) < 2:
        raise ValueError("surjectivity is a question about r >= 2 moduli")
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            if prime_power_ratio(ms[j], ms[i]) is not None:
                return False
    return True


def psi_image(moduli: Sequence[int]) -> IntegerLattice:
    """Lattice spanned by psi(x^k), k < d, in the concatenated power basis."""
    ms = _require_distinct(moduli)
    d = total_degree(ms)
    phis = [cyclotomic_poly(m) for m in ms]
    powers = [IntPoly.const(1) for _ in ms]
    rows = []
    x = IntPoly.monomial(1)
    for _ in range(d):
        rows.append(CycloElem(ms, powers).coords())
        powers = [(p * x) % phi for p, phi in zip(powers, phis)]
    lat = IntegerLattice(rows, d)
    if not lat.is_full_rank():
        raise AssertionError("psi image must have full rank")
    return lat


@lru_cache(maxsize=None)
def _crt_solver_matrix(moduli: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Integer matrix A and denominator D with CRT solution = A @ coords / D.

    Columns are the rational CRT solutions for the coordinate basis
    vectors of the product, computed with the extended Euclidean
    algorithm over Q[x]; the full map is linear so one solve per basis
    vector suffices.
    """
    ms = moduli
    d = total_degree(ms)
    full = RatPoly.from_int_poly(
        reduce(lambda a, b: a * b, (cyclotomic_poly(m) for m in ms))
    )
    # CRT idempotent-ish lifts: E_i = 1 mod Phi_{m_i}, 0 mod the others
    lifts = []
    for i, m in enumerate(ms):
        others = RatPoly((1,))
        for j, mj in enumerate(ms):
            if j != i:
                others = others * RatPoly.from_int_poly(cyclotomic_poly(mj))
        u, _, g = rat_xgcd(others, RatPoly.from_int_poly(cyclotomic_poly(m)))
        if g != RatPoly((1,)):
            raise AssertionError("cyclotomic polynomials must be coprime over Q")
        lifts.append((u * others) % full)
    cols: list[list[Fraction]] = []
    for i, m in enumerate(ms):
        xpow = RatPoly((1,))
        x = RatPoly((0, 1))
        for _ in range(euler_phi(m)):
            sol = (xpow * lifts[i]) % full
            col = list(sol.coeffs) + [Fraction(0)] * (d - len(sol.coeffs))
            cols.append(col)
            xpow = xpow * x
    den = 1
    for col in cols:
        for c in col:
            den = math.lcm(den, c.denominator)
    rows_int = tuple(
        tuple(int(cols[j][i] * den) for j in range(d)) for i in range(d)
    )
    return rows_int, den


def rational_crt_contains(moduli: Sequence[int], elem: CycloElem) -> bool:
    """Independent membership oracle for psi images.

    Solves for the rational polynomial a of degree < d with
    a = elem_i mod Phi_{m_i} for all i and reports whether every
    coefficient is an integer.
    """
    ms = _require_distinct(moduli)
    mat, den = _crt_solver_matrix(ms)
    v = elem.coords()
    for row in mat:
        acc = 0
        for a, b in zip(row, v):
            if a:
                acc += a * b
        if acc % den != 0:
            return False
    return True


# ----------------------------------------------------------------------
# Roots of unity and torsion enumeration


def roots_of_unity_count(moduli: Sequence[int]) -> int:
    out = 1
    for m in moduli:
        out *= root_order(m)
    return out


def roots_of_unity(moduli: Sequence[int]):
    """Yield (exponent_vector, CycloElem) over U = prod <zeta_{L_i}>."""
    ms = tuple(moduli)
    tables = []
    for m in ms:
        tables.append([zeta_power(m, k) for k in range(root_order(m))])
    for exps in iproduct(*(range(len(t)) for t in tables)):
        yield exps, CycloElem(ms, [t[k] for t, k in zip(tables, exps)])


@dataclass(frozen=True)
class TorsionUnits:
    group: groups.FiniteAbelianGroup
    elements: tuple[CycloElem, ...]


def _check_budget(moduli: Sequence[int], budget: int):
    n = roots_of_unity_count(moduli)
    if n > budget:
        raise BudgetError(
            f"|U| = {n} exceeds the enumeration budget {budget} for moduli {list(moduli)}"
        )


def _recover_structure(moduli, kept: list[tuple[tuple[int, ...], CycloElem]]) -> TorsionUnits:
    Ls = [root_order(m) for m in moduli]
    exps_set = {e for e, _ in kept}
    # closed under multiplication and inverses, by construction of a unit group
    for e in exps_set:
        inv = tuple((-x) % L for x, L in zip(e, Ls))
        if inv not in exps_set:
            raise AssertionError(f"torsion set not closed under inverses at {e}")
    for e1 in exps_set:
        for e2 in exps_set:
            prod = tuple((a + b) % L for a, b, L in zip(e1, e2, Ls))
            if prod not in exps_set:
                raise AssertionError(f"torsion set not closed under products at {e1}, {e2}")
    orders = [
        reduce(math.lcm, (L // math.gcd(L, x) for x, L in zip(e, Ls)), 1) for e, _ in kept
    ]
    exponent = reduce(math.lcm, orders, 1)
    counts = {d: sum(1 for o in orders if d % o == 0) for d in _divisors(exponent)}
    grp = groups.group_from_order_counts(counts)
    return TorsionUnits(grp, tuple(el for _, el in kept))


def _divisors(n: int) -> list[int]:
    from .numth import divisors

    return divisors(n)


def torsion_units_of_quotient(
    moduli: Sequence[int], budget: int = DEFAULT_BUDGET
) -> TorsionUnits:
    """Torsion units of Z[x]/(Phi_{m_1} ... Phi_{m_r}) by exhaustion.

    Enumerates the roots of unity of the maximal order and keeps those in
    the image of the CRT map.
    """
    ms = _require_distinct(moduli)
    _check_budget(ms, budget)
    lat = psi_image(ms)
    kept = [(e, u) for e, u in roots_of_unity(ms) if lat.contains(u.coords())]
    return _recover_structure(ms, kept)


def torsion_units_of_maximal_order(
    moduli: Sequence[int], budget: int = DEFAULT_BUDGET
) -> TorsionUnits:
    """Torsion units of the full product ring: all of U."""
    ms = tuple(moduli)
    _check_budget(ms, budget)
    kept = list(roots_of_unity(ms))
    return _recover_structure(ms, kept)


def subring_span(
    moduli: Sequence[int],
    generators: Sequence[CycloElem],
    budget: int = DEFAULT_BUDGET,
) -> IntegerLattice:
    """Z-span of the subring generated by torsion units.

    Each generator g of order n satisfies a monic equation dividing
    x^n - 1, so the products prod g_i^{e_i} with 0 <= e_i < n_i span the
    subring additively; the span is returned in canonical form.
    """
    ms = tuple(moduli)
    orders = []
    for g in generators:
        if g.moduli != ms:
            raise ValueError("generator lives in a different product")
        n = g.order()
        if n is None:
            raise ValueError(f"generator {g} is not a root of unity")
        orders.append(n)
    box = math.prod(orders) if orders else 1
    if box > budget:
        raise BudgetError(f"generator exponent box of size {box} exceeds budget {budget}")
    prods = [CycloElem.one(ms)]
    for g, n in zip(generators, orders):
        powers = [CycloElem.one(ms)]
        for _ in range(n - 1):
            powers.append(powers[-1] * g)
        prods = [p * q for p in prods for q in powers]
    return IntegerLattice([p.coords() for p in prods], total_degree(ms))


def torsion_units_of_subring(
    moduli: Sequence[int],
    generators: Sequence[CycloElem],
    budget: int = DEFAULT_BUDGET,
) -> TorsionUnits:
    """Torsion units of Z[generators] inside the product, by exhaustion."""
    ms = tuple(moduli)
    _check_budget(ms, budget)
    lat = subring_span(ms, generators, budget)
    kept = [(e, u) for e, u in roots_of_unity(ms) if lat.contains(u.coords())]
    found = {u for _, u in kept}
    for g in generators:
        if g not in found:
            raise AssertionError("a generator escaped its own subring span")
    return _recover_structure(ms, kept)


def maximal_order_rank(moduli: Sequence[int]) -> int:
    """Unit-group rank of prod Z[zeta_{m_i}]: sum of (phi(m)/2 - 1)*."""
    return sum(unit_rank(m) for m in moduli)


def norm_of_phi_eval(n: int, m: int) -> int:
    """|Norm of Phi_n(zeta_m)| = |Res(Phi_m, Phi_n)| for n > m >= 1.

    1 exactly when Phi_n(zeta_m) is a unit; p^phi(m) when n/m is a power
    of the prime p.
    """
    if not n > m >= 1:
        raise ValueError("need n > m >= 1")
    return abs(resultant(cyclotomic_poly(m), cyclotomic_poly(n)))
