"""Finitely generated abelian groups in canonical form.

A finite abelian group is stored as the sorted multiset of its prime-power
cyclic orders, so C6 x C4 and C12 x C2 both become (2, 3, 4).  Two groups
are isomorphic exactly when these multisets are equal.  A finitely
generated group carries the torsion part plus a free rank.

On top of the canonical form this module provides:

* the text grammar ``C<n> [x C<n>]... [x Z^<g>]`` used across the project;
* the standard decomposition of an even-order group (minimal 2-exponent
  eps with multiplicity sigma, the remaining 2-exponents, and the odd
  prime-power parts) and the minimal free rank g over torsion-free rings
  that it determines;
* recovery of a group from its d-torsion counts (used to identify
  brute-forced unit groups);
* searches used by the reduced-ring classifier: writing a group as
  prod C_{q-1} over prime powers q, and splitting off an even-order part.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Optional

from .numth import divisors, factorize, is_prime_power, unit_rank


class OddOrderError(ValueError):
    """The operation needs a group of even order."""


class FiniteAbelianGroup:
    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = sorted(parts)
        for q in ps:
            if q < 2 or is_prime_power(q) is None:
                raise ValueError(f"{q} is not a prime power > 1")
        self.parts = tuple(ps)

    @classmethod
    def trivial(cls) -> FiniteAbelianGroup:
        return cls(())

    @classmethod
    def from_cyclic(cls, orders: Iterable[int]) -> FiniteAbelianGroup:
        """Product of cyclic groups C_n, each split into prime-power parts."""
        parts = []
        for n in orders:
            if n < 1:
                raise ValueError(f"invalid cyclic order {n}")
            parts.extend(p**e for p, e in factorize(n))
        return cls(parts)

    @property
    def order(self) -> int:
        return math.prod(self.parts)

    @property
    def exponent(self) -> int:
        return reduce(math.lcm, self.parts, 1)

    @property
    def is_trivial(self) -> bool:
        return not self.parts

    def is_cyclic(self) -> bool:
        primes = [factorize(q)[0][0] for q in self.parts]
        return len(primes) == len(set(primes))

    def primes(self) -> list[int]:
        return sorted({factorize(q)[0][0] for q in self.parts})

    def exponents_of(self, p: int) -> list[int]:
        """Exponents e of the p-power parts p^e, ascending."""
        out = []
        for q in self.parts:
            pp, e = factorize(q)[0]
            if pp == p:
                out.append(e)
        return sorted(out)

    def solutions_count(self, d: int) -> int:
        """#{x in G : x^d = 1}; per cyclic factor this is gcd(part, d)."""
        out = 1
        for q in self.parts:
            out *= math.gcd(q, d)
        return out

    def __mul__(self, other: FiniteAbelianGroup) -> FiniteAbelianGroup:
        return FiniteAbelianGroup(self.parts + other.parts)

    def invariant_factors(self) -> list[int]:
        """Divisor chain d_1 | d_2 | ... | d_k with G = prod C_{d_i}."""
        by_prime: dict[int, list[int]] = {}
        for q in self.parts:
            p, e = factorize(q)[0]
            by_prime.setdefault(p, []).append(e)
        k = max((len(v) for v in by_prime.values()), default=0)
        factors = []
        for i in range(k):
            d = 1
            for p, es in by_prime.items():
                es_desc = sorted(es, reverse=True)
                if i < len(es_desc):
                    d *= p ** es_desc[i]
            factors.append(d)
        return sorted(factors)

    def elements(self):
        """Iterate element orders (one per element); for small groups only."""
        for exps in itertools.product(*(range(q) for q in self.parts)):
            yield reduce(math.lcm, (q // math.gcd(q, k) for q, k in zip(self.parts, exps)), 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteAbelianGroup) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        if self.is_trivial:
            return "C1"
        return " x ".join(f"C{d}" for d in self.invariant_factors())

    def __repr__(self) -> str:
        return f"FiniteAbelianGroup({list(self.parts)})"


@dataclass(frozen=True)
class FGAbelianGroup:
    torsion: FiniteAbelianGroup
    rank: int = 0

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("free rank must be >= 0")

    def __str__(self) -> str:
        if self.rank == 0:
            return str(self.torsion)
        z = "Z" if self.rank == 1 else f"Z^{self.rank}"
        if self.torsion.is_trivial:
            return z
        return f"{self.torsion} x {z}"


_TERM_RE = re.compile(r"^(?:C(\d+)|Z(?:\^(\d+))?)$")


def parse_group(text: str) -> FGAbelianGroup:
    """Parse ``C<n> [x ...] [x Z^<g>]``; whitespace-insensitive.

    C1 contributes nothing, composite C_n splits by CRT, and at most one
    Z-term is allowed.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ValueError("empty group expression")
    orders: list[int] = []
    rank: Optional[int] = None
    for term in compact.split("x"):
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"bad term {term!r} in group expression {text!r}")
        if m.group(1) is not None:
            n = int(m.group(1))
            if n == 0:
                raise ValueError("C0 is not a group")
            orders.append(n)
        else:
            if rank is not None:
                raise ValueError("more than one Z-term")
            rank = int(m.group(2)) if m.group(2) is not None else 1
    return FGAbelianGroup(FiniteAbelianGroup.from_cyclic(orders), rank or 0)


# ----------------------------------------------------------------------
# Standard decomposition and the minimal torsion-free rank


@dataclass(frozen=True)
class StandardDecomposition:
    """Even-order T written as prod C_{p_i^{a_i}} x prod C_{2^{e_i}} x C_{2^eps}^sigma.

    ``eps`` is the minimal exponent among the 2-power parts, ``sigma`` its
    multiplicity, ``two_exponents`` the remaining (strictly larger)
    2-exponents, and ``odd_parts`` all odd prime-power parts as (p, a).
    """

    eps: int
    sigma: int
    two_exponents: tuple[int, ...]
    odd_parts: tuple[tuple[int, int], ...]

    @property
    def s(self) -> int:
        return len(self.odd_parts)

    @property
    def s0(self) -> int:
        return len({p for p, _ in self.odd_parts})

    @property
    def rho(self) -> int:
        return len(self.two_exponents)

    @property
    def d(self) -> int:
        return max(self.sigma - self.s, 0)

    def reconstruct(self) -> FiniteAbelianGroup:
        parts = [p**a for p, a in self.odd_parts]
        parts += [2**e for e in self.two_exponents]
        parts += [2**self.eps] * self.sigma
        return FiniteAbelianGroup(parts)


def standard_decomposition(t: FiniteAbelianGroup) -> StandardDecomposition:
    two = t.exponents_of(2)
    if not two:
        raise OddOrderError(f"{t} has odd order")
    eps = two[0]
    sigma = two.count(eps)
    rest = tuple(e for e in two if e != eps)
    odd = tuple(sorted(factorize(q)[0] for q in t.parts if q % 2 == 1))
    return StandardDecomposition(eps, sigma, rest, odd)


def g_min(t: FiniteAbelianGroup) -> int:
    """Smallest free rank r with T x Z^r the unit group of a torsion-free ring."""
    sd = standard_decomposition(t)
    base = 2**sd.eps
    g = sum(unit_rank(base * p**a) for p, a in sd.odd_parts)
    g += sum(unit_rank(2**e) for e in sd.two_exponents)
    if sd.s < sd.sigma:
        g += (sd.sigma - sd.s) * unit_rank(base)
    elif sd.sigma < sd.s0:
        g += unit_rank(base)
    return g


def is_rank_zero_family(t: FiniteAbelianGroup) -> bool:
    """Structural test for C2^a x C4^b x C3^c with a+b >= 1 and a >= 1 if c >= 1.

    For even-order groups this coincides with g_min(t) == 0; odd-order
    groups are never in the family.
    """
    if any(q not in (2, 3, 4) for q in t.parts):
        return False
    a = t.parts.count(2)
    b = t.parts.count(4)
    c = t.parts.count(3)
    return a + b >= 1 and (c == 0 or a >= 1)


# ----------------------------------------------------------------------
# Structure recovery from d-torsion counts


def group_from_order_counts(counts: dict[int, int]) -> FiniteAbelianGroup:
    """The abelian group with #{x : x^d = 1} = counts[d].

    ``counts`` must cover every divisor of its largest key (the exponent);
    the structure is recovered one prime at a time from the counts at
    prime-power levels and then cross-checked against every entry.
    """
    if not counts or counts.get(1) != 1:
        raise ValueError("counts must contain {1: 1}")
    exponent = max(counts)
    if sorted(counts) != divisors(exponent):
        raise ValueError("counts must be given exactly on the divisors of the exponent")
    parts = []
    for p, emax in factorize(exponent):
        prev = 1
        heights = []  # heights[k-1] = number of parts of order >= p^k
        for k in range(1, emax + 1):
            n_k = counts[p**k]
            if n_k % prev != 0:
                raise ValueError(f"inconsistent counts at {p}^{k}")
            ratio = is_prime_power(n_k // prev)
            if n_k // prev == 1:
                c = 0
            elif ratio is None or ratio[0] != p:
                raise ValueError(f"count ratio at {p}^{k} is not a power of {p}")
            else:
                c = ratio[1]
            heights.append(c)
            prev = n_k
        if any(heights[i] < heights[i + 1] for i in range(len(heights) - 1)):
            raise ValueError(f"counts at prime {p} are not realizable")
        if heights[-1] < 1:
            raise ValueError(f"exponent claims a part of order {p}^{emax} but counts disagree")
        heights.append(0)
        for k in range(1, emax + 1):
            parts.extend([p**k] * (heights[k - 1] - heights[k]))
    g = FiniteAbelianGroup(parts)
    for d, n in counts.items():
        if g.solutions_count(d) != n:
            raise ValueError(f"counts are inconsistent at d={d}")
    return g


# ----------------------------------------------------------------------
# Enumeration of groups (catalog + exhaustive tests)


def _partitions(n: int) -> list[tuple[int, ...]]:
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for k in range(min(rest, maxpart), 0, -1):
            rec(rest - k, k, acc + [k])

    rec(n, n, [])
    return out


def abelian_groups_of_order(n: int) -> list[FiniteAbelianGroup]:
    """All abelian groups of order n, in a fixed deterministic order."""
    if n < 1:
        raise ValueError("order must be positive")
    choices = []
    for p, e in factorize(n):
        choices.append([[p**k for k in part] for part in _partitions(e)])
    out = []
    for combo in itertools.product(*choices) if choices else [()]:
        parts = [q for block in combo for q in block]
        out.append(FiniteAbelianGroup(parts))
    return sorted(out, key=lambda g: g.parts)


def abelian_groups_upto(max_order: int):
    for n in range(1, max_order + 1):
        yield from abelian_groups_of_order(n)


# ----------------------------------------------------------------------
# Field-units products (reduced-ring classifier support)


@lru_cache(maxsize=None)
def _prime_powers_upto(bound: int) -> tuple[int, ...]:
    return tuple(q for q in range(2, bound + 1) if is_prime_power(q))


def field_units_group(qs: Iterable[int]) -> FiniteAbelianGroup:
    """prod F_q^* = prod C_{q-1} for the given prime powers."""
    qs = list(qs)
    for q in qs:
        if is_prime_power(q) is None:
            raise ValueError(f"{q} is not a prime power")
    return FiniteAbelianGroup.from_cyclic([q - 1 for q in qs if q > 2])


def field_units_partition(g: FiniteAbelianGroup) -> Optional[list[int]]:
    """Prime powers q_i >= 3 with g = prod C_{q_i - 1}, or None.

    Backtracking over prime powers q <= |g| + 1, anchoring on the largest
    remaining primary part.  The trivial group returns [] (an empty
    product; F_2 alone realizes it).
    """
    if g.is_trivial:
        return []
    candidates = []
    for q in _prime_powers_upto(g.order + 1):
        if q == 2:
            continue
        fq = FiniteAbelianGroup.from_cyclic([q - 1])
        if _multiset_le(fq.parts, g.parts):
            candidates.append((q, fq.parts))

    seen_fail: set[tuple[int, ...]] = set()

    def search(remaining: tuple[int, ...]) -> Optional[list[int]]:
        if not remaining:
            return []
        if remaining in seen_fail:
            return None
        anchor = remaining[-1]
        for q, qparts in candidates:
            if anchor not in qparts or not _multiset_le(qparts, remaining):
                continue
            rest = _multiset_sub(remaining, qparts)
            sub = search(rest)
            if sub is not None:
                return [q] + sub
        seen_fail.add(remaining)
        return None

    res = search(g.parts)
    return sorted(res) if res is not None else None


def _multiset_le(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    rest = list(b)
    for x in a:
        if x in rest:
            rest.remove(x)
        else:
            return False
    return True


def _multiset_sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    rest = list(a)
    for x in b:
        rest.remove(x)
    return tuple(rest)


def reduced_split_search(
    g: FiniteAbelianGroup, rank: int
) -> Optional[tuple[tuple[int, ...], FiniteAbelianGroup]]:
    """Split g = (prod C_{q-1}) x T with |T| even and rank >= g_min(T).

    Exhaustive over sub-multisets of the primary parts (meant for orders
    up to ~10^4).  Among valid certificates the one minimizing
    (g_min(T), number of fields, field list, T) is returned, so output is
    deterministic.
    """
    best = None
    for t_parts in _submultisets(g.parts):
        t = FiniteAbelianGroup(t_parts)
        if t.order % 2 != 0:
            continue
        need = g_min(t)
        if rank < need:
            continue
        fields = field_units_partition(FiniteAbelianGroup(_multiset_sub(g.parts, t_parts)))
        if fields is None:
            continue
        key = (need, len(fields), tuple(fields), t.parts)
        if best is None or key < best[0]:
            best = (key, (tuple(fields), t))
    return best[1] if best else None


def _submultisets(parts: tuple[int, ...]):
    values = sorted(set(parts))
    counts = [parts.count(v) for v in values]
    for take in itertools.product(*(range(c + 1) for c in counts)):
        yield tuple(v for v, k in zip(values, take) for _ in range(k))
