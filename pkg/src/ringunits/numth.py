"""Exact elementary number theory and polynomial kernel.

Everything in this module is computed over unbounded Python integers (or
`fractions.Fraction`); no floating point is used anywhere.  Polynomials are
dense coefficient sequences with the constant term first, so ``(1, 0, -2)``
is ``1 - 2x^2``.  Canonical form has no trailing zero coefficient and the
zero polynomial is the empty sequence.

Provided here:

* integer kernel: factorization by trial division (valid up to
  ``FACTOR_LIMIT`` = 10**12), Euler phi, Moebius mu, divisors, prime-power
  tests, and the rank ``phi(n)/2 - 1`` of the unit group of the ring of
  integers of the n-th cyclotomic field (0 for n = 1, 2);
* `IntPoly` with exact arithmetic, division and resultants (subresultant
  polynomial remainder sequence);
* cyclotomic polynomials, memoized, built by iterated exact division;
* `RatPoly` over Fraction, with the extended Euclidean algorithm used by
  the rational CRT solver;
* `CoeffExtPoly`, a polynomial whose coefficients live in Z[zeta_l], and
  the minimal polynomial of zeta_{p^a} over Q(zeta_{p^b}).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

FACTOR_LIMIT = 10**12


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n as ((p, e), ...) with p strictly increasing.

    Trial division; exact for 1 <= n <= FACTOR_LIMIT (any cofactor left
    after removing prime factors <= 10**6 is itself prime in that range).
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}: need n >= 1")
    if n > FACTOR_LIMIT:
        raise ValueError(f"{n} exceeds the factorization bound {FACTOR_LIMIT}")
    out = []
    for p in _trial_candidates():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def _trial_candidates():
    yield 2
    yield 3
    k = 5
    while True:  # 6k +/- 1 wheel
        yield k
        yield k + 2
        k += 6


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def unit_rank(n: int) -> int:
    """Rank of the unit group of Z[zeta_n]: phi(n)/2 - 1 for n >= 3, else 0."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 2:
        return 0
    return euler_phi(n) // 2 - 1


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def is_prime_power(n: int) -> Optional[tuple[int, int]]:
    """(p, e) with n = p^e, e >= 1, or None."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) == 1:
        return f[0]
    return None


def prime_power_ratio(n: int, m: int) -> Optional[tuple[int, int]]:
    """(p, e) if m | n and n/m = p^e is a prime power, else None.

    Non-integer ratios count as "not a prime power".  n = m is rejected:
    the callers always compare distinct moduli.
    """
    if n == m:
        raise ValueError("moduli must be distinct")
    if n < 1 or m < 1:
        raise ValueError("arguments must be positive")
    if n % m != 0:
        return None
    return is_prime_power(n // m)


# ----------------------------------------------------------------------
# Integer polynomials


class IntPoly:
    """Dense integer polynomial, constant term first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        out = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, g: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Division with remainder; every step must divide exactly in Z."""
        if g.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        gl = g.lc
        dg = g.degree
        q = [0] * max(len(r) - dg, 0)
        for i in range(len(r) - 1 - dg, -1, -1):
            c = r[i + dg]
            if c == 0:
                continue
            if c % gl != 0:
                raise ValueError("inexact polynomial division over Z")
            f = c // gl
            q[i] = f
            for j, gc in enumerate(g.coeffs):
                r[i + j] -= f * gc
        return IntPoly(q), IntPoly(r)

    def exact_div(self, g: IntPoly) -> IntPoly:
        q, r = divmod(self, g)
        if not r.is_zero:
            raise ValueError("division left a nonzero remainder")
        return q

    def __mod__(self, g: IntPoly) -> IntPoly:
        return divmod(self, g)[1]

    def __call__(self, x):
        """Evaluate by Horner's rule; x may be int or Fraction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def subst_monomial(self, k: int) -> IntPoly:
        """The polynomial f(x^k)."""
        if k < 1:
            raise ValueError("k must be positive")
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPoly(out)

    def scalar_exact_div(self, c: int) -> IntPoly:
        if any(x % c for x in self.coeffs):
            raise ValueError("inexact scalar division")
        return IntPoly(x // c for x in self.coeffs)

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


def format_poly(coeffs, var: str = "x") -> str:
    """Render as e.g. 'x^4 - x^2 + 1' (descending powers)."""
    terms = [(k, c) for k, c in enumerate(coeffs) if c != 0]
    if not terms:
        return "0"
    pieces = []
    for k, c in reversed(terms):
        if k == 0:
            body = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            body = f"{mag}{var}" if k == 1 else f"{mag}{var}^{k}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def _pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    # lc(g)^(deg f - deg g + 1) * f  reduced mod g; stays integral throughout
    mult = g.lc
    steps = f.degree - g.degree + 1
    r = f
    while not r.is_zero and r.degree >= g.degree:
        s = IntPoly.monomial(r.degree - g.degree, r.lc)
        r = r * mult - s * g
        steps -= 1
    if steps > 0:
        r = r * (mult**steps)
    return r


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Exact resultant over Z by the subresultant remainder sequence.

    Sign convention: Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the
    roots alpha of f, so Res(x - 1, g) = g(1).
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    s = 1
    a, b = f, g
    if a.degree < b.degree:
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            s = -1
        a, b = b, a
    if b.degree == 0:
        return s * b.lc**a.degree
    gg, h = 1, 1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            s = -s
        r = _pseudo_rem(a, b)
        if r.is_zero:
            return 0  # common factor
        a, b = b, r.scalar_exact_div(gg * h**delta)
        gg = a.lc
        if delta > 0:
            num, den = gg**delta, h ** (delta - 1)
            if num % den:
                raise AssertionError("subresultant bookkeeping broke")
            h = num // den
        if b.degree == 0:
            num, den = b.lc**a.degree, h ** (a.degree - 1)
            if num % den:
                raise AssertionError("subresultant bookkeeping broke")
            return s * (num // den)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, monic of degree phi(n).

    Built by iterated exact division in Z[x]: Phi_p is 1 + x + ... +
    x^(p-1), Phi_{pm}(x) = Phi_m(x^p) / Phi_m(x) for p coprime to m, and
    Phi_{pm}(x) = Phi_m(x^p) when p | m.  Memoized per process.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return IntPoly((-1, 1))
    p = factorize(n)[0][0]
    m = n // p
    if m == 1:
        return IntPoly((1,) * p)
    if m % p == 0:
        return cyclotomic_poly(m).subst_monomial(p)
    return cyclotomic_poly(m).subst_monomial(p).exact_div(cyclotomic_poly(m))


def phi_at_1(n: int) -> int:
    """Phi_n(1): 0 for n = 1, p for n = p^e, and 1 otherwise."""
    if n == 1:
        return 0
    pe = is_prime_power(n)
    return pe[0] if pe else 1


# ----------------------------------------------------------------------
# Rational polynomials (exact, Fraction coefficients)


class RatPoly:
    """Dense polynomial over Fraction; used by the rational CRT solver."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_int_poly(cls, p: IntPoly) -> RatPoly:
        return cls(p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> RatPoly:
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other: RatPoly) -> RatPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __sub__(self, other: RatPoly) -> RatPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return RatPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, g: RatPoly) -> tuple[RatPoly, RatPoly]:
        if g.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dg = g.degree
        q = [Fraction(0)] * max(len(r) - dg, 0)
        for i in range(len(r) - 1 - dg, -1, -1):
            c = r[i + dg]
            if c == 0:
                continue
            f = c / g.lc
            q[i] = f
            for j, gc in enumerate(g.coeffs):
                r[i + j] -= f * gc
        return RatPoly(q), RatPoly(r)

    def __mod__(self, g: RatPoly) -> RatPoly:
        return divmod(self, g)[1]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int_poly(self) -> IntPoly:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return IntPoly(int(c) for c in self.coeffs)

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coeffs]})"


def rat_xgcd(f: RatPoly, g: RatPoly) -> tuple[RatPoly, RatPoly, RatPoly]:
    """(u, v, d) with u*f + v*g = d, d the monic gcd of f and g."""
    r0, r1 = f, g
    u0, u1 = RatPoly((1,)), RatPoly()
    v0, v1 = RatPoly(), RatPoly((1,))
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero:
        raise ValueError("gcd of zero polynomials")
    scale = 1 / r0.lc
    return u0 * scale, v0 * scale, r0 * scale


# ----------------------------------------------------------------------
# Polynomials with coefficients in Z[zeta_l]


class CoeffExtPoly:
    """Polynomial whose coefficients are IntPoly classes modulo Phi_l.

    Houses the minimal polynomial of zeta_{p^a} over Q(zeta_{p^b}); the
    coefficient ring is Z[zeta_l] in the power basis.
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs: Iterable[IntPoly]):
        phi_l = cyclotomic_poly(modulus)
        cs = [c % phi_l for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.modulus = modulus
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoeffExtPoly)
            and self.modulus == other.modulus
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.coeffs))

    def eval_at_zeta(self, n: int) -> IntPoly:
        """Image of f(zeta_n) in Z[zeta_n]; requires modulus | n.

        The coefficients are mapped along zeta_l -> zeta_n^(n/l).
        """
        if n % self.modulus != 0:
            raise ValueError("coefficient ring does not embed in Z[zeta_n]")
        phi_n = cyclotomic_poly(n)
        step = n // self.modulus
        acc = IntPoly()
        x = IntPoly.monomial(1)
        for c in reversed(self.coeffs):
            acc = (acc * x + c.subst_monomial(step)) % phi_n
        return acc

    def __str__(self) -> str:
        var_c = f"z{self.modulus}"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k] if k < len(self.coeffs) else IntPoly()
            if c.is_zero:
                continue
            cs = format_poly(c.coeffs, var=var_c)
            neg = cs.startswith("-") and " " not in cs
            if neg:
                cs = cs[1:]
            if k == 0:
                term = cs
            else:
                head = "" if cs == "1" else (f"({cs})*" if " " in cs else f"{cs}*")
                term = f"{head}x^{k}" if k > 1 else f"{head}x"
            if not parts:
                parts.append(("-" if neg else "") + term)
            else:
                parts.append(("- " if neg else "+ ") + term)
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"CoeffExtPoly(modulus={self.modulus}, coeffs={list(self.coeffs)})"


def relative_min_poly(p: int, a: int, b: int) -> CoeffExtPoly:
    """Minimal polynomial of zeta_{p^a} over Q(zeta_{p^b}) for a > b >= 0.

    Equals Phi_{p^a} read over Z (b = 0) and x^(p^(a-b)) - zeta_{p^b}
    otherwise.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not a > b >= 0:
        raise ValueError("need a > b >= 0")
    if b == 0:
        return CoeffExtPoly(1, [IntPoly.const(c) for c in cyclotomic_poly(p**a).coeffs])
    l = p**b
    zeta = IntPoly.monomial(1) % cyclotomic_poly(l)
    coeffs = [-zeta] + [IntPoly()] * (p ** (a - b) - 1) + [IntPoly.const(1)]
    return CoeffExtPoly(l, coeffs)
