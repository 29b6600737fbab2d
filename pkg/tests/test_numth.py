import random
from fractions import Fraction

import pytest

from ringunits.numth import (
    CoeffExtPoly,
    IntPoly,
    RatPoly,
    cyclotomic_poly,
    divisors,
    euler_phi,
    factorize,
    is_prime_power,
    mobius,
    phi_at_1,
    prime_power_ratio,
    rat_xgcd,
    relative_min_poly,
    resultant,
    unit_rank,
)


def test_factorize():
    assert factorize(12) == ((2, 2), (3, 1))
    assert factorize(1) == ()
    assert factorize(40) == ((2, 3), (5, 1))
    assert factorize(999_999_999_989) == ((999_999_999_989, 1),)  # prime near the bound
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(10**12 + 1)


def test_euler_phi():
    assert euler_phi(40) == 16
    assert euler_phi(1) == 1
    assert euler_phi(18) == 6


def test_phi_sum_identity():
    for n in range(1, 201):
        assert sum(euler_phi(d) for d in divisors(n)) == n
        assert euler_phi(n) == sum(mobius(d) * (n // d) for d in divisors(n))


def test_unit_rank():
    assert unit_rank(2) == 0
    assert unit_rank(1) == 0
    assert unit_rank(8) == 1
    assert unit_rank(40) == 7
    assert unit_rank(3) == 0
    # unchanged by odd -> even relabeling of the same ring
    for m in range(1, 60, 2):
        assert unit_rank(m) == unit_rank(2 * m)


def test_prime_power_helpers():
    assert is_prime_power(27) == (3, 3)
    assert is_prime_power(1) is None
    assert is_prime_power(12) is None
    assert prime_power_ratio(9, 3) == (3, 1)
    assert prime_power_ratio(4, 3) is None
    assert prime_power_ratio(6, 4) is None
    assert prime_power_ratio(40, 5) == (2, 3)
    with pytest.raises(ValueError):
        prime_power_ratio(5, 5)
    for n in range(1, 40):
        for m in range(1, 40):
            if n == m:
                continue
            got = prime_power_ratio(n, m)
            assert (got is not None) == (n % m == 0 and is_prime_power(n // m) is not None)


def test_int_poly_arithmetic():
    f = IntPoly((1, 0, -2, 1))
    g = IntPoly((1, 1))
    assert (f * g - g * f).is_zero
    q, r = divmod(f, g)
    assert q * g + r == f
    assert IntPoly((0, 0, 0)).is_zero
    assert f(2) == 1 - 8 + 8
    assert str(IntPoly((1, 0, -1, 0, 1))) == "x^4 - x^2 + 1"
    assert str(IntPoly((-1, 1))) == "x - 1"
    assert str(IntPoly(())) == "0"
    assert str(IntPoly((3, -2))) == "-2*x + 3"
    with pytest.raises(ValueError):
        divmod(IntPoly((1, 1)), IntPoly((0, 2)))  # 2x does not divide exactly
    with pytest.raises(ValueError):
        IntPoly((1, 1, 1)).exact_div(IntPoly((1, 1)))


def test_cyclotomic_basics():
    assert cyclotomic_poly(1) == IntPoly((-1, 1))
    assert cyclotomic_poly(12) == IntPoly((1, 0, -1, 0, 1))
    assert cyclotomic_poly(9) == IntPoly((1, 0, 0, 1, 0, 0, 1))
    for n in range(1, 101):
        p = cyclotomic_poly(n)
        assert p.is_monic()
        assert p.degree == euler_phi(n)
    # first coefficient outside {-1, 0, 1} shows up at n = 105
    assert min(cyclotomic_poly(105).coeffs) == -2


def test_cyclotomic_product_identity():
    for n in range(1, 201):
        prod = IntPoly((1,))
        for d in divisors(n):
            prod = prod * cyclotomic_poly(d)
        assert prod == IntPoly((-1,) + (0,) * (n - 1) + (1,)), n


def test_phi_at_1():
    assert phi_at_1(12) == 1
    assert phi_at_1(9) == 3
    assert phi_at_1(1) == 0
    for n in range(1, 501):
        assert phi_at_1(n) == cyclotomic_poly(n)(1), n


def test_relative_min_poly():
    psi = relative_min_poly(3, 2, 1)
    assert psi.modulus == 3 and psi.degree == 3
    assert str(psi) == "x^3 - z3"
    assert psi.eval_at_zeta(9).is_zero

    phi5 = relative_min_poly(5, 1, 0)
    assert phi5.modulus == 1
    assert [c.coeffs for c in phi5.coeffs] == [(1,)] * 5
    assert phi5.eval_at_zeta(5).is_zero

    psi84 = relative_min_poly(2, 3, 2)
    assert psi84.modulus == 4 and psi84.degree == 2
    assert psi84.eval_at_zeta(8).is_zero

    # degenerate tower over zeta_2: falls back to the plain cyclotomic shape
    psi42 = relative_min_poly(2, 2, 1)
    assert psi42.eval_at_zeta(4).is_zero

    with pytest.raises(ValueError):
        relative_min_poly(4, 2, 1)
    with pytest.raises(ValueError):
        relative_min_poly(3, 1, 1)


def test_relative_min_poly_at_1_norm():
    # Psi(1) generates the prime over p: its norm from Z[zeta_{p^b}] is +-p
    for p, a, b in [(3, 2, 1), (2, 3, 2), (5, 2, 1), (3, 3, 2)]:
        psi = relative_min_poly(p, a, b)
        val = IntPoly.const(0)
        for k, c in enumerate(psi.coeffs):
            val = val + c
        nrm = resultant(cyclotomic_poly(p**b), val)
        assert abs(nrm) == p, (p, a, b, nrm)


def _sylvester_resultant(f: IntPoly, g: IntPoly) -> int:
    # independent oracle: determinant of the Sylvester matrix over Fraction
    m, n = f.degree, g.degree
    size = m + n
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in fd] + [Fraction(0)] * (n - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in gd] + [Fraction(0)] * (m - 1 - i))
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] / rows[col][col]
            if factor:
                for c in range(col, size):
                    rows[r][c] -= factor * rows[col][c]
    assert det.denominator == 1
    return int(det)


def test_resultant_matches_sylvester():
    rng = random.Random(7)
    for _ in range(120):
        f = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 5))] + [rng.randint(1, 4)])
        g = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 5))] + [rng.randint(1, 4)])
        assert resultant(f, g) == _sylvester_resultant(f, g), (f, g)


def test_resultant_laws():
    p3, p4, p9 = cyclotomic_poly(3), cyclotomic_poly(4), cyclotomic_poly(9)
    assert resultant(IntPoly((-1, 1)), p9) == 3
    assert abs(resultant(p3, p4)) == 1
    assert abs(resultant(p3, p9)) == 9
    rng = random.Random(11)
    ns = list(range(1, 31))
    for _ in range(40):
        a, b, c = rng.choice(ns), rng.choice(ns), rng.choice(ns)
        f, g, h = cyclotomic_poly(a), cyclotomic_poly(b), cyclotomic_poly(c)
        assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)
        assert resultant(f, g) == (-1) ** (f.degree * g.degree) * resultant(g, f)
    with pytest.raises(ValueError):
        resultant(IntPoly(()), p3)


def test_rat_poly_xgcd():
    f = RatPoly.from_int_poly(cyclotomic_poly(3))
    g = RatPoly.from_int_poly(cyclotomic_poly(9))
    u, v, d = rat_xgcd(f, g)
    assert d == RatPoly((1,))
    assert (u * f + v * g) % g == RatPoly((1,)) % g
    one = u * f + v * g
    assert one == RatPoly((1,))
