"""Tour of the exact cyclotomic kernel.

Cyclotomic polynomials, their values at 1, and the resultant dichotomy
that controls when Phi_n(zeta_m) is a unit.
"""

from ringunits import cyclotomic_poly, phi_at_1, prime_power_ratio, resultant
from ringunits.numth import divisors, euler_phi

print("Some cyclotomic polynomials:")
for n in (1, 2, 6, 9, 12, 40, 105):
    print(f"  Phi_{n}(x) = {cyclotomic_poly(n)}")

print("\nProduct over divisors reassembles x^n - 1 (n = 24):")
prod = cyclotomic_poly(1)
for d in divisors(24)[1:]:
    prod = prod * cyclotomic_poly(d)
print(f"  {prod}")

print("\nPhi_n(1) is 0, p, or 1 depending on n:")
for n in (1, 9, 12, 16, 30):
    print(f"  Phi_{n}(1) = {phi_at_1(n)}")

print("\n|Res(Phi_m, Phi_n)|: 1 unless n/m is a prime power p^a, then p^phi(m):")
for n, m in [(4, 3), (9, 3), (12, 3), (8, 2), (15, 3), (2, 1)]:
    r = abs(resultant(cyclotomic_poly(m), cyclotomic_poly(n)))
    ratio = prime_power_ratio(n, m)
    tag = f"n/m = {ratio[0]}^{ratio[1]}" if ratio else "n/m not a prime power"
    print(f"  (m={m:2d}, n={n:2d}): {r:5d}   [{tag}, phi(m) = {euler_phi(m)}]")
