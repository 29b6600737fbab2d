"""Finite abelian groups: canonical form, standard decomposition, minimal rank.

For an even-order group T, g_min(T) is the least r such that T x Z^r is
the unit group of some torsion-free ring; it falls out of the standard
decomposition below.
"""

from ringunits import g_min, is_rank_zero_family, parse_group, standard_decomposition
from ringunits.groups import abelian_groups_upto

for text in ["C4 x C6", "C2 x C8 x C5", "C8 x C5", "C2 x C3 x C5"]:
    t = parse_group(text).torsion
    sd = standard_decomposition(t)
    print(f"{text:>14}  =  {t}   (primary parts {list(t.parts)})")
    print(
        f"                eps={sd.eps} sigma={sd.sigma} "
        f"two_exponents={list(sd.two_exponents)} odd_parts={list(sd.odd_parts)}"
    )
    print(f"                g_min = {g_min(t)}")

print("\nNote the subgroup paradox: C8 x C5 < C2 x C8 x C5, yet")
print(f"  g_min(C8 x C5) = {g_min(parse_group('C8 x C5').torsion)}")
print(f"  g_min(C2 x C8 x C5) = {g_min(parse_group('C2 x C8 x C5').torsion)}")

print("\nGroups with g_min = 0 (unit groups of torsion-free rings on their own),")
print("order <= 24 -- exactly the C2^a x C4^b x C3^c family:")
for t in abelian_groups_upto(24):
    if t.order % 2 == 0 and g_min(t) == 0:
        assert is_rank_zero_family(t)
        print(f"  {t}")
