"""Witness orders: explicit rings whose torsion units hit a target group.

For each even-order T we build an order inside a product of cyclotomic
rings whose unit group is exactly T x Z^g_min(T), then verify the torsion
part by exhaustive enumeration.  Sometimes the full product works; when T
has fewer 2-power factors than cyclic pieces demand, generators tie
components together diagonally.
"""

from ringunits import build_witness, g_min, parse_group, witness_moduli
from ringunits.cycring import maximal_order_rank

gallery = [
    "C2",
    "C6",
    "C8",
    "C2 x C4",
    "C2 x C8 x C5",
    "C2 x C3 x C3",
    "C2 x C3 x C9",
    "C2 x C3 x C5",
    "C2 x C2 x C3 x C3 x C3",
]

for name in gallery:
    t = parse_group(name).torsion
    w = build_witness(t)
    assert maximal_order_rank(witness_moduli(t)) == g_min(t)
    print(f"T = {name}  (g_min = {g_min(t)})")
    print(f"  witness: {w.kind} over Z[zeta_m] for m in {list(w.moduli)}")
    for gen in w.generators:
        print(f"    generator {gen}")
    print(f"  brute-force verified: {w.verified}")
    print()
