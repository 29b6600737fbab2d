"""Quotients Z[x]/(Phi_{m_1} ... Phi_{m_r}) and their torsion units.

The quotient embeds into prod Z[zeta_{m_i}] by evaluating at the roots;
the embedding is onto exactly when no ratio of moduli is a prime power.
Either way, the torsion units are found exactly by enumerating all roots
of unity of the product and testing membership in the image lattice.
"""

from ringunits import crt_is_surjective, psi_image, torsion_units_of_quotient

for moduli in [[3, 4], [3, 9], [1, 5], [1, 2], [3, 5]]:
    lat = psi_image(moduli)
    surj = crt_is_surjective(moduli)
    res = torsion_units_of_quotient(moduli)
    print(f"moduli {moduli}:")
    print(f"  surjective: {surj}   image index: {lat.index()}")
    print(f"  torsion units: {res.group} ({len(res.elements)} elements)")

print("""
Two things worth staring at:
 * [3, 9]: the image has index 9 and the torsion drops from the 108
   ambient roots of unity to the 18 powers of -x, i.e. C18 = C2 x C9
   (the sign is forced: -1 is a unit of order 2 in any ring of
   characteristic zero, so no torsion unit group has odd order).
 * [1, 2]: the image has index 2, yet the torsion is still the full
   C2 x C2 -- non-surjectivity does not force the torsion to shrink.
""")

print("Image lattice of [1, 2] in the concatenated basis (canonical rows):")
print(psi_image([1, 2]).dump())
