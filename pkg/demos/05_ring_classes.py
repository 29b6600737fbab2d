"""One group, five ring classes.

Each decider answers: is T x Z^r the unit group of a ring in the class?
The verdict carries a reason code and, when realizable, a checkable
witness construction.
"""

from ringunits import (
    decide_domain_char0,
    decide_domain_charp,
    decide_domain_integral_over_Z,
    decide_reduced,
    decide_torsion_free,
    parse_group,
)

CASES = ["C6", "C8", "C8 x Z", "C7", "C2 x C2 x C3", "C8 x C5 x Z^7", "C5"]

deciders = [
    ("domain (char 0)", decide_domain_char0),
    ("domain (char p)", decide_domain_charp),
    ("domain integral over Z", decide_domain_integral_over_Z),
    ("torsion-free ring", decide_torsion_free),
    ("reduced ring (any char)", lambda g: decide_reduced(g, mode="any")),
]

for text in CASES:
    g = parse_group(text)
    print(f"G = {g}")
    for label, fn in deciders:
        v = fn(g)
        extra = f", min_rank {v.min_rank}" if v.min_rank is not None else ""
        print(f"  {label:<24} {'YES' if v.realizable else 'no'}  ({v.reason}{extra})")
    print()

print("A reduced-ring certificate in detail:")
v = decide_reduced(parse_group("C2 x C8 x C5 x Z^2"), mode="char0")
print(f"  realizable: {v.realizable}")
print(f"  witness: {v.witness.kind}, field sizes {list(v.witness.moduli)}")
print(f"  notes: {v.witness.notes}")
