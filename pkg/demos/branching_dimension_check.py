#!/usr/bin/env python3
"""Cross-check the closed dimension formula against brute-force branching.

The dimension of the level-k image of an induced parameter is
k!/prod(level_i!).  Independently, the same number is the multiplicity of
one specific type inside the k-th tensor power of the standard
representation over a product of O(2) and O(1) factors, computed here by
exhaustive tensoring with exact integer bookkeeping.
"""

from glhecke.branching import hom_multiplicity, tensor_power_standard, total_dimension
from glhecke.levelmap import dimension_std
from glhecke.realparams import enumerate_real_params, factors_str, parse_factors

EXAMPLES = [
    ("gl1(triv,2);gl1(triv,1);gl1(triv,0)", 3),
    ("gl2(2,1/2);gl2(2,-1/2)", 4),
    ("gl2(3,0)", 3),
    ("gl1(triv,5);gl2(2,0);gl1(sgn,3)", 3),
    ("gl2(4,0)", 3),  # level 4 > k = 3: both routes give zero
]

if __name__ == "__main__":
    for text, k in EXAMPLES:
        p = parse_factors(text)
        formula = dimension_std(p, k)
        oracle = hom_multiplicity(p, k)
        mark = "ok" if formula == oracle else "MISMATCH"
        print(f"{text:44}  k={k}  formula {formula:3}  branching {oracle:3}  {mark}")

    print()
    decomp = tensor_power_standard(1, 1, 2)
    print(f"tensor square over O(2) x O(1): {len(decomp)} isotypic pieces, "
          f"total dimension {total_dimension(decomp)} (= 3^2)")

    print()
    lam = (2, 1, 0)
    print(f"full agreement sweep at weight {lam}, k up to the level:")
    for p in enumerate_real_params(lam, 0):
        for k in range(p.level + 1):
            assert dimension_std(p, k) == hom_multiplicity(p, k)
        print(f"  {factors_str(p):40} level {p.level}: agrees for all k")
