#!/usr/bin/env python3
"""Named extremal constructions, each carrying machine-checkable claims.

A builder returns (subset, claims); check_all recomputes every claim with
the sumset engine, so each printed line is an independently verified fact.
"""

from sumsetlab.constructions import (bui_set, build_A_d, check_all,
                                     diderrich_set, erdos_griggs_set,
                                     interval_weak_sumfree, kemnitz_set,
                                     perfect_spanning_pair, selfridge_even,
                                     special_restricted_set,
                                     three_independent_set)
from sumsetlab.groups import group

A, claims = build_A_d(15, 6, 3, h=2)
print("coset-interval set A_3(15,6):", sorted(A.indices),
      "claims verified:", check_all(A, claims))

for n, m, h in [(12, 7, 2), (10, 6, 3), (15, 8, 3)]:
    A, claims = special_restricted_set(n, m, h)
    print(f"two-partial-coset set in Z{n} (m={m}, h={h}):",
          sorted(A.indices), "verified:", check_all(A, claims))

A, claims = perfect_spanning_pair(3)
print("perfect 3-spanning pair in", A.group, ":", sorted(A.indices),
      "verified:", check_all(A, claims))

size, witness = interval_weak_sumfree(12, 2, 1)
print("largest weak sum-free interval in Z12 has size", size,
      ":", sorted(witness.indices))

A, claims = selfridge_even(20)
print("split zero-sum-free set in Z20:", sorted(A.indices),
      "verified:", check_all(A, claims))

A, claims = erdos_griggs_set(11)
print("near-square-root non-spanning set in Z11:", sorted(A.indices),
      "verified:", check_all(A, claims))

A, claims = bui_set(4)
print("middle-layer cap set in Z3^4 has size", len(A),
      "verified:", check_all(A, claims))

A, claims = kemnitz_set(3, 2)
print("box set in Z3^2 avoiding zero 3-sums:", sorted(A.coords_list()),
      "verified:", check_all(A, claims))

A, claims = diderrich_set(group(15))
print("subgroup-plus-coset set in Z15:", sorted(A.indices),
      "verified:", check_all(A, claims))

A, claims = three_independent_set(25)
print("3-independent set in Z25:", sorted(A.indices),
      "verified:", check_all(A, claims))
