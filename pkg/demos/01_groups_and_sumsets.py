#!/usr/bin/env python3
"""A walk through groups, subsets, and the twelve sumset types.

Every quantity in this package lives over a finite abelian group in
invariant form.  We build a few groups, poke at their elements, and then
compute all twelve sumsets of one small subset.
"""

from sumsetlab import (Subset, cyclic_subgroup, generated_subgroup, group,
                       normalize_factors, ord_set)
from sumsetlab.groups import Group
from sumsetlab.sumsets import norm, sigma, sigma_star, sumset

# Any direct product normalizes to its invariant decomposition: the factor
# chain n_1 | n_2 | ... | n_r determines the group up to isomorphism.
print("Z40 x Z50 x Z60 x Z70 ~", normalize_factors([40, 50, 60, 70]))
print("Z2 x Z5  ~", normalize_factors([2, 5]))

# Element arithmetic works in whatever presentation you hand over.
G = Group((2, 5))
print("(1,3) + (1,4) in Z2xZ5 =", G.add((1, 3), (1, 4)))

Z10 = group(10)
print("ord(2) in Z10 =", Z10.element_order((2,)))
print("elements of order 5 in Z10:", sorted(ord_set(Z10, 5).indices))
print("the order-5 subgroup of Z15:", sorted(cyclic_subgroup(15, 5).indices))

Z15 = group(15)
A = Subset(Z15, [6, 10])
print("<{6,10}> in Z15 has", len(generated_subgroup(A)), "elements")

# The twelve sumset types of A = {2,3} in Z13: coefficients from one of
# four domains, term counts exact, limited, or unbounded.
Z13 = group(13)
A = Subset(Z13, [2, 3])
print("\nA = {2,3} in Z13")
for lam, label in [("N0", "plain"), ("Z", "signed"),
                   ("01", "restricted"), ("pm1", "restricted signed")]:
    row = sorted(sumset(A, lam, ("exact", 2)).indices)
    print(f"  2-fold {label:18s} {row}")
print("  [0,3]-fold plain      ",
      sorted(sumset(A, "N0", ("upto", 3)).indices))
print("  all subset sums       ", sorted(sigma(A).indices))
print("  nonempty subset sums  ", sorted(sigma_star(A).indices))

# The norm of a cyclic subset measures how far it sits from zero; small
# norm obstructs covering the group by subset sums.
B = Subset(Z10, [0, 2, 5, 8])
print("\n||{0,2,5,8}|| in Z10 =", norm(B))
