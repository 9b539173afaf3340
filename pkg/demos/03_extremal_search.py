#!/usr/bin/env python3
"""The seven extremal quantities, by exhaustive search with witnesses.

Each family asks for the largest or smallest subset with some sumset
property; the searches return certified witnesses that re-verify under the
sumset engine.
"""

from sumsetlab import group
from sumsetlab.search import (QuantityQuery, critical_number,
                              enumerate_extremal, max_sidon_size,
                              max_sum_free, max_sumset_size,
                              max_zero_sum_free, min_spanning_size,
                              min_sumset_size)

Z20, Z15, Z11, Z10 = group(20), group(15), group(11), group(10)

res = max_sumset_size(Z20, 5, "N0", ("exact", 2))
print("largest 2-fold sumset of a 5-subset of Z20:", res.value,
      "witness", sorted(res.witness.indices))

res = min_sumset_size(Z15, 6, "N0", ("exact", 2))
print("smallest 2-fold sumset of a 6-subset of Z15:", res.value,
      "witness", sorted(res.witness.indices))

print("minimum 2-spanning set size in Z10:",
      min_spanning_size(Z10, "N0", ("exact", 2)).value)
print("minimum signed 1-spanning set size in Z10:",
      min_spanning_size(Z10, "Z", ("exact", 1)).value)

res = max_sidon_size(group(7), "N0", ("exact", 2))
print("largest Sidon set in Z7:", res.value,
      "witness", sorted(res.witness.indices))

print("restricted 4-critical number of Z15:",
      critical_number(Z15, "01", ("exact", 4)).value)
print("classical critical number of Z11 (nonzero subsets, subset sums):",
      critical_number(Z11, "01", ("allpos",), exclude_zero=True).value)

res = max_zero_sum_free(group(25), "Z", ("from1", 3))
print("largest 3-independent set in Z25:", res.value,
      "witness", sorted(res.witness.indices))

res = max_sum_free(Z11, 2, 1)
print("largest sum-free set in Z11:", res.value)
wits = enumerate_extremal(Z11, QuantityQuery("mu", Z11, "N0",
                                             ("exact", 2), k=2, l=1))
print("all", len(wits), "maximum sum-free sets:",
      [sorted(w.indices) for w in wits])
