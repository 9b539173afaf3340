#!/usr/bin/env python3
"""Closed-form theorems and open conjectures versus brute force.

The registry answers a query only when it can verify the hypotheses of a
published theorem; several theorems answering the same query must agree.
Conjecture sweeps compare a predicted formula against exhaustive search,
point by point.
"""

from sumsetlab import group
from sumsetlab.oracle import conjecture_check, known_value
from sumsetlab.search import QuantityQuery, evaluate

queries = [
    QuantityQuery("rho", group(11), "N0", ("exact", 2), m=4),
    QuantityQuery("rho", group(13), "01", ("exact", 3), m=6),
    QuantityQuery("chi", group(15), "N0", ("exact", 3)),
    QuantityQuery("tau", group(16), "pm1", ("allpos",)),
    QuantityQuery("mu", group(30), "N0", ("exact", 2), k=2, l=1),
    QuantityQuery("chi", group(21), "01", ("allpos",), exclude_zero=True),
]
for q in queries:
    matches = known_value(q)
    value = evaluate(q).value
    names = ", ".join(m.citation for m in matches)
    agree = all(m.value == value for m in matches)
    print(f"{matches[0].applicability:38s} search={value}  "
          f"theorems[{names}]={matches[0].value}  agree={agree}")

print("\nconjecture sweeps (every point compared against brute force):")
for cid, grid in [
        ("zero-h-sum-free", {"n": range(2, 28), "h": range(3, 4)}),
        ("signed-3-sum-free", {"n": range(2, 28)}),
        ("mu-upto-2", {"n": range(3, 19)}),
        ("no-perfect-bases", {"s": range(2, 3), "m": range(2, 7)}),
        ("dissociated-2-power", {"k": range(1, 5)}),
]:
    report = conjecture_check(cid, grid)
    confirmed = sum(p.status == "confirmed" for p in report.points)
    print(f"  {cid:22s} {confirmed}/{len(report.points)} confirmed,"
          f" {len(report.refuted)} refuted")
    for p in report.refuted:
        print("    refuted at", p.params, "witness:", p.witness)
