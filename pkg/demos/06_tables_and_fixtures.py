#!/usr/bin/env python3
"""Named tables: recompute published reference data from scratch.

Each named table has a committed fixture CSV and a compute function; this
script recomputes a few cheap ones and diffs them cell by cell.  The same
machinery backs `sumsetlab table` and `sumsetlab fixtures` on the command
line.
"""

from sumsetlab.tables import (TABLES, compute_table, fixture_rows,
                              rows_to_csv, verify_table)

print("named tables:", ", ".join(sorted(TABLES)))

header, rows = compute_table("u15")
print("\nrecomputed u15 table:")
print(rows_to_csv(header, rows))

for name in ("v-table", "u15", "uhat15", "phi-z10", "chi-hat-z15"):
    diff = verify_table(name)
    print(f"{name:12s}", "matches its fixture" if diff is None else diff)

# fixtures are plain CSV; inspect one directly
header, rows = fixture_rows("sidon_f2")
print("\nleast n with a Sidon set of size m in Z_n:")
for m, f in rows:
    print(f"  m={m}: n={f}")
