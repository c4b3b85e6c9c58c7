# Timing the two solver paths on random systems of prescribed rank.
#
# Each (n, m, r) row gets one seeded random system. t1 is the plain iteration,
# t2 the preprocessed pipeline; every row also checks the two cones are equal.
# Larger rows from the published table (n = 30..50) can take a long time; the
# per-row timeout marks them instead of stopping the run.
import sys

from mbcone.bench import DESK_ROWS, BenchSpec, bench, format_table

rows = DESK_ROWS
if len(sys.argv) > 1 and sys.argv[1] == "--more":
    rows = DESK_ROWS + ((30, 30, 15),)

report = bench(BenchSpec(rows, seed=0), timeout=120,
               on_row=lambda row: print(f"  done {row.n, row.m, row.r}: {row.status}", file=sys.stderr))
print(format_table(report), end="")
