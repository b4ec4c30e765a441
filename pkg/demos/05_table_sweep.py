"""Every knot in the table, realized and checked against its stick bound.

With a minimal arc presentation of n arcs the construction uses 2n - 2
sticks. Alternating knots have n = c + 2, so this is 2c + 2; the three
non-alternating 8-crossing knots have n <= c and come in at or below 2c - 2.
"""

import time

from equistick.cli import format_batch, run_batch
from equistick.table import entry_names

start = time.perf_counter()
rows = run_batch(entry_names(), seed=0)
print(format_batch(rows, "text"), end="")
print(f"\n{sum(r['passed'] for r in rows)}/{len(rows)} passed in {time.perf_counter() - start:.1f}s")
