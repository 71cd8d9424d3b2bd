"""Time enumeration and sigma_m over P_n against p(n).

Cost should track p(n); the ratio column stays roughly flat if it does.
"""

import sys
import time

from partition_identities.counting import partition_count
from partition_identities.partitions import enumerate_partitions
from partition_identities.transforms import sigma

N = int(sys.argv[1]) if len(sys.argv) > 1 else 40
M = int(sys.argv[2]) if len(sys.argv) > 2 else 3

p = partition_count(N)
print(f"{'n':>3} {'p(n)':>9} {'enum s':>8} {'sigma s':>8} {'us/part':>8}")
for n in range(5, N + 1, 5):
    t0 = time.perf_counter()
    parts = list(enumerate_partitions(n))
    t1 = time.perf_counter()
    for lam in parts:
        sigma(lam, M)
    t2 = time.perf_counter()
    assert len(parts) == p[n]
    print(f"{n:>3} {p[n]:>9} {t1 - t0:>8.3f} {t2 - t1:>8.3f} {1e6 * (t2 - t0) / p[n]:>8.1f}")
