"""Run the verification suite in-process and print a per-identity summary.

    python scripts/summarize_suite.py --n 1..20 --m 1..6 --identities all
"""

import argparse
import time
from collections import defaultdict

from partition_identities import cli


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", default="1..20")
    ap.add_argument("--m", default="1..6")
    ap.add_argument("--identities", default="all")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--z-samples", type=int, default=20)
    ap.add_argument("--points", type=int, default=100)
    args = ap.parse_args()

    cfg = cli.RunConfig(
        command="verify",
        n_range=cli.parse_range(args.n),
        m_range=cli.parse_range(args.m),
        identities=cli.parse_identities(args.identities),
        z_samples=args.z_samples,
        points=args.points,
        seed=args.seed,
    )
    start = time.perf_counter()
    pairs = cli.run_checks(cfg)
    total = time.perf_counter() - start

    stats = defaultdict(lambda: [0, 0, 0])
    for report, elapsed_us in pairs:
        row = stats[report.identity]
        row[0] += 1
        row[1] += report.passed
        row[2] += elapsed_us
    rows = [[ident, str(c), str(p), f"{us / 1e6:.2f}"] for ident, (c, p, us) in stats.items()]
    print(cli.render_table(rows, ["identity", "checks", "passed", "seconds"]), end="")
    print(f"total {len(pairs)} checks in {total:.1f}s")


if __name__ == "__main__":
    main()
