#!/usr/bin/env python3
"""Run every verification suite at full size and write one JSON report.

Exit status is 0 when all suites pass, 4 when any reports a violation,
3 when none fail but at least one is inconclusive.
"""

import argparse
import json
import sys
import time

from ipclab.verify import SUITE_IDS, run_suite

FULL_PARAMS = {
    "power-bounds": {"cases": 200, "n_max": 10, "seed": 0},
    "line-bounds": {"cases": 200, "n_max": 9, "seed": 0},
    "cliquesum-bounds": {"cases": 100, "seed": 0, "complete_cases": 20},
    "evenhole-family": {"k": 4},
    "linefamily": {"t": 3},
    "grid-growth": {"n_lo": 3, "n_hi": 6},
    "cross-oracle": {"cases": 500, "n_max": 8, "seed": 0, "brute_n_max": 7},
    "connect-claims": {"invocations": 1000, "n_max": 12, "seed": 0},
    "fatminor-transform": {"ts": (2, 3, 4), "ks": tuple(range(12, 21))},
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", help="write the combined report here")
    parser.add_argument(
        "--suite",
        action="append",
        choices=SUITE_IDS,
        help="restrict to these suites (repeatable)",
    )
    args = parser.parse_args()

    chosen = args.suite or list(SUITE_IDS)
    reports = {}
    for suite in chosen:
        start = time.monotonic()
        rep = run_suite(suite, **FULL_PARAMS[suite])
        elapsed = time.monotonic() - start
        reports[suite] = rep
        print(f"{suite:20s} {rep['status']:12s} {elapsed:6.1f}s", file=sys.stderr)

    statuses = [r["status"] for r in reports.values()]
    combined = {
        "schema": "ipc-lab/1",
        "suites": reports,
        "status": (
            "fail"
            if "fail" in statuses
            else "inconclusive"
            if "inconclusive" in statuses
            else "pass"
        ),
    }
    text = json.dumps(combined, sort_keys=True, separators=(",", ":"))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text)
    return {"pass": 0, "inconclusive": 3, "fail": 4}[combined["status"]]


if __name__ == "__main__":
    sys.exit(main())
