#!/usr/bin/env python3
"""Measure how much sipco(G^r) / sipco(G) actually grows with r.

The proven cap is 4r^2 - 2r; whether the true dependence on r is quadratic
is open. This sweep records the largest observed ratio per exponent over a
seeded random corpus plus a few structured families, as data toward that
question.
"""

import argparse
import json
import sys

from ipclab.complexity import complexity_report
from ipclab.generators import gen_cycle, gen_grid, gen_path, random_connected
from ipclab.operators import power


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cases", type=int, default=100)
    parser.add_argument("--n-max", type=int, default=10)
    parser.add_argument("--r-max", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", help="write the JSON report here")
    args = parser.parse_args()

    import random

    rng = random.Random(args.seed)
    corpus = [
        random_connected(
            rng.randint(4, args.n_max),
            rng.choice((0.2, 0.3, 0.4)),
            rng.randrange(2**31),
        )
        for _ in range(args.cases)
    ]
    corpus += [gen_path(12), gen_cycle(12), gen_grid(4, 4), gen_grid(2, 8)]

    best = {}
    for r in range(2, args.r_max + 1):
        cap = 4 * r * r - 2 * r
        top = {"ratio": 0.0}
        for g in corpus:
            base = complexity_report(g)
            if base.sipco == 0:
                continue
            pow_rep = complexity_report(power(g, r).result)
            ratio = pow_rep.sipco / base.sipco
            if ratio > top["ratio"]:
                top = {
                    "ratio": ratio,
                    "n": g.n,
                    "edges": [list(e) for e in g.edges],
                    "sipco": base.sipco,
                    "power_sipco": pow_rep.sipco,
                }
        top["cap"] = cap
        best[str(r)] = top
        print(
            f"r={r}: max ratio {top['ratio']:.2f} (cap {cap})",
            file=sys.stderr,
        )

    text = json.dumps(
        {"schema": "ipc-lab/1", "sweep": best}, sort_keys=True,
        separators=(",", ":"),
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
