#!/usr/bin/env python3
"""Writes data/groups/C<n>.json for cyclic 2-groups from their real character tables.

Irreducibles of C_m, in order: 1, sigma (m >= 2), then the rotations lambda_a
by 2 pi a / m for 1 <= a < m/2 (named "lambda" when m = 4). Restriction
multiplicities come from the inner product of characters.
"""

import argparse
import json
import math
from pathlib import Path


def irreps(m):
    out = [("1", 1, 1)]
    if m >= 2:
        out.append(("sigma", 1, 1))
    for a in range(1, (m + 1) // 2):
        if 2 * a == m:
            continue
        out.append(("lambda" if m == 4 else f"lambda_{a}", 2, 2))
    return out


def character(m, j, e):
    if j == 0:
        return 1.0
    if j == 1:
        return 1.0 if e % 2 == 0 else -1.0
    a = j - 1
    return 2.0 * math.cos(2.0 * math.pi * a * e / m)


def restriction(big, small):
    """table[i][j]: multiplicity of irrep i of C_small in Res of irrep j of C_big."""
    step = big // small
    table = []
    for i, (_, _, er) in enumerate(irreps(small)):
        row = []
        for j in range(len(irreps(big))):
            s = sum(character(big, j, e * step) * character(small, i, e) for e in range(small))
            row.append(round(s / small / er))
        table.append(row)
    return table


def name(m):
    return "e" if m == 1 else f"C{m}"


def group_document(n):
    orders = [1 << i for i in range(n + 1)]
    chain = [
        {"name": name(m), "order": m,
         "irreps": [{"name": a, "dim": d, "endomorphism_rank": r} for a, d, r in irreps(m)]}
        for m in orders
    ]
    res = [
        {"from": name(big), "to": name(small), "table": restriction(big, small)}
        for big in orders for small in orders if small <= big
    ]
    res.sort(key=lambda t: (orders.index(int(t["from"][1:]) if t["from"] != "e" else 1),
                            orders.index(int(t["to"][1:]) if t["to"] != "e" else 1)))
    return {"schema": 1, "kind": "group-data",
            "payload": {"name": f"C{1 << n}", "chain": chain, "restriction": res}}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "groups"))
    ap.add_argument("--max-exponent", type=int, default=3)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for n in range(args.max_exponent + 1):
        doc = group_document(n)
        (out / f"C{1 << n}.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
