"""Run the plane -> arc -> design -> family -> plane -> rank pipeline for each t and tabulate."""

import argparse
import json
import time

from arcres.cli import run_pipeline


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--all-k", action="store_true", help="every k = 2^i < q, not just the oval design")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    rows = []
    for t in args.t:
        q = 1 << t
        ks = [1 << i for i in range(1, t)] if args.all_k else [q // 2]
        for k in ks:
            start = time.perf_counter()
            rep = run_pipeline(t, k)
            rep["seconds"] = round(time.perf_counter() - start, 3)
            rows.append(rep)

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    head = f"{'q':>3} {'k':>3} {'s':>3} {'v':>4} {'b':>4} {'m':>4} {'b_I':>4} {'order':>5} {'rank2':>5} {'bound':>5}  verdict       sec"
    print(head)
    for r in rows:
        bound = r["bound"] if r["bound"] is not None else "-"
        print(f"{r['q']:>3} {r['k']:>3} {r['s']:>3} {r['v']:>4} {r['b']:>4} {r['m']:>4} {r['b_I']:>4} "
              f"{r['plane_order']:>5} {r['rank2']:>5} {bound:>5}  {r['verdict']:<13} {r['seconds']:.2f}")


if __name__ == "__main__":
    main()
