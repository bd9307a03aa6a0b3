"""Sweep the L1 traces for both coefficient families and print verdicts.

Usage: python3 scripts/norm_sweep.py [--max-order 4096] [--eta 1e-3]
"""

import argparse

from torusl1 import (
    ConvexSequence,
    IntervalUnion,
    analyze_trace,
    norm_trace,
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=4096)
    ap.add_argument("--eta", type=float, default=1e-3)
    args = ap.parse_args()

    Ns = []
    n = 16
    while n <= args.max_order:
        Ns.append(n)
        n *= 2
    full = IntervalUnion.full_torus()
    windowed = full.minus_window(args.eta)

    for name, seq in (("log", ConvexSequence.log_reciprocal()),
                      ("log2", ConvexSequence.log_squared_reciprocal())):
        print(f"== {name} ==")
        for kind, domain in (("abs", full), ("residual", windowed)):
            trace = norm_trace(seq, Ns, domain, kind=kind)
            print(f"  {kind} trace:")
            for e in trace:
                print(f"    N={e.N:5d}  value={e.value:.8f}  err={e.error_estimate:.2e}")
            if len(trace) >= 6:
                v = analyze_trace(trace)
                print(f"  verdict: {v.verdict}  limit~{v.limit_estimate:.6f}"
                      f"  gap={v.cauchy_gap:.2e}  unc={v.uncertainty:.2e}")
        print()


if __name__ == "__main__":
    main()
