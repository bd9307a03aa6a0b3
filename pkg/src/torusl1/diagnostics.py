"""Finite-trace convergence diagnostics.

A trace is a short list of (N, value, error_estimate) rows with
increasing N.  The verdict machinery slides a tail window over the
values and compares the spread inside the last window against the
spread inside the first and against the drift of the window means.
Verdicts are heuristic labels for desk checks, not proofs; anything the
data cannot support at the given window size comes back "inconclusive".
"""

from dataclasses import dataclass

import numpy as np

__all__ = ["ConvergenceVerdict", "analyze_trace", "boundedness_report"]


@dataclass(frozen=True)
class ConvergenceVerdict:
    verdict: str
    cauchy_gap: float
    tail_window: int
    limit_estimate: float
    uncertainty: float
    window_gaps: tuple
    window_means: tuple


def _windows(values, w):
    # trailing-aligned windows: last one ends at the final entry
    count = len(values) - w + 1
    return [values[i:i + w] for i in range(count)]


def analyze_trace(trace, tail_window=4):
    """Label a trace converging / bounded-nonconverging / unbounded / unknown.

    Rules, in order:
      1. relative gap of the last window <= 5% and no wider than 3/4 of
         the first window's gap -> "converging"
      2. quadrature error dominating the gap -> "inconclusive"
      3. window means nondecreasing and total drift exceeding the last
         gap -> "unbounded-signature"
      4. drift small next to the window gaps -> "bounded-nonconverging-signature"
      5. otherwise "inconclusive"
    """
    w = int(tail_window)
    if w < 3:
        raise ValueError("tail_window must be >= 3")
    entries = trace.entries
    if len(entries) < w + 2:
        raise ValueError(f"need at least tail_window + 2 = {w + 2} entries")
    values = np.array([e.value for e in entries], dtype=float)
    errors = np.array([e.error_estimate for e in entries], dtype=float)

    wins = _windows(values, w)
    gaps = tuple(float(win.max() - win.min()) for win in wins)
    means = tuple(float(win.mean()) for win in wins)
    g_first, g_last = gaps[0], gaps[-1]
    last = values[-w:]
    limit = float(last.mean())
    err_last = float(errors[-w:].max())
    uncertainty = g_last + err_last
    drift = means[-1] - means[0]
    scale = max(abs(limit), 1e-300)

    if g_last <= 0.05 * scale and (g_last <= 0.75 * g_first or g_first == g_last == 0.0):
        verdict = "converging"
    elif err_last > g_last:
        verdict = "inconclusive"
    elif all(b >= a for a, b in zip(means, means[1:])) and drift > g_last:
        verdict = "unbounded-signature"
    elif abs(drift) <= 0.5 * max(g_first, g_last):
        verdict = "bounded-nonconverging-signature"
    else:
        verdict = "inconclusive"
    return ConvergenceVerdict(verdict=verdict,
                              cauchy_gap=float(g_last),
                              tail_window=w,
                              limit_estimate=limit,
                              uncertainty=float(uncertainty),
                              window_gaps=gaps,
                              window_means=means)


def boundedness_report(trace):
    """(sup of |values|, N attaining it) over the trace."""
    entries = trace.entries
    vals = np.array([abs(e.value) for e in entries])
    k = int(vals.argmax())
    return float(vals[k]), entries[k].N
