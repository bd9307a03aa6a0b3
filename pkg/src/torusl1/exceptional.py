"""Witness sets for non-uniform integrability, and interval limit demos.

The witness construction fixes a target measure 2/(2 N0 + 1), then walks
the nonnegative sign cells of D_n outward from the origin (ordered by
d_i = sup_{t in J_i} |t|), keeping whole cells until the running measure
would overshoot and trimming the last cell on its near-origin side so the
target is hit exactly.  Over a sweep N0 -> infinity with n ~ N0^2 the
measures shrink to 0 while the signed integrals of S_n over the witness
stay bounded away from 0 for slowly decaying coefficients; that
contrast is the certificate.

Note the walk may keep more than b cells: the b-1 nearest cells alone have
total measure below b/(2 b N0 + 1) < 2/(2 N0 + 1), so stopping at b-1, as
a literal reading of the recipe suggests, can never reach the target.
"""

import math
from dataclasses import dataclass

import numpy as np

from .diagnostics import analyze_trace
from .kernels import dirichlet_eval
from .intervals import IntervalUnion
from .quadrature import integrate_signed, norm_trace

__all__ = [
    "WitnessSet",
    "CertificateReport",
    "IntervalLimitDemo",
    "nonnegative_cells",
    "build_witness",
    "uniform_integrability_certificate",
    "interval_limit_demo",
    "default_witness_order",
]


def nonnegative_cells(n):
    """Sign cells of the 2n+2 piece torus partition where D_n >= 0.

    The partition is the 2n interior cells [k/(2n+1), (k+1)/(2n+1)) plus
    the two boundary pieces reaching +-1/2.  D_n has constant sign inside
    each piece; the sign is taken at the midpoint.  Cells are returned in
    torus order.
    """
    if n != int(n) or n < 1:
        raise ValueError("n must be a positive integer")
    n = int(n)
    L = 2 * n + 1
    pieces = [(-0.5, -n / L)]
    pieces += [(k / L, (k + 1) / L) for k in range(-n, n)]
    pieces.append((n / L, 0.5))
    mids = np.array([0.5 * (lo + hi) for lo, hi in pieces])
    keep = dirichlet_eval(n, mids) >= 0.0
    return [p for p, good in zip(pieces, keep) if good]


def _distance_key(cell):
    lo, hi = cell
    return (max(abs(lo), abs(hi)), lo)


def default_witness_order(n):
    """Nonnegative cells of D_n sorted by distance d_i = sup |t|, then lo."""
    return sorted(nonnegative_cells(n), key=_distance_key)


@dataclass(frozen=True)
class WitnessSet:
    N0: int
    b: int
    n: int
    selected: tuple
    trim: tuple
    Q: IntervalUnion
    measure: float
    integral: float
    integral_error: float
    feasible: bool


def default_n(N0, b):
    """Deterministic choice of n inside (b N0, (b+1) N0]."""
    return b * N0 + (N0 + 1) // 2


def build_witness(seq, N0, b, n=None, panels_per_cell=2, nodes_per_panel=16):
    """Assemble the witness set Q for D_n with measure exactly 2/(2 N0 + 1).

    Keeps nonnegative cells nearest the origin, whole, until the next cell
    would overshoot the target; that cell is trimmed on its near-origin
    side by the exact deficit.  The signed integral of S_n over Q is
    computed with the cell-aligned engine (Q's edges are cell boundaries
    except for the trim cut).
    """
    N0 = int(N0)
    b = int(b)
    if N0 < 1 or b < 1:
        raise ValueError("N0 and b must be positive integers")
    n = default_n(N0, b) if n is None else int(n)
    if not (b * N0 < n <= (b + 1) * N0):
        raise ValueError(f"n must lie in (b*N0, (b+1)*N0], got n={n}")
    target = 2.0 / (2 * N0 + 1)
    cells = default_witness_order(n)
    selected = []
    trim = None
    acc = 0.0
    feasible = False
    for lo, hi in cells:
        length = hi - lo
        if acc + length < target:
            selected.append((lo, hi))
            acc += length
            continue
        deficit = target - acc
        if lo >= 0.0:
            trim = (lo, lo + deficit)
        else:
            trim = (hi - deficit, hi)
        feasible = True
        break
    pieces = list(selected) + ([trim] if trim else [])
    Q = IntervalUnion(tuple(sorted(pieces)))
    q = integrate_signed(seq, n, Q, panels_per_cell, nodes_per_panel)
    return WitnessSet(N0=N0, b=b, n=n, selected=tuple(selected),
                      trim=trim if trim else (), Q=Q,
                      measure=float(Q.measure()), integral=float(q.value),
                      integral_error=float(q.error_estimate),
                      feasible=feasible)


@dataclass(frozen=True)
class CertificateReport:
    N0s: tuple
    witnesses: tuple
    measures: tuple
    integrals: tuple
    kappa: float
    min_integral: float
    max_integral: float
    passed: bool


def uniform_integrability_certificate(seq, N0s, kappa=0.2):
    """Witness sweep with b = N0: small measures, non-small integrals.

    Passes when the smallest signed integral over the sweep stays above
    kappa times the largest and above 0, while the witness measures
    2/(2 N0 + 1) decrease.  A family whose partial sums converge in L1
    fails this by construction (its integrals shrink with the measures).
    """
    N0s = [int(v) for v in N0s]
    if any(v < 4 for v in N0s):
        raise ValueError("each N0 must be >= 4")
    if any(b <= a for a, b in zip(N0s, N0s[1:])):
        raise ValueError("N0s must be strictly increasing")
    witnesses = tuple(build_witness(seq, N0, N0) for N0 in N0s)
    integrals = tuple(w.integral for w in witnesses)
    measures = tuple(w.measure for w in witnesses)
    lo, hi = min(integrals), max(integrals)
    passed = bool(lo > 0.0 and lo >= kappa * hi
                  and all(w.feasible for w in witnesses))
    return CertificateReport(N0s=tuple(N0s), witnesses=witnesses,
                             measures=measures, integrals=integrals,
                             kappa=float(kappa), min_integral=float(lo),
                             max_integral=float(hi), passed=passed)


@dataclass(frozen=True)
class IntervalLimitDemo:
    trace: object
    verdict: object
    case: str


def interval_limit_demo(seq, E, Ns, tail_window=4, panels_per_cell=2,
                        nodes_per_panel=16):
    """Trace of integral over E of |S_N| with a convergence verdict.

    case "origin-interior" when E meets the origin, "origin-separated"
    when 0 lies strictly inside the complement; the limit is expected to
    exist either way.
    """
    if E.is_empty:
        raise ValueError("E must be nonempty")
    case = "origin-interior" if E.distance_from_zero() == 0.0 else "origin-separated"
    trace = norm_trace(seq, Ns, E, kind="abs", panels_per_cell=panels_per_cell,
                       nodes_per_panel=nodes_per_panel)
    verdict = analyze_trace(trace, tail_window=tail_window)
    return IntervalLimitDemo(trace=trace, verdict=verdict, case=case)
