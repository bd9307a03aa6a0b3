"""Oscillatory L1 quadrature over interval unions on the torus.

Two engines.

Cell-aligned Gauss (partial sums and kernels, signed or absolute):
panels follow the sign cells [k/L, (k+1)/L) of the kernel, all full cells
are evaluated together through one folded FFT per Gauss offset, and for
absolute integrands any sign crossing detected inside a piece is located
by lockstep bisection and promoted to a panel boundary, so |.| is only
ever integrated on single-signed segments.  The error estimate is the
difference between two panel-count refinement levels plus a roundoff
floor.

Uniform-grid trapezoid (residuals |f - S_N|): the reference f carries
per-point truncation bounds; the integrated bound, the grid-refinement
difference, and end slivers are combined into the error estimate.  Sets
must stay clear of the origin when the reference tail diverges there; the
mass of the excluded window is bounded in closed form and reported.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .intervals import IntervalUnion
from .partial_sums import partial_sum_grid, reference_function_grid
from .trigsum import cosine_poly_on_cells, cosine_poly_points

__all__ = [
    "IntervalUnion",
    "QuadResult",
    "ResidualResult",
    "TraceEntry",
    "NormTrace",
    "integrate_cosine_poly",
    "integrate_abs_partial_sum",
    "integrate_signed",
    "residual_l1",
    "origin_window_bound",
    "norm_trace",
]

_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    panels: int


@dataclass(frozen=True)
class ResidualResult:
    value: float
    error_estimate: float
    panels: int
    window: tuple
    excluded_bound: float


@dataclass(frozen=True)
class TraceEntry:
    N: int
    value: float
    error_estimate: float


@dataclass(frozen=True)
class NormTrace:
    entries: tuple

    def __post_init__(self):
        ns = [e.N for e in self.entries]
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError("trace entries must have strictly increasing N")
        if any(e.error_estimate < 0.0 for e in self.entries):
            raise ValueError("error estimates must be nonnegative")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def Ns(self):
        return np.array([e.N for e in self.entries])

    def values(self):
        return np.array([e.value for e in self.entries])

    def errors(self):
        return np.array([e.error_estimate for e in self.entries])


# -- cell-aligned Gauss engine -----------------------------------------

_GAUSS_CACHE = {}


def _gauss(n):
    if n not in _GAUSS_CACHE:
        _GAUSS_CACHE[n] = np.polynomial.legendre.leggauss(int(n))
    return _GAUSS_CACHE[n]


def _unit_composite(panels, nodes):
    """Composite Gauss nodes/weights on [0, 1]."""
    x, w = _gauss(nodes)
    edges = np.linspace(0.0, 1.0, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    pts = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    wts = (half[:, None] * np.broadcast_to(w, (panels, w.size))).ravel()
    return pts, wts


def _decompose(E, L):
    """Split E into full lattice cells [k/L, (k+1)/L) and partial remnants."""
    full = []
    partial = []
    for lo, hi in E.intervals:
        k0 = math.floor(lo * L + 1e-9)
        k1 = math.ceil(hi * L - 1e-9)
        for k in range(k0, k1):
            c_lo = k / L
            c_hi = (k + 1) / L
            p_lo = max(lo, c_lo)
            p_hi = min(hi, c_hi)
            if p_hi - p_lo <= 0.0:
                continue
            if p_lo == c_lo and p_hi == c_hi:
                full.append(k)
            else:
                partial.append((p_lo, p_hi))
    return full, partial


def _crossings(coeffs, lo, hi, probe_count, iters=48):
    """Sign-change locations of the cosine polynomial inside each [lo, hi].

    Scans probe_count+2 equispaced points per piece, then drives every
    bracket to its root with lockstep bisection.  Returns a list of sorted
    root arrays, one per piece.
    """
    P = lo.size
    u = np.linspace(0.0, 1.0, probe_count + 2)
    pts = lo[:, None] + (hi - lo)[:, None] * u[None, :]
    v = cosine_poly_points(coeffs, pts.ravel()).reshape(P, u.size)
    sg = np.sign(v)
    change = sg[:, :-1] * sg[:, 1:] < 0.0
    rows, gaps = np.nonzero(change)
    out = [np.empty(0)] * P
    if rows.size == 0:
        return out
    bl = pts[rows, gaps].copy()
    br = pts[rows, gaps + 1].copy()
    sl = sg[rows, gaps]
    for _ in range(iters):
        mid = 0.5 * (bl + br)
        fm = cosine_poly_points(coeffs, mid)
        go_left = np.sign(fm) == sl
        bl = np.where(go_left, mid, bl)
        br = np.where(go_left, br, mid)
    roots = 0.5 * (bl + br)
    for row in np.unique(rows):
        out[int(row)] = np.sort(roots[rows == row])
    return out


def _segments_from_pieces(coeffs, pieces, probe_count, absolute):
    arr = np.asarray(pieces, dtype=float).reshape(-1, 2)
    if not absolute:
        return arr
    roots = _crossings(coeffs, arr[:, 0], arr[:, 1], probe_count)
    segs = []
    for (lo, hi), rr in zip(arr, roots):
        cuts = [lo] + [float(r) for r in rr if lo < r < hi] + [hi]
        segs.extend((a, b) for a, b in zip(cuts[:-1], cuts[1:]) if b > a)
    return np.asarray(segs, dtype=float).reshape(-1, 2)


def _integrate_segments(coeffs, segs, panels, nodes, absolute):
    """Composite Gauss on each segment; returns (integral, abs mass)."""
    if segs.size == 0:
        return 0.0, 0.0, 0
    ux, uw = _unit_composite(panels, nodes)
    lo = segs[:, 0]
    ln = segs[:, 1] - segs[:, 0]
    pts = lo[:, None] + ln[:, None] * ux[None, :]
    v = cosine_poly_points(coeffs, pts.ravel()).reshape(segs.shape[0], ux.size)
    av = np.abs(v)
    scale = float(ln @ (av @ uw))
    if absolute:
        return scale, scale, segs.shape[0] * panels
    return float(ln @ (v @ uw)), scale, segs.shape[0] * panels


def _full_cells(coeffs, L, ks, panels, nodes, absolute):
    """Integrate all full cells at once; flag cells with interior crossings.

    Returns (integral over clean cells, abs mass, list of kinky cell ids).
    """
    offs, wts = _unit_composite(panels, nodes)
    offs = offs / L
    wts = wts / L
    vals = cosine_poly_on_cells(coeffs, L, offs)
    cols = np.mod(ks, L)
    v = vals[:, cols]
    av = np.abs(v)
    if not absolute:
        return float(wts @ v.sum(axis=1)), float(wts @ av.sum(axis=1)), []
    edges = cosine_poly_on_cells(coeffs, L, np.array([0.0]))[0]
    stacked = np.vstack([edges[cols], v, edges[np.mod(ks + 1, L)]])
    # kernel zeros sit exactly on cell edges; rounding noise there must not
    # read as a sign change, so tiny values count as zero
    thresh = 64.0 * _EPS * float(np.max(np.abs(stacked)))
    sg = np.where(np.abs(stacked) <= thresh, 0.0, np.sign(stacked))
    kinky = (sg[:-1] * sg[1:] < 0.0).any(axis=0)
    contrib = wts @ av
    total = float(contrib[~kinky].sum())
    scale = float(contrib.sum())
    return total, scale, [int(k) for k, bad in zip(ks, kinky) if bad]


def _level(coeffs, E, L, panels, nodes, absolute):
    full, partial = _decompose(E, L)
    total = 0.0
    scale = 0.0
    n_panels = 0
    pieces = list(partial)
    if full:
        ks = np.array(sorted(full))
        t, s, kinky = _full_cells(coeffs, L, ks, panels, nodes, absolute)
        total += t
        scale += s
        n_panels += panels * (len(full) - len(kinky))
        pieces.extend((k / L, (k + 1) / L) for k in kinky)
    if pieces:
        segs = _segments_from_pieces(coeffs, pieces, panels * nodes, absolute)
        t, s, p = _integrate_segments(coeffs, segs, panels, nodes, absolute)
        total += t
        scale += s
        n_panels += p
    return total, scale, n_panels


def integrate_cosine_poly(coeffs, E, cell_count, panels_per_cell=2,
                          nodes_per_panel=16, absolute=False):
    """Integrate c_0 + sum 2 c_m cos(2 pi m t) (or its |.|) over E.

    cell_count is the sign-cell modulus the panels align to (2N+1 for a
    partial sum of order N, j+1 for the order-j nonnegative kernel).  The
    error estimate is |refined - coarse| with a roundoff floor.
    """
    L = int(cell_count)
    if L < 1:
        raise ValueError("cell_count must be >= 1")
    panels_per_cell = int(panels_per_cell)
    nodes_per_panel = int(nodes_per_panel)
    if panels_per_cell < 1 or nodes_per_panel < 2:
        raise ValueError("need panels_per_cell >= 1 and nodes_per_panel >= 2")
    coeffs = np.asarray(coeffs, dtype=float)
    if E.is_empty:
        return QuadResult(0.0, 0.0, 0)
    i1, _, _ = _level(coeffs, E, L, panels_per_cell, nodes_per_panel, absolute)
    i2, s2, p2 = _level(coeffs, E, L, 2 * panels_per_cell, nodes_per_panel,
                        absolute)
    err = max(abs(i2 - i1), 64.0 * _EPS * s2)
    return QuadResult(float(i2), float(err), int(p2))


def integrate_abs_partial_sum(seq, N, E, panels_per_cell=2, nodes_per_panel=16):
    """integral over E of |S_N(f, t)| dt with cell-aligned panels."""
    if N != int(N) or N < 0:
        raise ValueError("N must be a nonnegative integer")
    N = int(N)
    return integrate_cosine_poly(seq.values(N + 1), E, 2 * N + 1,
                                 panels_per_cell, nodes_per_panel,
                                 absolute=True)


def integrate_signed(seq, N, E, panels_per_cell=2, nodes_per_panel=16):
    """integral over E of S_N(f, t) dt (no absolute value)."""
    if N != int(N) or N < 0:
        raise ValueError("N must be a nonnegative integer")
    N = int(N)
    return integrate_cosine_poly(seq.values(N + 1), E, 2 * N + 1,
                                 panels_per_cell, nodes_per_panel,
                                 absolute=False)


# -- residual engine ----------------------------------------------------


@lru_cache(maxsize=8)
def _cached_reference(seq, grid_size, j_max):
    vals, tails = reference_function_grid(seq, grid_size, j_max)
    vals.setflags(write=False)
    tails.setflags(write=False)
    return vals, tails


def _grid_trapezoid(y, E, G, stride):
    """Trapezoid over the grid points of E at the given stride.

    Returns (integral, sliver mass, samples); slivers are the sub-spacing
    leftovers at interval ends, included in the integral as rectangles and
    reported so the caller can count them toward the error.
    """
    h = stride / G
    total = 0.0
    sliver = 0.0
    used = 0
    for lo, hi in E.intervals:
        pos_lo = (lo + 0.5) * G
        pos_hi = (hi + 0.5) * G
        i_lo = int(math.ceil(pos_lo - 1e-9))
        i_hi = int(math.floor(pos_hi + 1e-9))
        i_lo = ((i_lo + stride - 1) // stride) * stride
        i_hi = (i_hi // stride) * stride
        if i_lo > i_hi:
            mid = y[int(round(0.5 * (pos_lo + pos_hi))) % G]
            patch = (hi - lo) * float(mid)
            total += patch
            sliver += abs(patch)
            continue
        idx = np.arange(i_lo, i_hi + 1, stride)
        yy = y[idx % G]
        used += idx.size
        if idx.size > 1:
            total += h * (float(yy.sum()) - 0.5 * float(yy[0] + yy[-1]))
        w1 = max(i_lo - pos_lo, 0.0) / G
        w2 = max(pos_hi - i_hi, 0.0) / G
        patch = w1 * float(yy[0]) + w2 * float(yy[-1])
        total += patch
        sliver += abs(patch)
    return total, sliver, used


def origin_window_bound(seq, N, eta, j_star=None):
    """Closed-form bound on the residual mass inside (-eta, eta).

    Splits f at order J: the kept part is below sum (j+1)^2 d2_j pointwise,
    the dropped kernels contribute at most their full-torus mass, and |S_N|
    is below its coefficient sum; everything is then integrated over the
    window of width 2 eta.
    """
    eta = float(eta)
    if eta <= 0.0:
        return 0.0
    J = int(j_star) if j_star is not None else max(2, int(round(0.5 / eta)))
    d2 = seq.second_differences(J + 1)
    j = np.arange(J + 1, dtype=float)
    f_peak = float(((j + 1.0) ** 2) @ d2)
    dropped = seq.weighted_tail_beyond(J)
    a = seq.values(int(N) + 1)
    s_peak = float(a[0] + 2.0 * a[1:].sum())
    return 2.0 * eta * (f_peak + s_peak) + dropped


def residual_l1(seq, N, E, j_max=100000, grid_size=2 ** 16):
    """integral over E of |f - S_N| dt on a uniform grid, with tail bounds.

    E must keep a positive distance >= one grid spacing from the origin
    whenever the reference tail diverges there (both log families); the
    bound on the mass excluded by that window is reported alongside.
    """
    if N != int(N) or N < 0:
        raise ValueError("N must be a nonnegative integer")
    N = int(N)
    G = int(grid_size)
    if G < 16:
        raise ValueError("grid_size must be >= 16")
    if E.is_empty:
        return ResidualResult(0.0, 0.0, 0, (0.0, 0.0), 0.0)
    d0 = E.distance_from_zero()
    unbounded_at_zero = not math.isfinite(seq.squared_weighted_tail_beyond(j_max))
    if unbounded_at_zero:
        if d0 <= 0.0:
            raise ValueError("set must exclude a window around 0: the "
                             "reference function's tail bound diverges there")
        if d0 < 1.0 / G:
            raise ValueError("origin window is narrower than the grid spacing")
    f_vals, f_tails = _cached_reference(seq, G, j_max)
    s_vals = partial_sum_grid(seq, N, G)
    r = np.abs(f_vals - s_vals)
    i_fine, sliver, used = _grid_trapezoid(r, E, G, 1)
    i_coarse, _, _ = _grid_trapezoid(r, E, G, 2)
    tail_int, _, _ = _grid_trapezoid(f_tails, E, G, 1)
    err = abs(i_fine - i_coarse) + tail_int + sliver + 64.0 * _EPS * abs(i_fine)
    window = (-d0, d0) if d0 > 0.0 else (0.0, 0.0)
    bound = origin_window_bound(seq, N, d0) if d0 > 0.0 else 0.0
    return ResidualResult(float(i_fine), float(err), int(used), window,
                          float(bound))


def norm_trace(seq, Ns, E, kind="abs", panels_per_cell=2, nodes_per_panel=16,
               j_max=100000, grid_size=2 ** 16):
    """One QuadResult per N assembled into a NormTrace.

    kind "abs" integrates |S_N| with the cell-aligned engine; kind
    "residual" integrates |f - S_N| with the grid engine (E must already
    exclude the origin window).
    """
    Ns = [int(n) for n in Ns]
    if any(b <= a for a, b in zip(Ns, Ns[1:])):
        raise ValueError("Ns must be strictly increasing")
    entries = []
    for N in Ns:
        if kind == "abs":
            q = integrate_abs_partial_sum(seq, N, E, panels_per_cell,
                                          nodes_per_panel)
        elif kind == "residual":
            q = residual_l1(seq, N, E, j_max, grid_size)
        else:
            raise ValueError(f"unknown trace kind {kind!r}")
        entries.append(TraceEntry(N, q.value, q.error_estimate))
    return NormTrace(tuple(entries))
