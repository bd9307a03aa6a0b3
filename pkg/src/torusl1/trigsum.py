"""Fast evaluation of even cosine polynomials.

Everything here evaluates p(t) = c_0 + sum_{m>=1} 2 c_m cos(2 pi m t) for a
real coefficient vector c, in three layouts:

  * cosine_poly_points: direct sum at scattered points (the slow oracle the
    fast paths are checked against); angles go through an exact split
    product so per-term error stays near machine level.
  * cosine_poly_grid: the uniform grid t_k = -1/2 + k/G in O(M + G log G)
    by folding coefficients mod G into one inverse FFT.
  * cosine_poly_on_cells: the lattice t = k/L + x for all residues k at a
    few offsets x, one inverse FFT of length L per offset.  This is what
    lets cell-aligned quadrature touch every kernel cell at once.
"""

import numpy as np

from .kernels import product_frac

__all__ = [
    "cosine_poly_points",
    "cosine_poly_grid",
    "cosine_poly_on_cells",
]


def _weights(coeffs):
    w = np.asarray(coeffs, dtype=float).copy()
    if w.ndim != 1 or w.size == 0:
        raise ValueError("coeffs must be a nonempty 1-d array")
    w[1:] *= 2.0
    return w


def cosine_poly_points(coeffs, ts, m_chunk=2048, t_chunk=2048):
    """Direct evaluation at arbitrary points; scalar in, scalar out.

    Chunked over both terms and points so temporaries stay bounded.
    """
    w = _weights(coeffs)
    ts_arr = np.atleast_1d(np.asarray(ts, dtype=float)).ravel()
    out = np.empty(ts_arr.shape)
    for p0 in range(0, ts_arr.size, t_chunk):
        blk = ts_arr[p0:p0 + t_chunk]
        acc = np.full(blk.shape, w[0])
        for lo in range(1, w.size, m_chunk):
            m = np.arange(lo, min(lo + m_chunk, w.size), dtype=float)
            fr = product_frac(m[:, None], blk[None, :])
            acc += w[lo:lo + m.size] @ np.cos(2.0 * np.pi * fr)
        out[p0:p0 + blk.size] = acc
    if np.ndim(ts) == 0:
        return float(out[0])
    return out.reshape(np.shape(ts))


def cosine_poly_grid(coeffs, grid_size):
    """Values at t_k = -1/2 + k/grid_size for k = 0..grid_size-1."""
    G = int(grid_size)
    if G < 1:
        raise ValueError("grid_size must be >= 1")
    w = _weights(coeffs)
    m = np.arange(w.size)
    signed = np.where(m % 2 == 0, w, -w)  # e^{2 pi i m t} picks up (-1)^m at t = k/G - 1/2
    bins = np.bincount(m % G, weights=signed, minlength=G)
    vals = G * np.fft.ifft(bins)
    return vals.real.copy()


def cosine_poly_on_cells(coeffs, cell_count, offsets):
    """Values of p at t = k/cell_count + x for every residue k and offset x.

    Returns an array of shape (len(offsets), cell_count); column k holds the
    value at k/cell_count + x (interpreted mod 1), matching numpy FFT index
    order, so torus cell index q maps to column q % cell_count.
    """
    L = int(cell_count)
    if L < 1:
        raise ValueError("cell_count must be >= 1")
    w = _weights(coeffs)
    offsets = np.atleast_1d(np.asarray(offsets, dtype=float))
    m = np.arange(w.size)
    fr = product_frac(m[None, :].astype(float), offsets[:, None])
    phases = np.exp((2.0j * np.pi) * fr)
    z = phases * w
    if w.size <= L:
        bins = np.zeros((offsets.size, L), dtype=complex)
        bins[:, : w.size] = z
    else:
        cols = m % L
        bins = np.empty((offsets.size, L), dtype=complex)
        for i in range(offsets.size):
            bins[i] = (np.bincount(cols, weights=z[i].real, minlength=L)
                       + 1j * np.bincount(cols, weights=z[i].imag, minlength=L))
    vals = L * np.fft.ifft(bins, axis=1)
    return vals.real.copy()
