"""Walsh and differential spectra, nonlinearity, and APN/AB verdicts.

The fast Walsh path transforms one sign table per output mask b with a
vectorized Walsh-Hadamard butterfly, then reindexes the result so that the
row/column convention matches the trace inner product <a, x> = tr(ax) used
by the naive oracle ``walsh_value``.  Distributions are aggregated in
ascending b order so reports are deterministic however the work is split.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from vbfkit.vbf import FuncTable

_SPECTRUM_LIMIT = 24  # 2^(2m) work beyond this is out of scope
_MATRIX_LIMIT = 14  # full (2^m - 1) x 2^m matrix kept in memory


class TooLargeError(ValueError):
    """Field degree too large for a full-spectrum computation."""


class ParityMismatchError(ValueError):
    """m + s must be even for a {0, +-2^((m+s)/2)} support test."""


@dataclass(frozen=True)
class WalshSpectrum:
    m: int
    distribution: dict  # signed value -> count over all (a, b), b != 0
    max_abs: int


@dataclass(frozen=True)
class DifferentialSpectrum:
    m: int
    distribution: dict  # count value -> number of (a, b) pairs, a != 0
    max: int


# ---------------------------------------------------------------- oracle

def walsh_value(f: FuncTable, a: int, b: int) -> int:
    """Naive O(2^m) character sum with inner product tr(xy)."""
    ctx = f.ctx
    total = 0
    for x, y in enumerate(f.values):
        sign = ctx.trace(ctx.mul(b, y)) ^ ctx.trace(ctx.mul(a, x))
        total += -1 if sign else 1
    return total


# ---------------------------------------------------------------- fast path

def _fwht_rows(mat: np.ndarray) -> np.ndarray:
    """In-place Walsh-Hadamard transform along axis 1 (length a power of 2)."""
    rows, n = mat.shape
    h = 1
    while h < n:
        m3 = mat.reshape(rows, -1, 2, h)
        top = m3[:, :, 0, :].copy()
        bot = m3[:, :, 1, :]
        m3[:, :, 0, :] = top + bot
        m3[:, :, 1, :] = top - bot
        h *= 2
    return mat


def _dual_reindex(ctx) -> np.ndarray:
    """Index map D with tr(alpha * x) = parity(D[alpha] & x) for all x,
    converting dot-product transform columns to trace-convention columns."""
    tr = ctx.trace_table()
    alphas = np.arange(ctx.size, dtype=np.int64)
    mask = np.zeros(ctx.size, dtype=np.int64)
    for j in range(ctx.m):
        mask |= tr[ctx.mul_many(alphas, 1 << j)].astype(np.int64) << j
    return mask


def _sign_block(f: FuncTable, bs: np.ndarray) -> np.ndarray:
    """Rows of (-1)^tr(b F(x)) for each b in bs, as int32."""
    ctx = f.ctx
    tr = ctx.trace_table()
    prods = ctx.mul_many(bs[:, None], f.as_array()[None, :])
    return 1 - 2 * tr[prods].astype(np.int32)


def walsh_matrix(f: FuncTable) -> np.ndarray:
    """Full matrix W[b-1, a] = walsh(a, b) for b = 1..2^m-1 (trace convention)."""
    ctx = f.ctx
    if ctx.m > _MATRIX_LIMIT:
        raise TooLargeError(f"walsh_matrix holds 2^(2m) ints; m={ctx.m} > {_MATRIX_LIMIT}")
    bs = np.arange(1, ctx.size, dtype=np.int64)
    mat = _fwht_rows(_sign_block(f, bs))
    return mat[:, _dual_reindex(ctx)]


def walsh_spectrum(f: FuncTable) -> WalshSpectrum:
    """Multiset of walsh(a, b) over all a and all b != 0."""
    ctx = f.ctx
    if ctx.m > _SPECTRUM_LIMIT:
        raise TooLargeError(f"walsh_spectrum costs m*2^(2m); m={ctx.m} > {_SPECTRUM_LIMIT}")
    n = ctx.size
    block = max(1, (1 << 22) // n)
    dist: dict[int, int] = {}
    max_abs = 0
    for start in range(1, n, block):
        bs = np.arange(start, min(start + block, n), dtype=np.int64)
        mat = _fwht_rows(_sign_block(f, bs))
        vals, counts = np.unique(mat, return_counts=True)
        for v, c in zip(vals.tolist(), counts.tolist()):
            dist[v] = dist.get(v, 0) + c
            if abs(v) > max_abs:
                max_abs = abs(v)
    return WalshSpectrum(ctx.m, dist, max_abs)


def nonlinearity(f: FuncTable, spectrum: WalshSpectrum | None = None) -> int:
    if spectrum is None:
        spectrum = walsh_spectrum(f)
    return (1 << (f.ctx.m - 1)) - spectrum.max_abs // 2


# ---------------------------------------------------------------- verdicts

def is_ab(f: FuncTable, spectrum: WalshSpectrum | None = None) -> bool:
    """Maximum-nonlinearity test; only odd m qualifies.

    Computed two ways — spectrum support equal to {0, +-2^((m+1)/2)} and
    nonlinearity meeting 2^(m-1) - 2^((m-1)/2) — which provably coincide;
    a disagreement would mean a broken spectrum computation.
    """
    m = f.ctx.m
    if m % 2 == 0:
        return False
    if spectrum is None:
        spectrum = walsh_spectrum(f)
    peak = 1 << ((m + 1) // 2)
    by_support = set(spectrum.distribution) <= {0, peak, -peak}
    by_nl = nonlinearity(f, spectrum) == (1 << (m - 1)) - (1 << ((m - 1) // 2))
    if by_support != by_nl:
        raise RuntimeError(
            f"AB characterizations disagree (support={by_support}, nl={by_nl}); "
            "spectrum computation is inconsistent"
        )
    return by_support


def is_three_valued(f: FuncTable, s: int, spectrum: WalshSpectrum | None = None) -> bool:
    """Spectrum support contained in {0, +-2^((m+s)/2)} for 0 <= s < m."""
    m = f.ctx.m
    if not 0 <= s < m:
        raise ValueError(f"s must lie in [0, {m}), got {s}")
    if (m + s) % 2:
        raise ParityMismatchError(f"m + s = {m + s} is odd; no integer peak 2^((m+s)/2)")
    if spectrum is None:
        spectrum = walsh_spectrum(f)
    peak = 1 << ((m + s) // 2)
    return set(spectrum.distribution) <= {0, peak, -peak}


def differential_spectrum(f: FuncTable) -> DifferentialSpectrum:
    """Multiset of fiber sizes |{x : F(x+a)+F(x) = b}| over a != 0, all b."""
    ctx = f.ctx
    if ctx.m > _SPECTRUM_LIMIT:
        raise TooLargeError(f"differential_spectrum costs 2^(2m); m={ctx.m} > {_SPECTRUM_LIMIT}")
    n = ctx.size
    vals = f.as_array()
    xs = np.arange(n, dtype=np.int64)
    dist: dict[int, int] = {}
    dmax = 0
    for a in range(1, n):
        diffs = vals[xs ^ a] ^ vals
        counts = np.bincount(diffs, minlength=n)
        cv, cc = np.unique(counts, return_counts=True)
        for v, c in zip(cv.tolist(), cc.tolist()):
            dist[v] = dist.get(v, 0) + c
            if v > dmax:
                dmax = v
    return DifferentialSpectrum(ctx.m, dist, dmax)


def differential_uniformity(f: FuncTable, spectrum: DifferentialSpectrum | None = None) -> int:
    if spectrum is None:
        spectrum = differential_spectrum(f)
    return spectrum.max


def is_apn(f: FuncTable, spectrum: DifferentialSpectrum | None = None) -> bool:
    """Differentially 2-uniform: every nontrivial derivative is 2-to-1 or misses."""
    return differential_uniformity(f, spectrum) == 2
