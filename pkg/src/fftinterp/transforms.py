"""Discrete Fourier analysis under a 1/N-forward normalization.

The forward transform carries the 1/N factor and the inverse carries none,
so ``idft(dft(x)) == x`` and the DFT values are samples of the normalized
DTFT ``dtft_at``.  ``dft_naive``/``idft_naive`` are the quadratic-time
reference implementations kept as oracles; ``dft``/``idft`` are the fast
O(N log N) routes, built from an iterative radix-2 core plus a Bluestein
chirp-z embedding so every length is supported.  Twiddle factors, bit
reversal tables, and chirp workspaces are cached per (length, direction).
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "Sequence",
    "SpectrumSamples",
    "dft_naive",
    "idft_naive",
    "dft",
    "idft",
    "zero_pad",
    "dtft_at",
]


@dataclass(eq=False)
class Sequence:
    """Ordered complex samples with an optional sample period in seconds."""

    samples: np.ndarray
    sample_period: float | None = None

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.complex128)
        if samples.ndim != 1:
            raise ValueError("samples must form a one-dimensional sequence")
        if samples.size < 1:
            raise ValueError("a sequence holds at least one sample")
        if not np.all(np.isfinite(samples)):
            raise ValueError("samples must be finite")
        self.samples = samples
        if self.sample_period is not None:
            period = float(self.sample_period)
            if not np.isfinite(period) or period <= 0.0:
                raise ValueError("sample_period must be a positive number of seconds")
            self.sample_period = period

    def __len__(self):
        return self.samples.size


@dataclass(eq=False)
class SpectrumSamples:
    """Ordered DFT values on the uniform grid w_k = k * grid_spacing."""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.complex128)
        if values.ndim != 1:
            raise ValueError("values must form a one-dimensional sequence")
        if values.size < 1:
            raise ValueError("a spectrum holds at least one value")
        if not np.all(np.isfinite(values)):
            raise ValueError("values must be finite")
        self.values = values

    @property
    def grid_spacing(self) -> float:
        """Frequency grid spacing 2*pi/N implied by the number of values."""
        return 2.0 * np.pi / self.values.size

    def __len__(self):
        return self.values.size


def _as_samples(x) -> np.ndarray:
    if isinstance(x, Sequence):
        return x.samples
    if isinstance(x, SpectrumSamples):
        return x.values
    arr = np.asarray(x, dtype=np.complex128)
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError("transform input must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(arr)):
        raise ValueError("transform input must be finite")
    return arr


def dft_naive(x) -> np.ndarray:
    """Forward DFT by direct summation: X[k] = (1/N) sum_n x[n] e^{-2j pi nk/N}.

    O(N^2); the reference oracle for the fast transform.
    """
    a = _as_samples(x)
    n = a.size
    indices = np.arange(n)
    kernel = np.exp((-2j * np.pi / n) * np.outer(indices, indices))
    return (kernel @ a) / n


def idft_naive(X) -> np.ndarray:
    """Inverse DFT by direct summation: x[n] = sum_k X[k] e^{+2j pi nk/N}.

    Carries no normalization factor, so it inverts ``dft_naive`` exactly.
    """
    a = _as_samples(X)
    n = a.size
    indices = np.arange(n)
    kernel = np.exp((2j * np.pi / n) * np.outer(indices, indices))
    return kernel @ a


@lru_cache(maxsize=None)
def _twiddles(n: int, sign: int) -> np.ndarray:
    """Unit roots exp(sign*2j*pi*k/n), k < n/2, strided by every radix-2 stage."""
    w = np.exp(sign * 2j * np.pi * np.arange(n // 2) / n)
    w.setflags(write=False)
    return w


@lru_cache(maxsize=None)
def _bit_reversal(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    rev = np.zeros(n, dtype=np.intp)
    idx = np.arange(n)
    for _ in range(bits):
        rev = (rev << 1) | (idx & 1)
        idx >>= 1
    rev.setflags(write=False)
    return rev


def _fft_pow2(a: np.ndarray, sign: int) -> np.ndarray:
    """Unnormalized radix-2 transform of a power-of-two-length array."""
    n = a.size
    if n == 1:
        return a.astype(np.complex128, copy=True)
    out = a[_bit_reversal(n)].astype(np.complex128, copy=False)
    roots = _twiddles(n, sign)
    size = 2
    while size <= n:
        half = size // 2
        w = roots[:: n // size]
        blocks = out.reshape(-1, size)
        upper = blocks[:, :half].copy()
        lower = blocks[:, half:] * w
        blocks[:, :half] = upper + lower
        blocks[:, half:] = upper - lower
        size *= 2
    return out


@lru_cache(maxsize=None)
def _bluestein_workspace(n: int, sign: int):
    """Chirp and padded-chirp spectrum for the length-n chirp-z embedding."""
    k = np.arange(n, dtype=np.int64)
    # The chirp phase k^2/(2n) wraps every 2n in k^2, so reduce the exact
    # integer square first to keep the trig argument small.
    chirp = np.exp(sign * 1j * np.pi * ((k * k) % (2 * n)) / n)
    m = 1 << (2 * n - 1).bit_length()
    b = np.zeros(m, dtype=np.complex128)
    b[:n] = np.conj(chirp)
    b[m - n + 1 :] = np.conj(chirp[n - 1 : 0 : -1])
    spectrum = _fft_pow2(b, -1)
    chirp.setflags(write=False)
    spectrum.setflags(write=False)
    return chirp, spectrum, m


def _bluestein(a: np.ndarray, sign: int) -> np.ndarray:
    """Unnormalized arbitrary-length transform via chirp-z convolution."""
    n = a.size
    chirp, spectrum, m = _bluestein_workspace(n, sign)
    padded = np.zeros(m, dtype=np.complex128)
    padded[:n] = a * chirp
    conv = _fft_pow2(_fft_pow2(padded, -1) * spectrum, +1) / m
    return chirp * conv[:n]


def _fft_raw(a: np.ndarray, sign: int) -> np.ndarray:
    if a.size & (a.size - 1) == 0:
        return _fft_pow2(a, sign)
    return _bluestein(a, sign)


def dft(x) -> np.ndarray:
    """Fast forward transform with the 1/N factor; matches ``dft_naive``.

    Runs the radix-2 core directly for power-of-two lengths and through the
    Bluestein embedding otherwise, so the cost is O(N log N) for every N.
    """
    a = _as_samples(x)
    return _fft_raw(a, -1) / a.size


def idft(X) -> np.ndarray:
    """Fast unnormalized inverse transform; matches ``idft_naive``."""
    a = _as_samples(X)
    return _fft_raw(a, +1)


def zero_pad(x, new_length: int):
    """Extend a sequence with trailing zeros to ``new_length`` samples.

    A ``Sequence`` keeps its sample period; plain arrays come back as plain
    arrays.  ``new_length`` below the current length is a domain error.
    """
    if isinstance(x, Sequence):
        padded = zero_pad(x.samples, new_length)
        return Sequence(padded, x.sample_period)
    a = _as_samples(x)
    n = int(new_length)
    if n != new_length or n < a.size:
        raise ValueError(
            f"new length must be an integer >= {a.size}, got {new_length!r}"
        )
    out = np.zeros(n, dtype=np.complex128)
    out[: a.size] = a
    return out


def dtft_at(x, w):
    """Normalized DTFT (1/N) sum_n x[n] e^{-j n w} at arbitrary frequencies.

    This continuum is the ground truth both interpolation routes sample:
    the DFT restricts it to the grid w = 2*pi*k/N, and zero-padding samples
    it on a denser grid.

    Args:
        x: sequence (or array) of N samples.
        w: radian frequency, scalar or array; must be finite.

    Returns:
        Complex amplitude(s) with the shape of ``w``.
    """
    a = _as_samples(x)
    w_arr = np.asarray(w, dtype=float)
    if not np.all(np.isfinite(w_arr)):
        raise ValueError("frequency must be finite")
    n = a.size
    flat = np.atleast_1d(w_arr).ravel()
    out = np.exp(-1j * flat[:, None] * np.arange(n)) @ a / n
    out = out.reshape(w_arr.shape)
    return out if w_arr.ndim else complex(out)
