"""Trigonometric polynomial kernels.

A real 2*pi-periodic function is stored as a complex array ``c`` with
``f(x) = Re sum_k c[k] exp(i k x)``; ``c[0]`` is the (real) mean.
"""

import numpy as np

from .errors import ModeOverflow

TWO_PI = 2.0 * np.pi


def grid(m):
    return TWO_PI * np.arange(m) / m


def from_samples(values):
    """Coefficients of the trigonometric interpolant of uniform samples (Nyquist term dropped)."""
    m = len(values)
    c = np.fft.rfft(values) / m
    c[1:] *= 2.0
    if m % 2 == 0:
        c = c[:-1]
    return c


def from_real(mean, cos, sin):
    cos = np.asarray(cos, dtype=float)
    sin = np.asarray(sin, dtype=float)
    c = np.zeros(max(len(cos), len(sin)) + 1, dtype=complex)
    c[0] = mean
    c[1:len(cos) + 1] += cos
    c[1:len(sin) + 1] -= 1j * sin
    return c


def derivative(c, order=1):
    if order == 0:
        return c
    return c * (1j * np.arange(len(c))) ** order


def on_grid(c, m, order=0):
    """Evaluate on the uniform ``m``-point grid with an inverse FFT."""
    c = derivative(c, order)
    k = min(len(c), m // 2 + 1)
    spec = np.zeros(m // 2 + 1, dtype=complex)
    spec[:k] = c[:k]
    spec[1:] *= 0.5
    if m % 2 == 0 and k == m // 2 + 1:
        spec[-1] = spec[-1].real * 2.0
    return np.fft.irfft(spec, n=m) * m


def evaluate(c, x, order=0):
    """Evaluate at arbitrary points.

    The exponentials are split as exp(i(jB + r)x) so that the bulk of the work
    is a single complex matrix product.  ``order`` may be a tuple, in which case
    a list with one array per derivative order is returned (the exponentials
    are shared).
    """
    orders = tuple(order) if isinstance(order, (tuple, list)) else (order,)
    x = np.asarray(x, dtype=float)
    shape = x.shape
    x = np.mod(x.ravel(), TWO_PI)
    c = np.asarray(c, dtype=complex)
    n = len(c)
    b = max(1, int(np.ceil(np.sqrt(n))))
    j = -(-n // b)
    padded = np.zeros((len(orders), j * b), dtype=complex)
    for i, o in enumerate(orders):
        padded[i, :n] = derivative(c, o)
    # (b, orders * j): one column block per derivative order
    cmat = padded.reshape(len(orders), j, b).transpose(2, 0, 1).reshape(b, -1)
    out = np.empty((len(orders), x.size))
    step = 8192
    for start in range(0, x.size, step):
        xs = x[start:start + step]
        inner = (np.exp(1j * np.outer(xs, np.arange(b))) @ cmat).reshape(len(xs), len(orders), j)
        outer = np.exp(1j * np.outer(xs, b * np.arange(j)))
        out[:, start:start + step] = np.einsum("ij,ioj->oi", outer, inner).real
    out = [row.reshape(shape) for row in out]
    return out if isinstance(order, (tuple, list)) else out[0]


def tail(c):
    """Largest coefficient magnitude in the top eighth of the spectrum."""
    n = len(c)
    if n < 8:
        return 0.0
    return float(np.max(np.abs(c[n - max(1, n // 8):])))


def trim(c, tol):
    mags = np.abs(c)
    keep = np.nonzero(mags[1:] > tol)[0]
    last = keep[-1] + 2 if len(keep) else 1
    return c[:max(last, 2)].copy()


def fit(sample, n0, config):
    """Adaptively fit ``sample`` (a vectorized callable) by doubling the mode count.

    Starts from ``n0`` harmonics (rounded up to a power of two) and doubles
    until the trailing coefficients are below ``config.tail_tol``.
    """
    n = 8
    while n < n0:
        n *= 2
    while True:
        if n > config.mode_cap:
            raise ModeOverflow("refit needs more than %d modes" % config.mode_cap)
        m = 2 * n
        c = from_samples(sample(grid(m)))
        if tail(c) < config.tail_tol:
            return trim(c, config.trim_tol)
        n *= 2
