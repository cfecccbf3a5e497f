"""Orientation-preserving circle diffeomorphisms represented by their lifts.

A diffeomorphism is stored through the displacement ``u`` of its lift,
``phi(x) = x + u(x)``, a real trigonometric polynomial.  Everything that
produces a new diffeomorphism (composition, inversion, the localization
machinery) samples the new displacement on a uniform grid and refits it
spectrally, doubling the mode count until the spectrum has decayed.
"""

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.optimize import minimize_scalar

from . import _spectral
from ._roots import solve_increasing
from .config import DEFAULT
from .errors import NotADiffeomorphism
from .intervals import IntervalS1

TWO_PI = 2.0 * np.pi


class Support(enum.Enum):
    EMPTY = "empty"
    FULL = "full"


@dataclass(frozen=True)
class DiffeoMetrics:
    sup_displacement: float
    inf_derivative: float
    chordal_sup: float


@dataclass(frozen=True, eq=False)
class CircleDiffeo:
    """Lift ``x + u(x)`` with ``u(x) = Re sum_k coeffs[k] exp(i k x)``.

    Use :func:`make_diffeo` to build one from real Fourier data; the
    constructor itself does no validation.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        c[0] = c[0].real
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def mode_count(self):
        return max(len(self.coeffs) - 1, 1)

    @property
    def mean(self):
        return float(self.coeffs[0].real)

    @property
    def cos(self):
        return self.coeffs[1:].real.copy()

    @property
    def sin(self):
        return -self.coeffs[1:].imag.copy()

    @cached_property
    def is_identity(self):
        return not np.any(self.coeffs)

    @cached_property
    def is_rotation(self):
        return not np.any(self.coeffs[1:])

    def displacement(self, x, order=0):
        """``u`` (or its derivatives) at ``x``; a tuple ``order`` returns a list."""
        if self.is_rotation:
            x = np.asarray(x, dtype=float)
            if isinstance(order, (tuple, list)):
                return [np.full(x.shape, self.mean if o == 0 else 0.0) for o in order]
            return np.full(x.shape, self.mean if order == 0 else 0.0)
        return _spectral.evaluate(self.coeffs, x, order)

    def derivative(self, x):
        return 1.0 + self.displacement(x, 1)

    def __call__(self, x):
        return np.asarray(x, dtype=float) + self.displacement(x)

    def __matmul__(self, other):
        return compose(self, other)

    def on_grid(self, m, order=0):
        return _spectral.on_grid(self.coeffs, m, order)

    @cached_property
    def grid_cache(self):
        """``(x, phi(x), phi'(x))`` on the default uniform grid."""
        m = DEFAULT.grid
        x = _spectral.grid(m)
        return x, x + self.on_grid(m), 1.0 + self.on_grid(m, 1)

    @cached_property
    def metrics(self):
        return _measure(self)

    def __repr__(self):
        return "CircleDiffeo(mean=%.6g, modes=%d)" % (self.mean, self.mode_count)


def _fine_size(diffeo, minimum=4096):
    m = minimum
    while m < 16 * len(diffeo.coeffs):
        m *= 2
    return m


def _canonical(c):
    """Shift the mean by a multiple of 2*pi so that u(0) lies in (-pi, pi]."""
    u0 = float(np.sum(c.real))
    shift = TWO_PI * np.ceil((u0 - np.pi) / TWO_PI)
    if shift != 0.0:
        c = c.copy()
        c[0] -= shift
    return c


def _validated(c, config=DEFAULT):
    c = _canonical(c)
    m = max(config.grid, 8 * len(c))
    min_derivative = 1.0 + float(np.min(_spectral.on_grid(c, m, 1)))
    if min_derivative <= config.validation_tol:
        raise NotADiffeomorphism("lift derivative drops to %.3g" % min_derivative)
    return CircleDiffeo(c)


def make_diffeo(cos_coeffs=(), sin_coeffs=(), mean=0.0, config=DEFAULT):
    """Diffeomorphism with displacement ``mean + sum_k cos[k] cos((k+1)x) + sin[k] sin((k+1)x)``."""
    return _validated(_spectral.from_real(mean, cos_coeffs, sin_coeffs), config)


def identity():
    return CircleDiffeo(np.zeros(2, dtype=complex))


def rotation(angle):
    return _validated(np.array([angle, 0.0], dtype=complex))


def from_displacement(sample, n0=None, config=DEFAULT):
    """Fit a diffeomorphism to a vectorized displacement callable on [0, 2*pi)."""
    n0 = config.modes if n0 is None else max(n0, config.modes)
    return _validated(_spectral.fit(sample, n0, config), config)


def evaluate(phi, x):
    return phi(x)


def compose(phi, psi, config=DEFAULT):
    """The diffeomorphism ``phi o psi`` (``psi`` acts first)."""
    if psi.is_identity:
        return phi
    if phi.is_identity:
        return psi
    if phi.is_rotation and psi.is_rotation:
        return rotation(phi.mean + psi.mean)

    def sample(x):
        v = psi.displacement(x)
        return v + phi.displacement(x + v)

    return from_displacement(sample, max(len(phi.coeffs), len(psi.coeffs)), config)


def _displacement_bound(phi):
    return float(np.sum(np.abs(phi.coeffs)))


def pullback_solve(phi, y, config=DEFAULT):
    """Solve ``phi(x) = y`` for the increasing lift ``phi``."""
    y = np.asarray(y, dtype=float)
    bound = _displacement_bound(phi) + 1e-12

    def fdf(x):
        u, du = phi.displacement(x, (0, 1))
        return x + u, 1.0 + du

    return solve_increasing(
        phi, phi.derivative, y, y - bound, y + bound,
        x0=y - phi.displacement(y), tol=config.newton_tol, maxiter=config.newton_maxiter, fdf=fdf,
    )


def invert(phi, config=DEFAULT):
    if phi.is_identity:
        return phi
    if phi.is_rotation:
        return rotation(-phi.mean)
    return from_displacement(lambda y: pullback_solve(phi, y, config) - y, len(phi.coeffs), config)


def _polish(fun_grid, fun_point, x, candidates=3):
    """Maximum of a smooth periodic function from grid values plus bounded Brent refinement."""
    h = x[1] - x[0]
    is_peak = (fun_grid >= np.roll(fun_grid, 1)) & (fun_grid >= np.roll(fun_grid, -1))
    peaks = np.nonzero(is_peak)[0]
    peaks = peaks[np.argsort(fun_grid[peaks])[::-1][:candidates]]
    best = float(np.max(fun_grid))
    for i in peaks:
        res = minimize_scalar(
            lambda t: -fun_point(np.array([t]))[0],
            bounds=(x[i] - h, x[i] + h), method="bounded", options={"xatol": 1e-12},
        )
        best = max(best, -float(res.fun))
    return best


def _measure(phi):
    if phi.is_rotation:
        u = abs(phi.mean)
        return DiffeoMetrics(u, 1.0, float(2.0 * abs(np.sin(phi.mean / 2.0))))
    m = _fine_size(phi)
    x = _spectral.grid(m)
    u = phi.on_grid(m)
    du = phi.on_grid(m, 1)
    sup_u = _polish(np.abs(u), lambda t: np.abs(phi.displacement(t)), x)
    min_du = -_polish(-du, lambda t: -phi.displacement(t, 1), x)
    chord = _polish(2.0 * np.abs(np.sin(u / 2.0)), lambda t: 2.0 * np.abs(np.sin(phi.displacement(t) / 2.0)), x)
    return DiffeoMetrics(sup_u, 1.0 + min_du, min(chord, 2.0))


def metrics(phi):
    return phi.metrics


def in_neighborhood(phi, eps):
    """Membership in ``{sup |u| < eps * inf phi'}`` measured with the lift displacement."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    m = phi.metrics
    return m.sup_displacement < np.pi and m.sup_displacement < eps * m.inf_derivative


def support(phi, tol=DEFAULT.support_tol):
    """Smallest arc outside of which ``|u| <= tol`` and ``|u'| <= tol``.

    Returns an :class:`IntervalS1`, ``Support.EMPTY`` or ``Support.FULL``.
    Endpoints are located to ~1e-12 by bisection between grid points.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")

    def excess(t):
        u, du = phi.displacement(t, (0, 1))
        return np.maximum(np.abs(u), np.abs(du)) - tol

    m = _fine_size(phi)
    x = _spectral.grid(m)
    active = (np.abs(phi.on_grid(m)) > tol) | (np.abs(phi.on_grid(m, 1)) > tol)
    if not active.any():
        return Support.EMPTY
    if active.all():
        return Support.FULL
    # longest circular run of inactive grid points; ties go to the smallest left endpoint of the arc
    start = int(np.nonzero(active)[0][0])
    order = np.roll(np.arange(m), -start)
    runs = []
    run_start = None
    for pos, i in enumerate(order):
        if not active[i]:
            if run_start is None:
                run_start = pos
        elif run_start is not None:
            runs.append((run_start, pos - 1))
            run_start = None
    if run_start is not None:
        runs.append((run_start, m - 1))
    longest = max(e - s for s, e in runs)
    arcs = []
    for s, e in runs:
        if e - s != longest:
            continue
        last_free, first_free = order[e], order[s]
        a = _boundary(excess, x[last_free], x[last_free] + (x[1] - x[0]))
        b = _boundary(excess, x[first_free] - (x[1] - x[0]), x[first_free])
        while b <= a:
            b += TWO_PI
        arcs.append(IntervalS1(a, b))
    return min(arcs, key=lambda arc: arc.a)


def _boundary(excess, lo, hi, iterations=45):
    """Bisect for the sign change of ``excess`` between an inactive and an active point."""
    f_lo = excess(np.array([lo]))[0] > 0
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if (excess(np.array([mid]))[0] > 0) == f_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def sup_distance(phi, psi, m=None):
    """Sup-norm distance of the two lifts, measured on a fine grid."""
    if m is None:
        m = max(_fine_size(phi), _fine_size(psi))
    diff = phi.on_grid(m) - psi.on_grid(m)
    # canonical lifts of nearly equal maps may sit on either side of the u(0) = pi cut
    diff -= TWO_PI * np.round(np.mean(diff) / TWO_PI)
    return float(np.max(np.abs(diff)))
