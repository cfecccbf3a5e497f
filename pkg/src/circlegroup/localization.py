"""Factorization of near-identity diffeomorphisms into interval-localized pieces.

Given a partition of unity ``lambda_1, ..., lambda_m`` subordinate to a
covering ``I_1, ..., I_m``, the interpolants

    Psi_k(x) = x + (lambda_1 + ... + lambda_k)(x) * u(x)

run from the identity (k = 0) to ``phi`` (k = m), and the localizing maps
``Xi_k = Psi_k o Psi_{k-1}^{-1}`` telescope back to ``phi``.  Far-from-identity
maps are first cut into small steps along the straight-line path
``x + s * u(x)``.
"""

from dataclasses import dataclass

import numpy as np

from . import _spectral
from ._roots import solve_increasing
from .circle import (
    CircleDiffeo,
    Support,
    _validated,
    from_displacement,
    identity,
    in_neighborhood,
    support,
)
from .config import DEFAULT
from .errors import CoverageGap, Infeasible, NotApplicable, OutsideNeighborhood, SlicingFailure
from .intervals import Covering, IntervalS1, arcs_cover, uniform_covering

TWO_PI = 2.0 * np.pi

__all__ = [
    "IntervalS1", "Covering", "PartitionOfUnity", "LocalizedWord", "uniform_covering",
    "build_partition", "epsilon_max", "psi", "localize", "interpolation_path",
    "slice_factorize", "three_interval_cover",
]


def _bump(x, arc):
    """``exp(-1/(1-s^2))`` on ``arc`` (affine coordinate s in (-1, 1)) and its x-derivative."""
    s = 2.0 * arc.offset(x) / arc.length - 1.0
    val = np.zeros_like(s)
    der = np.zeros_like(s)
    inside = np.abs(s) < 1.0
    si = s[inside]
    q = 1.0 - si * si
    val[inside] = np.exp(-1.0 / q)
    der[inside] = val[inside] * (-2.0 * si / (q * q)) * (2.0 / arc.length)
    return val, der


@dataclass(frozen=True, eq=False)
class PartitionOfUnity:
    """Smooth weights ``lambda_i`` with ``supp lambda_i`` the closure of ``supports[i]``.

    Weights are evaluated in closed form (normalized bumps); ``samples``
    holds them on a uniform grid for inspection.
    """

    cover: Covering
    supports: tuple
    derivative_sum_sup: float
    margins: tuple
    samples: np.ndarray

    def __len__(self):
        return len(self.supports)

    def _bumps(self, x):
        x = np.asarray(x, dtype=float)
        vals, ders = zip(*(_bump(x, arc) for arc in self.supports))
        return np.array(vals), np.array(ders)

    def weights(self, x):
        """Array of shape ``(m, len(x))`` holding ``lambda_i(x)``."""
        b, _ = self._bumps(x)
        return b / b.sum(axis=0)

    def weight_derivatives(self, x):
        b, db = self._bumps(x)
        total = b.sum(axis=0)
        return (db * total - b * db.sum(axis=0)) / total ** 2

    def cumulative(self, k, x):
        """``lambda_1 + ... + lambda_k`` and its derivative."""
        x = np.asarray(x, dtype=float)
        if k == 0:
            return np.zeros_like(x), np.zeros_like(x)
        return self.weights(x)[:k].sum(axis=0), self.weight_derivatives(x)[:k].sum(axis=0)


def build_partition(cover, margin_fraction=DEFAULT.margin_fraction, grid=2 ** 16):
    if not 0 < margin_fraction < 0.5:
        raise ValueError("margin_fraction must lie in (0, 0.5)")
    supports = tuple(arc.shrink(margin_fraction * arc.length) for arc in cover)
    if not arcs_cover(supports):
        raise CoverageGap("shrunken arcs leave part of the circle uncovered")
    margins = tuple(arc.distance_to_complement(sup) for arc, sup in zip(cover, supports))
    p = PartitionOfUnity(cover, supports, 0.0, margins, np.empty((0, 0)))
    x = _spectral.grid(grid)
    samples = p.weights(x)
    samples.setflags(write=False)
    dss = float(np.max(np.abs(p.weight_derivatives(x)).sum(axis=0)))
    return PartitionOfUnity(cover, supports, dss, margins, samples)


def epsilon_max(p, safety=DEFAULT.safety):
    """Largest admissible neighborhood size, scaled by ``safety``.

    Below ``1 / sup sum |lambda_k'|`` every interpolant stays a diffeomorphism;
    below the smallest margin no point of ``supp lambda_k`` can leave ``I_k``.
    """
    if not 0 < safety <= 1:
        raise ValueError("safety must lie in (0, 1]")
    return safety * min(1.0 / p.derivative_sum_sup, min(p.margins))


def psi(phi, p, k, config=DEFAULT):
    """The interpolant ``Psi_k[phi]``; ``Psi_0`` is the identity and ``Psi_m`` is ``phi``."""
    if not 0 <= k <= len(p):
        raise ValueError("k must lie in [0, %d]" % len(p))
    if k == 0 or phi.is_identity:
        return identity()
    if k == len(p):
        return phi

    def sample(x):
        lam, _ = p.cumulative(k, x)
        return lam * phi.displacement(x)

    return from_displacement(sample, len(phi.coeffs), config)


def _transported(inner, outer_disp, n0, config):
    """Diffeomorphism ``y -> y + outer_disp(h^{-1}(y))`` where ``h(x) = x + d(x)``.

    ``inner(x)`` returns ``(d(x), d'(x))``.  Used for ``Xi_k`` and for slicing
    factors, where the displacement is known in closed form at the preimage
    point.
    """

    def fdf(t):
        d, slope = inner(t)
        return t + d, 1.0 + slope

    def sample(y):
        d0 = inner(y)[0]
        bound = float(np.max(np.abs(d0))) + 1.0
        x = solve_increasing(
            lambda t: fdf(t)[0], None, y, y - bound, y + bound, x0=y - d0,
            tol=config.newton_tol, maxiter=config.newton_maxiter, fdf=fdf,
        )
        return outer_disp(x)

    return from_displacement(sample, n0, config)


@dataclass(frozen=True)
class LocalizedWord:
    """Ordered ``(interval, diffeo)`` pairs; the first factor acts first."""

    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __add__(self, other):
        return LocalizedWord(self.factors + other.factors)

    @property
    def diffeos(self):
        return [f for _, f in self.factors]

    @property
    def intervals(self):
        return [i for i, _ in self.factors]

    def inverse(self):
        from .circle import invert

        return LocalizedWord(tuple((i, invert(f)) for i, f in reversed(self.factors)))

    def supports_ok(self, tol=DEFAULT.support_tol):
        for interval, factor in self.factors:
            s = support(factor, tol)
            if s is Support.FULL or (s is not Support.EMPTY and not interval.contains_arc(s)):
                return False
        return True


def localize(phi, p, config=DEFAULT):
    """Split ``phi`` into ``Xi_1(phi), ..., Xi_m(phi)`` with ``Xi_k(phi)`` supported in ``I_k``."""
    eps = epsilon_max(p, 1.0)
    intervals = p.cover.intervals
    if phi.is_identity:
        return LocalizedWord(tuple((arc, phi) for arc in intervals))
    if not in_neighborhood(phi, eps):
        raise OutsideNeighborhood(
            "sup|u| = %.4g is not below %.4g * inf phi'; slice first"
            % (phi.metrics.sup_displacement, eps)
        )
    factors = []
    for k in range(1, len(p) + 1):

        def inner(x, k=k):
            lam, dlam = p.cumulative(k - 1, x)
            u, du = phi.displacement(x, (0, 1))
            return lam * u, dlam * u + lam * du

        def outer(x, k=k):
            return p.weights(x)[k - 1] * phi.displacement(x)

        factors.append((intervals[k - 1], _transported(inner, outer, len(phi.coeffs), config)))
    return LocalizedWord(tuple(factors))


def interpolation_path(phi, s):
    """``x + s * u(x)`` for ``0 <= s <= 1``."""
    if not 0.0 <= s <= 1.0:
        raise ValueError("path parameter must lie in [0, 1]")
    if s == 0.0:
        return identity()
    if s == 1.0:
        return phi
    return CircleDiffeo(s * phi.coeffs)


def slice_factorize(phi, p, config=DEFAULT):
    """Cut ``phi`` into ``n`` steps ``phi_{(k+1)/n} o phi_{k/n}^{-1}``, each inside the neighborhood.

    ``n`` is doubled from 1 until every step passes the membership test.
    """
    sup_u = phi.metrics.sup_displacement
    if sup_u >= np.pi:
        raise ValueError("slicing needs sup|u| < pi")
    eps = epsilon_max(p, 1.0)
    n = 1
    while n <= config.slice_cap:
        # every step moves some point by exactly sup|u| / n, and inf of a derivative is <= 1
        if sup_u / n < eps:
            steps = _slices(phi, n, eps, config)
            if steps is not None:
                return steps
        n *= 2
    raise SlicingFailure("no slicing with at most %d steps lands in the neighborhood" % config.slice_cap)


def _slices(phi, n, eps, config):
    if phi.is_rotation:
        step = _validated(np.array([phi.mean / n, 0.0], dtype=complex), config)
        return [step] * n if in_neighborhood(step, eps) else None
    steps = []
    for k in range(n):
        if k == 0:
            step = interpolation_path(phi, 1.0 / n)
        else:
            step = _transported(
                lambda x, k=k: [(k / n) * v for v in phi.displacement(x, (0, 1))],
                lambda x: phi.displacement(x) / n,
                len(phi.coeffs), config,
            )
        if not in_neighborhood(step, eps):
            return None
        steps.append(step)
    return steps


def three_interval_cover(I, J):
    """Arcs ``I_1, I_2, I_3`` covering ``I`` with ``closure(I_3)`` inside the complement of ``J``
    and each of ``I_1 u J``, ``I_2 u J`` inside a proper interval.
    """
    complement = J.complement()
    if not I.contains_arc(complement, tol=1e-12):
        raise NotApplicable("I and J fit in a proper interval; no covering needed")
    if complement.length < 1e-9:
        raise Infeasible("the complement of J has no room inside I")
    eta = complement.length / 4.0
    d = complement.a
    e = complement.b
    start = float(I.offset(d))
    if start > TWO_PI - 1e-12:
        start -= TWO_PI
    d_unrolled = I.a + start
    e_unrolled = d_unrolled + complement.length
    arcs = (
        IntervalS1(I.a, d_unrolled + 3 * eta),
        IntervalS1(e_unrolled - 3 * eta, I.b),
        IntervalS1(d + eta, e - eta),
    )
    try:
        cover = Covering(arcs, target=I)
    except CoverageGap as exc:
        raise Infeasible(str(exc)) from exc
    if not (complement.contains_arc(arcs[2].shrink(-1e-3 * eta)) and all(I.contains_arc(a, 1e-12) for a in arcs)):
        raise Infeasible("constructed arcs violate the containment conditions")
    x = _spectral.grid(8192)
    for arc in arcs[:2]:
        # A u J sits in a proper interval iff its closure misses an open set
        if np.all(arc.contains(x, -1e-12) | J.contains(x, -1e-12)):
            raise Infeasible("an outer arc together with J is not contained in a proper interval")
    return cover
