"""Seeded random test objects."""

import numpy as np

from . import _spectral
from .circle import CircleDiffeo, _validated
from .moebius import IwasawaCoords

TWO_PI = 2.0 * np.pi


def random_diffeo(rng, sup=0.5, modes=8, slope=0.5, decay=0.35, mean=None):
    """Random smooth diffeo scaled to ``sup|u| = sup``, or less if ``sup|u'| <= slope`` binds first.

    Coefficients decay like ``exp(-decay * k)``.  ``mean`` defaults to a random
    shift of at most a tenth of ``sup``.
    """
    if not 0 < slope < 1:
        raise ValueError("slope must lie in (0, 1)")
    k = np.arange(1, modes + 1)
    scale = np.exp(-decay * k)
    c = np.zeros(modes + 1, dtype=complex)
    c[1:] = scale * (rng.standard_normal(modes) + 1j * rng.standard_normal(modes))
    c[0] = rng.uniform(-0.1, 0.1) if mean is None else 0.0
    m = max(1024, 16 * modes)
    u = _spectral.on_grid(c, m)
    du = _spectral.on_grid(c, m, 1)
    c *= min(sup / np.max(np.abs(u)), slope / np.max(np.abs(du)))
    if mean is not None:
        c[0] = mean
    return _validated(c)


def random_near_identity(rng, eps, modes=8, decay=0.35):
    """Random diffeo inside ``{sup|u| < eps inf phi'}`` with room to spare."""
    return random_diffeo(rng, sup=0.5 * eps, modes=modes, slope=0.3, decay=decay)


def random_rotation(rng):
    return CircleDiffeo(np.array([rng.uniform(-np.pi, np.pi), 0.0], dtype=complex))


def random_iwasawa(rng, p_max=5.0, tau_max=3.0):
    return IwasawaCoords(float(rng.uniform(-p_max, p_max)), float(rng.uniform(-tau_max, tau_max)),
                         float(rng.uniform(0.0, TWO_PI)))


def random_moebius(rng, p_max=5.0, tau_max=3.0):
    return random_iwasawa(rng, p_max, tau_max).element()
