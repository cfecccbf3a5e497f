"""Scalar 2-cocycles: section-induced phases, the sign cocycle of SL(2,R) -> PSL(2,R),
its trivialization on the universal cover, and the Bott cocycle on circle diffeomorphisms.
"""

import numpy as np

from . import _spectral
from .circle import compose
from .moebius import generator_matrix, iwasawa, lift_value

TWO_PI = 2.0 * np.pi


def _multiply(g, h):
    return compose(g, h) if hasattr(g, "coeffs") else g @ h


class SignSection:
    """SL(2,R) representative ``T(p) D(tau) K(beta)`` with SO(2) angle ``beta`` in [0, pi).

    ``K(beta)`` is the rotation matrix ``generator_matrix("R", 2 * beta)``.
    """

    def __call__(self, g):
        co = iwasawa(g)
        return generator_matrix("T", co.p) @ generator_matrix("D", co.tau) @ generator_matrix("R", co.t)


def cocycle_from_section(section, g, h, multiply=None):
    """``s(g) s(h) s(gh)^{-1}`` as a unit scalar.

    ``section`` may return scalars or matrices; for matrices the product is a
    multiple of the identity and that multiple is returned.  With a
    :class:`SignSection` the value is exactly +1.0 or -1.0.
    """
    gh = (multiply or _multiply)(g, h)
    sg, sh, sgh = section(g), section(h), section(gh)
    if np.ndim(sg) == 0:
        return sg * sh / sgh
    prod = np.asarray(sg) @ np.asarray(sh) @ np.linalg.inv(np.asarray(sgh))
    z = np.trace(prod) / prod.shape[0]
    if isinstance(section, SignSection):
        return 1.0 if z.real > 0 else -1.0
    return z


def sign_cocycle(g, h):
    return cocycle_from_section(SignSection(), g, h)


def coboundary(b, multiply=None):
    """The cocycle ``(g, h) -> b(g) b(h) / b(gh)`` of a unit-scalar function ``b``."""
    mul = multiply or _multiply
    return lambda g, h: b(g) * b(h) / b(mul(g, h))


def cocycle_identity_defect(omega, g, h, k, multiply=None, additive=False):
    """``|omega(g,h) omega(gh,k) - omega(g,hk) omega(h,k)|``; zero for a 2-cocycle.

    With ``additive=True`` (real-valued cocycles such as Bott's) the products
    become sums.
    """
    mul = multiply or _multiply
    if additive:
        return float(abs(omega(g, h) + omega(mul(g, h), k) - omega(g, mul(h, k)) - omega(h, k)))
    return float(abs(omega(g, h) * omega(mul(g, h), k) - omega(g, mul(h, k)) * omega(h, k)))


def cover_trivialize(a):
    """The SL(2,R) matrix of a universal-cover element.

    Writing ``a = T(p) D(tau) R~(t)`` with an unbounded rotation angle ``t``,
    the image is ``T(p) D(tau) K(t/2)``.  The translation-dilation part fixes
    the circle point pi, and its lift fixing pi is the one connected to the
    identity; inverting that lift at ``a.lift_at_zero`` recovers ``t``.  That
    inversion can stretch rounding errors by ``e^|tau|``, so it only picks the
    branch: the angle itself is the Iwasawa ``t`` of the base plus ``2 pi k``.
    """
    co = iwasawa(a.base)
    an = generator_matrix("T", co.p) @ generator_matrix("D", co.tau)
    an_inv = np.array([[an[1, 1], -an[0, 1]], [-an[1, 0], an[0, 0]]])
    t_lift = lift_value(an_inv, a.lift_at_zero, np.pi, np.pi)
    t = co.t + TWO_PI * np.round((t_lift - co.t) / TWO_PI)
    return an @ generator_matrix("R", t)


def bott_cocycle(phi, psi, n=2048):
    """``int_0^{2 pi} log(phi'(psi(x))) psi''(x) / psi'(x) dx`` by the periodic trapezoid rule."""
    if phi.is_rotation or psi.is_rotation:
        return 0.0
    x = _spectral.grid(n)
    d1 = 1.0 + psi.on_grid(n, 1)
    d2 = psi.on_grid(n, 2)
    outer = np.log(phi.derivative(x + psi.on_grid(n)))
    return float(TWO_PI / n * np.sum(outer * d2 / d1))
