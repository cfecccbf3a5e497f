"""PSL(2,R), its action on the circle, Iwasawa coordinates, T/S words and the universal cover.

Matrix conventions::

    T(p) = [[1, p], [0, 1]]              translations
    S(s) = [[1, 0], [s, 1]]              special conformal transformations
    D(tau) = diag(e^{tau/2}, e^{-tau/2}) dilations
    R(t) = [[cos t/2, sin t/2],
            [-sin t/2, cos t/2]]         rotations of the circle by t

The circle point ``theta`` corresponds to ``x = tan(theta/2)`` on the real
line, on which matrices act by fractional linear maps.
"""

from dataclasses import dataclass

import numpy as np

from . import _spectral
from .circle import _validated
from .config import DEFAULT
from .errors import ModeOverflow

TWO_PI = 2.0 * np.pi


def _canonical_sign(m):
    flat = m.ravel()
    nz = np.nonzero(flat)[0]
    if len(nz) and flat[nz[0]] < 0:
        return -m
    return m


@dataclass(frozen=True, eq=False)
class MoebiusElement:
    """Element of PSL(2,R): a unit-determinant matrix with canonical sign."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float).reshape(2, 2)
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if not det > 0:
            raise ValueError("matrix must have positive determinant")
        # only rescale when det differs from 1 by more than its own rounding error;
        # rescaling products of large matrices by a cancelled det adds error
        noise = 64 * np.finfo(float).eps * (abs(m[0, 0] * m[1, 1]) + abs(m[0, 1] * m[1, 0]))
        if abs(det - 1.0) > noise:
            m = m / np.sqrt(det)
        m = _canonical_sign(m)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __matmul__(self, other):
        return MoebiusElement(self.matrix @ other.matrix)

    def inverse(self):
        (a, b), (c, d) = self.matrix
        return MoebiusElement([[d, -b], [-c, a]])

    def __call__(self, theta):
        return act_on_circle(self, theta)

    def distance(self, other):
        """Entrywise max distance in PSL (sign ambiguity removed)."""
        return psl_distance(self.matrix, other.matrix)

    def __repr__(self):
        return "MoebiusElement(%s)" % np.array2string(self.matrix, precision=6).replace("\n", "")


def psl_distance(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(min(np.max(np.abs(a - b)), np.max(np.abs(a + b))))


def identity():
    return MoebiusElement(np.eye(2))


def generator_matrix(kind, value):
    """The SL(2,R) matrix of a one-parameter generator (no sign canonicalization)."""
    if kind == "T":
        return np.array([[1.0, value], [0.0, 1.0]])
    if kind == "S":
        return np.array([[1.0, 0.0], [value, 1.0]])
    if kind == "D":
        return np.diag([np.exp(value / 2.0), np.exp(-value / 2.0)])
    if kind == "R":
        c, s = np.cos(value / 2.0), np.sin(value / 2.0)
        return np.array([[c, s], [-s, c]])
    raise ValueError("unknown generator kind %r" % (kind,))


def generator(kind, value):
    return MoebiusElement(generator_matrix(kind, value))


def _image_half_angle(m, theta):
    """Principal argument of the image of ``(sin theta/2, cos theta/2)``, i.e. half the image angle mod pi."""
    s, c = np.sin(theta / 2.0), np.cos(theta / 2.0)
    x = m[0, 0] * s + m[0, 1] * c
    y = m[1, 0] * s + m[1, 1] * c
    return np.arctan2(x, y)


def _wrap(angle):
    """Representative in (-pi, pi]."""
    w = np.mod(angle + np.pi, TWO_PI) - np.pi
    return np.where(w == -np.pi, np.pi, w)


def act_on_circle(g, theta):
    """Image of the angle ``theta``, returned as ``theta + delta`` with ``delta`` in (-pi, pi]."""
    theta = np.asarray(theta, dtype=float)
    delta = _wrap(2.0 * _image_half_angle(g.matrix, theta) - theta)
    out = theta + delta
    return float(out) if out.ndim == 0 else out


def lift_value(m, y, pin_x, pin_value):
    """Value at ``y`` of the lift of ``m``'s circle action that takes ``pin_x`` to ``pin_value``.

    Monotonicity pins the branch: on ``[pin_x, pin_x + 2 pi)`` the lift takes
    values in ``[pin_value, pin_value + 2 pi)``.
    """
    y = np.asarray(y, dtype=float)
    turns = np.floor((y - pin_x) / TWO_PI)
    r = y - pin_x - TWO_PI * turns
    image = 2.0 * _image_half_angle(m, pin_x + r)
    rel = np.mod(image - pin_value, TWO_PI)
    # rounding can push the image across the pin at either end of the period
    rel = np.where((r < 1e-9) & (rel > np.pi), rel - TWO_PI, rel)
    rel = np.where((r > TWO_PI - 1e-9) & (rel < np.pi), rel + TWO_PI, rel)
    rel = np.where(r == 0.0, 0.0, rel)
    out = pin_value + TWO_PI * turns + rel
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class IwasawaCoords:
    p: float
    tau: float
    t: float

    def matrix(self):
        return generator_matrix("T", self.p) @ generator_matrix("D", self.tau) @ generator_matrix("R", self.t)

    def element(self):
        return MoebiusElement(self.matrix())


def iwasawa(g):
    """Coordinates with ``g = T(p) D(tau) R(t)``, ``t`` in [0, 2 pi)."""
    (a, b), (c, d) = g.matrix
    norm2 = c * c + d * d
    tau = -np.log(norm2)
    t = float(np.mod(2.0 * np.arctan2(-c, d), TWO_PI))
    if t >= TWO_PI:
        t = 0.0
    p = (a * c + b * d) / norm2
    return IwasawaCoords(float(p), float(tau), t)


@dataclass(frozen=True)
class TSFactor:
    kind: str
    parameter: float

    def __post_init__(self):
        if self.kind not in ("T", "S"):
            raise ValueError("TSFactor kind must be 'T' or 'S'")
        if not np.isfinite(self.parameter):
            raise ValueError("TSFactor parameter must be finite")

    def matrix(self):
        return generator_matrix(self.kind, self.parameter)


def word_matrix(word):
    """Matrix product of a T/S word in list order (SL(2,R), no sign canonicalization)."""
    m = np.eye(2)
    for f in word:
        m = m @ f.matrix()
    return m


def dilation_word(tau):
    """Four factors ``S T S T`` whose product is ``D(tau)``."""
    e = np.exp(tau / 2.0)
    return [
        TSFactor("S", float(-(e - 1.0) / e)),
        TSFactor("T", 1.0),
        TSFactor("S", float(e - 1.0)),
        TSFactor("T", float(-1.0 / e)),
    ]


def rotation_word(alpha, split_threshold=0.1):
    """Three factors ``S(c) T(sin(alpha/2)) S(c)`` with product ``R(alpha)`` in SL(2,R),
    ``c = (cos(alpha/2) - 1) / sin(alpha/2)``.

    Where ``|sin(alpha/2)| < split_threshold`` the quotient is ill-conditioned.
    Near ``alpha/2 = 0 mod 2 pi`` the equal form ``c = -tan(alpha/4)`` is used;
    near ``alpha/2 = pi mod 2 pi`` the angle is halved and the two half words
    are concatenated.
    """
    alpha = float(np.mod(alpha, 2.0 * TWO_PI))
    if alpha == 0.0:
        return []
    half = alpha / 2.0
    sin_half, cos_half = np.sin(half), np.cos(half)
    if abs(sin_half) >= split_threshold:
        c = (cos_half - 1.0) / sin_half
    elif cos_half < 0.0:
        w = rotation_word(half, split_threshold)
        return w + w
    else:
        c = -np.tan(alpha / 4.0)
    return [TSFactor("S", float(c)), TSFactor("T", float(sin_half)), TSFactor("S", float(c))]


def simplify(word):
    """Drop zero parameters and merge neighbours of the same kind (exact in the group)."""
    out = []
    for f in word:
        if f.parameter == 0.0:
            continue
        if out and out[-1].kind == f.kind:
            merged = out.pop().parameter + f.parameter
            if merged != 0.0:
                out.append(TSFactor(f.kind, merged))
        else:
            out.append(f)
    return out


def ts_word(g):
    """T/S word for ``g``: ``[T(p)] + dilation_word(tau) + rotation_word(t)``.

    The rotation angle is taken in (-pi, pi], the PSL-equivalent of the
    Iwasawa ``t``, so the rotation word never needs splitting and the word has
    at most four factors of each kind.
    """
    co = iwasawa(g)
    t = co.t - TWO_PI if co.t > np.pi else co.t
    word = [TSFactor("T", co.p)] + dilation_word(co.tau) + rotation_word(t)
    return simplify(word)


def moebius_displacement(m, x):
    """Displacement of the canonical lift of the circle action of ``m`` (u(0) in (-pi, pi])."""
    u0 = float(_wrap(2.0 * _image_half_angle(m, 0.0)))
    return lift_value(m, np.asarray(x, dtype=float), 0.0, u0) - x


def to_diffeo(g, config=DEFAULT, max_tau=12.0):
    """The circle diffeomorphism of ``g`` as a spectral :class:`CircleDiffeo`."""
    co = iwasawa(g)
    if abs(co.tau) > max_tau:
        raise ModeOverflow("dilation parameter %.3g is too stiff to resolve" % co.tau)
    m = g.matrix
    if abs(co.p) < 1e-15 and abs(co.tau) < 1e-15:
        return _validated(np.array([_wrap(co.t), 0.0], dtype=complex), config)
    return _validated(_spectral.fit(lambda x: moebius_displacement(m, x), config.modes, config), config)


@dataclass(frozen=True, eq=False)
class CoverElement:
    """Element of the universal cover: a Moebius map and the value at 0 of a lift of its action."""

    base: MoebiusElement
    lift_at_zero: float

    def __post_init__(self):
        object.__setattr__(self, "lift_at_zero", float(self.lift_at_zero))

    def lift(self, y):
        return lift_value(self.base.matrix, y, 0.0, self.lift_at_zero)

    def __matmul__(self, other):
        return cover_compose(self, other)


def cover_make(g, branch=0):
    u0 = float(_wrap(2.0 * _image_half_angle(g.matrix, 0.0)))
    return CoverElement(g, u0 + TWO_PI * branch)


def cover_identity():
    return CoverElement(identity(), 0.0)


def cover_compose(a, b):
    """Group law: bases multiply, lifts compose (``b`` acts first)."""
    return CoverElement(a.base @ b.base, a.lift(b.lift_at_zero))


def cover_project(a):
    return a.base
