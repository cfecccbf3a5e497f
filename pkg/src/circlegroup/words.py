"""Global conformal maps as products of interval-localized diffeomorphisms.

A translation ``T(t)`` is cut into ``n`` equal steps ``T(step)`` plus a
remainder in ``[0, step)``; each step is small enough to be localized over the
partition.  General Moebius maps go through their T/S word.
"""

from functools import lru_cache

import numpy as np

from .circle import compose, identity, in_neighborhood, sup_distance
from .config import DEFAULT
from .errors import OutsideNeighborhood, StepTooLarge, WordTooLong
from .localization import LocalizedWord, epsilon_max, localize
from .moebius import generator, to_diffeo, ts_word


@lru_cache(maxsize=256)
def small_generator_word(kind, value, p, config=DEFAULT):
    """Localized word for the small generator ``T(value)`` or ``S(value)``."""
    if kind not in ("T", "S"):
        raise ValueError("kind must be 'T' or 'S'")
    phi = to_diffeo(generator(kind, value), config)
    if not phi.is_identity and not in_neighborhood(phi, epsilon_max(p, 1.0)):
        raise OutsideNeighborhood("%s(%g) is outside the localization neighborhood" % (kind, value))
    return localize(phi, p, config)


@lru_cache(maxsize=64)
def default_step(kind, p, config=DEFAULT):
    """Largest ``2**-j`` whose generator lies in the localization neighborhood."""
    eps = epsilon_max(p, 1.0)
    step = 1.0
    while step > 1e-12:
        if in_neighborhood(to_diffeo(generator(kind, step), config), eps):
            return step
        step /= 2.0
    raise StepTooLarge("no admissible step for %s" % kind)


def _stepped_word(kind, value, p, step, config):
    if step is None:
        step = default_step(kind, p, config)
    if not step > 0:
        raise ValueError("step must be positive")
    if not in_neighborhood(to_diffeo(generator(kind, step), config), epsilon_max(p, 1.0)):
        raise StepTooLarge("%s(%g) fails the neighborhood test" % (kind, step))
    # floor convention: value = n * step + r with r in [0, step)
    n = int(np.floor(value / step))
    r = value - n * step
    if r >= step:
        n, r = n + 1, 0.0
    r = max(r, 0.0)
    count = abs(n) * len(p) + len(p)
    if count > config.word_cap:
        raise WordTooLong("word for %s(%g) would have %d factors" % (kind, value, count))
    block = small_generator_word(kind, step, p, config) if n else LocalizedWord()
    if n < 0:
        block = _inverse_block(block)
    rest = small_generator_word(kind, float(r), p, config)
    return LocalizedWord(block.factors * abs(n) + rest.factors)


@lru_cache(maxsize=64)
def _inverse_block(block):
    return block.inverse()


def translation_word(t, p, step=None, config=DEFAULT):
    return _stepped_word("T", float(t), p, step, config)


def special_conformal_word(s, p, step=None, config=DEFAULT):
    return _stepped_word("S", float(s), p, step, config)


def moebius_word(g, p, t_step=None, s_step=None, config=DEFAULT):
    """Localized word whose product is the circle action of ``g``.

    The T/S word is a matrix product ``f_1 f_2 ... f_n``; the last factor acts
    first, so the localized pieces are concatenated from ``f_n`` back to ``f_1``.
    """
    out = LocalizedWord()
    for f in reversed(ts_word(g)):
        if f.kind == "T":
            out = out + translation_word(f.parameter, p, t_step, config)
        else:
            out = out + special_conformal_word(f.parameter, p, s_step, config)
        if len(out) > config.word_cap:
            raise WordTooLong("word exceeds %d factors" % config.word_cap)
    return out


def _runs(factors, max_period=32):
    """Greedy run-length parse into ``(block, repeats)`` pairs, comparing factors by identity."""
    out = []
    i, n = 0, len(factors)
    while i < n:
        best = (1, 1)
        for period in range(1, min(max_period, (n - i) // 2) + 1):
            reps = 1
            while i + (reps + 1) * period <= n and all(
                factors[i + reps * period + j] is factors[i + j] for j in range(period)
            ):
                reps += 1
            if reps > 1 and period * reps > best[0] * best[1]:
                best = (period, reps)
        period, reps = best
        out.append((factors[i:i + period], reps))
        i += period * reps
    return out


def _power(phi, n, config):
    result = identity()
    while n:
        if n & 1:
            result = compose(phi, result, config)
        n >>= 1
        if n:
            phi = compose(phi, phi, config)
    return result


def word_product(w, config=DEFAULT):
    """Ordered composition of the factors, first factor acting first.

    Repeated blocks are raised to their power by squaring, which keeps long
    stepped words cheap.
    """
    factors = w.diffeos if isinstance(w, LocalizedWord) else list(w)
    if len(factors) > config.word_cap:
        raise WordTooLong("word has %d factors" % len(factors))
    cache = {}
    result = identity()
    # fold from the last-acting end: the accumulated map (possibly strongly
    # stretching) is always the outer one, so the rough localized pieces are
    # never sampled through a large derivative
    for block, reps in reversed(_runs(factors)):
        key = tuple(id(f) for f in block)
        if key not in cache:
            acc = identity()
            for f in block:
                acc = compose(f, acc, config)
            cache[key] = acc
        result = compose(result, _power(cache[key], reps, config), config)
    return result


def word_stats(w, target=None, config=DEFAULT):
    """Length, largest factor displacement and (optionally) the product residual against ``target``."""
    stats = {
        "length": len(w),
        "max_factor_displacement": max((f.metrics.sup_displacement for f in set(w.diffeos)), default=0.0),
    }
    if target is not None:
        stats["residual"] = sup_distance(word_product(w, config), target)
    return stats
