"""Seeded property suite behind ``circlegroup check``.

Every check reports the worst observed defect, the tolerance it is held to
and whether it passed.  Sample counts are kept small enough that the whole
suite runs in well under a minute; the test suite covers the larger runs.
"""

import numpy as np

from .circle import compose, identity, invert, rotation, sup_distance
from .cocycle import bott_cocycle, cocycle_identity_defect, cover_trivialize, sign_cocycle
from .config import DEFAULT
from .intervals import uniform_covering
from .localization import build_partition, epsilon_max, localize, psi, slice_factorize
from .moebius import (
    MoebiusElement,
    cover_compose,
    cover_identity,
    cover_make,
    dilation_word,
    generator,
    generator_matrix,
    iwasawa,
    rotation_word,
    to_diffeo,
    ts_word,
    word_matrix,
)
from .sampling import random_diffeo, random_moebius, random_near_identity
from .words import moebius_word, translation_word, word_product

SUITES = ("circle", "localization", "moebius", "cocycle", "words")


def _result(name, value, tol, passed=None):
    value = float(value)
    return {"name": name, "value": value, "tol": float(tol), "passed": bool(value < tol if passed is None else passed)}


def circle_suite(rng, config=DEFAULT):
    triples = [[random_diffeo(rng) for _ in range(3)] for _ in range(4)]
    assoc = max(
        sup_distance(compose(compose(a, b, config), c, config), compose(a, compose(b, c, config), config))
        for a, b, c in triples
    )
    inverses = [(a, invert(a, config)) for a, _, _ in triples]
    inv = max(sup_distance(compose(a, ai, config), identity()) for a, ai in inverses)
    x = rng.uniform(-10.0, 10.0, 100)
    equiv = max(float(np.max(np.abs(a(x + 2 * np.pi) - a(x) - 2 * np.pi))) for a, _, _ in triples)
    slopes = [ai.metrics.inf_derivative for _, ai in inverses]
    slopes += [compose(a, b, config).metrics.inf_derivative for a, b, _ in triples]
    return [
        _result("circle.associativity", assoc, 1e-9),
        _result("circle.inverse", inv, 1e-9),
        _result("circle.equivariance", equiv, 1e-12),
        _result("circle.monotone", min(slopes), 0.0, passed=min(slopes) > 0),
    ]


def localization_suite(rng, config=DEFAULT):
    p = build_partition(uniform_covering(3), config.margin_fraction)
    eps = epsilon_max(p, config.safety)
    cases = [random_near_identity(rng, eps, modes=16) for _ in range(4)]
    round_trip, supports_ok, slack = 0.0, True, np.inf
    for phi in cases:
        w = localize(phi, p, config)
        round_trip = max(round_trip, sup_distance(word_product(w, config), phi))
        supports_ok &= w.supports_ok(config.support_tol)
        floor = min(1.0, phi.metrics.inf_derivative) - p.derivative_sum_sup * phi.metrics.sup_displacement
        for k in range(1, len(p) + 1):
            slack = min(slack, psi(phi, p, k, config).metrics.inf_derivative - floor)
    trivial = localize(identity(), p, config)
    slicing = 0.0
    for phi in (rotation(3.0), random_diffeo(rng, sup=1.0, modes=4)):
        steps = slice_factorize(phi, p, config)
        acc = identity()
        for s in steps:
            acc = compose(s, acc, config)
        slicing = max(slicing, sup_distance(acc, phi))
    return [
        _result("localization.round_trip", round_trip, 1e-8),
        _result("localization.supports", 0.0 if supports_ok else 1.0, 0.5),
        _result("localization.identity_factors", 0.0 if all(f.is_identity for f in trivial.diffeos) else 1.0, 0.5),
        _result("localization.derivative_bound", slack, -1e-8, passed=slack >= -1e-8),
        _result("localization.slicing", slicing, 1e-7),
    ]


def moebius_suite(rng, config=DEFAULT):
    taus = np.round(np.arange(-3.0, 3.0 + 1e-9, 0.1), 10)
    dil = max(np.max(np.abs(word_matrix(dilation_word(t)) - generator_matrix("D", t))) for t in taus)
    alphas = np.linspace(0.0, 4 * np.pi, 401, endpoint=False)
    plain = [a for a in alphas if abs(np.sin(a / 2)) >= 0.1]
    rot_plain = max(np.max(np.abs(word_matrix(rotation_word(a)) - generator_matrix("R", a))) for a in plain)
    rot_all = max(np.max(np.abs(word_matrix(rotation_word(a)) - generator_matrix("R", a))) for a in alphas)
    gs = [random_moebius(rng) for _ in range(100)]
    recon = max(g.distance(iwasawa(g).element()) for g in gs)
    ts = max(g.distance(MoebiusElement(word_matrix(ts_word(g)))) for g in gs[:50])
    pairs = [(random_moebius(rng, 2.0, 1.5), random_moebius(rng, 2.0, 1.5)) for _ in range(5)]
    hom = max(sup_distance(compose(to_diffeo(g, config), to_diffeo(h, config), config), to_diffeo(g @ h, config))
              for g, h in pairs)
    winding = 0.0
    for n in (2, 3, 8):
        a = cover_identity()
        step = cover_make(generator("R", 2 * np.pi / n), 0)
        for _ in range(n):
            a = cover_compose(a, step)
        winding = max(winding, a.base.distance(generator("R", 0.0)), abs(a.lift_at_zero - 2 * np.pi))
    return [
        _result("moebius.dilation_identity", dil, 1e-12),
        _result("moebius.rotation_identity", rot_plain, 1e-12),
        _result("moebius.rotation_identity_split", rot_all, 1e-11),
        _result("moebius.iwasawa_reconstruction", recon, 1e-12),
        _result("moebius.ts_word", ts, 1e-10),
        _result("moebius.diffeo_homomorphism", hom, 1e-8),
        _result("moebius.cover_winding", winding, 1e-9),
    ]


def _random_cover(rng):
    return cover_make(random_moebius(rng), int(rng.integers(-2, 3)))


def cocycle_suite(rng, config=DEFAULT):
    triples = [[random_moebius(rng) for _ in range(3)] for _ in range(200)]
    sign = max(cocycle_identity_defect(sign_cocycle, g, h, k) for g, h, k in triples)
    turn = cover_identity()
    for _ in range(4):
        turn = cover_compose(turn, cover_make(generator("R", np.pi / 2), 0))
    full_turn = float(np.max(np.abs(cover_trivialize(turn) + np.eye(2))))
    hom = 0.0
    for _ in range(50):
        a, b = _random_cover(rng), _random_cover(rng)
        hom = max(hom, float(np.max(np.abs(cover_trivialize(cover_compose(a, b)) - cover_trivialize(a) @ cover_trivialize(b)))))
    diffeos = [[random_diffeo(rng) for _ in range(3)] for _ in range(5)]
    bott = max(cocycle_identity_defect(bott_cocycle, a, b, c, additive=True) for a, b, c in diffeos)
    rot = max(abs(bott_cocycle(rotation(0.7), a)) + abs(bott_cocycle(a, rotation(-1.3))) for a, _, _ in diffeos)
    return [
        _result("cocycle.sign_identity", sign, 0.0, passed=sign == 0.0),
        _result("cocycle.full_turn", full_turn, 1e-10),
        _result("cocycle.trivialization_homomorphism", hom, 1e-10),
        _result("cocycle.bott_identity", bott, 1e-8),
        _result("cocycle.bott_rotations", rot, 1e-14),
    ]


def words_suite(rng, config=DEFAULT):
    p = build_partition(uniform_covering(3), config.margin_fraction)
    tw = translation_word(5.0, p, config=config)
    trans = sup_distance(word_product(tw, config), to_diffeo(generator("T", 5.0), config))
    mw = 0.0
    for _ in range(3):
        g = random_moebius(rng)
        mw = max(mw, sup_distance(word_product(moebius_word(g, p, config=config), config), to_diffeo(g, config)))
    w = translation_word(-0.3, p, config=config)
    inv = sup_distance(word_product(w + w.inverse(), config), identity())
    return [
        _result("words.translation", trans, 1e-7),
        _result("words.moebius", mw, 1e-6),
        _result("words.inverse", inv, 1e-8),
    ]


def run_suite(suite="all", seed=0, config=DEFAULT):
    """Run one suite (or ``"all"``) with a fresh seeded generator per suite."""
    names = SUITES if suite == "all" else (suite,)
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError("unknown suite %r" % name)
        rng = np.random.default_rng([seed, SUITES.index(name)])
        results.extend(globals()[name + "_suite"](rng, config))
    return results
