"""Acceptance criteria 1-10 at their stated tolerances.

Run ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or ``python tests/test_acceptance.py``.
"""

import subprocess
import sys
import time

import numpy as np
import pytest

from circlegroup import (
    CoverElement,
    bott_cocycle,
    build_partition,
    cocycle_identity_defect,
    compose,
    cover_compose,
    cover_identity,
    cover_make,
    cover_trivialize,
    dilation_word,
    epsilon_max,
    generator,
    identity,
    in_neighborhood,
    iwasawa,
    localize,
    moebius_word,
    psi,
    rotation,
    rotation_word,
    sign_cocycle,
    slice_factorize,
    sup_distance,
    to_diffeo,
    translation_word,
    ts_word,
    uniform_covering,
    word_matrix,
    word_product,
)
from circlegroup.moebius import generator_matrix, psl_distance
from circlegroup.sampling import random_diffeo, random_moebius, random_near_identity

RESULTS = []
TWO_PI = 2 * np.pi


def _partition():
    return build_partition(uniform_covering(3))


def _round_trip_cases(p):
    rng = np.random.default_rng(1)
    return [random_near_identity(rng, epsilon_max(p), modes=256, decay=0.05) for _ in range(20)]


def criterion_1():
    p = _partition()
    cases = _round_trip_cases(p)
    start = time.perf_counter()
    words = [localize(phi, p) for phi in cases]
    residual = max(sup_distance(word_product(w), phi) for w, phi in zip(words, cases))
    supports = all(w.supports_ok(1e-8) for w in words)
    trivial = all(f.is_identity for f in localize(identity(), p).diffeos)
    elapsed = time.perf_counter() - start
    ok = residual < 1e-8 and supports and trivial and elapsed < 5.0
    return ok, "residual %.2e, supports %s, identity factors %s, %.2f s" % (residual, supports, trivial, elapsed)


def criterion_2():
    p = _partition()
    slack = np.inf
    for phi in _round_trip_cases(p):
        floor = min(1.0, phi.metrics.inf_derivative) - p.derivative_sum_sup * phi.metrics.sup_displacement
        for k in range(len(p) + 1):
            slack = min(slack, psi(phi, p, k).metrics.inf_derivative - floor)
    return slack >= -1e-8, "min(inf Psi_k' - bound) = %.3e" % slack


def criterion_3():
    p = _partition()
    eps = epsilon_max(p, 1.0)
    rng = np.random.default_rng(3)
    cases = [rotation(3.0), random_diffeo(rng, sup=1.5, modes=6), random_diffeo(rng, sup=2.5, modes=6)]
    worst, counts, passing = 0.0, [], True
    for phi in cases:
        steps = slice_factorize(phi, p)
        passing &= all(in_neighborhood(s, eps) for s in steps)
        acc = identity()
        for s in steps:
            acc = compose(s, acc)
        worst = max(worst, sup_distance(acc, phi))
        counts.append(len(steps))
    return passing and worst < 1e-7, "slices %s, all in neighborhood %s, residual %.2e" % (counts, passing, worst)


def criterion_4():
    taus = np.round(np.arange(-3.0, 3.0 + 1e-9, 0.1), 10)
    dil = max(np.max(np.abs(word_matrix(dilation_word(t)) - generator_matrix("D", t))) for t in taus)
    alphas = np.concatenate([np.linspace(0.0, 2 * TWO_PI, 20001, endpoint=False),
                             TWO_PI + np.array([-1e-3, -1e-6, 1e-9, 1e-3]), np.array([1e-9, 2 * TWO_PI - 1e-9])])
    errs = np.array([np.max(np.abs(word_matrix(rotation_word(a)) - generator_matrix("R", a))) for a in alphas])
    regular = np.abs(np.sin(alphas / 2)) >= 0.1
    rot, split = errs[regular].max(), errs.max()
    ok = dil < 1e-12 and rot < 1e-12 and split < 1e-11
    return ok, "dilation %.2e, rotation %.2e, with splitting %.2e" % (dil, rot, split)


def criterion_5():
    rng = np.random.default_rng(5)
    recon = max(g.distance(iwasawa(g).element()) for g in (random_moebius(rng) for _ in range(1000)))
    co = iwasawa(generator("S", 1.0))
    derived = max(abs(co.p - 0.5), abs(co.tau + np.log(2)))
    return recon < 1e-12 and derived < 1e-12, "reconstruction %.2e, S(1) coordinates %.2e" % (recon, derived)


def criterion_6():
    rng = np.random.default_rng(6)
    worst = 0.0
    for _ in range(100):
        g = random_moebius(rng)
        worst = max(worst, psl_distance(word_matrix(ts_word(g)), g.matrix))
    return worst < 1e-10, "reconstruction %.2e" % worst


def criterion_7():
    winding = 0.0
    for n in (2, 3, 8):
        a = cover_identity()
        step = cover_make(generator("R", TWO_PI / n), 0)
        for _ in range(n):
            a = cover_compose(a, step)
        winding = max(winding, a.base.distance(generator("T", 0.0)), abs(a.lift_at_zero - TWO_PI))
    full = float(np.max(np.abs(cover_trivialize(CoverElement(generator("T", 0.0), TWO_PI)) + np.eye(2))))
    rng = np.random.default_rng(7)
    hom = 0.0
    for _ in range(100):
        a = cover_make(random_moebius(rng), int(rng.integers(-2, 3)))
        b = cover_make(random_moebius(rng), int(rng.integers(-2, 3)))
        hom = max(hom, float(np.max(np.abs(cover_trivialize(cover_compose(a, b)) - cover_trivialize(a) @ cover_trivialize(b)))))
    ok = winding < 1e-9 and full < 1e-10 and hom < 1e-10
    return ok, "winding %.2e, full turn %.2e, homomorphism %.2e" % (winding, full, hom)


def criterion_8():
    rng = np.random.default_rng(8)
    sign = max(cocycle_identity_defect(sign_cocycle, *(random_moebius(rng) for _ in range(3))) for _ in range(1000))
    bott = 0.0
    rot = 0.0
    for _ in range(50):
        a, b, c = (random_diffeo(rng) for _ in range(3))
        bott = max(bott, cocycle_identity_defect(bott_cocycle, a, b, c, additive=True))
        r = rotation(rng.uniform(-np.pi, np.pi))
        rot = max(rot, abs(bott_cocycle(r, a)), abs(bott_cocycle(a, r)))
    ok = sign == 0.0 and bott < 1e-8 and rot < 1e-14
    return ok, "sign defect %r, Bott defect %.2e, Bott on rotations %.2e" % (sign, bott, rot)


def criterion_9():
    p = _partition()
    rng = np.random.default_rng(9)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(20):
        g = random_moebius(rng, p_max=5.0, tau_max=3.0)
        worst = max(worst, sup_distance(word_product(moebius_word(g, p)), to_diffeo(g)))
    trans = sup_distance(word_product(translation_word(5.0, p)), to_diffeo(generator("T", 5.0)))
    elapsed = time.perf_counter() - start
    ok = worst < 1e-6 and trans < 1e-7 and elapsed < 60.0
    return ok, "moebius words %.2e, translation(5) %.2e, %.1f s" % (worst, trans, elapsed)


def criterion_10():
    cmd = [sys.executable, "-m", "circlegroup", "check", "--seed", "7"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    same = first.stdout == second.stdout and len(first.stdout) > 0
    ok = same and first.returncode == 0
    return ok, "byte-identical %s, exit %d, %d bytes" % (same, first.returncode, len(first.stdout))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _line(i, ok, detail):
    return "criterion %2d: %s  %s" % (i, "PASS" if ok else "FAIL", detail)


@pytest.mark.slow
@pytest.mark.parametrize("index", range(1, 11))
def test_criterion(index):
    ok, detail = CRITERIA[index - 1]()
    RESULTS.append(_line(index, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for i, fn in enumerate(CRITERIA, start=1):
        ok, detail = fn()
        failed += not ok
        print(_line(i, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
