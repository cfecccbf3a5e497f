import numpy as np
import pytest

from circlegroup import (
    Config,
    LocalizedWord,
    OutsideNeighborhood,
    StepTooLarge,
    WordTooLong,
    compose,
    default_step,
    generator,
    identity,
    in_neighborhood,
    moebius_word,
    small_generator_word,
    special_conformal_word,
    sup_distance,
    to_diffeo,
    translation_word,
    word_product,
    word_stats,
)
from circlegroup.sampling import random_moebius, random_near_identity
from circlegroup.words import _runs


def test_small_generator_identity(partition3):
    w = small_generator_word("T", 0.0, partition3)
    assert len(w) == 3 and all(f.is_identity for f in w.diffeos)


@pytest.mark.parametrize("kind,value", [("T", 0.005), ("S", 0.004), ("T", -0.03)])
def test_small_generator_round_trip(partition3, kind, value):
    w = small_generator_word(kind, value, partition3)
    assert len(w) == 3
    assert w.supports_ok(1e-8)
    assert sup_distance(word_product(w), to_diffeo(generator(kind, value))) < 1e-8


def test_small_generator_rejects(partition3):
    with pytest.raises(OutsideNeighborhood):
        small_generator_word("T", 1.0, partition3)
    with pytest.raises(ValueError):
        small_generator_word("D", 0.01, partition3)


def test_default_step(partition3, eps3):
    step = default_step("T", partition3)
    assert np.log2(step) == int(np.log2(step))
    assert in_neighborhood(to_diffeo(generator("T", step)), eps3)
    assert not in_neighborhood(to_diffeo(generator("T", 2 * step)), eps3)


def test_translation_zero(partition3):
    w = translation_word(0.0, partition3)
    assert len(w) == 3 and all(f.is_identity for f in w.diffeos)


def test_translation_five_fine_step(partition3):
    w = translation_word(5.0, partition3, 0.004)
    blocks = len(w) // 3 - 1
    assert blocks in (1249, 1250)
    assert sup_distance(word_product(w), to_diffeo(generator("T", 5.0))) < 1e-7


def test_translation_negative(partition3):
    step = default_step("T", partition3)
    w = translation_word(-7.0, partition3)
    assert len(w) == 3 * (int(np.ceil(7.0 / step)) + 1)
    assert sup_distance(word_product(w), to_diffeo(generator("T", -7.0))) < 1e-7


def test_translation_step_too_large(partition3):
    with pytest.raises(StepTooLarge):
        translation_word(1.0, partition3, 0.5)
    with pytest.raises(ValueError):
        translation_word(1.0, partition3, -0.1)


def test_word_cap(partition3):
    with pytest.raises(WordTooLong):
        translation_word(100.0, partition3, 0.001, Config(word_cap=1000))


@pytest.mark.parametrize("s", [0.0, 2.0, -1.0])
def test_special_conformal(partition3, s):
    w = special_conformal_word(s, partition3)
    assert w.supports_ok(1e-8)
    assert sup_distance(word_product(w), to_diffeo(generator("S", s))) < 1e-7


def test_moebius_word_identity(partition3):
    assert len(moebius_word(generator("T", 0.0), partition3)) == 0


def test_moebius_word_dilation(partition3):
    w = moebius_word(generator("D", 1.0), partition3)
    assert sup_distance(word_product(w), to_diffeo(generator("D", 1.0))) < 1e-6


def test_moebius_word_random(partition3, rng):
    for _ in range(3):
        g = random_moebius(rng)
        w = moebius_word(g, partition3)
        assert sup_distance(word_product(w), to_diffeo(g)) < 1e-6


def test_near_homomorphism(partition3, rng):
    g, h = random_moebius(rng, 2.0, 1.0), random_moebius(rng, 2.0, 1.0)
    # h's word acts first, then g's
    w = moebius_word(h, partition3) + moebius_word(g, partition3)
    assert sup_distance(word_product(w), to_diffeo(g @ h)) < 2e-6


def test_word_product_trivial(partition3, eps3, rng):
    assert word_product(LocalizedWord()).is_identity
    phi = random_near_identity(rng, eps3)
    arc = partition3.cover.intervals[0]
    assert word_product(LocalizedWord(((arc, phi),))) is phi


def test_word_inverse(partition3):
    w = translation_word(-0.3, partition3) + special_conformal_word(0.2, partition3)
    assert sup_distance(word_product(w + w.inverse()), identity()) < 1e-8


def test_word_product_matches_sequential(partition3):
    w = translation_word(0.4, partition3) + special_conformal_word(-0.3, partition3)
    acc = identity()
    for f in w.diffeos:
        acc = compose(f, acc)
    assert sup_distance(word_product(w), acc) < 1e-9


def test_runs_parse():
    a, b, c = object(), object(), object()
    runs = _runs([a, b, a, b, a, b, c])
    assert [(len(block), reps) for block, reps in runs] == [(2, 3), (1, 1)]
    assert _runs([]) == []


def test_word_stats(partition3):
    w = translation_word(0.2, partition3)
    stats = word_stats(w, to_diffeo(generator("T", 0.2)))
    assert stats["length"] == len(w)
    assert 0 < stats["max_factor_displacement"] < 0.1
    assert stats["residual"] < 1e-8
