"""Moebius maps as T/S words, then as products of localized circle diffeos."""

import numpy as np

from circlegroup import (
    build_partition,
    dilation_word,
    generator,
    iwasawa,
    moebius_word,
    rotation_word,
    to_diffeo,
    translation_word,
    ts_word,
    uniform_covering,
    word_matrix,
    word_product,
    word_stats,
)
from circlegroup.moebius import generator_matrix, psl_distance
from circlegroup.sampling import random_moebius

# %% dilations and rotations from translations and special conformal maps
for tau in (-2.0, 0.5):
    w = dilation_word(tau)
    print("D(%g): %s  err %.1e" % (tau, [(f.kind, round(f.parameter, 4)) for f in w],
                                  np.abs(word_matrix(w) - generator_matrix("D", tau)).max()))
w = rotation_word(np.pi)
print("R(pi): %s" % [(f.kind, round(f.parameter, 4)) for f in w])

# %% Iwasawa coordinates and the T/S word of a random element
rng = np.random.default_rng(1)
g = random_moebius(rng, 2.0, 1.0)
co = iwasawa(g)
print("\np = %.4f  tau = %.4f  t = %.4f" % (co.p, co.tau, co.t))
word = ts_word(g)
print("T/S word of length %d, error %.1e" % (len(word), psl_distance(word_matrix(word), g.matrix)))

# %% localized word for a translation and for g
p = build_partition(uniform_covering(3))
tw = translation_word(1.0, p)
print("\nT(1): %s" % word_stats(tw, to_diffeo(generator("T", 1.0))))
mw = moebius_word(g, p)
target = to_diffeo(g)
print("g:    %s" % word_stats(mw, target))
x = np.linspace(0, 2 * np.pi, 7)
print("word product vs action:", np.abs(word_product(mw)(x) - target(x)).max())
