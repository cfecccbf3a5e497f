"""Cut a circle diffeomorphism into pieces supported on three arcs and glue it back."""

import numpy as np

from circlegroup import (
    build_partition,
    compose,
    epsilon_max,
    identity,
    localize,
    slice_factorize,
    sup_distance,
    uniform_covering,
    word_product,
)
from circlegroup.sampling import random_diffeo, random_near_identity

# %% three overlapping arcs and their partition of unity
p = build_partition(uniform_covering(3))
eps = epsilon_max(p)
print("arcs:", [(round(a.a, 3), round(a.b, 3)) for a in p.cover])
print("sup sum |lambda'| = %.3f, eps = %.4f" % (p.derivative_sum_sup, eps))

# weights sum to one everywhere
x = np.linspace(0, 2 * np.pi, 1000)
print("max |sum lambda - 1| = %.1e" % np.abs(p.weights(x).sum(axis=0) - 1).max())

# %% a small diffeo factors into one piece per arc
rng = np.random.default_rng(0)
phi = random_near_identity(rng, eps, modes=32)
w = localize(phi, p)
print("\nfactors:", len(w), " supports inside arcs:", w.supports_ok())
for arc, f in w:
    print("  arc (%.2f, %.2f)  sup|u| = %.2e" % (arc.a, arc.b, f.metrics.sup_displacement))
print("round trip error %.2e" % sup_distance(word_product(w), phi))

# %% large diffeos are first sliced into small steps
big = random_diffeo(rng, sup=1.5, modes=6)
steps = slice_factorize(big, p)
acc = identity()
for s in steps:
    acc = compose(s, acc)
print("\n%d slices, largest sup|u| %.3f, residual %.2e"
      % (len(steps), max(s.metrics.sup_displacement for s in steps), sup_distance(acc, big)))
