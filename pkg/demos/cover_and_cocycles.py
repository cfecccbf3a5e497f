"""Universal cover of PSL(2,R) on the circle, the sign cocycle and the Bott cocycle."""

import numpy as np

from circlegroup import (
    bott_cocycle,
    cocycle_identity_defect,
    cover_compose,
    cover_identity,
    cover_make,
    cover_trivialize,
    generator,
    rotation,
    sign_cocycle,
)
from circlegroup.sampling import random_diffeo, random_moebius

# %% a quarter turn four times is the identity downstairs but winds once upstairs
a = cover_identity()
quarter = cover_make(generator("R", np.pi / 2))
for _ in range(4):
    a = cover_compose(a, quarter)
print("base distance to identity %.1e, lift at 0 = %.6f" % (a.base.distance(generator("T", 0.0)), a.lift_at_zero))
print("image in SL(2,R):\n", np.round(cover_trivialize(a), 12))

# %% the sign cocycle takes values +-1 and satisfies its identity exactly
rng = np.random.default_rng(2)
gs = [random_moebius(rng) for _ in range(4)]
print("\nsign table:\n", np.array([[sign_cocycle(g, h) for h in gs] for g in gs]))
print("identity defect:", cocycle_identity_defect(sign_cocycle, *gs[:3]))

# %% Bott cocycle: vanishes against rotations, additive identity holds
f, g, h = (random_diffeo(rng) for _ in range(3))
print("\nB(f, g) = %.6f" % bott_cocycle(f, g))
print("B(R, f) = %.1e" % bott_cocycle(rotation(0.4), f))
print("identity defect %.1e" % cocycle_identity_defect(bott_cocycle, f, g, h, additive=True))
