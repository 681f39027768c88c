"""Cochains, canonical keys and the coboundary operator.

A cochain is stored on canonical ascending keys; evaluation applies the
permutation sign.  The coboundary of a window-supported cochain is
exact everywhere (lazy view) and can be materialized on a window.
"""

import random

from cocycle_engine import (
    CENTRAL,
    CochainKey,
    CoeffId,
    HomogeneousCochain,
    ModuleTag,
    coboundary,
    coboundary_view,
    delta_value,
    e,
    virasoro,
)

# a 2-cochain on the extended algebra: phi(e_0, t) = 1, all else 0
phi = HomogeneousCochain(
    virasoro(), ModuleTag.TRIVIAL, 2, 0, {CoeffId(CochainKey((0,), True), False): 1}
)
print("phi has a single coefficient: phi(e_0, t) = 1")
print("its coboundary on central triples is (j - i) b_{i+j}:")
for i, j in ((1, -1), (2, -2), (3, -3), (1, 2)):
    print("  d(phi)(e_%d, e_%d, t) = %s" % (i, j, delta_value(phi, (e(i), e(j), CENTRAL))))

# evaluation respects alternation
psi = HomogeneousCochain(
    virasoro(), ModuleTag.TRIVIAL, 3, 0, {CoeffId(CochainKey((-1, 0, 1), False), False): -2}
)
print("\npsi stored at key (-1, 0, 1) with value -2:")
print("  psi(e_-1, e_1, e_0) =", psi.evaluate((e(-1), e(1), e(0))))
print("  psi(e_1, e_-1, e_0) =", psi.evaluate((e(1), e(-1), e(0))))
print("  psi(e_3, e_3, e_0)  =", psi.evaluate((e(3), e(3), e(0))), "(repeated argument)")

# d(d(phi)) vanishes identically: spot-check on random tuples
rng = random.Random(0)
gens = [e(i) for i in range(-5, 6)] + [CENTRAL]
dd = coboundary_view(coboundary_view(phi))
vals = {dd.evaluate(tuple(rng.sample(gens, 4))) for _ in range(200)}
print("\nd(d(phi)) sampled on 200 random 4-tuples:", vals)

# materialization = restriction to a window
dphi = coboundary(phi, 4)
print("\nd(phi) materialized on |index| <= 4, canonical text form:")
for line in dphi.to_lines():
    print("  " + line)
