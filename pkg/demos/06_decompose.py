"""Constructive decomposition: any windowed degree-zero 3-cocycle
splits exactly as lambda * Psi + d(phi), and the engine returns the
certificate (lambda, phi) with a coefficient-by-coefficient zero check
of the remainder.
"""

import json
import random
from fractions import Fraction

from cocycle_engine import (
    CochainKey,
    CoeffId,
    HomogeneousCochain,
    ModuleTag,
    coboundary,
    decompose,
    gv_cochain,
    virasoro,
)

rng = random.Random(6)
N = 9

# assemble a disguised input: lambda * Psi + d(phi_0) restricted to the window
lam = Fraction(-11, 3)
phi0_coeffs = {
    CoeffId(CochainKey((-k, k), False), False): Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    for k in range(1, 13)
    if rng.random() < 0.7
}
phi0_coeffs[CoeffId(CochainKey((0,), True), False)] = Fraction(5, 2)
phi0 = HomogeneousCochain(virasoro(), ModuleTag.TRIVIAL, 2, 0, phi0_coeffs)

psi = gv_cochain(virasoro(), N).scale(lam) + coboundary(phi0, N)
print("input: %d nonzero coefficients on window %d (true lambda hidden: %s)" % (
    len(psi.support()), N, lam))

result = decompose(psi, N)
print("\nrecovered lambda =", result.lam)
print("remainder identically zero on the window:", result.residual_norm_zero)
print("\ncertificate JSON:")
print(json.dumps(result.to_json_dict(), indent=2)[:600], "...")

# the returned phi need not equal phi0: coboundaries are not unique
# preimages; what is certified is psi = lambda * Psi + d(phi) exactly
check = psi - gv_cochain(virasoro(), N).scale(result.lam) - coboundary(result.phi, N)
print("\npsi - lambda*Psi - d(phi) is zero:", check.is_zero())
