import random
from fractions import Fraction

import pytest

from cocycle_engine.algebra import ModuleTag
from cocycle_engine.cochains import (
    CochainKey,
    CoeffId,
    HomogeneousCochain,
    coefficient_coords,
)


def random_cochain(rng: random.Random, alg, module, arity, degree, window, density=0.4):
    """Window-supported cochain with small random rational coefficients."""
    coeffs = {}
    for cid in coefficient_coords(alg, module, arity, degree, window):
        if rng.random() < density:
            coeffs[cid] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return HomogeneousCochain(alg, module, arity, degree, coeffs)


def diagonal_2cochain(rng: random.Random, alg, window, with_center=True):
    """Random degree-zero trivial-module 2-cochain (the shape coboundary
    preimages take: diagonal pairs plus the central slot)."""
    coeffs = {}
    for k in range(1, window + 1):
        if rng.random() < 0.6:
            coeffs[CoeffId(CochainKey((-k, k), False), False)] = Fraction(
                rng.randint(-9, 9), rng.randint(1, 5)
            )
    if alg.has_center and with_center and rng.random() < 0.7:
        coeffs[CoeffId(CochainKey((0,), True), False)] = Fraction(
            rng.randint(-9, 9), rng.randint(1, 4)
        )
    return HomogeneousCochain(alg, ModuleTag.TRIVIAL, 2, 0, coeffs)


@pytest.fixture
def rng():
    return random.Random(20260808)
