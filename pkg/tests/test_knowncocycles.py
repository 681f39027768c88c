import itertools
from dataclasses import replace
from fractions import Fraction

import pytest

from cocycle_engine.algebra import CENTRAL, e, witt
from cocycle_engine.cochains import CochainKey, coboundary
from cocycle_engine.knowncocycles import (
    GODBILLON_VEY,
    GODBILLON_VEY_HAT,
    VIRASORO_ALPHA,
    godbillon_vey,
    gv_cochain,
    verify_cocycle,
    verify_nontrivial,
)

from conftest import diagonal_2cochain


def test_godbillon_vey_values():
    assert godbillon_vey(-1, 1, 0) == 2
    assert godbillon_vey(1, 2, 3) == 0  # sum nonzero
    assert godbillon_vey(-5, 2, 3) == -56


def test_godbillon_vey_fully_antisymmetric():
    for i, j, k in itertools.product(range(-8, 9), repeat=3):
        v = godbillon_vey(i, j, k)
        assert godbillon_vey(j, i, k) == -v
        assert godbillon_vey(i, k, j) == -v
        if i == j or j == k or i == k:
            assert v == 0


def test_hat_extension_vanishes_on_central_arguments():
    lazy = GODBILLON_VEY_HAT.lazy()
    for i, j in itertools.combinations(range(-5, 6), 2):
        assert lazy.evaluate((e(i), e(j), CENTRAL)) == 0
    mat = GODBILLON_VEY_HAT.materialize(5)
    assert all(not cid.key.central for cid in mat.support())
    assert mat.evaluate((e(-1), e(1), e(0))) == 2


def test_materialized_window_agrees_with_rule():
    mat = GODBILLON_VEY.materialize(6)
    for cid in mat.support():
        assert mat.coeff(cid) == godbillon_vey(*cid.key.witt)
    assert gv_cochain(witt(), 6) == mat


@pytest.mark.parametrize("named", [GODBILLON_VEY, GODBILLON_VEY_HAT, VIRASORO_ALPHA])
def test_verify_cocycle_passes(named):
    assert verify_cocycle(named, 6)


def test_verify_cocycle_catches_corruption():
    def broken_rule(cid):
        if cid.key == CochainKey((-4, 1, 3), False):
            return godbillon_vey(-4, 1, 3) + 1
        return GODBILLON_VEY.rule(cid)

    broken = replace(GODBILLON_VEY, rule=broken_rule)
    assert not verify_cocycle(broken, 6)


def test_nontriviality_of_generators():
    for named in (GODBILLON_VEY, GODBILLON_VEY_HAT):
        verdict = verify_nontrivial(named, 6)
        assert verdict.probe_value == 2
        assert not verdict.in_windowed_image
        assert verdict.nontrivial and verdict.checks_agree


def test_coboundaries_are_trivial_negative_control(rng):
    phi = diagonal_2cochain(rng, witt(), 6)
    control = coboundary(phi, 6)
    verdict = verify_nontrivial(control, 6)
    assert verdict.probe_value == 0
    assert verdict.in_windowed_image
    assert not verdict.nontrivial and verdict.checks_agree


def test_alpha_cochain_is_the_central_profile():
    mat = VIRASORO_ALPHA.materialize(5)
    for k in range(2, 6):
        assert mat.evaluate((e(k), e(-k))) == Fraction(-(k**3 - k), 12)
    assert mat.evaluate((e(1), e(-1))) == 0
