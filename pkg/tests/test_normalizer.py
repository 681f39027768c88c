import random
from fractions import Fraction as F

import pytest

from cocycle_engine.algebra import CENTRAL, ModuleTag, e, virasoro, witt
from cocycle_engine.cochains import CochainKey, CoeffId, HomogeneousCochain, coboundary

from cocycle_engine.knowncocycles import gv_cochain
from cocycle_engine.linsolve import RationalSparseMatrix, rank
from cocycle_engine.normalizer import (
    CoefficientTable,
    NotACocycle,
    ProfileViolation,
    RecursionGap,
    SeedForm,
    build_normalizing_cochain,
    central_profile_check,
    decompose,
    gv_coefficient,
    level_one_is_zero,
    propagate_recursions,
    subtract_gv,
    symbolic_table,
    verify_final_relations,
)

from conftest import diagonal_2cochain

TR = ModuleTag.TRIVIAL

GOLDEN_CHAIN = [
    ((-3, 3, 0), F(4)),
    ((-4, 4, 0), F(10)),
    ((-5, 5, 0), F(20)),
    ((-6, 6, 0), F(35)),
    ((3, -2, -1), F(-2)),
    ((4, -3, -1), F(-8)),
    ((5, -4, -1), F(-20)),
    ((6, -5, -1), F(-40)),
    ((7, -6, -1), F(-70)),
    ((-5, 3, 2), F(-8, 3)),
    ((-6, 4, 2), F(-28, 3)),
    ((-7, 5, 2), F(-106, 5)),
    ((5, -3, -2), F(-8)),
    ((6, -4, -2), F(-25)),
    ((7, -5, -2), F(-54)),
    ((7, -4, -3), F(-20)),
]


def test_recursion_golden_chain():
    tbl = symbolic_table(9)
    for (i, j, k), mult in GOLDEN_CHAIN:
        got = tbl.psi_at(i, j, k)
        assert got == SeedForm(mult, F(0)), ((i, j, k), got, mult)


def test_central_profile_relation():
    tbl = symbolic_table(7)
    assert tbl.c_at(-3, 3) == 4 * tbl.c_at(-2, 2)
    assert tbl.c_at(1, -1) == SeedForm(F(0), F(0))
    assert tbl.c_at(2, -2) == SeedForm(F(0), F(1))
    # k = 2 is the self-consistent anchor: (3*2*1)/6 = 1
    assert tbl.c_at(2, -2) == F(1, 6) * 3 * 2 * 1 * SeedForm(F(0), F(1))


def test_final_relations_symbolic():
    rel = verify_final_relations(symbolic_table(7))
    assert rel.symbolic
    # first relation: (106/5 - 48 + 100 - 60) psi = 0, i.e. psi_{-2,2,0} = 0
    assert rel.relation1 == SeedForm(F(106, 5) - 48 + 100 - 60, F(0))
    assert rel.reduced1 == (1, 0)
    # second relation: 5 psi_{-2,2,0} + 3 c_{-2,2} = 0 (our seed is c_{2,-2})
    psi_coef, c2m2_coef = rel.reduced2
    assert (psi_coef, -c2m2_coef) == (5, 3)
    assert rel.forces_seeds_zero


def test_final_relations_numeric():
    rel = verify_final_relations(propagate_recursions((F(0), F(0)), 7))
    assert not rel.symbolic and rel.holds
    rel = verify_final_relations(propagate_recursions((F(1), F(0)), 7))
    assert not rel.holds
    rel = verify_final_relations(propagate_recursions((F(0), F(3)), 7))
    assert not rel.holds


def test_table_getter_parity_and_window():
    tbl = propagate_recursions((F(2), F(0)), 7)
    assert tbl.psi_at(-3, 3, 0) == 8
    assert tbl.psi_at(3, -3, 0) == -8  # one transposition
    assert tbl.psi_at(0, -3, 3) == 8  # cyclic
    assert tbl.psi_at(1, -4, 3) == 0  # level one, removed by normalization
    assert tbl.psi_at(2, 2, -4) == 0  # repeated index
    with pytest.raises(RecursionGap):
        tbl.psi_at(8, -4, -4 + 0)  # outside the window
    with pytest.raises(RecursionGap):
        CoefficientTable(5, F(0))  # final relations need window >= 7


def test_recursion_rows_lie_in_condition_row_space():
    # each level recursion is the cocycle condition of a specific
    # argument tuple; as a raw functional it must not increase the rank
    # of the admissible condition matrix
    from cocycle_engine.cochains import delta_functional
    from cocycle_engine.cohomology import _condition_data

    cols, col_index, rows, _ = _condition_data(witt(), TR, 3, 0, 8)
    base = RationalSparseMatrix.from_rows(len(cols), rows)
    base_rank = rank(base)
    probes = [
        (e(-3), e(2), e(0), e(1)),  # level-zero recursion tuple, i = 2
        (e(-3), e(3), e(-1), e(1)),  # level-minus-one tuple, i = -3
        (e(-4), e(3), e(2), e(-1)),  # level-plus-two tuple, i = 3
        (e(-4), e(-3), e(2), e(5)),  # first closing relation
    ]
    for tup in probes:
        func = delta_functional(witt(), TR, 0, tup)[None]
        assert all(cid in col_index for cid in func)
        extra = dict(enumerate(rows + [{col_index[cid]: v for cid, v in func.items()}]))
        grown = RationalSparseMatrix.from_rows(
            len(cols), rows + [{col_index[cid]: v for cid, v in func.items()}]
        )
        assert rank(grown) == base_rank


def test_gv_coefficient():
    psi = gv_cochain(witt(), 8)
    assert gv_coefficient(psi) == 1
    assert gv_coefficient(psi.scale(0)) == 0
    rng = random.Random(9)
    phi0 = diagonal_2cochain(rng, witt(), 6)
    mixed = psi.scale(3) + coboundary(phi0, 8)
    assert gv_coefficient(mixed) == 3  # coboundaries vanish on the probe triple
    lam, reduced = subtract_gv(mixed, 8)
    assert lam == 3 and reduced.evaluate((e(-1), e(1), e(0))) == 0


def test_build_normalizing_cochain_zero_input():
    phi = build_normalizing_cochain(HomogeneousCochain(witt(), TR, 3, 0), 8)
    assert phi.is_zero()


def test_build_normalizing_cochain_clears_level_one():
    phi0 = HomogeneousCochain(witt(), TR, 2, 0, {CoeffId(CochainKey((-3, 3), False), False): -1})
    psi_prime = coboundary(phi0, 9)  # a cocycle with phi_{3,-3} = 1 upstream
    assert not level_one_is_zero(psi_prime, 9)
    phi = build_normalizing_cochain(psi_prime, 9)
    normalized = psi_prime - coboundary(phi, 9)
    assert level_one_is_zero(normalized, 9)


def test_build_normalizing_cochain_central_seed():
    # c'_{-1,1} = 4 forces b_0 = 2
    rng = random.Random(31)
    base = HomogeneousCochain(
        virasoro(), TR, 2, 0, {CoeffId(CochainKey((0,), True), False): 2}
    )
    psi_prime = coboundary(base, 9)
    assert psi_prime.evaluate((e(-1), e(1), CENTRAL)) == 4
    phi = build_normalizing_cochain(psi_prime, 9)
    assert phi.coeff(CoeffId(CochainKey((0,), True), False)) == 2
    normalized = psi_prime - coboundary(phi, 9)
    assert normalized.evaluate((e(-1), e(1), CENTRAL)) == 0
    assert level_one_is_zero(normalized, 9)


def test_normalization_idempotent():
    phi0 = HomogeneousCochain(witt(), TR, 2, 0, {CoeffId(CochainKey((-4, 4), False), False): 3})
    psi_prime = coboundary(phi0, 9)
    once = psi_prime - coboundary(build_normalizing_cochain(psi_prime, 9), 9)
    again = build_normalizing_cochain(once, 9)
    assert again.is_zero()


def test_central_profile_check():
    # the cubic profile: c_{k,-k} = (k+1)k(k-1)/6 * c_{2,-2}
    coeffs = {}
    seed = F(-1, 2)
    for k in range(1, 8):
        val = F((k + 1) * k * (k - 1), 6) * seed
        if val:
            coeffs[CoeffId(CochainKey((-k, k), True), False)] = -val  # canonical order flips sign
    psi = HomogeneousCochain(virasoro(), TR, 3, 0, coeffs)
    assert central_profile_check(psi, 7) == seed
    bad = coeffs.copy()
    bad[CoeffId(CochainKey((-5, 5), True), False)] += 1
    with pytest.raises(ProfileViolation):
        central_profile_check(HomogeneousCochain(virasoro(), TR, 3, 0, bad), 7)
    assert central_profile_check(HomogeneousCochain(witt(), TR, 3, 0), 7) == 0


def test_decompose_fixed_point():
    psi = gv_cochain(witt(), 9)
    result = decompose(psi, 9)
    assert result.lam == 1
    assert result.phi.is_zero()
    assert result.residual_norm_zero


def test_decompose_recovers_construction():
    phi0 = HomogeneousCochain(witt(), TR, 2, 0, {CoeffId(CochainKey((-3, 3), False), False): -1})
    psi = gv_cochain(witt(), 9).scale(7) + coboundary(phi0, 9)
    result = decompose(psi, 9)
    assert result.lam == 7 and result.residual_norm_zero
    # pure coboundary decomposes with lambda = 0
    result = decompose(coboundary(phi0, 9), 9)
    assert result.lam == 0 and result.residual_norm_zero


def test_decompose_rejects_non_cocycles():
    bad = HomogeneousCochain(witt(), TR, 3, 0, {CoeffId(CochainKey((-2, 0, 2), False), False): 1})
    with pytest.raises(NotACocycle):
        decompose(bad, 9)
    with pytest.raises(RecursionGap):
        decompose(HomogeneousCochain(witt(), TR, 3, 0), 5)


def test_decompose_json_shape():
    result = decompose(gv_cochain(virasoro(), 9).scale(F(3, 2)), 9)
    d = result.to_json_dict()
    assert d["lambda"] == "3/2"
    assert d["residual_zero"] is True
    assert isinstance(d["phi"], list)
