"""Acceptance suite: one test per criterion, each printing a PASS line
(velocity note: the window ladders dominate; run with `pytest -s` to
watch the per-criterion lines appear)."""

import itertools
import random
from fractions import Fraction

import pytest

from cocycle_engine.algebra import CENTRAL, ModuleTag, check_jacobi, e, virasoro, witt
from cocycle_engine.cochains import coboundary, coboundary_view
from cocycle_engine.cohomology import (
    CohomologySetup,
    cohomology_dim,
    crosscheck_sequences,
    stabilization_scan,
    window,
)
from cocycle_engine.knowncocycles import (
    GODBILLON_VEY,
    GODBILLON_VEY_HAT,
    gv_cochain,
    verify_cocycle,
    verify_nontrivial,
)
from cocycle_engine.linsolve import RationalSparseMatrix, kernel_basis, rank
from cocycle_engine.normalizer import SeedForm, decompose, symbolic_table, verify_final_relations

from conftest import diagonal_2cochain, random_cochain

TR, AD, WQ = ModuleTag.TRIVIAL, ModuleTag.ADJOINT, ModuleTag.WITT_QUOTIENT

TRIVIAL_LADDER = [(n, 2 * n) for n in range(4, 11)]
ADJOINT_LADDER = [(n, 2 * n) for n in range(4, 9)]

# the dimension table: (algebra factory, module) -> stable dims for q = 0..3
DIMENSION_TABLE = {
    ("witt", TR): (1, 0, 1, 1),
    ("virasoro", TR): (1, 0, 0, 1),
    ("witt", AD): (0, 0, 0, 0),
    ("virasoro", AD): (1, 0, 0, 1),
}


@pytest.fixture(scope="module")
def scans():
    """All stabilization scans used by criteria 1 and 6, computed once."""
    algebras = {"witt": witt(), "virasoro": virasoro()}
    out = {}
    for (name, module), dims in DIMENSION_TABLE.items():
        ladder = TRIVIAL_LADDER if module == TR else ADJOINT_LADDER
        for q in range(4):
            out[(name, module, q)] = stabilization_scan(algebras[name], module, q, 0, ladder)
    for q in (1, 2, 3):
        out[("virasoro", WQ, q)] = stabilization_scan(virasoro(), WQ, q, 0, ADJOINT_LADDER)
    return out


def test_criterion_1_dimension_table(scans):
    for (name, module), dims in DIMENSION_TABLE.items():
        for q, want in enumerate(dims):
            report = scans[(name, module, q)]
            assert report.stabilized, (name, module, q, report.rows)
            assert report.stable_dim == want, (name, module, q, report.rows)
    print(
        "ACCEPTANCE 1: PASS dimension table H^0..H^3 for (W,K) (W,W) (V,K) (V,V) "
        "stabilized at the expected values"
    )


def test_criterion_2_godbillon_vey_golden():
    assert GODBILLON_VEY.evaluate((e(-1), e(1), e(0))) == 2
    assert GODBILLON_VEY_HAT.evaluate((e(-1), e(1), e(0))) == 2
    for n in (6, 10):
        for named in (GODBILLON_VEY, GODBILLON_VEY_HAT):
            assert verify_cocycle(named, n), (named.name, n)
            verdict = verify_nontrivial(named, n)
            assert verdict.nontrivial and verdict.checks_agree, (named.name, n)
    print("ACCEPTANCE 2: PASS generator value 2 at the probe triple; cocycle and "
          "nontriviality verified at N = 6 and N = 10")


def test_criterion_3_recursion_golden_chain():
    tbl = symbolic_table(9)
    golden = {
        (-3, 3, 0): Fraction(4),
        (-4, 4, 0): Fraction(10),
        (-5, 5, 0): Fraction(20),
        (-6, 6, 0): Fraction(35),
        (3, -2, -1): Fraction(-2),
        (4, -3, -1): Fraction(-8),
        (5, -4, -1): Fraction(-20),
        (6, -5, -1): Fraction(-40),
        (7, -6, -1): Fraction(-70),
        (-5, 3, 2): Fraction(-8, 3),
        (-6, 4, 2): Fraction(-28, 3),
        (-7, 5, 2): Fraction(-106, 5),
        (5, -3, -2): Fraction(-8),
        (6, -4, -2): Fraction(-25),
        (7, -5, -2): Fraction(-54),
        (7, -4, -3): Fraction(-20),
    }
    for (i, j, k), mult in golden.items():
        assert tbl.psi_at(i, j, k) == SeedForm(mult, Fraction(0)), (i, j, k)
    rel = verify_final_relations(tbl)
    assert rel.reduced1 == (1, 0)  # psi_{-2,2,0} = 0
    psi_coef, c_seed_coef = rel.reduced2  # seeds are (psi_{-2,2,0}, c_{2,-2})
    assert (psi_coef, -c_seed_coef) == (5, 3)  # 3 c_{-2,2} + 5 psi_{-2,2,0} = 0
    assert rel.forces_seeds_zero
    print("ACCEPTANCE 3: PASS all 16 recursion coefficients exact; closing relations "
          "reduce to psi_{-2,2,0} = 0 and 3 c_{-2,2} + 5 psi_{-2,2,0} = 0")


def test_criterion_4_decomposition_round_trip():
    rng = random.Random(190508)
    n, phi_window = 9, 13
    successes = {}
    for alg in (witt(), virasoro()):
        good = 0
        for _ in range(100):
            lam = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
            phi0 = diagonal_2cochain(rng, alg, phi_window)
            psi = gv_cochain(alg, n).scale(lam) + coboundary(phi0, n)
            result = decompose(psi, n)
            if result.lam == lam and result.residual_norm_zero:
                good += 1
        successes[alg.name] = good
    assert successes == {"witt": 100, "virasoro": 100}
    print("ACCEPTANCE 4: PASS 100/100 exact round-trips per algebra at N = 9, "
          "sources in |i| <= 13")


@pytest.mark.parametrize("d", [-2, -1, 1, 2])
def test_criterion_5_degree_reduction(d):
    ladder = [(n, 2 * n) for n in range(4, 9)]
    for alg in (witt(), virasoro()):
        for q in (1, 2, 3):
            report = stabilization_scan(alg, TR, q, d, ladder)
            assert report.stabilized and report.stable_dim == 0, (alg.name, q, d, report.rows)
    print("ACCEPTANCE 5: PASS trivial-module degree d=%+d cohomology vanishes "
          "for q = 1, 2, 3 on both algebras" % d)


def test_criterion_6_exact_sequence_crosschecks(scans):
    h3vk = scans[("virasoro", TR, 3)]
    h3vv = scans[("virasoro", AD, 3)]
    assert h3vk.stabilized and h3vv.stabilized
    assert h3vk.stable_dim == h3vv.stable_dim == 1
    for q in (1, 2, 3):
        lhs = scans[("virasoro", WQ, q)]
        rhs = scans[("witt", AD, q)]
        assert lhs.stabilized and rhs.stabilized
        assert lhs.stable_dim == rhs.stable_dim, (q, lhs.rows, rhs.rows)
    report = crosscheck_sequences([(n, 2 * n) for n in (4, 5, 6)])
    assert report["all_equal"]
    print("ACCEPTANCE 6: PASS dim H3(V,K) = dim H3(V,V) and "
          "dim Hk(V,W) = dim Hk(W,W) for k = 1, 2, 3 at stabilized windows")


def test_criterion_7_property_suites(rng):
    # Jacobi sweeps
    assert check_jacobi(witt(), 6) == []
    assert check_jacobi(virasoro(), 6) == []

    # d(d(psi)) = 0 for 200 random window cochains of arities 1 and 2
    cases = [
        (alg, module, arity)
        for alg in (witt(), virasoro())
        for module in (TR, AD)
        for arity in (1, 2)
    ]
    for trial in range(200):
        alg, module, arity = cases[trial % len(cases)]
        psi = random_cochain(rng, alg, module, arity, 0, 4, density=0.5)
        ddpsi = coboundary_view(coboundary_view(psi))
        gens = [e(i) for i in range(-4, 5)] + ([CENTRAL] if alg.has_center else [])
        for args in itertools.islice(itertools.combinations(gens, arity + 2), 0, 25, 5):
            val = ddpsi.evaluate(args)
            assert val == 0 or val == {}

    # alternation under transpositions
    psi = random_cochain(rng, virasoro(), TR, 3, 0, 4, density=0.7)
    gens = [e(i) for i in range(-4, 5)] + [CENTRAL]
    for _ in range(40):
        a, b, c = rng.sample(gens, 3)
        assert psi.evaluate((a, b, c)) == -psi.evaluate((b, a, c)) == -psi.evaluate((a, c, b))

    # rank + nullity on random sparse matrices
    for _ in range(25):
        entries = {
            (r, c): Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            for r in range(rng.randint(1, 8))
            for c in range(rng.randint(1, 8))
            if rng.random() < 0.4
        }
        rows = 1 + max((r for r, _ in entries), default=0)
        cols = 1 + max((c for _, c in entries), default=0)
        m = RationalSparseMatrix(rows, cols, entries)
        assert rank(m) + len(kernel_basis(m)) == m.n_cols

    # inclusion B in Z asserted inside every dimension computation
    for alg in (witt(), virasoro()):
        for module in (TR, AD):
            for q in (1, 2, 3):
                cohomology_dim(CohomologySetup(alg, module, q, 0, window(4)))
    print("ACCEPTANCE 7: PASS Jacobi, d(d(.)) = 0 on 200 cochains, alternation, "
          "rank + nullity, and B inside Z all hold")
