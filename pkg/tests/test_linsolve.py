import io
import random
from fractions import Fraction

import pytest

from cocycle_engine.linsolve import (
    RationalSparseMatrix,
    kernel_basis,
    rank,
    rank_two_phase,
    read_matrix_market,
    solve_or_none,
    write_matrix_market,
)


def mat(rows):
    entries = {}
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if v:
                entries[(r, c)] = Fraction(v)
    return RationalSparseMatrix(len(rows), len(rows[0]) if rows else 0, entries)


def random_sparse(rng, n_rows, n_cols, density=0.3):
    entries = {}
    for r in range(n_rows):
        for c in range(n_cols):
            if rng.random() < density:
                entries[(r, c)] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return RationalSparseMatrix(n_rows, n_cols, entries)


def test_rank_examples():
    assert rank(mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3
    assert rank(mat([[1, 2], [2, 4]])) == 1
    m = mat([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]])
    assert rank(m) == 2  # determinant 1/60


def test_kernel_examples():
    assert len(kernel_basis(RationalSparseMatrix(2, 3))) == 3
    basis = kernel_basis(mat([[1, -1]]))
    assert len(basis) == 1
    (v,) = basis
    assert v.get(0) == v.get(1) != 0


def test_kernel_rank_nullity(rng):
    for _ in range(25):
        m = random_sparse(rng, rng.randint(1, 8), rng.randint(1, 8), rng.random())
        basis = kernel_basis(m)
        assert rank(m) + len(basis) == m.n_cols
        for v in basis:
            assert not any(m.mul_vector(v))


def test_rank_equals_transpose_rank(rng):
    for _ in range(25):
        m = random_sparse(rng, rng.randint(1, 9), rng.randint(1, 9), rng.random())
        assert rank(m) == rank(m.transpose())


def test_solve_examples():
    ident = mat([[1, 0], [0, 1]])
    assert solve_or_none(ident, [Fraction(3), Fraction(-7)]) == [3, -7]
    tall = mat([[1], [2]])
    assert solve_or_none(tall, [Fraction(1), Fraction(3)]) is None  # rank jumps 1 -> 2
    assert solve_or_none(tall, [Fraction(1), Fraction(2)]) == [1]


def test_solve_random_consistent_systems(rng):
    for _ in range(25):
        m = random_sparse(rng, rng.randint(1, 7), rng.randint(1, 7), 0.5)
        x = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(m.n_cols)]
        v = m.mul_vector(x)
        sol = solve_or_none(m, v)
        assert sol is not None
        assert m.mul_vector(sol) == v


def test_determinism():
    rng = random.Random(5)
    m = random_sparse(rng, 12, 9, 0.35)
    r1, k1, s1 = rank(m), kernel_basis(m), solve_or_none(m, m.mul_vector([1] * 9))
    r2, k2, s2 = rank(m), kernel_basis(m), solve_or_none(m, m.mul_vector([1] * 9))
    assert (r1, k1, s1) == (r2, k2, s2)


def test_rank_two_phase_matches_separate_ranks(rng):
    for _ in range(20):
        m = random_sparse(rng, rng.randint(2, 9), rng.randint(2, 9), 0.4)
        first = sorted(rng.sample(range(m.n_cols), rng.randint(0, m.n_cols)))
        sub = RationalSparseMatrix(
            m.n_rows,
            m.n_cols,
            {(r, c): v for (r, c), v in m.entries.items() if c in set(first)},
        )
        total, first_rank = rank_two_phase(m, first)
        assert total == rank(m)
        assert first_rank == rank(sub)


def test_matrix_market_round_trip():
    m = mat([[Fraction(1, 2), 0, -3], [0, Fraction(7, 5), 0]])
    buf = io.StringIO()
    write_matrix_market(m, buf)
    buf.seek(0)
    back = read_matrix_market(buf)
    assert back.n_rows == m.n_rows and back.n_cols == m.n_cols
    assert back.entries == m.entries
    buf.seek(0)
    assert buf.readline().startswith("%%MatrixMarket matrix coordinate rational")


def test_shape_validation():
    with pytest.raises(ValueError):
        RationalSparseMatrix(1, 1, {(1, 0): Fraction(1)})
    with pytest.raises(ValueError):
        solve_or_none(mat([[1, 2]]), [Fraction(1), Fraction(2)])
