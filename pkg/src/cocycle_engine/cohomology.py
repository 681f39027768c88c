"""Windowed cohomology dimensions with stabilization scanning.

The algebras are infinite dimensional, so degree-d cochain spaces are
truncated to a coefficient window: only coefficients with every index
inside |i| <= N are kept (for module-valued cochains this includes the
forced value index).  Per setup, three finite objects:

Cocycle conditions (window w).  Rows come from argument tuples; the
coboundary expanded on a tuple is a linear functional in cochain
coefficients, and the row is admissible iff every coefficient it
references is a stored window-w coordinate (equivalently, all pairwise
bracket sums and the value index stay inside w).  Admissible rows are
window-expressible functionals of exact identities, so restrictions of
true cocycles satisfy all of them.

dim Z at window N.  The kernel of the window-N conditions alone keeps
junk: coefficients near the window boundary whose constraining tuples
all bracket out of the window.  The reported dim Z is therefore the
dimension of the *restriction to window-N coordinates* of the cocycle
space at an ambient window w > N:

    dim Z = |cols_N| - (rank C_w - rank C_w[:, outside N]),

computed in one two-phase elimination.  Restrictions of global cocycles
always land in this space, and enlarging w only removes junk: the
restriction dimension is non-increasing in w (every admissible row at w
is again admissible at w + 1) and bounded below by dim B.  The ambient
starts at ceil(1.5 N) and grows until the dimension either reaches the
dim B floor or agrees for two consecutive ambients (capped at 2 N).

dim B.  Potential coboundary preimages are basis cochains supported in
the source window M >= N; each contributes the exact window-N
coefficients of its coboundary, and dim B is the rank of those vectors.
The coboundary of a window cochain has support roughly twice as wide,
so the image on window-N coordinates saturates at M near 2N; the
default is M = 2N, and dim B at fixed N is non-decreasing in M.

B lies inside Z by construction (generators are restrictions of exact
coboundaries); `cohomology_dim` asserts every generator against the
window-N condition rows on every run and raises InclusionViolation on
failure, which would signal a bug, never a property of the input.

Windowed dimensions are estimates of the infinite-dimensional truth; a
scan over a ladder of windows reports them per rung and calls the
result stabilized when the last three rungs agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .algebra import (
    CENTRAL,
    GeneratorId,
    LieAlgebraSpec,
    ModuleTag,
    algebra_by_name,
    virasoro,
    witt,
    witt_gen,
)
from .cochains import CoeffId, coefficient_coords, delta_functional
from .linsolve import RationalSparseMatrix, rank, rank_two_phase


class InclusionViolation(RuntimeError):
    """A coboundary generator failed a cocycle condition row; signals a
    window-semantics bug, never a property of the input."""


def default_source_window(n: int) -> int:
    return 2 * n


def ambient_window(n: int) -> int:
    return (3 * n + 1) // 2  # ceil(1.5 n)


@dataclass(frozen=True)
class WindowConfig:
    coeff_window: int
    source_window: int

    def __post_init__(self):
        if not (1 <= self.coeff_window <= self.source_window):
            raise ValueError(
                "need 1 <= N <= M, got N=%d M=%d" % (self.coeff_window, self.source_window)
            )


def window(n: int, m: Optional[int] = None) -> WindowConfig:
    return WindowConfig(n, default_source_window(n) if m is None else m)


@dataclass(frozen=True)
class CohomologySetup:
    algebra: LieAlgebraSpec
    module: str
    q: int
    d: int
    window: WindowConfig

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("arity must be nonnegative")


@dataclass(frozen=True)
class ReportRow:
    N: int
    M: int
    dimZ: int
    dimB: int
    dimH: int


@dataclass
class CohomologyReport:
    algebra: str
    module: str
    q: int
    d: int
    rows: list[ReportRow]
    stabilized: bool
    stable_dim: Optional[int]

    def to_json_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "module": self.module,
            "q": self.q,
            "d": self.d,
            "ladder": [
                {"N": r.N, "M": r.M, "dimZ": r.dimZ, "dimB": r.dimB, "dimH": r.dimH}
                for r in self.rows
            ],
            "stabilized": self.stabilized,
            "stable_dim": self.stable_dim,
            # truncation honesty: windowed dimensions estimate the
            # infinite-dimensional values, they do not certify them
            "estimate": "windowed",
        }


def _ascending_tuples(window: int, size: int, sum_lo: int, sum_hi: int) -> Iterator[tuple[int, ...]]:
    """Strictly ascending index tuples with every index and every
    pairwise sum inside |.| <= window and total in [sum_lo, sum_hi].
    Pairwise pruning: the extreme sums are first+second and the two
    largest, so bounds can be enforced as the tuple grows."""
    w = window
    out: list[int] = []

    def rec(start: int, remaining: int, total: int):
        if remaining == 0:
            if sum_lo <= total <= sum_hi:
                yield tuple(out)
            return
        for v in range(start, w - remaining + 2):
            if out:
                if out[0] + v < -w:  # second element pins the minimal pair sum
                    continue
                if out[-1] + v > w:  # appended pairs only grow from here
                    break
            # total still achievable: remaining-1 more picks, each in (v, w]
            lo = total + v + sum(range(v + 1, v + remaining))
            hi = total + v + sum(range(w - remaining + 2, w + 1))
            if lo > sum_hi or hi < sum_lo:
                continue
            out.append(v)
            yield from rec(v + 1, remaining - 1, total + v)
            out.pop()

    if size == 0:
        if sum_lo <= 0 <= sum_hi:
            yield ()
        return
    yield from rec(-w, size, 0)


def _candidate_tuples(
    alg: LieAlgebraSpec, module: str, size: int, degree: int, window: int
) -> Iterator[tuple[GeneratorId, ...]]:
    """Argument tuples that can produce admissible rows: indices and
    pairwise bracket sums in the window, and the value degree either
    zero (trivial module) or inside the window (module-valued)."""
    if module == ModuleTag.TRIVIAL:
        lo = hi = -degree
    else:
        lo, hi = -window - degree, window - degree
    for witt_part in _ascending_tuples(window, size, lo, hi):
        yield tuple(witt_gen(i) for i in witt_part)
    if alg.has_center and size >= 1:
        for witt_part in _ascending_tuples(window, size - 1, lo, hi):
            yield tuple(witt_gen(i) for i in witt_part) + (CENTRAL,)


@lru_cache(maxsize=4)
def _condition_data(alg: LieAlgebraSpec, module: str, q: int, d: int, n: int):
    """Columns, column index and admissible condition rows at window n."""
    cols = coefficient_coords(alg, module, q, d, n)
    col_index = {cid: i for i, cid in enumerate(cols)}
    rows: list[dict[int, Fraction]] = []
    labels: list[tuple] = []
    for tup in _candidate_tuples(alg, module, q + 1, d, n):
        func = delta_functional(alg, module, d, tup)
        for basis_out, row in sorted(func.items(), key=lambda kv: kv[0] == CENTRAL):
            if any(cid not in col_index for cid in row):
                continue  # references a coefficient outside the window
            rows.append({col_index[cid]: coef for cid, coef in row.items()})
            labels.append((tup, basis_out))
    return cols, col_index, rows, labels


def condition_matrix(setup: CohomologySetup) -> RationalSparseMatrix:
    """Admissible cocycle conditions at the coefficient window N: rows
    are argument tuples (split by value component for module-valued
    cochains), columns the canonical window-N coefficients."""
    cols, _, rows, _ = _condition_data(
        setup.algebra, setup.module, setup.q, setup.d, setup.window.coeff_window
    )
    return RationalSparseMatrix.from_rows(len(cols), rows)


def _projection_dim(alg, module, q, d, n, w) -> int:
    """dim of the window-n restriction of the window-w cocycle space."""
    cols_w, _, rows_w, _ = _condition_data(alg, module, q, d, w)
    inner = set(coefficient_coords(alg, module, q, d, n))
    outer_idx = [i for i, cid in enumerate(cols_w) if cid not in inner]
    n_inner = len(cols_w) - len(outer_idx)
    total_rank, outer_rank = rank_two_phase(
        RationalSparseMatrix.from_rows(len(cols_w), rows_w), outer_idx
    )
    return n_inner - (total_rank - outer_rank)


def _restricted_cocycle_dim(alg, module, q, d, n, floor=0) -> int:
    """Adaptive ambient: widen until the restriction dimension hits the
    dim B floor or repeats, whichever comes first (cap 2n)."""
    w = max(ambient_window(n), n + 1)
    prev = None
    while True:
        dim = _projection_dim(alg, module, q, d, n, w)
        if dim <= floor or dim == prev or w >= 2 * n:
            return dim
        prev = dim
        w += 1


def _generator_data(alg, module, q, d, n, m):
    """Exact window-n coefficients of the coboundary of every basis
    (q-1)-cochain supported in window m, as a matrix A with
    A[coord, source] entries."""
    cols = coefficient_coords(alg, module, q, d, n)
    col_index = {cid: i for i, cid in enumerate(cols)}
    src = coefficient_coords(alg, module, q - 1, d, m)
    src_index = {cid: j for j, cid in enumerate(src)}
    a_rows: list[dict[int, Fraction]] = [dict() for _ in cols]
    for key in sorted({cid.key for cid in cols}, key=lambda k: (k.central, k.witt)):
        func = delta_functional(alg, module, d, key.args())
        for basis_out, row in func.items():
            i = col_index.get(CoeffId(key, basis_out == CENTRAL))
            if i is None:
                continue
            tgt = a_rows[i]
            for cid, coef in row.items():
                j = src_index.get(cid)
                if j is not None:
                    tgt[j] = tgt.get(j, 0) + coef
    for row in a_rows:
        for j in [j for j, v in row.items() if not v]:
            del row[j]
    return cols, src, a_rows


def coboundary_generators(setup: CohomologySetup) -> list[dict[int, Fraction]]:
    """One sparse vector per source coordinate (basis (q-1)-cochain in
    window M): the window-N coefficients of its coboundary.  Vectors are
    indexed like the columns of condition_matrix."""
    if setup.q < 1:
        raise ValueError("coboundaries need q >= 1")
    _, src, a_rows = _generator_data(
        setup.algebra,
        setup.module,
        setup.q,
        setup.d,
        setup.window.coeff_window,
        setup.window.source_window,
    )
    gens: list[dict[int, Fraction]] = [dict() for _ in src]
    for i, row in enumerate(a_rows):
        for j, v in row.items():
            gens[j][i] = v
    return gens


def _check_inclusion(rows: Sequence[dict[int, Fraction]], a_rows: Sequence[dict[int, Fraction]]):
    for r, row in enumerate(rows):
        acc: dict[int, Fraction] = {}
        for i, coef in row.items():
            for j, aij in a_rows[i].items():
                s = acc.get(j, 0) + coef * aij
                if s:
                    acc[j] = s
                elif j in acc:
                    del acc[j]
        if acc:
            raise InclusionViolation(
                "coboundary generator violates condition row %d (window bug)" % r
            )


def cohomology_dim(setup: CohomologySetup) -> ReportRow:
    """dim Z, dim B and dim H = dim Z - dim B at one window pair."""
    n, m = setup.window.coeff_window, setup.window.source_window
    if setup.q >= 1:
        _, src, a_rows = _generator_data(setup.algebra, setup.module, setup.q, setup.d, n, m)
        _, _, rows_n, _ = _condition_data(setup.algebra, setup.module, setup.q, setup.d, n)
        _check_inclusion(rows_n, a_rows)
        dim_b = rank(RationalSparseMatrix.from_rows(len(src), a_rows))
    else:
        dim_b = 0
    dim_z = _restricted_cocycle_dim(setup.algebra, setup.module, setup.q, setup.d, n, floor=dim_b)
    return ReportRow(N=n, M=m, dimZ=dim_z, dimB=dim_b, dimH=dim_z - dim_b)


def scan_rung(algebra_name: str, module: str, q: int, d: int, n: int, m: int) -> ReportRow:
    """Single-rung entry point, picklable for process pools."""
    setup = CohomologySetup(algebra_by_name(algebra_name), module, q, d, WindowConfig(n, m))
    return cohomology_dim(setup)


def stabilization_scan(
    alg: LieAlgebraSpec,
    module: str,
    q: int,
    d: int,
    ladder: Sequence[tuple[int, int]],
    rows: Optional[Sequence[ReportRow]] = None,
) -> CohomologyReport:
    """Run cohomology_dim per ladder rung; the verdict is stabilized
    when at least the last three rungs agree on dimH (precomputed rows
    may be supplied by parallel drivers)."""
    pairs = list(ladder)
    if any(pairs[i] >= pairs[i + 1] for i in range(len(pairs) - 1)):
        raise ValueError("ladder must be strictly increasing")
    if rows is None:
        rows = [
            cohomology_dim(CohomologySetup(alg, module, q, d, WindowConfig(n, m)))
            for n, m in pairs
        ]
    else:
        rows = list(rows)
    dims = [r.dimH for r in rows]
    stabilized = len(dims) >= 3 and len(set(dims[-3:])) == 1
    return CohomologyReport(
        algebra=alg.name,
        module=module,
        q=q,
        d=d,
        rows=rows,
        stabilized=stabilized,
        stable_dim=dims[-1] if stabilized else None,
    )


def default_ladder(lo: int, hi: int) -> list[tuple[int, int]]:
    return [(n, default_source_window(n)) for n in range(lo, hi + 1)]


def crosscheck_sequences(ladder: Sequence[tuple[int, int]]) -> dict:
    """Dimension comparisons that the exact-sequence structure forces.

    The central extension makes the plain algebra a module over the
    extended one (t acting as zero); at stabilized windows the scans
    must agree pairwise: dim H^3(V,K) = dim H^3(V,V), and
    dim H^k(V,W) = dim H^k(W,W) for k = 1, 2, 3.
    """
    w, v = witt(), virasoro()

    def scan(alg, module, q):
        return stabilization_scan(alg, module, q, 0, ladder)

    checks = []

    def compare(name, left, right):
        ok = (
            left.stabilized
            and right.stabilized
            and left.stable_dim == right.stable_dim
        )
        checks.append(
            {
                "name": name,
                "lhs": left.to_json_dict(),
                "rhs": right.to_json_dict(),
                "equal": ok,
            }
        )

    compare("H3(V,K) = H3(V,V)", scan(v, ModuleTag.TRIVIAL, 3), scan(v, ModuleTag.ADJOINT, 3))
    for k in (1, 2, 3):
        compare(
            "H%d(V,W) = H%d(W,W)" % (k, k),
            scan(v, ModuleTag.WITT_QUOTIENT, k),
            scan(w, ModuleTag.ADJOINT, k),
        )
    return {
        "ladder": [{"N": n, "M": m} for n, m in ladder],
        "checks": checks,
        "all_equal": all(c["equal"] for c in checks),
    }
