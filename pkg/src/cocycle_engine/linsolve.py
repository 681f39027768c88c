"""Exact sparse linear algebra over Q: rank, kernel, solve, image tests.

Matrices are immutable sparse maps (row, col) -> nonzero Fraction.
Elimination is fraction-free: each row is cleared of denominators once,
then row updates are integer cross-multiplications

    row <- pivot_value * row - row_value * pivot_row

followed by removal of the integer content (gcd) of the row, which
keeps entry growth polynomial without ever leaving exact arithmetic.

Pivot policy ("Markowitz-lite"): among the columns of minimal active
length, minimize the fill estimate (row_nnz - 1) * (col_nnz - 1), ties
broken by lowest row index then lowest column index.  Selection and
update order are fully deterministic, so identical inputs produce
identical pivots, ranks and bases on every run.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


class RationalSparseMatrix:
    """Sparse exact-rational matrix; built once, never mutated."""

    __slots__ = ("n_rows", "n_cols", "entries")

    def __init__(self, n_rows: int, n_cols: int, entries=None):
        self.n_rows = n_rows
        self.n_cols = n_cols
        clean: dict[tuple[int, int], Fraction] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < n_rows and 0 <= c < n_cols):
                raise ValueError("entry (%d, %d) out of range" % (r, c))
            v = Fraction(v)
            if v:
                clean[(r, c)] = v
        self.entries = clean

    @classmethod
    def from_rows(cls, n_cols: int, rows: Sequence[dict[int, Fraction]]) -> "RationalSparseMatrix":
        entries = {}
        for r, row in enumerate(rows):
            for c, v in row.items():
                if v:
                    entries[(r, c)] = Fraction(v)
        return cls(len(rows), n_cols, entries)

    def rows(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [dict() for _ in range(self.n_rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> "RationalSparseMatrix":
        return RationalSparseMatrix(
            self.n_cols, self.n_rows, {(c, r): v for (r, c), v in self.entries.items()}
        )

    def mul_vector(self, x) -> list[Fraction]:
        """M x for x given as a sequence or a sparse dict over columns."""
        if isinstance(x, dict):
            get = lambda c: x.get(c, 0)
        else:
            if len(x) != self.n_cols:
                raise ValueError("vector length %d != %d columns" % (len(x), self.n_cols))
            get = lambda c: x[c]
        out = [Fraction(0)] * self.n_rows
        for (r, c), v in self.entries.items():
            xc = get(c)
            if xc:
                out[r] += v * xc
        return out

    def nnz(self) -> int:
        return len(self.entries)

    def __repr__(self) -> str:
        return "RationalSparseMatrix(%d x %d, %d nnz)" % (self.n_rows, self.n_cols, self.nnz())


def _integer_rows(rows: Iterable[dict[int, Fraction]]) -> list[dict[int, int]]:
    """Clear denominators row by row (row scaling preserves rank, kernel
    and solution sets of homogeneous/augmented systems handled here)."""
    out = []
    for row in rows:
        if not row:
            out.append({})
            continue
        lcm = 1
        for v in row.values():
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        ints = {c: int(v * lcm) for c, v in row.items() if v}
        g = 0
        for v in ints.values():
            g = math.gcd(g, v)
        if g > 1:
            ints = {c: v // g for c, v in ints.items()}
        out.append(ints)
    return out


def _strip_content(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _dedupe_rows(int_rows: list[dict[int, int]]) -> list[dict[int, int]]:
    """Drop repeated rows (after content stripping they compare exactly
    up to sign); rank and kernel are unaffected, elimination time is."""
    seen = set()
    out = []
    for row in int_rows:
        if not row:
            continue
        items = tuple(sorted(row.items()))
        if items[0][1] < 0:
            items = tuple((c, -v) for c, v in items)
        if items in seen:
            continue
        seen.add(items)
        out.append(row)
    return out


class _Elimination:
    """One deterministic fraction-free elimination run.

    `allowed_cols` restricts pivoting (used to keep an augmented column
    out of the pivot set, or to force a column subset to be eliminated
    first).  After run(), `pivots` holds the retired pivot rows in
    elimination order together with their pivot columns; the surviving
    rows have no support left on the allowed columns.
    """

    def __init__(self, int_rows: list[dict[int, int]], allowed_cols):
        self.rows: dict[int, dict[int, int]] = {}
        self.col_rows: dict[int, set[int]] = {}
        self.allowed = set(allowed_cols)
        for rid, row in enumerate(int_rows):
            if row:
                self.rows[rid] = dict(row)
        for rid, row in self.rows.items():
            for c in row:
                if c in self.allowed:
                    self.col_rows.setdefault(c, set()).add(rid)
        self.pivots: list[tuple[dict[int, int], int]] = []

    def _select_pivot(self):
        """Markowitz fill estimate (row_nnz - 1) * (col_nnz - 1) over the
        columns of minimal length plus the sparsest row of each slightly
        longer column; ties by lowest row id then column id."""
        col_rows = self.col_rows
        if not col_rows:
            return None
        rows = self.rows
        min_len = min(len(s) for s in col_rows.values())
        best = None
        for c, s in col_rows.items():
            cl = len(s)
            if cl > min_len + 1:
                continue
            for rid in s:
                cost = (len(rows[rid]) - 1) * (cl - 1)
                cand = (cost, rid, c)
                if best is None or cand < best:
                    best = cand
        return best[1], best[2]

    def _detach(self, rid: int) -> dict[int, int]:
        row = self.rows.pop(rid)
        col_rows = self.col_rows
        for c in row:
            s = col_rows.get(c)
            if s is not None:
                s.discard(rid)
                if not s:
                    del col_rows[c]
        return row

    def run(self) -> None:
        rows = self.rows
        col_rows = self.col_rows
        allowed = self.allowed
        while True:
            sel = self._select_pivot()
            if sel is None:
                break
            prid, pc = sel
            prow = self._detach(prid)
            a = prow[pc]
            for rid in sorted(col_rows.get(pc, ())):
                row = rows[rid]
                b = row.pop(pc)
                new = {c: a * v for c, v in row.items()}
                for c, pv in prow.items():
                    if c == pc:
                        continue
                    s = new.get(c, 0) - b * pv
                    if s:
                        new[c] = s
                    elif c in new:
                        del new[c]
                new = _strip_content(new)
                # incremental column-index maintenance: only changed keys
                for c in row:
                    if c not in new:
                        s = col_rows.get(c)
                        if s is not None:
                            s.discard(rid)
                            if not s:
                                del col_rows[c]
                for c in new:
                    if c not in row and c in allowed:
                        col_rows.setdefault(c, set()).add(rid)
                s = col_rows.get(pc)
                if s is not None:
                    s.discard(rid)
                    if not s:
                        del col_rows[pc]
                if new:
                    rows[rid] = new
                else:
                    del rows[rid]
            self.pivots.append((prow, pc))

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def active_rows(self) -> list[dict[int, int]]:
        return [self.rows[rid] for rid in sorted(self.rows)]


def _eliminate(M: RationalSparseMatrix, extra_col=None, aug=None, dedupe=False) -> _Elimination:
    rows = M.rows()
    if aug is not None:
        for r, v in enumerate(aug):
            if v:
                rows[r][extra_col] = Fraction(v)
    int_rows = _integer_rows(rows)
    if dedupe:
        int_rows = _dedupe_rows(int_rows)
    elim = _Elimination(int_rows, range(M.n_cols))
    elim.run()
    return elim


def rank(M: RationalSparseMatrix) -> int:
    """Exact rank over Q.  Kernel and rank agree with dense elimination;
    duplicate rows are dropped up front."""
    return _eliminate(M, dedupe=True).rank


def rank_two_phase(M: RationalSparseMatrix, first_cols) -> tuple[int, int]:
    """(rank(M), rank of the submatrix on `first_cols`), one elimination.

    Pivots are chosen inside `first_cols` until no active row touches
    them, then elimination continues on the remaining columns.  The
    first-phase pivot count equals the rank of M restricted to those
    columns: the retired first-phase rows span the projection of the
    row space onto them, and every surviving row vanishes there.
    """
    first = set(first_cols)
    elim = _Elimination(_dedupe_rows(_integer_rows(M.rows())), first)
    elim.run()
    first_rank = elim.rank
    rest = _Elimination(elim.active_rows(), set(range(M.n_cols)) - first)
    rest.run()
    return first_rank + rest.rank, first_rank


def _back_substitute(pivots, x: dict[int, Fraction], rhs_col=None) -> None:
    """Solve the triangular pivot system in reverse elimination order,
    filling x at pivot columns; non-pivot entries of x must be preset."""
    for row, pc in reversed(pivots):
        s = Fraction(row.get(rhs_col, 0)) if rhs_col is not None else Fraction(0)
        for c, v in row.items():
            if c == pc or c == rhs_col:
                continue
            xc = x.get(c)
            if xc:
                s -= v * xc
        val = s / row[pc]
        if val:
            x[pc] = val


def kernel_basis(M: RationalSparseMatrix) -> list[dict[int, Fraction]]:
    """Basis of the exact null space, one sparse vector per free column.

    Every returned vector is re-multiplied against M as a built-in
    self-check; the count always equals n_cols - rank(M).
    """
    elim = _eliminate(M)
    pivot_cols = {pc for _, pc in elim.pivots}
    basis = []
    for f in range(M.n_cols):
        if f in pivot_cols:
            continue
        x: dict[int, Fraction] = {f: Fraction(1)}
        _back_substitute(elim.pivots, x)
        if any(M.mul_vector(x)):
            raise AssertionError("kernel self-check failed (elimination bug)")
        basis.append(x)
    return basis


def solve_or_none(M: RationalSparseMatrix, v: Sequence[Fraction]):
    """Some exact x with M x = v, or None when v is not in the image.

    The verdict is certified by rank comparison: elimination runs on
    [M | v] with the augmented column barred from pivoting, so a
    leftover nonzero augmented entry is exactly rank([M|v]) > rank(M).
    A returned x is re-multiplied and compared against v.
    """
    if len(v) != M.n_rows:
        raise ValueError("vector length %d != %d rows" % (len(v), M.n_rows))
    AUG = M.n_cols
    elim = _eliminate(M, extra_col=AUG, aug=v)
    for row in elim.active_rows():
        if row.get(AUG):
            return None
    x: dict[int, Fraction] = {}
    _back_substitute(elim.pivots, x, rhs_col=AUG)
    xs = [x.get(c, Fraction(0)) for c in range(M.n_cols)]
    if M.mul_vector(xs) != [Fraction(f) for f in v]:
        raise AssertionError("solve self-check failed (elimination bug)")
    return xs


def write_matrix_market(M: RationalSparseMatrix, f) -> None:
    """Matrix Market coordinate dump with exact `p/q` entries.

    The `rational` field is not part of the Matrix Market standard; it
    is documented here as: one entry per line, 1-based indices, value
    written as numerator/denominator in lowest terms.
    """
    f.write("%%MatrixMarket matrix coordinate rational general\n")
    f.write("%% exact entries as numerator/denominator\n")
    f.write("%d %d %d\n" % (M.n_rows, M.n_cols, M.nnz()))
    for (r, c) in sorted(M.entries):
        v = M.entries[(r, c)]
        f.write("%d %d %d/%d\n" % (r + 1, c + 1, v.numerator, v.denominator))


def read_matrix_market(f) -> RationalSparseMatrix:
    header = f.readline()
    if "coordinate" not in header or "rational" not in header:
        raise ValueError("expected a coordinate rational Matrix Market file")
    line = f.readline()
    while line.startswith("%"):
        line = f.readline()
    n_rows, n_cols, nnz = (int(tok) for tok in line.split())
    entries = {}
    for _ in range(nnz):
        r, c, val = f.readline().split()
        entries[(int(r) - 1, int(c) - 1)] = Fraction(val)
    return RationalSparseMatrix(n_rows, n_cols, entries)
