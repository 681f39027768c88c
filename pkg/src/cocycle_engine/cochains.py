"""Alternating homogeneous cochains and the Chevalley-Eilenberg coboundary.

A q-cochain with values in a module M is an alternating q-multilinear
map on the algebra.  The coboundary is

    (d psi)(x_1, ..., x_{q+1}) =
        sum_{a<b} (-1)^{a+b+1} psi([x_a, x_b], ..., ^x_a, ..., ^x_b, ...)
      + sum_a    (-1)^a       x_a . psi(..., ^x_a, ...)

(1-based indices, hats mark omitted arguments, dot is the module
action; the second sum vanishes for the trivial module).

Storage convention.  A cochain homogeneous of degree d is determined by
exact rational coefficients on canonical keys: a strictly increasing
tuple of Witt indices, an optional central argument slot (two central
arguments vanish by alternation), and, for adjoint values over the
extended algebra, a flag selecting the t-coordinate of the value in the
two-dimensional degree-0 component.  Evaluation on an arbitrary
argument tuple sorts into canonical order and applies the permutation
sign; repeated arguments give 0.  The degree-d support law (trivial
module: key indices must sum to -d) is enforced at insertion, so any
key violating it is structurally zero and is never stored.

Hand computations with these operators reorder indices freely; a single
canonical order with explicit parity everywhere is what keeps the signs
honest, so every public entry point goes through `canonical_key`.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, NamedTuple, Sequence

from .algebra import (
    CENTRAL,
    GeneratorId,
    InvalidGenerator,
    LieAlgebraSpec,
    ModuleTag,
    act_on_basis,
    bracket,
    module_basis,
    validate_generator,
    witt_gen,
)


class CochainShapeError(ValueError):
    """Mismatched arity, degree, algebra or module between cochains."""


class CochainKey(NamedTuple):
    """Canonical argument tuple: ascending Witt indices, t last if present."""

    witt: tuple[int, ...]
    central: bool

    @property
    def degree_sum(self) -> int:
        return sum(self.witt)

    @property
    def arity(self) -> int:
        return len(self.witt) + (1 if self.central else 0)

    def args(self) -> tuple[GeneratorId, ...]:
        gens = tuple(witt_gen(i) for i in self.witt)
        if self.central:
            gens = gens + (CENTRAL,)
        return gens


class CoeffId(NamedTuple):
    """One stored rational: a key plus the value-coordinate selector.

    t_out picks the t-coordinate of an adjoint value over the extended
    algebra (only legal when the key's total degree plus the cochain
    degree is zero); every other case stores the single coordinate in
    the one-dimensional homogeneous component.
    """

    key: CochainKey
    t_out: bool


def canonical_key(args: Sequence[GeneratorId]) -> tuple[int, CochainKey | None]:
    """Sort arguments into canonical order.

    Returns (sign, key); sign is 0 (key None) when an argument repeats.
    """
    arr = list(args)
    sign = 1
    # insertion sort, counting transpositions; arities are tiny
    for i in range(1, len(arr)):
        j = i
        while j > 0 and arr[j] < arr[j - 1]:
            arr[j], arr[j - 1] = arr[j - 1], arr[j]
            sign = -sign
            j -= 1
    for a, b in zip(arr, arr[1:]):
        if a == b:
            return 0, None
    central = bool(arr) and arr[-1].central
    witt = tuple(g.n for g in (arr[:-1] if central else arr))
    return sign, CochainKey(witt, central)


def coordinate_basis(alg: LieAlgebraSpec, module: str, degree: int, key: CochainKey):
    """Value-component basis forced by homogeneity at this key."""
    return module_basis(alg, module, key.degree_sum + degree)


def coords_for_key(alg, module, degree, key) -> list[CoeffId]:
    return [CoeffId(key, b == CENTRAL) for b in coordinate_basis(alg, module, degree, key)]


def _validate_coord(alg, module, arity, degree, cid: CoeffId) -> None:
    key = cid.key
    if key.arity != arity:
        raise CochainShapeError("key %r has arity %d, cochain has %d" % (key, key.arity, arity))
    if any(a >= b for a, b in zip(key.witt, key.witt[1:])):
        raise CochainShapeError("key indices must be strictly increasing: %r" % (key,))
    if key.central and not alg.has_center:
        raise InvalidGenerator("central slot in a cochain over %s" % alg.name)
    basis = coordinate_basis(alg, module, degree, key)
    if cid.t_out:
        if CENTRAL not in basis:
            raise CochainShapeError("no t-coordinate at key %r" % (key,))
    elif not [b for b in basis if b != CENTRAL]:
        raise CochainShapeError(
            "key %r violates the degree-%d support law" % (key, degree)
        )


class HomogeneousCochain:
    """Immutable alternating cochain of fixed degree, stored sparsely.

    The stored coefficients define the cochain globally (zero outside
    the stored support), so evaluation is exact for any arguments.
    """

    __slots__ = ("algebra", "module", "arity", "degree", "_coeffs")

    def __init__(self, algebra, module, arity, degree, coeffs=None):
        self.algebra = algebra
        self.module = module
        self.arity = arity
        self.degree = degree
        clean: dict[CoeffId, Fraction] = {}
        for cid, v in (coeffs or {}).items():
            v = Fraction(v)
            if not v:
                continue
            _validate_coord(algebra, module, arity, degree, cid)
            clean[cid] = v
        self._coeffs = clean

    def coeff(self, cid: CoeffId) -> Fraction:
        return self._coeffs.get(cid, Fraction(0))

    def coeffs(self) -> dict[CoeffId, Fraction]:
        return dict(self._coeffs)

    def support(self) -> list[CoeffId]:
        return sorted(self._coeffs, key=coord_sort_key)

    def is_zero(self) -> bool:
        return not self._coeffs

    def value_at_key(self, key: CochainKey) -> dict[GeneratorId | None, Fraction]:
        """All value components at a canonical key."""
        out = {}
        for b in coordinate_basis(self.algebra, self.module, self.degree, key):
            v = self._coeffs.get(CoeffId(key, b == CENTRAL))
            if v:
                out[b] = v
        return out

    def evaluate(self, args: Sequence[GeneratorId]):
        """Value on an arbitrary generator tuple (exact, alternating).

        Trivial-module cochains return a Fraction; other modules return
        a sparse dict over module basis elements.
        """
        if len(args) != self.arity:
            raise CochainShapeError("expected %d arguments, got %d" % (self.arity, len(args)))
        for g in args:
            validate_generator(self.algebra, g)
        sign, key = canonical_key(args)
        if self.module == ModuleTag.TRIVIAL:
            if sign == 0:
                return Fraction(0)
            return sign * self._coeffs.get(CoeffId(key, False), Fraction(0))
        if sign == 0:
            return {}
        return {b: sign * v for b, v in self.value_at_key(key).items()}

    def _require_same_shape(self, other: "HomogeneousCochain") -> None:
        if (
            self.algebra != other.algebra
            or self.module != other.module
            or self.arity != other.arity
            or self.degree != other.degree
        ):
            raise CochainShapeError("cochain shapes differ")

    def __add__(self, other: "HomogeneousCochain") -> "HomogeneousCochain":
        self._require_same_shape(other)
        coeffs = dict(self._coeffs)
        for cid, v in other._coeffs.items():
            s = coeffs.get(cid, 0) + v
            if s:
                coeffs[cid] = s
            elif cid in coeffs:
                del coeffs[cid]
        return HomogeneousCochain(self.algebra, self.module, self.arity, self.degree, coeffs)

    def scale(self, r) -> "HomogeneousCochain":
        r = Fraction(r)
        if not r:
            return HomogeneousCochain(self.algebra, self.module, self.arity, self.degree)
        return HomogeneousCochain(
            self.algebra,
            self.module,
            self.arity,
            self.degree,
            {cid: r * v for cid, v in self._coeffs.items()},
        )

    def __sub__(self, other: "HomogeneousCochain") -> "HomogeneousCochain":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogeneousCochain):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.module == other.module
            and self.arity == other.arity
            and self.degree == other.degree
            and self._coeffs == other._coeffs
        )

    def __repr__(self) -> str:
        return "HomogeneousCochain(%s, %s, q=%d, d=%d, %d coeffs)" % (
            self.algebra.name,
            self.module,
            self.arity,
            self.degree,
            len(self._coeffs),
        )

    # canonical text form: one line per coordinate, see to_lines()

    def to_lines(self) -> list[str]:
        """Serialize as `indices... [t] [@t] -> numerator/denominator`,
        sorted by canonical coordinate order."""
        lines = []
        for cid in self.support():
            v = self._coeffs[cid]
            toks = [str(i) for i in cid.key.witt]
            if cid.key.central:
                toks.append("t")
            if cid.t_out:
                toks.append("@t")
            lines.append("%s -> %d/%d" % (" ".join(toks), v.numerator, v.denominator))
        return lines

    @classmethod
    def from_lines(cls, algebra, module, arity, degree, lines: Iterable[str]):
        coeffs: dict[CoeffId, Fraction] = {}
        for raw in lines:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            lhs, _, rhs = line.partition("->")
            if not rhs:
                raise CochainShapeError("bad cochain line: %r" % raw)
            toks = lhs.split()
            t_out = False
            central = False
            if toks and toks[-1] == "@t":
                t_out = True
                toks.pop()
            if toks and toks[-1] == "t":
                central = True
                toks.pop()
            witt = tuple(int(tk) for tk in toks)
            cid = CoeffId(CochainKey(witt, central), t_out)
            v = Fraction(rhs.strip())
            if v:
                coeffs[cid] = coeffs.get(cid, 0) + v
        return cls(algebra, module, arity, degree, coeffs)


def zero_cochain(algebra, module, arity, degree) -> HomogeneousCochain:
    return HomogeneousCochain(algebra, module, arity, degree)


def coord_sort_key(cid: CoeffId):
    # pure-Witt block first (by ascending index tuple), then central-slot
    # block, with the t-coordinate of a key after its main coordinate
    return (cid.key.central, cid.key.witt, cid.t_out)


def delta_functional(
    alg: LieAlgebraSpec, module: str, degree: int, args: tuple[GeneratorId, ...]
) -> dict[GeneratorId | None, dict[CoeffId, Fraction]]:
    """Coboundary at a fixed argument tuple, as exact linear functionals.

    For a cochain psi of arity len(args) - 1 and the given degree, the
    value (d psi)(args) decomposes over the module basis forced by
    homogeneity; the returned dict maps each value component to the
    linear functional expressing it in psi's canonical coefficients.
    All signs (operator signs, bracket constants, permutation parities,
    central cocycle terms) are accounted for here and only here.
    """
    out: dict[GeneratorId | None, dict[CoeffId, Fraction]] = {}

    def emit(basis_out, cid, coef):
        row = out.setdefault(basis_out, {})
        s = row.get(cid, 0) + coef
        if s:
            row[cid] = s
        elif cid in row:
            del row[cid]

    def emit_key(mult, gens):
        sign, key = canonical_key(gens)
        if sign == 0:
            return
        for b in module_basis(alg, module, key.degree_sum + degree):
            emit(b, CoeffId(key, b == CENTRAL), mult * sign)

    n = len(args)
    for a in range(n):
        for b in range(a + 1, n):
            sgn = 1 if (a + b) % 2 else -1  # (-1)^{a+b+1} with 1-based positions
            for g, cg in bracket(alg, args[a], args[b]).items():
                rest = args[:a] + args[a + 1 : b] + args[b + 1 :]
                emit_key(sgn * cg, (g,) + rest)
    if module != ModuleTag.TRIVIAL:
        for a in range(n):
            asgn = 1 if a % 2 else -1  # (-1)^a with 1-based positions
            rest = args[:a] + args[a + 1 :]
            sign, key = canonical_key(rest)
            if sign == 0:
                continue
            for b in module_basis(alg, module, key.degree_sum + degree):
                for b2, f in act_on_basis(alg, module, args[a], b).items():
                    emit(b2, CoeffId(key, b == CENTRAL), asgn * sign * f)
    return {bo: row for bo, row in out.items() if row}


def delta_value(psi, args: Sequence[GeneratorId]):
    """(d psi)(args), exactly, from psi's stored global coefficients.

    `psi` may be any object with algebra/module/degree/arity attributes
    and a coeff(CoeffId) method; in particular a HomogeneousCochain or
    a lazy view of one (see LazyCochain).
    """
    args = tuple(args)
    if len(args) != psi.arity + 1:
        raise CochainShapeError("coboundary of an arity-%d cochain takes %d arguments" % (psi.arity, psi.arity + 1))
    f = delta_functional(psi.algebra, psi.module, psi.degree, args)
    if psi.module == ModuleTag.TRIVIAL:
        acc = Fraction(0)
        for cid, coef in f.get(None, {}).items():
            acc += coef * psi.coeff(cid)
        return acc
    result = {}
    for basis_out, row in f.items():
        acc = Fraction(0)
        for cid, coef in row.items():
            acc += coef * psi.coeff(cid)
        if acc:
            result[basis_out] = acc
    return result


class LazyCochain:
    """Cochain defined by a coefficient rule instead of a stored table.

    Used for cochains whose support is unbounded (the coboundary of a
    windowed cochain, closed-form cocycles).  `rule(cid)` must return
    the exact coefficient at any canonical coordinate.
    """

    __slots__ = ("algebra", "module", "arity", "degree", "rule")

    def __init__(self, algebra, module, arity, degree, rule: Callable[[CoeffId], Fraction]):
        self.algebra = algebra
        self.module = module
        self.arity = arity
        self.degree = degree
        self.rule = rule

    def coeff(self, cid: CoeffId) -> Fraction:
        return self.rule(cid)

    def evaluate(self, args: Sequence[GeneratorId]):
        sign, key = canonical_key(tuple(args))
        if self.module == ModuleTag.TRIVIAL:
            if sign == 0:
                return Fraction(0)
            return sign * self.coeff(CoeffId(key, False))
        if sign == 0:
            return {}
        out = {}
        for b in module_basis(self.algebra, self.module, key.degree_sum + self.degree):
            v = self.coeff(CoeffId(key, b == CENTRAL))
            if v:
                out[b] = sign * v
        return out


def coboundary_view(psi) -> LazyCochain:
    """d(psi) as a lazily evaluated cochain of arity q+1 (exact
    everywhere, no window truncation)."""

    def rule(cid: CoeffId) -> Fraction:
        val = delta_value(psi, cid.key.args())
        if psi.module == ModuleTag.TRIVIAL:
            return val
        for b, v in val.items():
            if (b == CENTRAL) == cid.t_out:
                return v
        return Fraction(0)

    return LazyCochain(psi.algebra, psi.module, psi.arity + 1, psi.degree, rule)


def coefficient_coords(
    alg: LieAlgebraSpec, module: str, arity: int, degree: int, window: int
) -> list[CoeffId]:
    """All canonical coordinates of arity-q degree-d cochains with every
    index inside |i| <= window, in canonical column order.

    "Every index" includes the value index for module-valued cochains:
    a key of total degree s carries its value in the component of
    degree s + d, and coordinates whose value index falls outside the
    window are not stored (for the trivial module the law s + d = 0
    already pins the value to degree zero).
    """
    idx = range(-window, window + 1)
    coords: list[CoeffId] = []

    def in_value_window(key: CochainKey) -> bool:
        return module == ModuleTag.TRIVIAL or abs(key.degree_sum + degree) <= window

    for witt in itertools.combinations(idx, arity):
        key = CochainKey(witt, False)
        if in_value_window(key):
            coords.extend(coords_for_key(alg, module, degree, key))
    if alg.has_center and arity >= 1:
        for witt in itertools.combinations(idx, arity - 1):
            key = CochainKey(witt, True)
            if in_value_window(key):
                coords.extend(coords_for_key(alg, module, degree, key))
    coords.sort(key=coord_sort_key)
    return coords


def coboundary(psi: HomogeneousCochain, window: int) -> HomogeneousCochain:
    """d(psi) materialized on the canonical keys with |index| <= window.

    This is the restriction of the exact coboundary: d(psi) of a
    windowed cochain generally has support on arbitrarily large
    indices, so the materialized object agrees with the true coboundary
    on in-window keys and is zero outside.  Use `coboundary_view` or
    `delta_value` when exact values beyond the window are needed.
    """
    coeffs: dict[CoeffId, Fraction] = {}
    seen: set[CochainKey] = set()
    for cid in coefficient_coords(psi.algebra, psi.module, psi.arity + 1, psi.degree, window):
        if cid.key in seen:
            continue
        seen.add(cid.key)
        val = delta_value(psi, cid.key.args())
        if psi.module == ModuleTag.TRIVIAL:
            if val:
                coeffs[CoeffId(cid.key, False)] = val
        else:
            for b, v in val.items():
                coeffs[CoeffId(cid.key, b == CENTRAL)] = v
    return HomogeneousCochain(psi.algebra, psi.module, psi.arity + 1, psi.degree, coeffs)


def cocycle_residuals(psi, tuples: Iterable[Sequence[GeneratorId]]):
    """d(psi) evaluated on each 4-tuple; all-zero means psi satisfies
    the cocycle condition on that tuple set (central contributions
    included exactly)."""
    if psi.arity != 3:
        raise CochainShapeError("cocycle residuals are defined for 3-cochains")
    return [delta_value(psi, tuple(t)) for t in tuples]
