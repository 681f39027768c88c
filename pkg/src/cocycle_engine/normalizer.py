"""Constructive decomposition of degree-zero 3-cocycles.

Pipeline, for a trivial-module 3-cocycle psi on the plain or extended
algebra, all exact:

1. Split off the known generator: lambda = psi(e_{-1}, e_1, e_0) / 2,
   and psi' = psi - lambda * Psi vanishes at that probe triple.
2. Cohomological normalization (one explicit 2-cochain phi):
   b_0 = c'_{-1,1} / 2 kills the central coefficient c_{-1,1}, and the
   gauge phi_{0,0} = phi_{1,-1} = phi_{2,-2} = 0 with

       phi_{i+1,-(i+1)} = -psi'_{i,-1-i,1} / (1 - i)
                          - (2 + i)/(1 - i) * phi_{i,-i}      (i != 1)

   kills every level-one coefficient psi_{i,j,1} of psi' - d(phi)
   (negative levels follow from the positive ones by alternation).
3. The central coefficients of a normalized cocycle follow the cubic
   profile c_{k,-k} = 1/6 (k+1) k (k-1) c_{2,-2}.
4. Level recursions propagate the two seed coefficients psi_{-2,2,0}
   and c_{2,-2} to every zero-sum coefficient in the window, in the
   order: level 0, -1, -2, +2, then general +-k.  Each recursion is a
   cocycle condition on a specific argument tuple with one argument of
   index +-1, so no central terms survive.
5. Two further cocycle conditions, on (e_{-4}, e_{-3}, e_2, e_5) and
   (e_{-3}, e_{-2}, e_2, e_3), reduce under the table to linear
   relations that force both seeds to zero.  Hence the normalized
   remainder vanishes identically and psi = lambda * Psi + d(phi).

Everything is written against canonical ascending keys; the recursion
formulas quantify over arbitrary index arrangements, so every
coefficient access goes through a parity-applying getter (this is the
single largest sign-bug surface, and it is confined to one place).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .algebra import CENTRAL, ModuleTag, witt_gen
from .cochains import (
    CochainKey,
    CoeffId,
    HomogeneousCochain,
    canonical_key,
    coboundary,
)
from .cohomology import _condition_data
from .knowncocycles import PROBE_TRIPLE, gv_cochain


class NotACocycle(ValueError):
    """Input failed the windowed cocycle conditions."""


class RecursionGap(ValueError):
    """The window is too small to seed or propagate a required value."""


class ProfileViolation(ValueError):
    """Central coefficients do not follow the forced cubic profile."""


class ResidualNonZero(RuntimeError):
    """Decomposition left a nonzero remainder (window too small or
    inconsistent input)."""


@dataclass(frozen=True)
class SeedForm:
    """Exact linear form a * psi_seed + b * c_seed in the two seeds."""

    a: Fraction
    b: Fraction

    def __add__(self, other):
        if other == 0:
            return self
        return SeedForm(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return SeedForm(-self.a, -self.b)

    def __sub__(self, other):
        if other == 0:
            return self
        return SeedForm(self.a - other.a, self.b - other.b)

    def __mul__(self, scalar):
        return SeedForm(self.a * scalar, self.b * scalar)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.a) or bool(self.b)


SEED_PSI = SeedForm(Fraction(1), Fraction(0))
SEED_C = SeedForm(Fraction(0), Fraction(1))
SEED_ZERO = SeedForm(Fraction(0), Fraction(0))

Value = Union[Fraction, SeedForm]


class CoefficientTable:
    """Coefficients of a normalized degree-zero 3-cocycle on a window.

    psi maps canonical ascending zero-sum triples to values, c maps
    k >= 1 to c_{k,-k}; values are Fractions or SeedForms.  The getters
    accept any index arrangement and apply the permutation parity;
    repeated indices and level-one slots (an index equal to +1) read as
    zero, the latter because the table only represents cocycles that
    have already been normalized.
    """

    def __init__(self, window: int, zero: Value):
        if window < 7:
            raise RecursionGap("final relations reference index 7; need window >= 7")
        self.window = window
        self.zero = zero
        self.psi: dict[tuple[int, int, int], Value] = {}
        self.c: dict[int, Value] = {}

    def _canonical(self, i: int, j: int, k: int):
        sign, key = canonical_key((witt_gen(i), witt_gen(j), witt_gen(k)))
        return sign, (key.witt if key is not None else None)

    def psi_at(self, i: int, j: int, k: int) -> Value:
        if max(abs(i), abs(j), abs(k)) > self.window:
            raise RecursionGap("coefficient (%d,%d,%d) outside window %d" % (i, j, k, self.window))
        sign, triple = self._canonical(i, j, k)
        if sign == 0:
            return self.zero
        if i + j + k != 0 or 1 in triple:
            return self.zero
        if triple not in self.psi:
            raise RecursionGap("coefficient %r not filled yet (fill-order bug)" % (triple,))
        return sign * self.psi[triple]

    def set_psi(self, i: int, j: int, k: int, value: Value) -> None:
        sign, triple = self._canonical(i, j, k)
        if sign == 0 or i + j + k != 0:
            raise ValueError("cannot store degenerate coefficient (%d,%d,%d)" % (i, j, k))
        self.psi[triple] = sign * value

    def c_at(self, i: int, j: int) -> Value:
        if i + j != 0 or i == 0:
            return self.zero
        if abs(i) > self.window:
            raise RecursionGap("central coefficient (%d,%d) outside window" % (i, j))
        v = self.c.get(abs(i), self.zero)
        return v if i > 0 else -1 * v

    def seeds(self) -> tuple[Value, Value]:
        return self.psi_at(-2, 2, 0), self.c_at(2, -2)


def propagate_recursions(seeds: tuple[Value, Value], window: int) -> CoefficientTable:
    """Fill every in-window coefficient from the two seeds.

    Valid only for normalized cocycles (all level-one coefficients
    zero); the recursions are, in order:

      level  0: psi_{-1-i,1+i,0} = (2+i)/(i-1) psi_{-i,i,0}, i from 2 up
      level -1: psi_{1-i,i,-1} = (-2 psi_{0,-i,i} - (i-1) psi_{1+i,-i,-1}) / (1+i), i from -2 down
      level -2: psi_{2-i,i,-2} = (-3 psi_{-1,1-i,i} - (i-1) psi_{1+i,1-i,-2}) / i, i from -3 down
      level +2: psi_{-2-i,i,2} = ((3+i) psi_{1-i,i,-1} - (1+i) psi_{-1+i,-1-i,2}
                                  + (i-2) psi_{2+i,-1-i,-1}) / i, i from 3 up
      level 1+k (k >= 2): psi_{-1-i-k,i,1+k}
          = (-(i-1) psi_{1+i,-1-i-k,k} - (2+i+k) psi_{-i-k,i,k}) / (1-k), i from k+2 up
      level k-1 (k <= -2): psi_{1-i-k,i,-1+k}
          = ((i+2k-1) psi_{1-i,i,-1} - (1+i) psi_{-1+i,1-i-k,k} - (2i+k-1) psi_{1-k,k,-1}
             - (i+k-2) psi_{-i-k,i,k} - (k-i) psi_{i+k,1-i-k,-1}) / (-1-k), i from k-2 down

    together with the central profile c_{k,-k} = 1/6 (k+1)k(k-1) c_{2,-2}.
    Coefficients whose recursion starting points degenerate (a repeated
    index) read as zero from the table getter; nothing is special-cased.
    """
    psi_seed, c_seed = seeds
    if isinstance(psi_seed, int):
        psi_seed = Fraction(psi_seed)
    if isinstance(c_seed, int):
        c_seed = Fraction(c_seed)
    zero = psi_seed * Fraction(0)
    tbl = CoefficientTable(window, zero)
    n = window

    tbl.set_psi(-2, 2, 0, psi_seed)
    for k in range(1, n + 1):
        tbl.c[k] = Fraction((k + 1) * k * (k - 1), 6) * c_seed

    for i in range(2, n):
        tbl.set_psi(-1 - i, 1 + i, 0, Fraction(2 + i, i - 1) * tbl.psi_at(-i, i, 0))

    for i in range(-2, -n, -1):
        val = Fraction(-2) * tbl.psi_at(0, -i, i) - Fraction(i - 1) * tbl.psi_at(1 + i, -i, -1)
        tbl.set_psi(1 - i, i, -1, Fraction(1, 1 + i) * val)

    for i in range(-3, 1 - n, -1):
        val = Fraction(-3) * tbl.psi_at(-1, 1 - i, i) - Fraction(i - 1) * tbl.psi_at(1 + i, 1 - i, -2)
        tbl.set_psi(2 - i, i, -2, Fraction(1, i) * val)

    for i in range(3, n - 1):
        val = (
            Fraction(3 + i) * tbl.psi_at(1 - i, i, -1)
            - Fraction(1 + i) * tbl.psi_at(-1 + i, -1 - i, 2)
            + Fraction(i - 2) * tbl.psi_at(2 + i, -1 - i, -1)
        )
        tbl.set_psi(-2 - i, i, 2, Fraction(1, i) * val)

    for k in range(2, n):
        lo, hi = k + 2, n - k - 1
        if lo > hi:
            break
        for i in range(lo, hi + 1):
            val = -Fraction(i - 1) * tbl.psi_at(1 + i, -1 - i - k, k) - Fraction(2 + i + k) * tbl.psi_at(
                -i - k, i, k
            )
            tbl.set_psi(-1 - i - k, i, 1 + k, Fraction(1, 1 - k) * val)

    for k in range(-2, -n, -1):
        hi, lo = k - 2, 1 - k - n
        if hi < lo:
            break
        for i in range(hi, lo - 1, -1):
            val = (
                Fraction(i + 2 * k - 1) * tbl.psi_at(1 - i, i, -1)
                - Fraction(1 + i) * tbl.psi_at(-1 + i, 1 - i - k, k)
                - Fraction(2 * i + k - 1) * tbl.psi_at(1 - k, k, -1)
                - Fraction(i + k - 2) * tbl.psi_at(-i - k, i, k)
                - Fraction(k - i) * tbl.psi_at(i + k, 1 - i - k, -1)
            )
            tbl.set_psi(1 - i - k, i, -1 + k, Fraction(1, -1 - k) * val)

    return tbl


def symbolic_table(window: int) -> CoefficientTable:
    """Table with formal seeds, for exhibiting the forced relations."""
    return propagate_recursions((SEED_PSI, SEED_C), window)


def _as_seed_pair(value: Value) -> tuple[Fraction, Fraction]:
    if isinstance(value, SeedForm):
        return value.a, value.b
    raise TypeError("expected a symbolic value")


def _normalize_relation(a: Fraction, b: Fraction) -> tuple[int, int]:
    """Clear denominators, divide by the content, make the leading
    coefficient positive: the relation a*psi + b*c = 0 in lowest terms."""
    if not a and not b:
        return (0, 0)
    from math import gcd

    den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    ia, ib = int(a * den), int(b * den)
    g = gcd(ia, ib)
    ia, ib = ia // g, ib // g
    lead = ia if ia else ib
    if lead < 0:
        ia, ib = -ia, -ib
    return (ia, ib)


@dataclass
class FinalRelations:
    """The two closing cocycle conditions evaluated on the table.

    relation1 comes from the argument tuple (e_{-4}, e_{-3}, e_2, e_5):
        -psi_{-7,5,2} + 6 psi_{5,-3,-2} - 5 psi_{5,-4,-1} + 3 psi_{7,-4,-3} = 0
    relation2 from (e_{-3}, e_{-2}, e_2, e_3):
        1/2 c_{-3,3} + 2 c_{-2,2} - psi_{-5,3,2} + 5 psi_{3,-2,-1}
        + 4 psi_{0,-3,3} + 6 psi_{0,-2,2} + psi_{5,-3,-2} = 0

    With symbolic seeds the reduced forms are stored as normalized
    integer pairs (coefficient on psi_{-2,2,0}, coefficient on c_{2,-2});
    with numeric seeds `holds` records whether both relations vanish.
    Mind the seed orientation: relations quoted against c_{-2,2} flip
    the sign of the second entry, e.g. reduced2 = (5, -3) says
    5 psi_{-2,2,0} - 3 c_{2,-2} = 0, i.e. 5 psi_{-2,2,0} + 3 c_{-2,2} = 0.
    """

    symbolic: bool
    relation1: Value
    relation2: Value
    reduced1: Optional[tuple[int, int]] = None
    reduced2: Optional[tuple[int, int]] = None
    forces_seeds_zero: Optional[bool] = None
    holds: Optional[bool] = None


def verify_final_relations(table: CoefficientTable) -> FinalRelations:
    """Substitute the table into the two closing cocycle conditions and
    reduce them to relations in the seeds."""
    rel1 = (
        -1 * table.psi_at(-7, 5, 2)
        + 6 * table.psi_at(5, -3, -2)
        - 5 * table.psi_at(5, -4, -1)
        + 3 * table.psi_at(7, -4, -3)
    )
    rel2 = (
        Fraction(1, 2) * table.c_at(-3, 3)
        + 2 * table.c_at(-2, 2)
        - 1 * table.psi_at(-5, 3, 2)
        + 5 * table.psi_at(3, -2, -1)
        + 4 * table.psi_at(0, -3, 3)
        + 6 * table.psi_at(0, -2, 2)
        + table.psi_at(5, -3, -2)
    )
    if isinstance(rel1, SeedForm):
        red1 = _normalize_relation(*_as_seed_pair(rel1))
        red2 = _normalize_relation(*_as_seed_pair(rel2))
        # rank-2 system in (psi_seed, c_seed) pins both seeds to zero
        det = red1[0] * red2[1] - red1[1] * red2[0]
        return FinalRelations(
            symbolic=True,
            relation1=rel1,
            relation2=rel2,
            reduced1=red1,
            reduced2=red2,
            forces_seeds_zero=det != 0,
        )
    return FinalRelations(
        symbolic=False,
        relation1=rel1,
        relation2=rel2,
        holds=(rel1 == 0 and rel2 == 0),
    )


def gv_coefficient(psi) -> Fraction:
    """Coordinate of psi on the degree-three generator: the probe value
    psi(e_{-1}, e_1, e_0) divided by the generator's value 2 there."""
    return Fraction(psi.evaluate(PROBE_TRIPLE)) / 2


def subtract_gv(psi: HomogeneousCochain, window: int) -> tuple[Fraction, HomogeneousCochain]:
    """lambda and psi - lambda * Psi (materialized on the window); the
    difference vanishes on the probe triple."""
    lam = gv_coefficient(psi)
    if lam:
        psi = psi - gv_cochain(psi.algebra, window).scale(lam)
    return lam, psi


def _level_one_value(psi: HomogeneousCochain, i: int) -> Fraction:
    return psi.evaluate((witt_gen(i), witt_gen(-1 - i), witt_gen(1)))


def build_normalizing_cochain(psi_prime: HomogeneousCochain, window: int) -> HomogeneousCochain:
    """The 2-cochain phi whose coboundary removes all level-one
    coefficients (and the central c_{-1,1}) from psi_prime.

    Requires psi_prime(e_{-1}, e_1, e_0) = 0 and support inside the
    window.  Gauge: phi_{0,0} = phi_{1,-1} = phi_{2,-2} = 0; values for
    index pairs above 2 follow the recursion in the module docstring,
    and negative pairs are their negatives by alternation.
    """
    alg = psi_prime.algebra
    if psi_prime.evaluate(PROBE_TRIPLE) != 0:
        raise ValueError("normalization requires a cocycle vanishing at (e_-1, e_1, e_0)")
    for cid in psi_prime.support():
        if any(abs(ix) > window for ix in cid.key.witt):
            raise RecursionGap("support of psi' exceeds the stated window")

    coeffs: dict[CoeffId, Fraction] = {}
    if alg.has_center:
        c_m11 = psi_prime.evaluate((witt_gen(-1), witt_gen(1), CENTRAL))
        b0 = Fraction(c_m11) / 2
        if b0:
            coeffs[CoeffId(CochainKey((0,), True), False)] = b0

    phi_prev = Fraction(0)  # phi_{2,-2}, the gauge zero
    for i in range(2, window):
        phi_next = -_level_one_value(psi_prime, i) / (1 - i) - Fraction(2 + i, 1 - i) * phi_prev
        if phi_next:
            # canonical key (-(i+1), i+1) stores phi(e_{-(i+1)}, e_{i+1}) = -phi_{i+1,-(i+1)}
            coeffs[CoeffId(CochainKey((-(i + 1), i + 1), False), False)] = -phi_next
        phi_prev = phi_next
    return HomogeneousCochain(alg, ModuleTag.TRIVIAL, 2, 0, coeffs)


def level_one_is_zero(psi: HomogeneousCochain, window: int) -> bool:
    return all(_level_one_value(psi, i) == 0 for i in range(-window, window) if abs(1 + i) <= window)


def central_profile_check(psi: HomogeneousCochain, window: int) -> Fraction:
    """Verify c_{k,-k} = 1/6 (k+1)k(k-1) c_{2,-2} for all in-window k
    and return the seed c_{2,-2}; the profile is forced for normalized
    cocycles, so a violation means the input was not one."""
    if not psi.algebra.has_center:
        return Fraction(0)
    c = {k: psi.evaluate((witt_gen(k), witt_gen(-k), CENTRAL)) for k in range(1, window + 1)}
    seed = c[2]
    for k, v in c.items():
        if v != Fraction((k + 1) * k * (k - 1), 6) * seed:
            raise ProfileViolation(
                "c_{%d,-%d} = %s breaks the cubic profile (seed %s)" % (k, k, v, seed)
            )
    return seed


@dataclass
class DecompositionResult:
    lam: Fraction
    phi: HomogeneousCochain
    residual_norm_zero: bool

    def to_json_dict(self) -> dict:
        return {
            "lambda": "%d/%d" % (self.lam.numerator, self.lam.denominator),
            "phi": self.phi.to_lines(),
            "residual_zero": self.residual_norm_zero,
        }


def _windowed_residuals(psi: HomogeneousCochain, window: int):
    cols, _, rows, labels = _condition_data(psi.algebra, ModuleTag.TRIVIAL, 3, 0, window)
    vec = [psi.coeff(cid) for cid in cols]
    for row, label in zip(rows, labels):
        acc = Fraction(0)
        for i, coef in row.items():
            if vec[i]:
                acc += coef * vec[i]
        if acc:
            yield label, acc


def decompose(psi: HomogeneousCochain, window: int) -> DecompositionResult:
    """Certificate psi = lambda * Psi + d(phi), exact on the window.

    Runs the whole pipeline: windowed cocycle test, generator split,
    normalization, central profile, seed extraction, the closing
    relations, and a final coefficient-by-coefficient zero check of the
    remainder.  The returned phi accumulates the entire coboundary
    (b_0 plus the diagonal pair values)."""
    if psi.module != ModuleTag.TRIVIAL or psi.arity != 3 or psi.degree != 0:
        raise ValueError("decompose handles degree-zero trivial-module 3-cochains")
    if window < 7:
        raise RecursionGap("final relations reference index 7; need window >= 7")

    bad = next(_windowed_residuals(psi, window), None)
    if bad is not None:
        (tup, _), value = bad
        raise NotACocycle(
            "coboundary residual %s on %s" % (value, "(" + ", ".join(map(str, tup)) + ")")
        )

    lam, psi1 = subtract_gv(psi, window)
    phi = build_normalizing_cochain(psi1, window)
    psi2 = psi1 - coboundary(phi, window) if not phi.is_zero() else psi1

    if not level_one_is_zero(psi2, window):
        raise ResidualNonZero("normalization failed to clear level-one coefficients")
    seed_c = central_profile_check(psi2, window) if psi.algebra.has_center else Fraction(0)
    seed_psi = psi2.evaluate((witt_gen(-2), witt_gen(2), witt_gen(0)))

    relations = verify_final_relations(propagate_recursions((seed_psi, seed_c), window))
    if not relations.holds:
        raise ResidualNonZero(
            "seed coefficients (%s, %s) violate the closing relations" % (seed_psi, seed_c)
        )
    if not psi2.is_zero():
        leftover = psi2.support()[0]
        raise ResidualNonZero("nonzero remainder at %r (window too small?)" % (leftover,))
    return DecompositionResult(lam=lam, phi=phi, residual_norm_zero=True)
