"""Closed-form cocycles: the central 2-cocycle and the degree-three
generator

    Psi(e_i, e_j, e_k) = (i - j)(j - k)(i - k) delta_{i+j+k,0},

the algebraic form of the Godbillon-Vey cocycle (its continuous
ancestor is the degree-three generator of the cohomology of vector
fields on the circle).  Psi is fully antisymmetric, homogeneous of
degree zero and normalized so that Psi(e_{-1}, e_1, e_0) = 2; its
extension to the centrally extended algebra vanishes whenever an
argument is central.

These cocycles have one nonzero coefficient per zero-sum key, an
unbounded set, so they are kept as lazy coefficient rules and
materialized per window on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional

from .algebra import (
    LieAlgebraSpec,
    ModuleTag,
    generators_in_window,
    virasoro,
    virasoro_alpha,
    witt,
    witt_gen,
)
from .cochains import (
    CoeffId,
    HomogeneousCochain,
    LazyCochain,
    coefficient_coords,
    delta_value,
)
from .cohomology import _generator_data, default_source_window
from .linsolve import RationalSparseMatrix, solve_or_none

PROBE_TRIPLE = (witt_gen(-1), witt_gen(1), witt_gen(0))


def godbillon_vey(i: int, j: int, k: int) -> Fraction:
    """(i-j)(j-k)(i-k) on zero-sum triples, else 0; antisymmetric."""
    if i + j + k != 0:
        return Fraction(0)
    return Fraction((i - j) * (j - k) * (i - k))


@dataclass(frozen=True)
class NamedCocycle:
    """A closed-form cochain: lazy coefficient rule plus shape data."""

    name: str
    algebra: LieAlgebraSpec
    arity: int
    rule: Callable[[CoeffId], Fraction]

    module: str = ModuleTag.TRIVIAL
    degree: int = 0

    def lazy(self) -> LazyCochain:
        return LazyCochain(self.algebra, self.module, self.arity, self.degree, self.rule)

    def materialize(self, window: int) -> HomogeneousCochain:
        coeffs = {}
        for cid in coefficient_coords(self.algebra, self.module, self.arity, self.degree, window):
            v = self.rule(cid)
            if v:
                coeffs[cid] = v
        return HomogeneousCochain(self.algebra, self.module, self.arity, self.degree, coeffs)

    def evaluate(self, args):
        return self.lazy().evaluate(args)


def _gv_rule(cid: CoeffId) -> Fraction:
    if cid.key.central:
        return Fraction(0)
    return godbillon_vey(*cid.key.witt)


def _alpha_rule(cid: CoeffId) -> Fraction:
    return virasoro_alpha(*cid.key.witt)


GODBILLON_VEY = NamedCocycle("godbillon-vey", witt(), 3, _gv_rule)
GODBILLON_VEY_HAT = NamedCocycle("godbillon-vey-hat", virasoro(), 3, _gv_rule)
VIRASORO_ALPHA = NamedCocycle("virasoro-alpha", witt(), 2, _alpha_rule)

NAMED = {c.name: c for c in (GODBILLON_VEY, GODBILLON_VEY_HAT, VIRASORO_ALPHA)}


def gv_cochain(alg: LieAlgebraSpec, window: int) -> HomogeneousCochain:
    """The degree-three generator materialized on a window, over either
    algebra (central-slot coefficients are zero over the extension)."""
    named = GODBILLON_VEY_HAT if alg.has_center else GODBILLON_VEY
    if alg != named.algebra:
        named = NamedCocycle("godbillon-vey", alg, 3, _gv_rule)
    return named.materialize(window)


def verify_cocycle(c: NamedCocycle, window: int) -> bool:
    """All coboundary residuals on window tuples vanish, evaluated from
    the exact closed form (no truncation): tuples containing the central
    generator are included for the extended algebra."""
    lazy = c.lazy()
    gens = generators_in_window(c.algebra, window)
    for tup in combinations(gens, c.arity + 1):
        if delta_value(lazy, tup):
            return False
    return True


@dataclass
class NontrivialityVerdict:
    probe_value: Fraction
    in_windowed_image: bool
    nontrivial: bool
    checks_agree: bool


def verify_nontrivial(
    c, window: int, source_window: Optional[int] = None
) -> NontrivialityVerdict:
    """Two independent coboundary exclusions that must agree.

    (a) Direct functional: the coboundary of any 2-cochain vanishes
    identically on (e_{-1}, e_1, e_0), because the three bracket terms
    there reduce to 2*Phi(e_0,e_0) - Phi(e_1,e_{-1}) - Phi(e_{-1},e_1),
    which is zero by alternation (the central cocycle also vanishes on
    those index pairs).  A nonzero value at that triple excludes
    coboundaries outright.

    (b) Linear algebra: the window-N coefficient vector is tested for
    membership in the span of the windowed coboundary image, certified
    by rank comparison.

    `c` may be a NamedCocycle or any degree-zero trivial-module
    3-cochain (HomogeneousCochain) supported inside the window.
    """
    if source_window is None:
        source_window = default_source_window(window)
    alg = c.algebra
    if getattr(c, "module", ModuleTag.TRIVIAL) != ModuleTag.TRIVIAL or c.arity != 3:
        raise ValueError("nontriviality probe is defined for trivial-module 3-cochains")
    probe = c.evaluate(PROBE_TRIPLE)

    cols, src, a_rows = _generator_data(alg, ModuleTag.TRIVIAL, 3, 0, window, source_window)
    if isinstance(c, NamedCocycle):
        vec = [c.rule(cid) for cid in cols]
    else:
        vec = [c.coeff(cid) for cid in cols]
    image_matrix = RationalSparseMatrix.from_rows(len(src), a_rows)
    solution = solve_or_none(image_matrix, vec)
    in_image = solution is not None

    nontrivial = probe != 0
    agree = (probe != 0 and not in_image) or (probe == 0 and in_image)
    return NontrivialityVerdict(
        probe_value=probe,
        in_windowed_image=in_image,
        nontrivial=nontrivial,
        checks_agree=agree,
    )
