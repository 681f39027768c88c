"""Structure constants of the Witt algebra and its central extension.

The Witt algebra W is spanned over Q by generators e_n (n in Z) with

    [e_n, e_m] = (m - n) e_{n+m},

internally Z-graded by deg(e_n) = n (the grading is ad(e_0)).  Its
universal central extension V, the Virasoro algebra, adds one central
generator t of degree zero:

    [e_n, e_m] = (m - n) e_{n+m} + alpha(n, m) t,    [e_n, t] = [t, t] = 0,

where alpha(n, m) = -1/12 (n^3 - n) delta_{n+m,0} is the defining
2-cocycle of the extension.

Everything is exact: scalars are `fractions.Fraction` (or plain ints),
linear combinations are sparse dicts keyed by `GeneratorId`, and no
floating point appears anywhere.  All values are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple


class InvalidGenerator(ValueError):
    """A generator that does not belong to the ambient algebra."""


class GeneratorId(NamedTuple):
    """Basis element: e_n for an integer n, or the central element t.

    The tuple order (central, n) makes sorted sequences canonical:
    Witt generators ascend by index and t sorts after all of them.
    """

    central: bool
    n: int

    @property
    def degree(self) -> int:
        return self.n  # stored 0 for the central element

    def __str__(self) -> str:
        return "t" if self.central else "e%d" % self.n


CENTRAL = GeneratorId(True, 0)


def witt_gen(n: int) -> GeneratorId:
    return GeneratorId(False, n)


# short alias, matches the usual e_n notation
e = witt_gen


def virasoro_alpha(n: int, m: int) -> Fraction:
    """Central 2-cocycle alpha(n, m) = -1/12 (n^3 - n) delta_{n+m,0}.

    Antisymmetric, supported on the antidiagonal n + m = 0, and zero
    for |n| <= 1 (the linear part of any n^3 + c*n representative is a
    coboundary; this normalization kills indices 0 and +-1).
    """
    if n + m != 0:
        return Fraction(0)
    return Fraction(-(n**3 - n), 12)


def _standard_pair_coeff(n: int, m: int) -> int:
    return m - n


@dataclass(frozen=True)
class LieAlgebraSpec:
    """Which algebra we work in, as a structure-constant rule.

    `pair_coeff(n, m)` is the coefficient of e_{n+m} in [e_n, e_m]; for
    both algebras it is m - n.  `alpha` is the central cocycle, present
    only when `has_center`.  Keeping the rule as a field gives tests a
    seam to build deliberately corrupted algebras.
    """

    name: str
    has_center: bool
    pair_coeff: Callable[[int, int], int] = _standard_pair_coeff
    alpha: Callable[[int, int], Fraction] | None = None


_WITT = LieAlgebraSpec("witt", False)
_VIRASORO = LieAlgebraSpec("virasoro", True, alpha=virasoro_alpha)


def witt() -> LieAlgebraSpec:
    return _WITT


def virasoro() -> LieAlgebraSpec:
    return _VIRASORO


def algebra_by_name(name: str) -> LieAlgebraSpec:
    try:
        return {"witt": _WITT, "virasoro": _VIRASORO}[name]
    except KeyError:
        raise InvalidGenerator("unknown algebra %r" % name) from None


class ModuleTag:
    """Coefficient modules: the trivial module K, the adjoint module,
    and (for the centrally extended algebra) the quotient-by-center
    acting through the projection, with t acting as zero."""

    TRIVIAL = "trivial"
    ADJOINT = "adjoint"
    WITT_QUOTIENT = "witt"

    ALL = (TRIVIAL, ADJOINT, WITT_QUOTIENT)


def validate_generator(alg: LieAlgebraSpec, x: GeneratorId) -> None:
    if x.central and not alg.has_center:
        raise InvalidGenerator("central generator is not an element of %s" % alg.name)


def bracket(alg: LieAlgebraSpec, x: GeneratorId, y: GeneratorId) -> dict[GeneratorId, Fraction]:
    """[x, y] as a sparse combination of generators (at most two terms)."""
    validate_generator(alg, x)
    validate_generator(alg, y)
    if x.central or y.central:
        return {}
    out: dict[GeneratorId, Fraction] = {}
    c = alg.pair_coeff(x.n, y.n)
    if c:
        out[witt_gen(x.n + y.n)] = Fraction(c)
    if alg.has_center:
        a = alg.alpha(x.n, y.n)
        if a:
            out[CENTRAL] = a
    return out


def bracket_lin(
    alg: LieAlgebraSpec,
    u: dict[GeneratorId, Fraction],
    v: dict[GeneratorId, Fraction],
) -> dict[GeneratorId, Fraction]:
    """Bilinear extension of the bracket to sparse combinations."""
    out: dict[GeneratorId, Fraction] = {}
    for x, cx in u.items():
        for y, cy in v.items():
            for g, c in bracket(alg, x, y).items():
                s = out.get(g, 0) + cx * cy * c
                if s:
                    out[g] = s
                elif g in out:
                    del out[g]
    return out


def module_basis(alg: LieAlgebraSpec, module: str, n: int) -> list[GeneratorId | None]:
    """Basis of the degree-n homogeneous component of the module.

    Trivial module: the unit of K (encoded None), concentrated in
    degree 0.  Adjoint: e_n, plus t when the algebra has a center and
    n = 0 (the only two-dimensional component).  Quotient module: e_n.
    """
    if module == ModuleTag.TRIVIAL:
        return [None] if n == 0 else []
    if module == ModuleTag.ADJOINT:
        if alg.has_center and n == 0:
            return [witt_gen(0), CENTRAL]
        return [witt_gen(n)]
    if module == ModuleTag.WITT_QUOTIENT:
        if not alg.has_center:
            raise InvalidGenerator("quotient module only differs from adjoint over the extension")
        return [witt_gen(n)]
    raise InvalidGenerator("unknown module tag %r" % module)


def act_on_basis(
    alg: LieAlgebraSpec, module: str, x: GeneratorId, b: GeneratorId | None
) -> dict[GeneratorId | None, Fraction]:
    """Action of the generator x on the module basis element b."""
    validate_generator(alg, x)
    if module == ModuleTag.TRIVIAL:
        return {}
    if b is None:
        raise InvalidGenerator("scalar module element in a non-trivial module")
    if x.central or b.central:
        return {}  # t is central; it acts as zero and is acted on by zero
    if module == ModuleTag.ADJOINT:
        return bracket(alg, x, b)
    # quotient: bracket through the projection, no central term
    out: dict[GeneratorId | None, Fraction] = {}
    c = alg.pair_coeff(x.n, b.n)
    if c:
        out[witt_gen(x.n + b.n)] = Fraction(c)
    return out


def module_action(
    alg: LieAlgebraSpec,
    module: str,
    x: GeneratorId,
    v: dict[GeneratorId | None, Fraction] | Fraction,
) -> dict[GeneratorId | None, Fraction] | Fraction:
    """x . v, extended linearly.  Trivial-module values are scalars and
    map to 0; other module values are sparse dicts over basis elements."""
    if module == ModuleTag.TRIVIAL:
        return Fraction(0)
    if not isinstance(v, dict):
        raise InvalidGenerator("module element must be a sparse dict for %s module" % module)
    out: dict[GeneratorId | None, Fraction] = {}
    for b, cb in v.items():
        for b2, c in act_on_basis(alg, module, x, b).items():
            s = out.get(b2, 0) + cb * c
            if s:
                out[b2] = s
            elif b2 in out:
                del out[b2]
    return out


def generators_in_window(alg: LieAlgebraSpec, window: int) -> list[GeneratorId]:
    gens = [witt_gen(i) for i in range(-window, window + 1)]
    if alg.has_center:
        gens.append(CENTRAL)
    return gens


def check_jacobi(alg: LieAlgebraSpec, window: int) -> list[tuple[GeneratorId, GeneratorId, GeneratorId]]:
    """Evaluate [[x,y],z] + [[y,z],x] + [[z,x],y] on every generator
    triple with |index| <= window; return the violating triples."""
    gens = generators_in_window(alg, window)
    bad = []
    for x, y, z in itertools.combinations(gens, 3):
        acc: dict[GeneratorId, Fraction] = {}
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            inner = bracket(alg, a, b)
            for g, cg in bracket_lin(alg, inner, {c: Fraction(1)}).items():
                s = acc.get(g, 0) + cg
                if s:
                    acc[g] = s
                elif g in acc:
                    del acc[g]
        if acc:
            bad.append((x, y, z))
    return bad
