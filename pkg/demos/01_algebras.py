"""Brackets, grading and the Jacobi sweep.

The plain algebra has basis e_n with [e_n, e_m] = (m - n) e_{n+m}; its
central extension adds t with the cubic cocycle alpha.  Everything is
exact rational arithmetic.
"""

from cocycle_engine import CENTRAL, bracket, check_jacobi, e, virasoro, virasoro_alpha, witt


def show(alg, x, y):
    terms = bracket(alg, x, y)
    pretty = " + ".join("%s*%s" % (c, g) for g, c in sorted(terms.items())) or "0"
    print("  [%s, %s] = %s" % (x, y, pretty))


print("Witt brackets:")
show(witt(), e(2), e(3))
show(witt(), e(0), e(7))  # e_0 grades: [e_0, e_m] = m e_m
show(witt(), e(-1), e(1))

print("\nVirasoro brackets (note the central term on the antidiagonal):")
show(virasoro(), e(2), e(-2))
show(virasoro(), e(3), e(-3))
show(virasoro(), e(5), CENTRAL)

print("\nalpha(n, -n) for n = 0..6:", [str(virasoro_alpha(n, -n)) for n in range(7)])

for alg in (witt(), virasoro()):
    bad = check_jacobi(alg, 6)
    print("\nJacobi identity on |index| <= 6 for %s: %s" % (alg.name, "holds" if not bad else bad))
