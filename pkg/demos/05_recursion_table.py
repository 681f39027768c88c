"""Seed propagation: every coefficient of a normalized 3-cocycle is a
multiple of psi_{-2,2,0} (and c_{2,-2} for the central coefficients),
and two closing cocycle conditions force both seeds to zero.
"""

from cocycle_engine import symbolic_table, verify_final_relations

tbl = symbolic_table(7)

print("level-zero chain (multiples of psi_{-2,2,0}):")
for m in range(2, 8):
    print("  psi_{-%d,%d,0} = %s" % (m, m, tbl.psi_at(-m, m, 0).a))

print("\nlevel minus one:")
for m in range(2, 7):
    print("  psi_{%d,-%d,-1} = %s" % (m + 1, m, tbl.psi_at(m + 1, -m, -1).a))

print("\nlevel plus two:")
for m in range(3, 6):
    print("  psi_{-%d,%d,2} = %s" % (m + 2, m, tbl.psi_at(-m - 2, m, 2).a))

print("\ncentral profile (multiples of c_{2,-2}):")
for k in range(1, 8):
    print("  c_{%d,-%d} = %s" % (k, k, tbl.c_at(k, -k).b))

rel = verify_final_relations(tbl)
print("\nclosing relations on the seeds (psi_{-2,2,0}, c_{2,-2}):")
print("  from (e_-4, e_-3, e_2, e_5):", rel.reduced1)
print("  from (e_-3, e_-2, e_2, e_3):", rel.reduced2)
print("  jointly force both seeds to zero:", rel.forces_seeds_zero)
