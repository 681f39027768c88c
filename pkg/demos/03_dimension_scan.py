"""Windowed dimension scans for the low cohomology of both algebras.

Per window pair (N, M): dim Z is the dimension of the restriction to
window-N coordinates of the ambient cocycle space, dim B the rank of
the coboundary image generated from window-M sources, and dim H their
difference.  Stabilization across a ladder is the desk-scale evidence
for the infinite-dimensional value.
"""

import json

from cocycle_engine import ModuleTag, stabilization_scan, virasoro, witt

LADDER = [(n, 2 * n) for n in range(4, 8)]

print("trivial coefficients (expect H = 1, 0, 1, 1 over W and 1, 0, 0, 1 over V):")
for alg in (witt(), virasoro()):
    for q in range(4):
        rep = stabilization_scan(alg, ModuleTag.TRIVIAL, q, 0, LADDER)
        dims = [r.dimH for r in rep.rows]
        print(
            "  H^%d(%s, K): per-rung %s  stabilized=%s stable=%s"
            % (q, alg.name, dims, rep.stabilized, rep.stable_dim)
        )

print("\nadjoint coefficients over the extension, q = 2 (expect 0):")
rep = stabilization_scan(virasoro(), ModuleTag.ADJOINT, 2, 0, LADDER)
print(json.dumps(rep.to_json_dict(), indent=2))
