"""Cochains, coboundaries and cohomology for twisted pre-Lie superalgebras.

Cochains of degree n are maps from (V tensor Lambda^{n-1} A) to V, where the
exterior power is the super one (odd vectors may repeat).  A cochain must
commute with the twists, which usually cuts the space down a lot.

Run:  python demos/cohomology_tour.py
"""

import random

from bihomsuper import generate as g
from bihomsuper.cohomology import (CochainComplex, WedgeBasis, cochain_dims, cohomology_table,
                                   verify_d_squared)
from bihomsuper.errors import DSquaredViolation
from bihomsuper.representations import regular_bimodule
from bihomsuper.varieties import PRELIE

# Exterior powers: on an odd line the wedge powers never vanish.
for s in (g.zero_algebra(["e"], [], PRELIE), g.zero_algebra([], ["f"], PRELIE)):
    print("space %s, argument tuples for degrees 1..5:" % (s.space,),
          [len(WedgeBasis.build(s.space, n)) for n in range(1, 6)])
    for row in cohomology_table(s, regular_bimodule(s), 4):
        print("  H^%d %s: dim Z = %d, dim B = %d, dim H = %d"
              % (row.degree, "odd " if row.parity else "even", row.dim_z, row.dim_b, row.dim_h))

def _corpus_like(rng):
    while True:
        s0 = g.random_prelie_family(rng)
        a, b = g.random_diagonal_morphism_pair(rng, s0)
        t = g.yau_twist(s0, a, b)
        if t.invertible and t.alpha != t.beta:
            yield t


# A pre-Lie superalgebra twisted by two different diagonal automorphisms.
rng = random.Random(3)
s = next(_corpus_like(rng))
bm = regular_bimodule(s)
print("\ntwisted pre-Lie on %s" % (s.space,))
print("cochain dimensions, all maps vs (twist-compatible, even, odd):")
for n in range(1, 4):
    full = len(WedgeBasis.build(s.space, n)) * s.space.dim
    print("  degree %d: %d -> %s" % (n, full, cochain_dims(s, bm, n)))

cx = CochainComplex.build(s, bm, 3)
print(verify_d_squared(cx).render())
for row in cohomology_table(s, bm, 3):
    print("  H^%d %s: %d" % (row.degree, "odd " if row.parity else "even", row.dim_h))

# With alpha^n in place of alpha^(n-1) in the leading term the square of the
# coboundary stops vanishing on many twisted instances.
for t in _corpus_like(rng):
    try:
        cohomology_table(t, regular_bimodule(t), 2, alpha_n_last=True)
    except DSquaredViolation as exc:
        diag = [str(t.alpha.matrix[i, i]) for i in range(t.space.dim)]
        print("\nalpha^n variant on %s, alpha diagonal %s:" % (t.space, diag))
        print(exc.report.render())
        break
