"""From Rota-Baxter operators on associative superalgebras to pre-Lie structures.

Run:  python demos/rota_baxter_to_prelie.py
"""

import _show
from bihomsuper import constructions as C
from bihomsuper import generate as g
from bihomsuper.operators import check_rota_baxter
from bihomsuper.search import FULL, SearchSpec, search
from bihomsuper.varieties import check_bihom_prelie, twisted_commutator

# The ground field, e.e = e.  R = c Id is Rota-Baxter of weight w exactly
# when c^2 = 2c^2 + w c, so the grid search should find c in {0, -w}.
K = g.ground_field()
for w in (-1, 0):
    found = search(K, SearchSpec(weight=w, grid=(-2, -1, 0, 1, 2)))
    print("unit line, weight %2d: c in {%s}" % (w, ", ".join(str(m.matrix[0, 0]) for m in found)))

# Upper triangular 2x2 matrices with the off-diagonal unit odd (a 2|1
# superalgebra), Yau-twisted by two commuting diagonal automorphisms.
U = g.upper_triangular_11()
a, b = g.diagonal_morphisms(U)[1], g.diagonal_morphisms(U)[2]
s = g.yau_twist(U, a, b)
print("\ntwisted upper triangular superalgebra, basis %s:" % (s.space,))
_show.product(s.product)

ops = [R for R in search(s, SearchSpec(weight=-1, grid=(-1, 0, 1), shape=FULL))
       if not C.lie_from_rb_assoc_minus1(s, R).product.is_zero()]
print("\n%d weight -1 operators on the full {-1, 0, 1} grid give a nonzero bracket"
      % len(ops))

for R in ops[:2]:
    print("\nR =")
    _show.matrix(R)
    p = C.prelie_from_rb_assoc(s, R, -1)
    print("induced pre-Lie product:")
    _show.product(p.product, "o")
    print("pre-Lie identity holds:", check_bihom_prelie(p).passed)
    print("R is again Rota-Baxter of weight -1 for o:", check_rota_baxter(p, R, -1).passed)
    br = C.lie_from_rb_assoc_minus1(s, R)
    print("six-term bracket:")
    _show.product(br.product, ",")
    print("equals the twisted commutator of o:", twisted_commutator(p) == br.product)

# Weight 0 operators are scarcer; the dual numbers have a pair of them.
D = g.dual_numbers()
zero_ops = [R for R in search(D, SearchSpec(weight=0, grid=(-1, 0, 1), shape=FULL))
            if not R.matrix.is_zero()]
print("\ndual numbers: %d nonzero weight 0 operators" % len(zero_ops))
for R in zero_ops:
    p = C.prelie_from_rb_assoc(D, R, 0)
    _show.product(p.product, "o")
    print("  pre-Lie:", check_bihom_prelie(p).passed)
