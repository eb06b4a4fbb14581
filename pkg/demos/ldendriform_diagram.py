"""The L-dendriform square: pre-Lie structures above and below, Lie on the side.

A weight-0 Rota-Baxter operator R on a twisted pre-Lie superalgebra splits
its product into two L-dendriform products.  From those we read off the
vertical and horizontal pre-Lie structures, the transpose, and the common
Lie bracket, and then go back up through an O-operator.

Run:  python demos/ldendriform_diagram.py
"""

import random

import _show
from bihomsuper import constructions as C
from bihomsuper import generate as g
from bihomsuper.graded import EvenMap
from bihomsuper.operators import check_o_operator, check_rota_baxter
from bihomsuper.representations import check_bimodule, regular_bimodule
from bihomsuper.search import UPPER, SearchSpec, search, search_size
from bihomsuper.varieties import check_bihom_ldendriform, twisted_commutator

rng = random.Random(5)
spec = SearchSpec(grid=(-1, 0, 1), shape=UPPER)
while True:
    s0 = g.random_prelie_family(rng)
    a, b = g.random_diagonal_morphism_pair(rng, s0)
    s = g.yau_twist(s0, a, b)
    if not s.invertible or search_size(s.space, s.space, spec) > 800:
        continue
    ops = [R for R in search(s, spec) if not R.matrix.is_zero()
           and not any(op.is_zero() for op in C.ldend_from_rb_prelie(s, R).products)]
    if ops:
        break
R = ops[0]
print("pre-Lie superalgebra on %s with alpha != beta:" % (s.space,))
_show.product(s.product, "o")
print("alpha, beta diagonals:", [str(s.alpha.matrix[i, i]) for i in range(s.space.dim)],
      [str(s.beta.matrix[i, i]) for i in range(s.space.dim)])
print("weight-0 Rota-Baxter operator R:")
_show.matrix(R)

ld = C.ldend_from_rb_prelie(s, R)
print("\nL-dendriform products |> and <| split by R:")
_show.product(ld.succ, "|>")
_show.product(ld.prec, "<|")
print("L-dendriform identities hold:", check_bihom_ldendriform(ld).passed)

d = C.ldend_derived(ld)
print("\nvertical pre-Lie, x |> y minus a twisted y <| x:")
_show.product(d.vertical.product, "o_v")
print("horizontal pre-Lie, x |> y + x <| y:")
_show.product(d.horizontal.product, "o_h")
print("the horizontal product is the star product of R:",
      d.horizontal.product == C.prelie_star_from_rb_prelie(s, R).product)
print("bracket:")
_show.product(d.bracket.product, ",")
print("commutator of vertical == bracket:", C.subadjacent(d.vertical).product == d.bracket.product)
print("commutator of horizontal == bracket:", twisted_commutator(d.horizontal) == d.bracket.product)

t = d.transpose
print("\ntranspose swaps vertical and horizontal:",
      C.vertical(t).product == d.horizontal.product,
      C.horizontal(t).product == d.vertical.product)
print("transposing twice gives back the original:", C.transpose(t).products == ld.products)

# R is also an O-operator of the regular bimodule; the same products come out
# of the O-operator construction, together with a structure on R(A).  Here
# beta acts by -1 on odd vectors, and the untwisted formula u <| v = -r(R u) v
# breaks the second L-dendriform identity.
bm = regular_bimodule(s)
print("\nR is an O-operator of the regular bimodule:", check_o_operator(bm, R).passed)
vs, image = C.ldend_from_o_op_prelie(bm, R)
print("O-operator route gives the same products:", vs.products == ld.products)
plain, _ = C.ldend_from_o_op_prelie(bm, R, certify=False, literal=True)
print("untwisted <| is L-dendriform:", check_bihom_ldendriform(plain).passed)
print("induced structure on R(A), of dimension %d:" % image.structure.space.dim)
_show.product(image.structure.succ, "|>")
_show.product(image.structure.prec, "<|")

# Going back: try Id as an O-operator of the vertical structure for the
# actions (x |>, -<| x).  When it is one, the compatible structure it defines
# is ld itself.  Here beta is the parity automorphism, and the right action
# -<| picks up a sign that Id cannot absorb, so the check fails.
bm = C.vertical_bimodule(ld)
ident = EvenMap.identity(s.space)
rep = check_o_operator(bm, ident)
print("\n(|>, -<|) is a bimodule over the vertical structure:", check_bimodule(bm).passed)
print("Id is an O-operator for it:", rep.passed)
if rep.passed:
    print("and recovers the L-dendriform products:",
          C.compatible_ldend_from_o_op(d.vertical, ident, bm).products == ld.products)
else:
    print(rep.render())
print("Id against the regular bimodule of the vertical structure:",
      check_o_operator(regular_bimodule(d.vertical), ident).passed)

# A compatible structure still exists: with actions (L, 0) Id is always an
# O-operator, giving x |> y = x o y and x <| y = 0.
triv = C.compatible_ldend_from_o_op(d.vertical, ident, C.left_bimodule(d.vertical))
print("trivial compatible structure via (L, 0):",
      triv.succ == d.vertical.product and triv.prec.is_zero())

# Commuting Rota-Baxter operators pass down to the L-dendriform level.
for R2 in ops:
    if R2 @ R == R @ R2 and R2 != R:
        print("\na second operator commuting with R stays Rota-Baxter on the L-dendriform:",
              check_rota_baxter(ld, R2, 0).passed)
        break
