"""Small exact test instances.

The fixtures are classical superalgebras of total dimension <= 4 (at most
2 even and 2 odd basis vectors) together with commuting even morphisms used
to produce genuinely BiHom (alpha != beta != Id) instances by Yau twisting.
Random families are drawn from a seeded ``random.Random`` so every run is
reproducible.
"""

import random
from fractions import Fraction
from itertools import product

from .exact import ONE, ZERO, Matrix
from .graded import BilinearOp, EvenMap, SuperSpace
from .varieties import ASSOCIATIVE, LDENDRIFORM, PRELIE, Structure


def _algebra(space, entries, variety=ASSOCIATIVE):
    return Structure.make(variety, BilinearOp.from_entries(space, entries))


def ground_field():
    """K = span{e}, e.e = e."""
    return _algebra(SuperSpace.of(["e"]), [("e", "e", "e", 1)])


def odd_line():
    """0|1 space with zero product."""
    return _algebra(SuperSpace.of([], ["f"]), [])


def grassmann1():
    """Lambda(1) = span{1 | t}, t.t = 0."""
    sp = SuperSpace.of(["1"], ["t"])
    return _algebra(sp, [("1", "1", "1", 1), ("1", "t", "t", 1), ("t", "1", "t", 1)])


def grassmann2():
    """Lambda(2) = span{1, t1t2 | t1, t2}."""
    sp = SuperSpace.of(["1", "t12"], ["t1", "t2"])
    entries = [("1", x, x, 1) for x in sp.basis_names]
    entries += [(x, "1", x, 1) for x in sp.basis_names if x != "1"]
    entries += [("t1", "t2", "t12", 1), ("t2", "t1", "t12", -1)]
    return _algebra(sp, entries)


def dual_numbers():
    """K[s]/(s^2) = span{1, s}, all even."""
    sp = SuperSpace.of(["1", "s"])
    return _algebra(sp, [("1", "1", "1", 1), ("1", "s", "s", 1), ("s", "1", "s", 1)])


def clifford1():
    """Cl(1) = span{1 | c}, c.c = 1; associative but not supercommutative."""
    sp = SuperSpace.of(["1"], ["c"])
    return _algebra(sp, [("1", "1", "1", 1), ("1", "c", "c", 1), ("c", "1", "c", 1),
                         ("c", "c", "1", 1)])


def upper_triangular_11():
    """Upper triangular part of M(1|1): span{E11, E22 | E12}."""
    sp = SuperSpace.of(["E11", "E22"], ["E12"])
    return _algebra(sp, [("E11", "E11", "E11", 1), ("E22", "E22", "E22", 1),
                         ("E11", "E12", "E12", 1), ("E12", "E22", "E12", 1)])


def matrix_11():
    """The full matrix superalgebra M(1|1): span{E11, E22 | E12, E21}."""
    sp = SuperSpace.of(["E11", "E22"], ["E12", "E21"])
    idx = {(1, 1): "E11", (2, 2): "E22", (1, 2): "E12", (2, 1): "E21"}
    entries = []
    for (a, b), x in idx.items():
        for (c, d), y in idx.items():
            if b == c:
                entries.append((x, y, idx[(a, d)], 1))
    return _algebra(sp, entries)


def grassmann1_tensor_dual():
    """Lambda(1) (x) K[s]/(s^2) = span{1, s | t, st}; supercommutative 2|2."""
    sp = SuperSpace.of(["1", "s"], ["t", "st"])
    # monomials s^a t^b with a, b in {0,1}
    mon = {"1": (0, 0), "s": (1, 0), "t": (0, 1), "st": (1, 1)}
    name = {v: k for k, v in mon.items()}
    entries = []
    for x, (a1, b1) in mon.items():
        for y, (a2, b2) in mon.items():
            if a1 + a2 <= 1 and b1 + b2 <= 1:
                entries.append((x, y, name[(a1 + a2, b1 + b2)], 1))
    return _algebra(sp, entries)


def zero_algebra(even, odd, variety=ASSOCIATIVE):
    sp = SuperSpace.of(even, odd)
    n = 2 if variety == LDENDRIFORM else 1
    return Structure.make(variety, *[BilinearOp.zeros(sp)] * n)


ASSOCIATIVE_FIXTURES = {
    "ground_field": ground_field,
    "grassmann1": grassmann1,
    "dual_numbers": dual_numbers,
    "clifford1": clifford1,
    "upper_triangular_11": upper_triangular_11,
    "grassmann2": grassmann2,
    "matrix_11": matrix_11,
    "grassmann1_tensor_dual": grassmann1_tensor_dual,
}


def diagonal_map(space, values):
    return EvenMap.diagonal(space, [Fraction(v) for v in values])


def is_morphism(op, m):
    """m(x*y) == m(x)*m(y) on all basis pairs."""
    cols = m.columns
    d = op.space.dim
    return all(m(op.c[i][j]) == op(cols[i], cols[j]) for i in range(d) for j in range(d))


def commute(a, b):
    return (a @ b).matrix == (b @ a).matrix


def yau_twist(s, alpha, beta):
    """x *' y = alpha(x) * beta(y) with structure maps alpha, beta.

    Works for every single-product variety and for L-dendriform pairs; the
    caller is responsible for alpha, beta being commuting morphisms.
    """
    ac, bc = alpha.columns, beta.columns
    prods = [BilinearOp.from_function(s.space, lambda i, j, op=op: op(ac[i], bc[j]))
             for op in s.products]
    return Structure(s.variety, s.space, tuple(prods), alpha, beta)


def derivation_prelie(s, D):
    """x o y = x . D(y) for a supercommutative associative s and even derivation D."""
    cols = D.columns
    mu = s.product
    d = s.space.dim
    op = BilinearOp.from_function(s.space, lambda i, j: mu(_unit(d, i), cols[j]))
    return Structure(PRELIE, s.space, (op,), s.alpha, s.beta)


def _unit(n, i):
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_derivation(s, D):
    mu = s.product
    cols = D.columns
    d = s.space.dim
    # D even, so no Koszul sign appears in the Leibniz rule
    for i in range(d):
        for j in range(d):
            lhs = D(mu.c[i][j])
            rhs = tuple(a + b for a, b in zip(mu(cols[i], _unit(d, j)), mu(_unit(d, i), cols[j])))
            if lhs != rhs:
                return False
    return True


def grassmann2_derivation(a11, a12, a21, a22):
    """Even derivation of Lambda(2) with D(t_i) = sum_j a_ij t_j."""
    s = grassmann2()
    sp = s.space
    # basis order: 1, t12, t1, t2
    tr = Fraction(a11) + Fraction(a22)
    m = Matrix.from_rows([[0, 0, 0, 0],
                          [0, tr, 0, 0],
                          [0, 0, a11, a21],
                          [0, 0, a12, a22]])
    return EvenMap(sp, sp, m)


def grassmann2_automorphism(b11, b12, b21, b22):
    """Automorphism of Lambda(2) from an invertible map on the generators."""
    s = grassmann2()
    sp = s.space
    det = Fraction(b11) * Fraction(b22) - Fraction(b12) * Fraction(b21)
    m = Matrix.from_rows([[1, 0, 0, 0],
                          [0, det, 0, 0],
                          [0, 0, b11, b21],
                          [0, 0, b12, b22]])
    return EvenMap(sp, sp, m)


SMALL = [Fraction(v) for v in (-2, -1, 1, 2, 3, Fraction(1, 2), Fraction(-1, 3))]


def diagonal_morphisms(s, values=SMALL):
    """Every diagonal map with entries in ``values`` that is a morphism of all products.

    A diagonal map d is a morphism iff d_k = d_i d_j whenever c[i][j][k] != 0,
    so the candidates are enumerated with that constraint pruned early.
    """
    d = s.space.dim
    cons = [[] for _ in range(d)]
    for op in s.products:
        for i in range(d):
            for j in range(d):
                for k, c in enumerate(op.c[i][j]):
                    if c:
                        cons[max(i, j, k)].append((i, j, k))
    out = []

    def extend(vals):
        n = len(vals)
        if n == d:
            out.append(diagonal_map(s.space, vals))
            return
        for v in values:
            trial = vals + [v]
            if all(trial[k] == trial[i] * trial[j] for i, j, k in cons[n]):
                extend(trial)

    extend([])
    return out


def random_diagonal_morphism_pair(rng, s, values=SMALL, distinct=True):
    """Random (alpha, beta) among the diagonal morphisms of s (these commute).

    With ``distinct`` the pair avoids alpha == beta whenever possible.
    """
    maps = diagonal_morphisms(s, values)
    if not maps:
        ident = EvenMap.identity(s.space)
        return ident, ident
    a = rng.choice(maps)
    others = [m for m in maps if m != a] if distinct else maps
    return a, rng.choice(others or maps)


def grading_morphisms(s, rng, values=SMALL):
    """Diagonal morphisms found from a weight grading of a monomial basis.

    Tries random diagonal maps; falls back to the identity.
    """
    return random_diagonal_morphism_pair(rng, s, values=values)


def random_rational(rng, lo=-2, hi=2, denominators=(1, 1, 1, 2)):
    return Fraction(rng.randint(lo, hi), rng.choice(denominators))


def random_prelie_family(rng):
    """Classical (alpha = beta = Id) pre-Lie superalgebras of dim <= 2|2."""
    choice = rng.randrange(5)
    if choice == 0:
        vals = [rng.randint(-2, 2) for _ in range(4)]
        D = grassmann2_derivation(*vals)
        return derivation_prelie(grassmann2(), D)
    if choice == 1:
        s = grassmann1()
        c = rng.choice([-2, -1, 1, 2, 3])
        D = diagonal_map(s.space, [0, c])
        return derivation_prelie(s, D)
    if choice == 2:
        s = grassmann1_tensor_dual()
        # derivations: s -> a s + b st? keep diagonal weights: D(s)=a s, D(t)=b t
        a, b = rng.randint(-2, 2), rng.randint(-2, 2)
        D = diagonal_map(s.space, [0, a, b, a + b])
        return derivation_prelie(s, D)
    if choice == 3:
        s = ASSOCIATIVE_FIXTURES[rng.choice(sorted(ASSOCIATIVE_FIXTURES))]()
        return s.retag(PRELIE)
    s = dual_numbers()
    c = rng.choice([-1, 1, 2])
    D = diagonal_map(s.space, [0, c])
    return derivation_prelie(s, D)
