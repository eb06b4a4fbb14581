"""Classical (ungraded, untwisted) left-symmetric algebra oracle.

Written against plain nested lists of Fractions and itertools only, with
no imports from the package, so it can referee the graded code on
all-even spaces with alpha = beta = Id.

An algebra is a table ``c[i][j]`` = list of coordinates of e_i o e_j.
"""

from fractions import Fraction
from itertools import combinations, permutations, product


def mul(c, u, v):
    n = len(c)
    out = [Fraction(0)] * n
    for i in range(n):
        if not u[i]:
            continue
        for j in range(n):
            if not v[j]:
                continue
            for k in range(n):
                out[k] += u[i] * v[j] * c[i][j][k]
    return out


def unit(n, i):
    return [Fraction(int(k == i)) for k in range(n)]


def associator(c, x, y, z):
    n = len(c)
    a = mul(c, mul(c, unit(n, x), unit(n, y)), unit(n, z))
    b = mul(c, unit(n, x), mul(c, unit(n, y), unit(n, z)))
    return [p - q for p, q in zip(a, b)]


def left_symmetry_residual(c, x, y, z):
    """(x,y,z) - (y,x,z) for the associator (.,.,.)."""
    return [p - q for p, q in zip(associator(c, x, y, z), associator(c, y, x, z))]


def is_left_symmetric(c):
    n = len(c)
    return all(not any(left_symmetry_residual(c, *t)) for t in product(range(n), repeat=3))


def commutator(c):
    n = len(c)
    return [[[c[i][j][k] - c[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]


def conjugate(c, P, Pinv):
    """Structure constants in the basis given by the columns of P."""
    n = len(c)
    cols = [[P[r][j] for r in range(n)] for j in range(n)]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            w = mul(c, cols[i], cols[j])
            row.append([sum(Pinv[k][r] * w[r] for r in range(n)) for k in range(n)])
        out.append(row)
    return out


# -- cohomology with coefficients in the regular module ----------------------------

def perm_sign(p):
    s = 1
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if p[a] > p[b]:
                s = -s
    return s


class Cochain:
    """f: wedge^{n-1} A (x) A -> A stored on sorted heads, extended by antisymmetry."""

    def __init__(self, n, dim, values):
        self.n = n
        self.dim = dim
        self.values = values  # (head tuple, last) -> vector

    def __call__(self, args):
        head, last = list(args[:-1]), args[-1]
        if len(set(head)) < len(head):
            return [Fraction(0)] * self.dim
        order = sorted(range(len(head)), key=lambda a: head[a])
        s = perm_sign(order)
        key = (tuple(head[a] for a in order), last)
        v = self.values.get(key, [Fraction(0)] * self.dim)
        return [s * x for x in v]


def cochain_keys(dim, n):
    return [(h, j) for h in combinations(range(dim), n - 1) for j in range(dim)]


def coboundary(c, f):
    """Left-symmetric coboundary of f with values in the regular module.

    (df)(x_1..x_{n+1}) =
        sum_i (-1)^{i+1} x_i o f(.. ^x_i .., x_{n+1})
      + sum_i (-1)^{i+1} f(.. ^x_i .., x_i) o x_{n+1}
      - sum_i (-1)^{i+1} f(.. ^x_i .., x_i o x_{n+1})
      + sum_{i<j} (-1)^{i+j} f([x_i, x_j], .. ^x_i .. ^x_j .., x_{n+1})
    with i, j running over 1..n.  Inputs are basis indices; the result is
    returned on sorted heads only.
    """
    n, dim = f.n, len(c)
    br = commutator(c)
    out = {}
    for head, last in cochain_keys(dim, n + 1):
        xs = list(head) + [last]
        acc = [Fraction(0)] * dim

        def add(vec, s):
            for k in range(dim):
                acc[k] += s * vec[k]

        for i in range(n):
            s = (-1) ** i
            rest = xs[:i] + xs[i + 1:n]
            add(mul(c, unit(dim, xs[i]), f(rest + [xs[n]])), s)
            add(mul(c, f(rest + [xs[i]]), unit(dim, xs[n])), s)
            prod_vec = mul(c, unit(dim, xs[i]), unit(dim, xs[n]))
            for k in range(dim):
                if prod_vec[k]:
                    add(f(rest + [k]), -s * prod_vec[k])
        for i in range(n):
            for j in range(i + 1, n):
                s = (-1) ** (i + j)
                rest = [xs[a] for a in range(n) if a not in (i, j)] + [xs[n]]
                b = br[xs[i]][xs[j]]
                for k in range(dim):
                    if b[k]:
                        add(f([k] + rest), s * b[k])
        out[(head, last)] = acc
    return out


def coboundary_matrix(c, n):
    """Matrix of d: C^n -> C^{n+1}; coordinates ((head, last), k) in key order."""
    dim = len(c)
    src = [(key, k) for key in cochain_keys(dim, n) for k in range(dim)]
    dst = [(key, k) for key in cochain_keys(dim, n + 1) for k in range(dim)]
    cols = []
    for key, k in src:
        f = Cochain(n, dim, {key: unit(dim, k)})
        img = coboundary(c, f)
        cols.append([img[dkey][dk] for dkey, dk in dst])
    return src, dst, cols


def brute_check_antisymmetric(c, f):
    """Sanity helper: f evaluated on all permutations of each head agrees with its sign."""
    dim = len(c)
    for head, last in cochain_keys(dim, f.n):
        base = f(list(head) + [last])
        for p in permutations(range(len(head))):
            v = f([head[a] for a in p] + [last])
            if v != [perm_sign(p) * x for x in base]:
                return False
    return True
