"""Cochain complex of a BiHom pre-Lie superalgebra with coefficients in a bimodule.

An n-cochain is a map f: wedge^{n-1} A (x) A -> V (super-exterior in the
first n-1 slots) with alpha_V f = f alpha^{(x)n} and beta_V f = f beta^{(x)n}.

Coordinates.  The first n-1 slots run over the monomial basis of the
super-exterior power (indices non-decreasing, strictly increasing on even
basis vectors); the last slot is free.  A cochain is the vector of its
values F[t][k] (tuple t, V-coordinate k), flattened as t * dim V + k.

The coboundary is assembled as a linear map on these coordinates: every
evaluation f(v_1, ..., v_n) at arbitrary vectors expands multilinearly and
is rewritten in canonical order with the Koszul sign of the super-exterior
algebra (swapping x, y in the wedge part costs -(-1)^{|x||y|}).
"""

from dataclasses import dataclass, field
from itertools import product

from .errors import DSquaredViolation, ImageNotWellDefined, InvertibilityRequired, VarietyMismatch
from .exact import ONE, ZERO, Matrix, rank, sparse_kernel
from .graded import basis_vector, sign
from .report import DEFAULT_WITNESS_CAP, Report
from .varieties import PRELIE, twisted_commutator


# -- wedge bases ----------------------------------------------------------------------

def _wedge_part(parity, m):
    """Canonical (m)-tuples of the super-exterior power, lexicographic."""
    out = []

    def rec(prefix, start):
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for i in range(start, len(parity)):
            # odd indices may repeat, even ones may not
            rec(prefix + [i], i if parity[i] else i + 1)

    rec([], 0)
    return out


@dataclass(frozen=True)
class WedgeBasis:
    degree: int
    tuples: tuple
    index: dict = field(compare=False, repr=False)

    @classmethod
    def build(cls, space, n):
        if n < 1:
            raise ValueError("cochain degree starts at 1")
        head = _wedge_part(space.parity, n - 1)
        tuples = tuple(h + (j,) for h in head for j in range(space.dim))
        return cls(n, tuples, {t: k for k, t in enumerate(tuples)})

    def __len__(self):
        return len(self.tuples)


def canonical(head, parity):
    """Sort wedge indices; return (sign, sorted tuple) or (0, None) when it vanishes."""
    h = list(head)
    sg = 1
    # insertion sort, tracking the super-exterior sign of each adjacent swap
    for a in range(1, len(h)):
        b = a
        while b > 0 and h[b - 1] > h[b]:
            if not (parity[h[b - 1]] and parity[h[b]]):
                sg = -sg
            h[b - 1], h[b] = h[b], h[b - 1]
            b -= 1
    for a in range(1, len(h)):
        if h[a] == h[a - 1] and not parity[h[a]]:
            return 0, None
    return sg, tuple(h)


# -- symbolic evaluation ----------------------------------------------------------------

class _Eval:
    """Evaluate an unknown n-cochain at vectors, as linear forms in its coordinates.

    A result is a dict (k_out, col) -> coefficient meaning
    f(args) = sum coefficient * F[col] * e_{k_out}, col = t * dim V + k_src.
    """

    def __init__(self, space, wedge, dimV):
        self.parity = space.parity
        self.wedge = wedge
        self.dimV = dimV

    def __call__(self, args):
        out = {}
        supports = [[(i, a) for i, a in enumerate(v) if a] for v in args]
        for combo in product(*supports):
            coef = ONE
            for _, a in combo:
                coef *= a
            idx = [i for i, _ in combo]
            sg, head = canonical(idx[:-1], self.parity)
            if not sg:
                continue
            t = self.wedge.index[head + (idx[-1],)]
            for k in range(self.dimV):
                key = (k, t * self.dimV + k)
                out[key] = out.get(key, ZERO) + sg * coef
        return out


def _apply(M, form):
    """Apply a V-endomorphism (Matrix) to a symbolic result."""
    out = {}
    for (k, col), c in form.items():
        for k2 in range(M.rows):
            m = M[k2, k]
            if m:
                key = (k2, col)
                out[key] = out.get(key, ZERO) + m * c
    return out


def _acc(target, form, scale=1):
    for key, c in form.items():
        v = target.get(key, ZERO) + scale * c
        if v:
            target[key] = v
        else:
            target.pop(key, None)


# -- cochain spaces ------------------------------------------------------------------

@dataclass
class Cochain:
    degree: int
    parity: int
    coefficients: dict  # (wedge tuple, V index) -> Fraction, nonzero entries only


@dataclass
class _Space:
    n: int
    wedge: WedgeBasis
    ncoords: int
    basis: list      # sparse dicts col -> value
    free: list       # free column of each basis vector
    parity: list     # parity of each basis vector
    constraints: list


def _coord_parity(space, V, wedge, col):
    t, k = divmod(col, V.dim)
    return (sum(space.parity[i] for i in wedge.tuples[t]) + V.parity[k]) % 2


def _check_inputs(s, bm):
    if s.variety != PRELIE:
        raise VarietyMismatch("cohomology is defined for BiHom pre-Lie superalgebras")
    if bm.base is not s and not bm.base.same_as(s):
        raise VarietyMismatch("bimodule is over another structure")
    if not s.invertible:
        raise InvertibilityRequired("alpha and beta must be invertible")


def _cochain_space(s, bm, n):
    A, V = s.space, bm.space
    wedge = WedgeBasis.build(A, n)
    ev = _Eval(A, wedge, V.dim)
    ncoords = len(wedge) * V.dim
    rows = []
    # parity: a coordinate mixing parities is not allowed for a homogeneous
    # cochain, but a general cochain is a sum of an even and an odd one, so
    # no parity constraint is imposed on the coordinates themselves.
    for m, mV in ((s.alpha, bm.alphaV), (s.beta, bm.betaV)):
        cols = m.columns
        for ti, t in enumerate(wedge.tuples):
            rhs = ev([cols[i] for i in t])
            lhs = _apply(mV.matrix, {(k, ti * V.dim + k): ONE for k in range(V.dim)})
            _acc(lhs, rhs, -1)
            for k in range(V.dim):
                row = {col: c for (ko, col), c in lhs.items() if ko == k}
                if row:
                    rows.append(row)
    basis, free = sparse_kernel(rows, ncoords)
    par = [_coord_parity(A, V, wedge, f) for f in free]
    # even cochains first, so matrices and cochain_basis share one ordering
    order = sorted(range(len(basis)), key=lambda a: par[a])
    return _Space(n, wedge, ncoords, [basis[a] for a in order], [free[a] for a in order],
                  [par[a] for a in order], rows)


def cochain_basis(s, bm, n):
    """Basis of C^n as Cochain objects, even ones first."""
    _check_inputs(s, bm)
    sp = _cochain_space(s, bm, n)
    V = bm.space
    out = []
    for vec, p in zip(sp.basis, sp.parity):
        coeffs = {}
        for col, c in vec.items():
            t, k = divmod(col, V.dim)
            coeffs[(sp.wedge.tuples[t], k)] = c
        out.append(Cochain(n, p, coeffs))
    return out


def cochain_dims(s, bm, n):
    """(dim, even part, odd part) of C^n."""
    _check_inputs(s, bm)
    sp = _cochain_space(s, bm, n)
    odd = sum(sp.parity)
    return len(sp.basis), len(sp.basis) - odd, odd


# -- the coboundary --------------------------------------------------------------------

def coboundary_evaluator(s, bm, n, alpha_n_last=False):
    """Return X -> symbolic value of (df)(e_X) for an unknown n-cochain f.

    X is any (n+1)-tuple of basis indices, canonical or not; the value is a
    dict (k_out, col) -> coefficient over the coordinates of degree n.
    ``alpha_n_last`` uses alpha^n (x_i) instead of alpha^{n-1}(x_i) as the
    final argument of the second sum.
    """
    _check_inputs(s, bm)
    A, V = s.space, bm.space
    d = A.dim
    par = A.parity
    w_in = WedgeBasis.build(A, n)
    ev = _Eval(A, w_in, V.dim)
    al, be = s.alpha, s.beta
    a1 = al.columns
    b1 = be.columns
    ab = (al @ be).columns
    an1 = al.power(n - 1).columns
    last_pow = al.power(n).columns if alpha_n_last else an1
    abn1 = (al.power(n - 1) @ be.power(n - 1)).columns
    bn1 = be.power(n - 1).columns
    mu = s.product
    br = twisted_commutator(s)
    l, r = bm["l"], bm["r"]
    e = [basis_vector(A, i) for i in range(d)]

    def at(X):
        p = [par[i] for i in X]
        xs = list(X)
        total = {}
        xn1 = xs[n]
        pre = [0]
        for q in p:
            pre.append(pre[-1] + q)

        def suffix(lo):  # |x_lo| + ... + |x_n| (1-based, within the first n)
            return pre[n] - pre[lo - 1] if lo <= n else 0

        for i in range(1, n + 1):
            xi = xs[i - 1]
            rest = [xs[k - 1] for k in range(1, n + 1) if k != i]
            # (i)
            sg = sign(i + 1 + p[i - 1] * pre[i - 1])
            form = ev([a1[j] for j in rest] + [e[xn1]])
            _acc(total, _apply(l.operator(abn1[xi]).matrix, form), sg)
            # (ii)
            sg = sign(i + 1 + p[i - 1] * suffix(i + 1) + p[n] * pre[n])
            form = ev([b1[j] for j in rest] + [last_pow[xi]])
            _acc(total, _apply(r.operator(bn1[xn1]).matrix, form), sg)
            # (iii)
            sg = -sign(i + 1 + p[i - 1] * suffix(i + 1))
            form = ev([ab[j] for j in rest] + [mu(an1[xi], e[xn1])])
            _acc(total, form, sg)
        # (iv)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                xi, xj = xs[i - 1], xs[j - 1]
                gamma = p[i - 1] * pre[i - 1] + p[j - 1] * pre[j - 1] + p[i - 1] * p[j - 1]
                sg = sign(i + j + gamma)
                rest = [xs[k - 1] for k in range(1, n + 1) if k not in (i, j)]
                form = ev([br(b1[xi], a1[xj])] + [ab[k] for k in rest] + [b1[xn1]])
                _acc(total, form, sg)
        return total

    return at


def full_coboundary(s, bm, n, alpha_n_last=False):
    """Sparse rows of the coboundary on all coordinates of maps wedge^{n-1}A (x) A -> V.

    Returns (rows, wedge_n, wedge_{n+1}); rows[t * dim V + k] is a dict over the
    coordinates of degree n.
    """
    at = coboundary_evaluator(s, bm, n, alpha_n_last)
    w_in = WedgeBasis.build(s.space, n)
    w_out = WedgeBasis.build(s.space, n + 1)
    rows = []
    for X in w_out.tuples:
        total = at(X)
        for k in range(bm.space.dim):
            rows.append({col: c for (ko, col), c in total.items() if ko == k})
    return rows, w_in, w_out


def _sparse_matvec(rows, vec):
    out = []
    for row in rows:
        acc = ZERO
        for col, c in row.items():
            v = vec.get(col)
            if v:
                acc += c * v
        out.append(acc)
    return out


def _constraints_hold(space, vals):
    for row in space.constraints:
        if sum((c * vals[col] for col, c in row.items()), ZERO):
            return False
    return True


def coboundary_matrix(s, bm, n, alpha_n_last=False, _spaces=None):
    """Matrix of the coboundary C^n -> C^{n+1} in the cochain bases.

    Raises ImageNotWellDefined if the image of a cochain is not compatible
    with the structure maps.
    """
    _check_inputs(s, bm)
    src = _spaces[0] if _spaces else _cochain_space(s, bm, n)
    dst = _spaces[1] if _spaces else _cochain_space(s, bm, n + 1)
    rows, _, _ = full_coboundary(s, bm, n, alpha_n_last)
    cols = []
    for b, pb in zip(src.basis, src.parity):
        img = _sparse_matvec(rows, b)
        if not _constraints_hold(dst, img):
            raise ImageNotWellDefined("coboundary of a degree %d cochain is not compatible "
                                      "with the structure maps" % n)
        # basis vectors of dst have 1 at their own free column and 0 at the others
        coords = [img[f] for f in dst.free]
        recon = [ZERO] * dst.ncoords
        for c, v in zip(coords, dst.basis):
            if c:
                for col, x in v.items():
                    recon[col] += c * x
        if recon != img:
            raise ImageNotWellDefined("coboundary image outside the cochain space")
        for c, pd in zip(coords, dst.parity):
            if c and pd != pb:
                raise ImageNotWellDefined("coboundary does not preserve cochain parity")
        cols.append(coords)
    return Matrix.from_columns(cols, len(dst.basis)) if cols else Matrix.zero(len(dst.basis), 0)


# -- complexes ------------------------------------------------------------------------

@dataclass
class CochainComplex:
    structure: object
    bm: object
    max_degree: int
    spaces: list        # degrees 1 .. max_degree + 1
    matrices: list      # D_1 .. D_max_degree
    alpha_n_last: bool = False

    @classmethod
    def build(cls, s, bm, max_degree, alpha_n_last=False):
        _check_inputs(s, bm)
        if max_degree < 1:
            raise ValueError("max degree must be at least 1")
        spaces = [_cochain_space(s, bm, n) for n in range(1, max_degree + 2)]
        mats = [coboundary_matrix(s, bm, n, alpha_n_last, (spaces[n - 1], spaces[n]))
                for n in range(1, max_degree + 1)]
        return cls(s, bm, max_degree, spaces, mats, alpha_n_last)

    def dim(self, n):
        return len(self.spaces[n - 1].basis)

    def parities(self, n):
        return list(self.spaces[n - 1].parity)

    def D(self, n):
        return self.matrices[n - 1]


def verify_d_squared(cx, witness_cap=DEFAULT_WITNESS_CAP):
    rep = Report("coboundary squares to zero", witness_cap)
    for n in range(1, cx.max_degree):
        prod_ = cx.D(n + 1) @ cx.D(n)
        fails = []
        for j in range(prod_.cols):
            col = prod_.column(j)
            if any(col):
                fails.append(((n, j), col))
        rep.add("D_%d D_%d = 0" % (n + 1, n), fails)
    rep.metadata["degrees"] = "1..%d" % cx.max_degree
    return rep


def _split_rank(M, src_par, dst_par):
    """Rank of each parity block (D preserves parity)."""
    out = []
    for p in (0, 1):
        cols = [j for j, q in enumerate(src_par) if q == p]
        rws = [i for i, q in enumerate(dst_par) if q == p]
        if not cols or not rws:
            out.append(0)
            continue
        out.append(rank(Matrix.from_rows([[M[i, j] for j in cols] for i in rws], len(cols))))
    return out


@dataclass
class CohomologyRow:
    degree: int
    parity: int
    dim_z: int
    dim_b: int

    @property
    def dim_h(self):
        return self.dim_z - self.dim_b


def cohomology_table(s, bm, n_max, alpha_n_last=False):
    """Rows (degree, parity, dim Z, dim B, dim H) for degrees 1..n_max.

    H^1 is ker D_1: no degree-0 cochains or coboundary are used.
    """
    cx = CochainComplex.build(s, bm, n_max, alpha_n_last)
    rep = verify_d_squared(cx)
    if not rep.passed:
        raise DSquaredViolation("coboundary does not square to zero", rep)
    ranks = []
    for n in range(1, n_max + 1):
        ranks.append(_split_rank(cx.D(n), cx.parities(n), cx.parities(n + 1)))
    rows = []
    for n in range(1, n_max + 1):
        par = cx.parities(n)
        for p in (0, 1):
            dim_c = sum(1 for q in par if q == p)
            dim_z = dim_c - ranks[n - 1][p]
            dim_b = ranks[n - 2][p] if n >= 2 else 0
            rows.append(CohomologyRow(n, p, dim_z, dim_b))
    return rows


def cohomology_dims(s, bm, n_max, alpha_n_last=False):
    """[(n, dim H^n, (even, odd))] for n = 1..n_max."""
    rows = cohomology_table(s, bm, n_max, alpha_n_last)
    out = []
    for n in range(1, n_max + 1):
        ev, od = [r.dim_h for r in rows if r.degree == n]
        out.append((n, ev + od, (ev, od)))
    return out
