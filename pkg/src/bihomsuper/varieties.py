"""BiHom superalgebra structures and their axiom checkers.

Every identity is multilinear, so each checker evaluates it on all tuples
of basis elements and records the tuples where the residual is nonzero.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import DimensionMismatch, InvertibilityRequired, VarietyMismatch
from .exact import ZERO, vec_add, vec_scale, vec_sub
from .graded import BilinearOp, EvenMap, SuperSpace, basis_vector, require_even, sign
from .report import DEFAULT_WITNESS_CAP, Report

ASSOCIATIVE = "associative"
LIE = "lie"
PRELIE = "prelie"
LDENDRIFORM = "ldendriform"
LIE_ADMISSIBLE = "lieadmissible"
VARIETIES = (ASSOCIATIVE, LIE, PRELIE, LDENDRIFORM, LIE_ADMISSIBLE)

JACOBI_CONVENTION = ("cyclic sum over (x,y,z), (y,z,x), (z,x,y); each rotation (a,b,c) "
                     "carries (-1)^{|a||c|}")


@dataclass(frozen=True, eq=False)
class Structure:
    """A tuple (A, products, alpha, beta) tagged with its variety.

    L-dendriform structures carry two products, ``products[0]`` being the
    left one (written |>) and ``products[1]`` the right one (<|).
    """

    variety: str
    space: SuperSpace
    products: tuple
    alpha: EvenMap
    beta: EvenMap

    def __post_init__(self):
        if self.variety not in VARIETIES:
            raise VarietyMismatch("unknown variety %r" % (self.variety,))
        products = tuple(self.products)
        object.__setattr__(self, "products", products)
        expected = 2 if self.variety == LDENDRIFORM else 1
        if len(products) != expected:
            raise DimensionMismatch("%s structures carry %d product(s)" % (self.variety, expected))
        for p in products:
            if p.space != self.space:
                raise DimensionMismatch("product defined on another space")
        for m in (self.alpha, self.beta):
            if m.domain != self.space or m.codomain != self.space:
                raise DimensionMismatch("alpha and beta must be endomorphisms of the space")
            require_even(m, "structure map")

    @classmethod
    def make(cls, variety, *products, alpha=None, beta=None):
        space = products[0].space
        alpha = EvenMap.identity(space) if alpha is None else alpha
        beta = EvenMap.identity(space) if beta is None else beta
        return cls(variety, space, tuple(products), alpha, beta)

    @property
    def product(self):
        return self.products[0]

    @property
    def succ(self):
        """The |> product of an L-dendriform structure."""
        return self.products[0]

    @property
    def prec(self):
        """The <| product of an L-dendriform structure."""
        return self.products[1]

    def with_products(self, *products, variety=None):
        return Structure(variety or self.variety, self.space, tuple(products),
                         self.alpha, self.beta)

    def retag(self, variety):
        return Structure(variety, self.space, self.products, self.alpha, self.beta)

    @cached_property
    def invertible(self):
        try:
            self.alpha.inverse()
            self.beta.inverse()
        except InvertibilityRequired:
            return False
        return True

    @cached_property
    def twist(self):
        """alpha^-1 beta (raises InvertibilityRequired)."""
        self._need_inverse()
        return self.alpha.inverse() @ self.beta

    @cached_property
    def untwist(self):
        """alpha beta^-1 (raises InvertibilityRequired)."""
        self._need_inverse()
        return self.alpha @ self.beta.inverse()

    def _need_inverse(self):
        if not self.invertible:
            raise InvertibilityRequired("alpha and beta must be invertible")

    def same_as(self, other):
        """Exact equality of spaces, maps and structure constants."""
        return (self.variety == other.variety and self.space == other.space
                and self.alpha == other.alpha and self.beta == other.beta
                and self.products == other.products)

    def __repr__(self):
        return "<Structure %s on %s>" % (self.variety, self.space)


def parities(space):
    return space.parity


def basis(space):
    return [basis_vector(space, i) for i in range(space.dim)]


def scan(report, name, dims, residual_fn):
    """Evaluate residual_fn on every index tuple (lexicographic) and record failures."""
    failures = []
    for idx in product(*[range(d) for d in dims]):
        res = residual_fn(*idx)
        if any(res):
            failures.append((idx, res))
    return report.add(name, failures)


def check_structure_compat(s, witness_cap=DEFAULT_WITNESS_CAP):
    rep = Report("structure maps of %s" % s.variety, witness_cap)
    _compat_into(rep, s)
    return rep


def _compat_into(rep, s, names=None):
    d = s.space.dim
    comm = (s.alpha @ s.beta).matrix - (s.beta @ s.alpha).matrix
    rep.add("alpha beta = beta alpha",
            [((i, j), (comm[i, j],)) for i in range(d) for j in range(d) if comm[i, j]])
    names = names or (["product"] if len(s.products) == 1 else ["|>", "<|"])
    cols_a, cols_b = s.alpha.columns, s.beta.columns
    for label, op in zip(names, s.products):
        for mname, m, cols in (("alpha", s.alpha, cols_a), ("beta", s.beta, cols_b)):
            scan(rep, "%s multiplicative for %s" % (mname, label), (d, d),
                 lambda i, j, m=m, cols=cols, op=op:
                 vec_sub(m(op.c[i][j]), op(cols[i], cols[j])))


class _Ctx:
    """Precomputed images of basis vectors under the structure maps."""

    def __init__(self, s, need_inverse=False):
        self.s = s
        self.p = s.space.parity
        self.d = s.space.dim
        a, b = s.alpha, s.beta
        self.a = a.columns
        self.b = b.columns
        self.ab = (a @ b).columns
        self.bb = (b @ b).columns
        if need_inverse:
            self.tw = s.twist.columns     # alpha^-1 beta
            self.utw = s.untwist.columns  # alpha beta^-1
        self.am, self.bm = a, b


def _require(s, *varieties):
    if s.variety not in varieties:
        raise VarietyMismatch("expected a %s structure, got %s"
                              % (" or ".join(varieties), s.variety))


def _assoc_residuals(s, c):
    mu = s.product

    def res(i, j, k):
        return vec_sub(mu(c.a[i], mu.c[j][k]), mu(mu.c[i][j], c.b[k]))

    return [("BiHom-associativity", 3, res)]


def check_bihom_associative(s, witness_cap=DEFAULT_WITNESS_CAP):
    _require(s, ASSOCIATIVE)
    rep = Report("BiHom-associative superalgebra", witness_cap)
    _compat_into(rep, s)
    _scan_all(rep, s, _assoc_residuals(s, _Ctx(s)))
    return rep


def _scan_all(rep, s, residuals):
    for name, arity, fn in residuals:
        scan(rep, name, (s.space.dim,) * arity, fn)


def jacobi_residual(br, ctx, i, j, k):
    p = ctx.p

    def term(x, y, z):
        return vec_scale(sign(p[x] * p[z]), br(ctx.bb[x], br(ctx.b[y], ctx.a[z])))

    return vec_add(vec_add(term(i, j, k), term(j, k, i)), term(k, i, j))


def _lie_residuals(s, c):
    br = s.product
    p = c.p

    def skew(i, j):
        return vec_add(br(c.b[i], c.a[j]), vec_scale(sign(p[i] * p[j]), br(c.b[j], c.a[i])))

    return [("BiHom super skew-symmetry", 2, skew),
            ("BiHom super-Jacobi", 3, lambda i, j, k: jacobi_residual(br, c, i, j, k))]


def check_bihom_lie(s, witness_cap=DEFAULT_WITNESS_CAP):
    _require(s, LIE)
    rep = Report("BiHom-Lie superalgebra", witness_cap)
    rep.metadata["jacobi_convention"] = JACOBI_CONVENTION
    _compat_into(rep, s, ["bracket"])
    _scan_all(rep, s, _lie_residuals(s, _Ctx(s)))
    return rep


def prelie_residual(op, ctx, i, j, k):
    """(b x . a y) . b z - ab x . (a y . z) minus its (x <-> y) super-swap."""
    p = ctx.p

    def assoc(x, y):
        return vec_sub(op(op(ctx.b[x], ctx.a[y]), ctx.b[k]),
                       op(ctx.ab[x], op(ctx.a[y], _e(ctx, k))))

    return vec_sub(assoc(i, j), vec_scale(sign(p[i] * p[j]), assoc(j, i)))


def _e(ctx, k):
    return basis_vector(ctx.s.space, k)


def _prelie_residuals(s, c):
    return [("BiHom-pre-Lie super-identity", 3,
             lambda i, j, k: prelie_residual(s.product, c, i, j, k))]


def check_bihom_prelie(s, witness_cap=DEFAULT_WITNESS_CAP):
    _require(s, PRELIE)
    rep = Report("BiHom-pre-Lie superalgebra", witness_cap)
    _compat_into(rep, s)
    _scan_all(rep, s, _prelie_residuals(s, _Ctx(s)))
    return rep


def _ldend_residuals(s, c):
    sc, pr = s.succ, s.prec
    p = c.p

    def first(i, j, k):
        z = _e(c, k)
        sg = sign(p[i] * p[j])
        lhs = sc(c.ab[i], sc(c.a[j], z))
        rhs = vec_add(sc(sc(c.b[i], c.a[j]), c.b[k]), sc(pr(c.b[i], c.a[j]), c.b[k]))
        rhs = vec_add(rhs, vec_scale(sg, sc(c.ab[j], sc(c.a[i], z))))
        rhs = vec_sub(rhs, vec_scale(sg, sc(pr(c.b[j], c.a[i]), c.b[k])))
        rhs = vec_sub(rhs, vec_scale(sg, sc(sc(c.b[j], c.a[i]), c.b[k])))
        return vec_sub(lhs, rhs)

    def second(i, j, k):
        z = _e(c, k)
        sg = sign(p[i] * p[j])
        lhs = sc(c.ab[i], pr(c.a[j], z))
        rhs = pr(sc(c.b[i], c.a[j]), c.b[k])
        rhs = vec_add(rhs, vec_scale(sg, pr(c.ab[j], sc(c.a[i], z))))
        rhs = vec_add(rhs, vec_scale(sg, pr(c.ab[j], pr(c.a[i], z))))
        rhs = vec_sub(rhs, vec_scale(sg, pr(pr(c.b[j], c.a[i]), c.b[k])))
        return vec_sub(lhs, rhs)

    return [("L-dendriform identity (|> |>)", 3, first),
            ("L-dendriform identity (|> <|)", 3, second)]


def check_bihom_ldendriform(s, witness_cap=DEFAULT_WITNESS_CAP):
    _require(s, LDENDRIFORM)
    rep = Report("BiHom-L-dendriform superalgebra", witness_cap)
    _compat_into(rep, s)
    _scan_all(rep, s, _ldend_residuals(s, _Ctx(s)))
    return rep


def identity_residuals(s):
    """[(name, arity, residual)] for the defining identities of s's variety
    (structure-map compatibility excluded)."""
    c = _Ctx(s)
    return {ASSOCIATIVE: _assoc_residuals, LIE: _lie_residuals, PRELIE: _prelie_residuals,
            LDENDRIFORM: _ldend_residuals}[s.variety](s, c)


def twisted_commutator(s):
    """[x,y] = x*y - (-1)^{|x||y|} (a^-1 b y) * (a b^-1 x) as a BilinearOp."""
    c = _Ctx(s, need_inverse=True)
    mu = s.product
    p = c.p
    return BilinearOp.from_function(
        s.space, lambda i, j: vec_sub(mu.c[i][j],
                                      vec_scale(sign(p[i] * p[j]), mu(c.tw[j], c.utw[i]))))


def check_lie_admissible(s, witness_cap=DEFAULT_WITNESS_CAP):
    _require(s, ASSOCIATIVE, LIE_ADMISSIBLE, PRELIE)
    if not s.invertible:
        raise InvertibilityRequired("Lie-admissibility uses alpha^-1 and beta^-1")
    br = s.with_products(twisted_commutator(s), variety=LIE)
    inner = check_bihom_lie(br, witness_cap)
    rep = Report("BiHom-Lie-admissible superalgebra", witness_cap)
    rep.extend(inner, "commutator: ")
    return rep


CHECKERS = {
    ASSOCIATIVE: check_bihom_associative,
    LIE: check_bihom_lie,
    PRELIE: check_bihom_prelie,
    LDENDRIFORM: check_bihom_ldendriform,
    LIE_ADMISSIBLE: check_lie_admissible,
}


def check_variety(s, witness_cap=DEFAULT_WITNESS_CAP):
    return CHECKERS[s.variety](s, witness_cap)
