"""Bimodules and representations of the four varieties.

Action convention: a stored right action is the *signed* right
multiplication, ``r(y)(v) = (-1)^{|y||v|} v*y``, so that on the regular
bimodule ``L(x)(y) = (-1)^{|x||y|} R(y)(x) = x*y``.  With this convention a
tuple (V, actions, alpha_V, beta_V) is a bimodule exactly when the
semidirect product A + V (V squaring to zero) lies in the same variety;
:func:`semidirect_product` builds that structure and the test-suite uses it
as an independent oracle for :func:`check_bimodule`.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .errors import (CheckerFailed, DimensionMismatch, InvertibilityRequired, MissingModuleProduct,
                     VarietyMismatch)
from .exact import ZERO, Matrix, vec_add, vec_scale, vec_sub
from .graded import Action, BilinearOp, EvenMap, SuperSpace, basis_vector, require_even, sign
from .report import DEFAULT_WITNESS_CAP, Report
from .varieties import (ASSOCIATIVE, LDENDRIFORM, LIE, PRELIE, Structure, check_variety,
                        identity_residuals, scan, twisted_commutator)

ACTION_NAMES = {
    ASSOCIATIVE: ("l", "r"),
    PRELIE: ("l", "r"),
    LIE: ("rho",),
    LDENDRIFORM: ("l>", "r>", "l<", "r<"),
}

PRELIE_RIGHT_NOTE = ("right-action identity read with l(beta(y)) alpha_V; Koszul signs "
                     "follow the semidirect-product derivation")


@dataclass(frozen=True, eq=False)
class Bimodule:
    """(V, actions, alpha_V, beta_V) over a base structure, optionally with a product on V."""

    base: Structure
    space: SuperSpace
    actions: dict
    alphaV: EvenMap
    betaV: EvenMap
    products: tuple = ()

    def __post_init__(self):
        names = ACTION_NAMES.get(self.base.variety)
        if names is None:
            raise VarietyMismatch("no bimodule notion for %s" % self.base.variety)
        actions = dict(self.actions)
        if set(actions) != set(names):
            raise DimensionMismatch("%s bimodules need actions %s" % (self.base.variety, names))
        for a in actions.values():
            if a.algebra != self.base.space or a.module != self.space:
                raise DimensionMismatch("action tensor over the wrong spaces")
        object.__setattr__(self, "actions", {n: actions[n] for n in names})
        for m in (self.alphaV, self.betaV):
            if m.domain != self.space or m.codomain != self.space:
                raise DimensionMismatch("alpha_V and beta_V must be endomorphisms of V")
            require_even(m, "module structure map")
        products = tuple(self.products)
        if products:
            want = 2 if self.base.variety == LDENDRIFORM else 1
            if len(products) != want or any(p.space != self.space for p in products):
                raise DimensionMismatch("module product(s) do not match V")
        object.__setattr__(self, "products", products)

    @property
    def variety(self):
        return self.base.variety

    def __getitem__(self, name):
        return self.actions[name]

    @property
    def product(self):
        if not self.products:
            raise MissingModuleProduct("bimodule carries no product on V")
        return self.products[0]

    def with_products(self, *products):
        return Bimodule(self.base, self.space, self.actions, self.alphaV, self.betaV, products)

    @cached_property
    def invertible(self):
        try:
            self.alphaV.inverse()
            self.betaV.inverse()
        except InvertibilityRequired:
            return False
        return True

    def __repr__(self):
        return "<Bimodule %s over %s, V=%s>" % (self.variety, self.base.space, self.space)


def regular_bimodule(s):
    """A acting on itself by its own multiplication(s); V carries the product(s) of A."""
    sp = s.space
    p = sp.parity

    def left(op):
        return Action(sp, sp, op.c)

    def right(op):
        return Action.from_function(
            sp, sp, lambda y, v: vec_scale(sign(p[y] * p[v]), op.c[v][y]))

    if s.variety in (ASSOCIATIVE, PRELIE):
        acts = {"l": left(s.product), "r": right(s.product)}
    elif s.variety == LIE:
        acts = {"rho": left(s.product)}
    elif s.variety == LDENDRIFORM:
        acts = {"l>": left(s.succ), "r>": right(s.succ),
                "l<": left(s.prec), "r<": right(s.prec)}
    else:
        raise VarietyMismatch("no regular bimodule for %s" % s.variety)
    return Bimodule(s, sp, acts, s.alpha, s.beta, s.products)


def adjoint_representation(s):
    if s.variety != LIE:
        raise VarietyMismatch("adjoint representation needs a Lie structure")
    return regular_bimodule(s)


def zero_bimodule(s, V, alphaV=None, betaV=None):
    acts = {n: Action.zeros(s.space, V) for n in ACTION_NAMES[s.variety]}
    return Bimodule(s, V, acts, alphaV or EvenMap.identity(V), betaV or EvenMap.identity(V))


def doubled_bimodule(bm):
    """V + V with the actions applied componentwise (a bimodule whenever bm is)."""
    V = bm.space
    n = V.dim
    # even-first ordering: evens of both copies, then odds of both copies
    order = [(c, i) for par in (0, 1) for c in (0, 1) for i in range(n) if V.parity[i] == par]
    names = ["%s_%d" % (V.basis_names[i], c + 1) for c, i in order]
    W = SuperSpace(tuple(names), tuple(V.parity[i] for _, i in order))
    pos = {ci: k for k, ci in enumerate(order)}

    def lift_vec(vec, c):
        out = [ZERO] * W.dim
        for i, a in enumerate(vec):
            if a:
                out[pos[(c, i)]] = a
        return tuple(out)

    def lift_action(act):
        return Action.from_function(
            bm.base.space, W, lambda a, k: lift_vec(act.c[a][order[k][1]], order[k][0]))

    def lift_map(m):
        cols = [lift_vec(m.column(order[k][1]), order[k][0]) for k in range(W.dim)]
        return EvenMap(W, W, Matrix.from_columns(cols, W.dim))

    acts = {name: lift_action(a) for name, a in bm.actions.items()}
    return Bimodule(bm.base, W, acts, lift_map(bm.alphaV), lift_map(bm.betaV)), order


# -- the checkers ---------------------------------------------------------------

class _MCtx:
    def __init__(self, bm):
        s = bm.base
        self.bm = bm
        self.pA = s.space.parity
        self.pV = bm.space.parity
        self.dA = s.space.dim
        self.dV = bm.space.dim
        a, b = s.alpha, s.beta
        self.a, self.b = a.columns, b.columns
        self.ab = (a @ b).columns
        self.bb = (b @ b).columns
        aV, bV = bm.alphaV, bm.betaV
        self.aV, self.bV = aV, bV
        self.aV_c, self.bV_c = aV.columns, bV.columns
        self.abV_c = (aV @ bV).columns
        self.bbV_c = (bV @ bV).columns

    def ev(self, k):
        return basis_vector(self.bm.space, k)


def _equivariance(rep, bm, c, names):
    for name in names:
        act = bm[name]
        for mname, m, mV in (("alpha", c.a, c.aV), ("beta", c.b, c.bV)):
            scan(rep, "%s(%s(x)) %s_V = %s_V %s(x)" % (name, mname, mname, mname, name),
                 (c.dA, c.dV),
                 lambda x, v, act=act, m=m, mV=mV:
                 vec_sub(act(m[x], mV.column(v)), mV(act.c[x][v])))


def check_bimodule(bm, witness_cap=DEFAULT_WITNESS_CAP):
    v = bm.variety
    rep = Report("%s bimodule" % v, witness_cap)
    c = _MCtx(bm)
    {ASSOCIATIVE: _assoc_bimodule, LIE: _lie_rep, PRELIE: _prelie_bimodule,
     LDENDRIFORM: _ldend_bimodule}[v](rep, bm, c)
    return rep


def _assoc_bimodule(rep, bm, c):
    mu = bm.base.product
    l, r = bm["l"], bm["r"]
    pA = c.pA
    dims3 = (c.dA, c.dA, c.dV)
    scan(rep, "l(alpha x) l(y) = l(xy) beta_V", dims3,
         lambda x, y, v: vec_sub(l(c.a[x], l.c[y][v]), l(mu.c[x][y], c.bV_c[v])))
    scan(rep, "l(alpha x) r(y) = (-1)^{|x||y|} r(beta y) l(x)", dims3,
         lambda x, y, v: vec_sub(l(c.a[x], r.c[y][v]),
                                 vec_scale(sign(pA[x] * pA[y]), r(c.b[y], l.c[x][v]))))
    scan(rep, "r(xy) alpha_V = (-1)^{|x||y|} r(beta y) r(x)", dims3,
         lambda x, y, v: vec_sub(r(mu.c[x][y], c.aV_c[v]),
                                 vec_scale(sign(pA[x] * pA[y]), r(c.b[y], r.c[x][v]))))
    _equivariance(rep, bm, c, ("l", "r"))


def _lie_rep(rep, bm, c):
    br = bm.base.product
    rho = bm["rho"]
    pA = c.pA
    _equivariance(rep, bm, c, ("rho",))

    def bracket_id(x, y, v):
        lhs = rho(br(c.b[x], _eA(bm, y)), c.bV_c[v])
        t1 = rho(c.ab[x], rho.c[y][v])
        t2 = rho(c.b[y], rho(c.a[x], c.ev(v)))
        return vec_sub(lhs, vec_sub(t1, vec_scale(sign(pA[x] * pA[y]), t2)))

    scan(rep, "rho([beta x, y]) beta_V = rho(alpha beta x) rho(y) - (-1)^{|x||y|} "
              "rho(beta y) rho(alpha x)", (c.dA, c.dA, c.dV), bracket_id)


def _eA(bm, i):
    return basis_vector(bm.base.space, i)


def _prelie_bimodule(rep, bm, c):
    op = bm.base.product
    l, r = bm["l"], bm["r"]
    pA = c.pA
    rep.metadata["right_action_reading"] = PRELIE_RIGHT_NOTE
    _equivariance(rep, bm, c, ("l", "r"))

    def left_id(x, y, u):
        def half(x, y):
            return vec_sub(l(op(c.b[x], c.a[y]), c.bV_c[u]), l(c.ab[x], l(c.a[y], c.ev(u))))
        return vec_sub(half(x, y), vec_scale(sign(pA[x] * pA[y]), half(y, x)))

    def right_id(x, y, u):
        s = sign(pA[x] * pA[y])
        lhs = vec_sub(r(c.b[x], r(c.a[y], c.bV_c[u])),
                      vec_scale(s, r(op(c.a[y], _eA(bm, x)), c.abV_c[u])))
        rhs = vec_sub(r(c.b[x], l(c.b[y], c.aV_c[u])),
                      vec_scale(s, l(c.ab[y], r(_eA(bm, x), c.aV_c[u]))))
        return vec_sub(lhs, rhs)

    scan(rep, "left actions", (c.dA, c.dA, c.dV), left_id)
    scan(rep, "right actions", (c.dA, c.dA, c.dV), right_id)


def _ldend_bimodule(rep, bm, c):
    s = bm.base
    sc, pr = s.succ, s.prec
    ls, rs, lp, rp = bm["l>"], bm["r>"], bm["l<"], bm["r<"]
    pA = c.pA
    _equivariance(rep, bm, c, ("l>", "r>", "l<", "r<"))

    dims = (c.dA, c.dA, c.dV)

    def item_a(x, y, v):
        # l>( {beta x, alpha y} ) beta_V, bracket = horizontal twisted commutator
        sg = sign(pA[x] * pA[y])
        bxay = vec_sub(vec_add(sc(c.b[x], c.a[y]), pr(c.b[x], c.a[y])),
                       vec_scale(sg, vec_add(sc(c.b[y], c.a[x]), pr(c.b[y], c.a[x]))))
        lhs = ls(bxay, c.bV_c[v])
        rhs = vec_sub(ls(c.ab[x], ls(c.a[y], c.ev(v))),
                      vec_scale(sg, ls(c.ab[y], ls(c.a[x], c.ev(v)))))
        return vec_sub(lhs, rhs)

    def item_b(x, y, v):
        # vertical product: beta x o alpha y = beta x |> alpha y - s beta y <| alpha x
        sg = sign(pA[x] * pA[y])
        circ = vec_sub(sc(c.b[x], c.a[y]), vec_scale(sg, pr(c.b[y], c.a[x])))
        lhs = lp(circ, c.bV_c[v])
        ev = c.ev(v)
        rhs = ls(c.ab[x], lp(c.a[y], ev))
        rhs = vec_sub(rhs, vec_scale(sg, lp(c.ab[y], lp(c.a[x], ev))))
        rhs = vec_sub(rhs, vec_scale(sg, lp(c.ab[y], ls(c.a[x], ev))))
        return vec_sub(lhs, rhs)

    def item_c(x, z, v):
        sg = sign(pA[x] * pA[z])
        e = _eA(bm, z)
        lhs = rs(sc(c.a[x], e), c.abV_c[v])
        rhs = ls(c.ab[x], rs(e, c.aV_c[v]))
        rhs = vec_sub(rhs, vec_scale(sg, rs(c.b[z], ls(c.b[x], c.aV_c[v]))))
        rhs = vec_sub(rhs, vec_scale(sg, rs(c.b[z], lp(c.b[x], c.aV_c[v]))))
        rhs = vec_add(rhs, vec_scale(sg, rs(c.b[z], rp(c.a[x], c.bV_c[v]))))
        rhs = vec_add(rhs, vec_scale(sg, rs(c.b[z], rs(c.a[x], c.bV_c[v]))))
        return vec_sub(lhs, rhs)

    def item_d(y, z, v):
        sg = sign(pA[y] * pA[z])
        e = _eA(bm, z)
        lhs = rs(pr(c.a[y], e), c.abV_c[v])
        rhs = vec_scale(sg, rp(c.b[z], rs(c.a[y], c.bV_c[v])))
        rhs = vec_add(rhs, lp(c.ab[y], rs(e, c.aV_c[v])))
        rhs = vec_add(rhs, lp(c.ab[y], rp(e, c.aV_c[v])))
        rhs = vec_sub(rhs, vec_scale(sg, rp(c.b[z], lp(c.b[y], c.aV_c[v]))))
        return vec_sub(lhs, rhs)

    def item_e(x, z, v):
        sg = sign(pA[x] * pA[z])
        e = _eA(bm, z)
        bullet = vec_add(sc(c.a[x], e), pr(c.a[x], e))
        lhs = rp(bullet, c.abV_c[v])
        rhs = ls(c.ab[x], rp(e, c.aV_c[v]))
        rhs = vec_sub(rhs, vec_scale(sg, rp(c.b[z], ls(c.b[x], c.aV_c[v]))))
        rhs = vec_add(rhs, vec_scale(sg, rp(c.b[z], rp(c.a[x], c.bV_c[v]))))
        return vec_sub(lhs, rhs)

    scan(rep, "l>([beta x, alpha y]) beta_V", dims, item_a)
    scan(rep, "l<(beta x o alpha y) beta_V", dims, item_b)
    scan(rep, "r>(alpha x |> y) alpha_V beta_V", dims, item_c)
    scan(rep, "r>(alpha x <| y) alpha_V beta_V", dims, item_d)
    scan(rep, "r<(alpha x . y) alpha_V beta_V", dims, item_e)


# -- semidirect products ----------------------------------------------------------

def direct_sum(A, V):
    """A + V with even-first ordering; returns (W, positions of A, positions of V)."""
    tagged = [(A.parity[i], 0, i) for i in range(A.dim)] + [(V.parity[k], 1, k) for k in range(V.dim)]
    tagged.sort(key=lambda t: t[0])
    names = [("a:" if side == 0 else "v:") + (A if side == 0 else V).basis_names[i]
             for _, side, i in tagged]
    W = SuperSpace(tuple(names), tuple(t[0] for t in tagged))
    pa, pv = [0] * A.dim, [0] * V.dim
    for pos, (_, side, i) in enumerate(tagged):
        (pa if side == 0 else pv)[i] = pos
    return W, pa, pv


def _embed(vec, pos, n):
    out = [ZERO] * n
    for i, a in enumerate(vec):
        if a:
            out[pos[i]] += a
    return tuple(out)


def _block_map(W, pa, pv, m, mV):
    cols = [None] * W.dim
    for i in range(m.domain.dim):
        cols[pa[i]] = _embed(m.column(i), pa, W.dim)
    for k in range(mV.domain.dim):
        cols[pv[k]] = _embed(mV.column(k), pv, W.dim)
    return EvenMap(W, W, Matrix.from_columns(cols, W.dim))


def semidirect_product(bm, with_module_product=False):
    """The structure on A + V whose axioms contain the bimodule axioms.

    Products: (x,u)*(y,v) = (x*y, l(x)v + (-1)^{|u||y|} r(y)u [+ u*_V v]).  For a
    Lie representation the V-part of the bracket is
    rho(x)v - (-1)^{|u||y|} rho(a^-1 b y)(a_V b_V^-1 u), which needs invertible maps.
    """
    s = bm.base
    A, V = s.space, bm.space
    W, pa, pv = direct_sum(A, V)
    n = W.dim
    side = {}
    for i in range(A.dim):
        side[pa[i]] = (0, i)
    for k in range(V.dim):
        side[pv[k]] = (1, k)
    pA, pV = A.parity, V.parity
    vprods = bm.products if with_module_product else ()
    if with_module_product and not vprods:
        raise MissingModuleProduct("bimodule carries no product on V")

    if s.variety == LIE:
        if not (s.invertible and bm.invertible):
            raise InvertibilityRequired("the Lie semidirect product uses inverse maps")
        tw = s.twist.columns
        uV = (bm.alphaV @ bm.betaV.inverse()).columns
        rho = bm["rho"]

        def lie_fn(i, j):
            (si, a), (sj, b) = side[i], side[j]
            if si == 0 and sj == 0:
                return _embed(s.product.c[a][b], pa, n)
            if si == 0:
                return _embed(rho.c[a][b], pv, n)
            if sj == 0:
                return _embed(vec_scale(-sign(pV[a] * pA[b]), rho(tw[b], uV[a])), pv, n)
            return _embed(vprods[0].c[a][b], pv, n) if vprods else (ZERO,) * n

        prods = (BilinearOp.from_function(W, lie_fn),)
    else:
        pairs = [("l", "r")] if s.variety != LDENDRIFORM else [("l>", "r>"), ("l<", "r<")]

        def make(op, lname, rname, vop):
            l, r = bm[lname], bm[rname]

            def fn(i, j):
                (si, a), (sj, b) = side[i], side[j]
                if si == 0 and sj == 0:
                    return _embed(op.c[a][b], pa, n)
                if si == 0:
                    return _embed(l.c[a][b], pv, n)
                if sj == 0:
                    return _embed(vec_scale(sign(pV[a] * pA[b]), r.c[b][a]), pv, n)
                return _embed(vop.c[a][b], pv, n) if vop is not None else (ZERO,) * n
            return BilinearOp.from_function(W, fn)

        prods = tuple(make(op, ln, rn, vprods[t] if vprods else None)
                      for t, (op, (ln, rn)) in enumerate(zip(s.products, pairs)))
    alpha = _block_map(W, pa, pv, s.alpha, bm.alphaV)
    beta = _block_map(W, pa, pv, s.beta, bm.betaV)
    return Structure(s.variety, W, prods, alpha, beta), pa, pv


# -- module K-superalgebras ---------------------------------------------------------

_ASSOC_KS = {
    "AVV": "l(alpha x) mu_V(u,v) = mu_V(l(x)u, beta_V v)",
    "VVA": "mu_V(alpha_V u, r(x)v) = (-1)^{|u||x|} r(beta x) mu_V(u,v)",
    "VAV": "mu_V(alpha_V u, l(x)v) = (-1)^{|u||x|} mu_V(r(x)u, beta_V v)",
}


def check_module_k_superalgebra(bm, witness_cap=DEFAULT_WITNESS_CAP):
    """Compatibility of the actions with the product on V.

    The conditions are the defining identities of the base variety on the
    semidirect product A + V (with the product of V switched on), evaluated
    on triples with exactly two arguments in V.  Items are named by the
    position of the algebra argument; for the associative variety the
    three items are, in order, l(alpha x) mu_V(u,v) = mu_V(l(x)u, beta_V v)
    and its two companions with the Koszul signs made explicit.  A final
    item checks that V with its own product lies in the variety.
    """
    if not bm.products:
        raise MissingModuleProduct("bimodule carries no product on V")
    pre = check_bimodule(bm)
    if not pre.passed:
        raise CheckerFailed("not a bimodule", pre)
    v = bm.variety
    rep = Report("%s bimodule K-superalgebra" % v, witness_cap)
    W, pa, pv = direct_sum(bm.base.space, bm.space)
    sd, _, _ = semidirect_product(bm, with_module_product=True)
    slots = {0: ("A", pa), 1: ("V", pv)}
    for name, arity, fn in identity_residuals(sd):
        if arity != 3:
            continue
        for pattern in ("AVV", "VVA", "VAV"):
            dims = [len(pa) if ch == "A" else len(pv) for ch in pattern]
            fails = []
            for idx in product(*[range(d) for d in dims]):
                w = [pa[i] if ch == "A" else pv[i] for ch, i in zip(pattern, idx)]
                res = fn(*w)
                if any(res):
                    fails.append((idx, res))
            label = _ASSOC_KS[pattern] if v == ASSOCIATIVE else "%s, arguments %s" % (name, pattern)
            rep.add(label, fails)
    own = Structure(v, bm.space, bm.products, bm.alphaV, bm.betaV)
    rep.extend(check_variety(own, witness_cap), "V: ")
    rep.metadata["convention"] = ("identities of the semidirect product with two module "
                                  "arguments; residuals are coordinates in A + V")
    return rep
