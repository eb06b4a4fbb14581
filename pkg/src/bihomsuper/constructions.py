"""Structure-transfer constructions.

Each construction builds a new Structure or Bimodule and, unless
``certify=False``, runs the matching checker on the result and raises
:class:`CertificationFailed` (carrying the report) if it does not pass.
Preconditions that are identities (input is pre-Lie, R is Rota-Baxter of
the stated weight, ...) are checked the same way and raise
:class:`CheckerFailed` or :class:`OOperatorCheckFailed`.
"""

from dataclasses import dataclass

from .errors import (CertificationFailed, CheckerFailed, ImageNotWellDefined,
                     InvertibilityRequired, NotAMorphism, OOperatorCheckFailed, VarietyMismatch,
                     WrongWeight)
from .exact import (Q, ZERO, Matrix, echelon_column_basis, is_invertible, kernel_basis, solve,
                    vec_add, vec_scale, vec_sub)
from .graded import Action, BilinearOp, EvenMap, SuperSpace, basis_vector, sign
from .operators import O_OPERATOR, check_module_rota_baxter, check_o_operator, check_rota_baxter
from .report import DEFAULT_WITNESS_CAP, Report
from .search import DEFAULT_CAP, DIAGONAL, SearchSpec, candidates
from .representations import ACTION_NAMES, Bimodule, check_bimodule, regular_bimodule
from .varieties import (ASSOCIATIVE, LDENDRIFORM, LIE, LIE_ADMISSIBLE, PRELIE, Structure,
                        check_bihom_associative, check_bihom_ldendriform, check_bihom_lie,
                        check_bihom_prelie, check_lie_admissible, check_structure_compat,
                        check_variety, scan, twisted_commutator)

PRELIE_TO_LIE = "prelie_to_lie"
LDEND_TO_ASSOC = "ldend_to_assoc"
RB_TWISTED_ACTIONS = "rb_twisted_actions"
TRANSFER_KINDS = (PRELIE_TO_LIE, LDEND_TO_ASSOC, RB_TWISTED_ACTIONS)


# -- helpers ----------------------------------------------------------------------

def _require(s, *varieties):
    if s.variety not in varieties:
        raise VarietyMismatch("expected a %s structure, got %s"
                              % (" or ".join(varieties), s.variety))


def _need_invertible(s):
    if not s.invertible:
        raise InvertibilityRequired("alpha and beta must be invertible")


def _precondition(report, exc=CheckerFailed):
    if not report.passed:
        raise exc("precondition failed: %s" % report.subject, report)
    return report


def _certify(obj, report, certify):
    if certify and not report.passed:
        raise CertificationFailed("construction output failed: %s" % report.subject, report)
    return obj


def _op(space, fn):
    return BilinearOp.from_function(space, fn)


def _weight(R, default=ZERO):
    """Accept an EvenMap or anything with ``.map`` and ``.weight`` (OperatorSpec)."""
    if hasattr(R, "map"):
        return R.map, R.weight
    return R, Q(default)


class _Twists:
    def __init__(self, s):
        _need_invertible(s)
        self.p = s.space.parity
        self.tw = s.twist.columns      # alpha^-1 beta
        self.utw = s.untwist.columns   # alpha beta^-1
        self.e = [basis_vector(s.space, i) for i in range(s.space.dim)]

    def sg(self, i, j):
        return sign(self.p[i] * self.p[j])


# -- commutators -----------------------------------------------------------------

def supercommutator(s, certify=True):
    """[x,y] = xy - (-1)^{|x||y|} yx, structure maps unchanged."""
    _require(s, ASSOCIATIVE)
    mu, p = s.product, s.space.parity
    br = _op(s.space, lambda i, j: vec_sub(mu.c[i][j], vec_scale(sign(p[i] * p[j]), mu.c[j][i])))
    out = s.with_products(br, variety=LIE)
    return _certify(out, check_bihom_lie(out), certify)


def twisted_supercommutator(s, certify=True):
    """[x,y] = xy - (-1)^{|x||y|} (a^-1 b y)(a b^-1 x)."""
    _require(s, ASSOCIATIVE, LIE_ADMISSIBLE)
    out = s.with_products(twisted_commutator(s), variety=LIE)
    return _certify(out, check_bihom_lie(out), certify)


def subadjacent(s, certify=True, check_input=True):
    _require(s, PRELIE)
    _need_invertible(s)
    if check_input:
        _precondition(check_bihom_prelie(s))
    out = s.with_products(twisted_commutator(s), variety=LIE)
    return _certify(out, check_bihom_lie(out), certify)


def yau_twist_prelie(s, a, b, certify=True):
    """x o' y = a(x) o b(y) with structure maps a, b, from an untwisted pre-Lie s."""
    _require(s, PRELIE)
    if not (s.alpha.is_identity() and s.beta.is_identity()):
        raise VarietyMismatch("the Yau twist starts from alpha = beta = Id")
    _precondition(check_bihom_prelie(s))
    mu = s.product
    cols_a, cols_b = a.columns, b.columns
    d = s.space.dim
    for m, cols in ((a, cols_a), (b, cols_b)):
        for i in range(d):
            for j in range(d):
                if m(mu.c[i][j]) != mu(cols[i], cols[j]):
                    raise NotAMorphism("map is not a morphism of the product at (%d, %d)" % (i, j))
    if (a @ b) != (b @ a):
        raise NotAMorphism("the two maps do not commute")
    op = _op(s.space, lambda i, j: mu(cols_a[i], cols_b[j]))
    out = Structure(PRELIE, s.space, (op,), a, b)
    return _certify(out, check_bihom_prelie(out), certify)


# -- Rota-Baxter constructions -------------------------------------------------

def prelie_from_rb_assoc(s, R, weight=None, certify=True):
    """x o y = R(x)y - (-1)^{|x||y|} (a^-1 b y) R(a b^-1 x)  [- xy at weight -1]."""
    _require(s, ASSOCIATIVE)
    R, w = _weight(R, ZERO if weight is None else weight)
    if weight is not None and Q(weight) != w:
        raise WrongWeight("operator weight %s differs from requested %s" % (w, weight))
    if w not in (ZERO, Q(-1)):
        raise WrongWeight("defined for weight 0 or -1, got %s" % w)
    t = _Twists(s)
    _precondition(check_rota_baxter(s, R, w))
    mu = s.product
    Rc = R.columns

    def fn(i, j):
        out = vec_sub(mu(Rc[i], t.e[j]), vec_scale(t.sg(i, j), mu(t.tw[j], R(t.utw[i]))))
        if w:
            out = vec_sub(out, mu.c[i][j])
        return out

    out = Structure(PRELIE, s.space, (_op(s.space, fn),), s.alpha, s.beta)
    return _certify(out, check_bihom_prelie(out), certify)


def lie_from_rb_assoc_minus1(s, R, certify=True):
    """The six-term bracket of a weight -1 Rota-Baxter associative structure."""
    _require(s, ASSOCIATIVE)
    R, w = _weight(R, -1)
    if w != Q(-1):
        raise WrongWeight("defined for weight -1, got %s" % w)
    t = _Twists(s)
    _precondition(check_rota_baxter(s, R, w))
    mu = s.product
    Rc = R.columns

    def fn(i, j):
        sg = t.sg(i, j)
        out = mu(Rc[i], t.e[j])
        out = vec_sub(out, vec_scale(sg, mu(t.tw[j], R(t.utw[i]))))
        out = vec_sub(out, mu.c[i][j])
        out = vec_add(out, mu(t.e[i], Rc[j]))
        out = vec_sub(out, vec_scale(sg, mu(R(t.tw[j]), t.utw[i])))
        out = vec_add(out, vec_scale(sg, mu(t.tw[j], t.utw[i])))
        return out

    out = s.with_products(_op(s.space, fn), variety=LIE)
    if certify:
        _certify(out, check_bihom_lie(out), True)
        _certify(out, check_rota_baxter(out, R, w), True)
    return out


def prelie_star_from_rb_prelie(s, R, certify=True):
    """x * y = R(x) o y - (-1)^{|x||y|} (a^-1 b y) o R(a b^-1 x), R of weight 0."""
    _require(s, PRELIE)
    R, w = _weight(R)
    if w:
        raise WrongWeight("defined for weight 0, got %s" % w)
    t = _Twists(s)
    _precondition(check_rota_baxter(s, R, 0))
    op = s.product
    Rc = R.columns
    star = _op(s.space, lambda i, j: vec_sub(op(Rc[i], t.e[j]),
                                             vec_scale(t.sg(i, j), op(t.tw[j], R(t.utw[i])))))
    out = s.with_products(star)
    if certify:
        _certify(out, check_bihom_prelie(out), True)
        _certify(out, check_rota_baxter(out, R, 0), True)
    return out


def prelie_from_rb_lie_admissible(s, R, certify=True):
    """x * y = [R(x), y] with the twisted supercommutator, R of weight 0."""
    _require(s, ASSOCIATIVE, LIE_ADMISSIBLE)
    R, w = _weight(R)
    if w:
        raise WrongWeight("defined for weight 0, got %s" % w)
    _need_invertible(s)
    _precondition(check_lie_admissible(s))
    _precondition(check_rota_baxter(s, R, 0))
    br = twisted_commutator(s)
    Rc = R.columns
    star = _op(s.space, lambda i, j: br(Rc[i], basis_vector(s.space, j)))
    out = s.with_products(star, variety=PRELIE)
    return _certify(out, check_bihom_prelie(out), certify)


# -- O-operator constructions ------------------------------------------------------

def _check_o(bm, T):
    T, w = _weight(T)
    if w:
        raise WrongWeight("defined for weight 0, got %s" % w)
    _precondition(check_o_operator(bm, T, 0), OOperatorCheckFailed)
    return T


def prelie_from_o_op_lie(bm, T, certify=True):
    """u o v = rho(T(u)) v on V, with structure maps alpha_V, beta_V."""
    _require(bm.base, LIE)
    T = _check_o(bm, T)
    rho = bm["rho"]
    Tc = T.columns
    op = _op(bm.space, lambda i, j: rho(Tc[i], basis_vector(bm.space, j)))
    out = Structure(PRELIE, bm.space, (op,), bm.alphaV, bm.betaV)
    return _certify(out, check_bihom_prelie(out), certify)


def prelie_from_rb_lie(s, R, certify=True):
    """x o y = [R(x), y] for a weight-zero O-operator R of the adjoint representation."""
    return prelie_from_o_op_lie(regular_bimodule(s), R, certify)


def ldend_from_o_op_assoc(bm, T, certify=True):
    """u |> v = l(T u) v,  u <| v = (-1)^{|u||v|} r(T v) u."""
    _require(bm.base, ASSOCIATIVE)
    T = _check_o(bm, T)
    l, r = bm["l"], bm["r"]
    Tc, pV = T.columns, bm.space.parity
    e = [basis_vector(bm.space, k) for k in range(bm.space.dim)]
    succ = _op(bm.space, lambda i, j: l(Tc[i], e[j]))
    prec = _op(bm.space, lambda i, j: vec_scale(sign(pV[i] * pV[j]), r(Tc[j], e[i])))
    out = Structure(LDENDRIFORM, bm.space, (succ, prec), bm.alphaV, bm.betaV)
    return _certify(out, check_bihom_ldendriform(out), certify)


def ldend_from_rb_assoc(s, R, certify=True):
    """x |> y = R(x)y, x <| y = xR(y) for a weight-zero Rota-Baxter R."""
    return ldend_from_o_op_assoc(regular_bimodule(s), R, certify)


@dataclass
class ImageStructure:
    """L-dendriform structure induced on T(V), in the basis ``basis`` of T(V)."""

    structure: Structure
    basis: list
    inclusion: EvenMap


def ldend_from_o_op_prelie(bm, T, certify=True, literal=False):
    """u |> v = l(T u) v,  u <| v = -r(T a_V b_V^-1 u)(a_V^-1 b_V v).

    Returns (structure on V, structure on T(V)).  On the regular bimodule
    with T = R this is the L-dendriform structure of ldend_from_rb_prelie.
    ``literal=True`` uses u <| v = -r(T u) v instead; that form is not
    L-dendriform on every input once the twists differ (see the tests).
    """
    _require(bm.base, PRELIE)
    T = _check_o(bm, T)
    l, r = bm["l"], bm["r"]
    Tc = T.columns
    e = [basis_vector(bm.space, k) for k in range(bm.space.dim)]
    succ = _op(bm.space, lambda i, j: l(Tc[i], e[j]))
    if literal:
        prec = _op(bm.space, lambda i, j: vec_scale(-1, r(Tc[i], e[j])))
    else:
        if not bm.invertible:
            raise InvertibilityRequired("the <| product uses alpha_V^-1 and beta_V^-1")
        twV = (bm.alphaV.inverse() @ bm.betaV).columns
        utwV = (bm.alphaV @ bm.betaV.inverse())
        prec = _op(bm.space, lambda i, j: vec_scale(-1, r(T(utwV.column(i)), twV[j])))
    out = Structure(LDENDRIFORM, bm.space, (succ, prec), bm.alphaV, bm.betaV)
    if certify:
        _certify(out, check_bihom_ldendriform(out), True)
        if out.invertible:
            vert = vertical(out)
            _certify(vert, _homomorphism_report(vert, bm.base, T), True)
    image = image_structure(out, bm.base, T)
    if certify:
        _certify(image, check_bihom_ldendriform(image.structure), True)
    return out, image


def _homomorphism_report(src, dst, T):
    rep = Report("T is a homomorphism of pre-Lie structures")
    Tc = T.columns
    d = src.space.dim
    scan(rep, "T(u o v) = T(u) o T(v)", (d, d),
         lambda i, j: vec_sub(T(src.product.c[i][j]), dst.product(Tc[i], Tc[j])))
    return rep


def image_structure(vs, base, T):
    """Transport the products of vs to T(V) via T(u) * T(v) = T(u * v).

    T(V) gets the reduced echelon basis of the column space of T; the result
    is checked to be independent of preimage choices, i.e. every product
    with an argument in ker T must map to zero under T.
    """
    A = base.space
    cols = echelon_column_basis(T.matrix)
    # basis vectors are homogeneous because T is even and the echelon basis
    # of a block-structured column space stays within blocks
    par = []
    for v in cols:
        ps = {A.parity[k] for k, a in enumerate(v) if a}
        if len(ps) != 1:
            raise ImageNotWellDefined("image basis vector is not homogeneous")
        par.append(ps.pop())
    order = sorted(range(len(cols)), key=lambda k: par[k])
    cols = [cols[k] for k in order]
    par = [par[k] for k in order]
    W = SuperSpace(tuple("T%d" % (k + 1) for k in range(len(cols))), tuple(par))
    B = Matrix.from_columns(cols, A.dim) if cols else Matrix.zero(A.dim, 0)
    inc = EvenMap(W, A, B)

    def coords(x):
        c = solve(B, x) if cols else ()
        if c is None:
            raise ImageNotWellDefined("product leaves T(V)")
        return c

    # well-definedness: for u in ker T, T(u * v) = T(v * u) = 0
    ker = kernel_basis(T.matrix)
    dV = vs.space.dim
    for k in ker:
        for j in range(dV):
            ej = basis_vector(vs.space, j)
            for op in vs.products:
                if any(T(op(k, ej))) or any(T(op(ej, k))):
                    raise ImageNotWellDefined("T(u * v) depends on the preimage of T(u)")
    pre = []
    for v in cols:
        u = solve(T.matrix, v)
        pre.append(u)

    def restrict(m):
        # m acts on A; T(V) is invariant because m T = T m_V
        return EvenMap(W, W, Matrix.from_columns([coords(m(v)) for v in cols], len(cols))
                       if cols else Matrix.zero(0, 0))

    prods = tuple(_op(W, lambda i, j, op=op: coords(T(op(pre[i], pre[j])))) for op in vs.products)
    st = Structure(vs.variety, W, prods, restrict(base.alpha), restrict(base.beta))
    return ImageStructure(st, cols, inc)


def ldend_from_rb_prelie(s, R, certify=True):
    """x |> y = R(x) o y,  x <| y = -(-1)^{|x||y|} (a^-1 b y) o R(a b^-1 x)."""
    _require(s, PRELIE)
    R, w = _weight(R)
    if w:
        raise WrongWeight("defined for weight 0, got %s" % w)
    t = _Twists(s)
    _precondition(check_rota_baxter(s, R, 0))
    op = s.product
    Rc = R.columns
    succ = _op(s.space, lambda i, j: op(Rc[i], t.e[j]))
    prec = _op(s.space, lambda i, j: vec_scale(-t.sg(i, j), op(t.tw[j], R(t.utw[i]))))
    out = Structure(LDENDRIFORM, s.space, (succ, prec), s.alpha, s.beta)
    return _certify(out, check_bihom_ldendriform(out), certify)


# -- L-dendriform derived structures -------------------------------------------------

def vertical(s, certify=False):
    """x o y = x |> y - (-1)^{|x||y|} (a^-1 b y) <| (a b^-1 x)."""
    _require(s, LDENDRIFORM)
    t = _Twists(s)
    sc, pr = s.succ, s.prec
    op = _op(s.space, lambda i, j: vec_sub(sc.c[i][j],
                                           vec_scale(t.sg(i, j), pr(t.tw[j], t.utw[i]))))
    out = s.with_products(op, variety=PRELIE)
    return _certify(out, check_bihom_prelie(out), certify)


def horizontal(s, certify=False):
    """x . y = x |> y + x <| y."""
    _require(s, LDENDRIFORM)
    sc, pr = s.succ, s.prec
    out = s.with_products(sc + pr, variety=PRELIE)
    return _certify(out, check_bihom_prelie(out), certify)


def transpose(s, certify=False):
    """|>^t = |>,  x <|^t y = -(-1)^{|x||y|} (a^-1 b y) <| (a b^-1 x)."""
    _require(s, LDENDRIFORM)
    t = _Twists(s)
    pr = s.prec
    prt = _op(s.space, lambda i, j: vec_scale(-t.sg(i, j), pr(t.tw[j], t.utw[i])))
    out = s.with_products(s.succ, prt)
    return _certify(out, check_bihom_ldendriform(out), certify)


def ldend_bracket(s, certify=False):
    """[x,y] = x|>y - s (a^-1 b y)<|(a b^-1 x) - s (a^-1 b y)|>(a b^-1 x) + x<|y."""
    _require(s, LDENDRIFORM)
    t = _Twists(s)
    sc, pr = s.succ, s.prec

    def fn(i, j):
        sg = t.sg(i, j)
        out = vec_add(sc.c[i][j], pr.c[i][j])
        out = vec_sub(out, vec_scale(sg, pr(t.tw[j], t.utw[i])))
        return vec_sub(out, vec_scale(sg, sc(t.tw[j], t.utw[i])))

    out = s.with_products(_op(s.space, fn), variety=LIE)
    return _certify(out, check_bihom_lie(out), certify)


@dataclass
class LDendDerived:
    vertical: Structure
    horizontal: Structure
    transpose: Structure
    bracket: Structure


def ldend_derived(s, certify=True):
    _require(s, LDENDRIFORM)
    _need_invertible(s)
    if certify:
        _precondition(check_bihom_ldendriform(s))
    out = LDendDerived(vertical(s, certify), horizontal(s, certify), transpose(s, certify),
                       ldend_bracket(s, certify))
    if certify:
        t = out.transpose
        if not (vertical(t).products == out.horizontal.products
                and horizontal(t).products == out.vertical.products):
            raise CertificationFailed("transpose does not exchange vertical and horizontal", None)
    return out


# -- representations -----------------------------------------------------------------

def l_circ_representation(s, certify=True):
    """Left multiplication of a pre-Lie s as a representation of its sub-adjacent Lie."""
    lie = subadjacent(s, certify)
    bm = Bimodule(lie, s.space, {"rho": Action(s.space, s.space, s.product.c)}, s.alpha, s.beta)
    return _certify(bm, check_bimodule(bm), certify)


def bimodule_transfer(bm, kind, R=None, RV=None, certify=True):
    """Bimodule over a derived structure.

    prelie_to_lie: rho(x) = l(x) - r(a b^-1 x) a_V^-1 b_V over the sub-adjacent Lie;
    ldend_to_assoc: (l|> + l<|, r|> + r<|) over the horizontal product, which must be
    BiHom-associative; rb_twisted_actions: the four actions built from Rota-Baxter
    operators R on A and R_V on V, over the L-dendriform structure of R.
    """
    if kind not in TRANSFER_KINDS:
        raise ValueError("unknown transfer kind %r" % (kind,))
    _precondition(check_bimodule(bm))
    s = bm.base
    V = bm.space
    if kind == PRELIE_TO_LIE:
        _require(s, PRELIE)
        lie = subadjacent(s, certify)
        if not bm.invertible:
            raise InvertibilityRequired("alpha_V and beta_V must be invertible")
        utw = s.untwist.columns
        twV = bm.alphaV.inverse() @ bm.betaV
        l, r = bm["l"], bm["r"]
        rho = Action.from_function(
            s.space, V, lambda a, k: vec_sub(l.c[a][k], r(utw[a], twV.column(k))))
        out = Bimodule(lie, V, {"rho": rho}, bm.alphaV, bm.betaV)
    elif kind == LDEND_TO_ASSOC:
        _require(s, LDENDRIFORM)
        assoc = s.with_products(s.succ + s.prec, variety=ASSOCIATIVE)
        _precondition(check_bihom_associative(assoc))
        acts = {"l": bm["l>"] + bm["l<"], "r": bm["r>"] + bm["r<"]}
        out = Bimodule(assoc, V, acts, bm.alphaV, bm.betaV)
    else:
        _require(s, ASSOCIATIVE)
        if R is None or RV is None:
            raise ValueError("rb_twisted_actions needs R and R_V")
        R, _ = _weight(R)
        RV, _ = _weight(RV)
        _precondition(check_rota_baxter(s, R, 0))
        _precondition(check_module_rota_baxter(bm, R, RV))
        ld = ldend_from_rb_assoc(s, R, certify)
        l, r = bm["l"], bm["r"]
        Rc = R.columns
        acts = {
            "l>": Action.from_function(s.space, V, lambda a, k: l(Rc[a], basis_vector(V, k))),
            "r>": Action.from_function(s.space, V, lambda a, k: r(basis_vector(s.space, a), RV.column(k))),
            "l<": Action.from_function(s.space, V, lambda a, k: l(basis_vector(s.space, a), RV.column(k))),
            "r<": Action.from_function(s.space, V, lambda a, k: r(Rc[a], basis_vector(V, k))),
        }
        out = Bimodule(ld, V, acts, bm.alphaV, bm.betaV)
    return _certify(out, check_bimodule(out), certify)


# -- compatible L-dendriform structures ------------------------------------------------

def vertical_bimodule(s, certify=True):
    """(A, l|>, -r<|, alpha, beta) as a bimodule over the vertical pre-Lie of an
    L-dendriform s.

    Always a bimodule. The identity of A is an O-operator for it on most inputs but
    not all: it can fail when one twist is the parity automorphism and the other
    is the identity. ``left_bimodule`` always works.
    """
    _require(s, LDENDRIFORM)
    reg = regular_bimodule(s)
    out = Bimodule(vertical(s, certify), s.space, {"l": reg["l>"], "r": -reg["r<"]},
                   s.alpha, s.beta)
    return _certify(out, check_bimodule(out), certify)


def left_bimodule(s, certify=True):
    """(A, L, 0, alpha, beta) for a pre-Lie s; the identity is an O-operator for it
    and yields the trivial compatible structure x |> y = x.y, x <| y = 0."""
    _require(s, PRELIE)
    reg = regular_bimodule(s)
    out = Bimodule(s, s.space, {"l": reg["l"], "r": Action.zeros(s.space, s.space)}, s.alpha, s.beta)
    return _certify(out, check_bimodule(out), certify)


def compatible_ldend_from_o_op(s, T, bm=None, certify=True):
    """L-dendriform structure on A compatible with the pre-Lie s, from an invertible
    weight-0 O-operator T: V -> A (regular bimodule by default):
    x |> y = T(T^-1 x |> T^-1 y) and likewise for <|."""
    _require(s, PRELIE)
    T, _ = _weight(T)
    bm = regular_bimodule(s) if bm is None else bm
    vs, _ = ldend_from_o_op_prelie(bm, T, certify)
    Ti = T.inverse().columns
    prods = tuple(_op(s.space, lambda i, j, op=op: T(op(Ti[i], Ti[j]))) for op in vs.products)
    out = Structure(LDENDRIFORM, s.space, prods, s.alpha, s.beta)
    if certify:
        _certify(out, check_bihom_ldendriform(out), True)
        if vertical(out).products != s.products:
            raise CertificationFailed("vertical structure differs from the input", None)
    return out


def compatible_ldend_exists(s, grid=(-1, 0, 1), shape=DIAGONAL, cap=DEFAULT_CAP, bm=None):
    """Bounded search for an invertible weight-0 O-operator V -> A (V = A regular
    unless ``bm`` is given); returns (structure, T) or None.

    None means the grid held no witness, which proves nothing.
    """
    _require(s, PRELIE)
    _need_invertible(s)
    bm = regular_bimodule(s) if bm is None else bm
    if bm.base is not s and not bm.base.same_as(s):
        raise VarietyMismatch("bimodule is over another structure")
    if bm.space.dim != s.space.dim:
        return None
    spec = SearchSpec(target=O_OPERATOR, weight=0, grid=grid, shape=shape, invertible_only=True)
    for T in candidates(bm.space, s.space, spec, cap):
        if is_invertible(T.matrix) and check_o_operator(bm, T, 0, witness_cap=1).passed:
            return compatible_ldend_from_o_op(s, T, bm), T
    return None
