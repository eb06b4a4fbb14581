"""Rota-Baxter operators and O-operators.

An O-operator T: V -> A is checked against a bimodule; a Rota-Baxter
operator R: A -> A is the special case V = A with the regular actions.
Both must commute with the structure maps (alpha T = T alpha_V and
beta T = T beta_V).  None of the checkers needs alpha or beta to be
invertible except where the identity itself contains a twist
(Lie and pre-Lie O-operators).
"""

from dataclasses import dataclass, field

from .errors import (DimensionMismatch, InvertibilityRequired, MissingModuleProduct, VarietyMismatch,
                     WeightNotZero)
from .exact import Q, ZERO, format_rational, vec_add, vec_scale, vec_sub
from .graded import EvenMap, basis_vector, require_even, sign
from .report import DEFAULT_WITNESS_CAP, Report
from .representations import regular_bimodule
from .varieties import ASSOCIATIVE, LDENDRIFORM, LIE, PRELIE, scan

ROTA_BAXTER = "rota_baxter"
O_OPERATOR = "o_operator"
EXTENDED_O_OPERATOR = "extended_o_operator"
MODULE_ROTA_BAXTER = "module_rota_baxter"
KINDS = (ROTA_BAXTER, O_OPERATOR, EXTENDED_O_OPERATOR, MODULE_ROTA_BAXTER)


@dataclass(frozen=True, eq=False)
class OperatorSpec:
    """An operator together with the data it is checked against.

    ``modification`` is the extra map T': V -> A of an extended O-operator.
    """

    kind: str
    map: EvenMap
    weight: object = ZERO
    modification: EvenMap = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("unknown operator kind %r" % (self.kind,))
        object.__setattr__(self, "weight", Q(self.weight))
        require_even(self.map, "operator")
        if (self.modification is not None) != (self.kind == EXTENDED_O_OPERATOR):
            raise ValueError("a modification is given exactly for extended O-operators")


def _commutes(rep, name, T, m, mV):
    """alpha T = T alpha_V on the basis of V."""
    lhs = (m @ T).columns
    rhs = (T @ mV).columns
    rep.add(name, [((k,), vec_sub(lhs[k], rhs[k]))
                   for k in range(T.domain.dim) if lhs[k] != rhs[k]])


def _check_shapes(bm, T):
    if T.domain != bm.space or T.codomain != bm.base.space:
        raise DimensionMismatch("operator must map V to A")
    require_even(T, "operator")


def o_operator_rhs(bm, T, weight=ZERO):
    """Return f(u, v) giving the argument of T on the right-hand side.

    For the associative and L-dendriform varieties this is
    l(Tu)v + (-1)^{|u||v|} r(Tv)u; for pre-Lie and Lie the right action
    is evaluated on twisted arguments, T(a_V^-1 b_V v) and a_V b_V^-1 u.
    """
    s = bm.base
    pV = bm.space.parity
    Tc = T.columns
    lam = Q(weight)
    if lam and not bm.products:
        raise MissingModuleProduct("nonzero weight needs a product on V")
    v = s.variety

    if v in (PRELIE, LIE):
        if not bm.invertible:
            raise InvertibilityRequired("the twisted O-operator identity uses alpha_V^-1, beta_V^-1")
        twV = (bm.alphaV.inverse() @ bm.betaV).columns
        utwV = (bm.alphaV @ bm.betaV.inverse()).columns

    def fn(i, j, k=0):
        ei = basis_vector(bm.space, i)
        if v in (ASSOCIATIVE, LDENDRIFORM):
            ln, rn = (("l>", "r>"), ("l<", "r<"))[k] if v == LDENDRIFORM else ("l", "r")
            out = vec_add(bm[ln](Tc[i], basis_vector(bm.space, j)),
                          vec_scale(sign(pV[i] * pV[j]), bm[rn](Tc[j], ei)))
        elif v == PRELIE:
            out = vec_add(bm["l"](Tc[i], basis_vector(bm.space, j)),
                          vec_scale(sign(pV[i] * pV[j]), bm["r"](T(twV[j]), utwV[i])))
        else:
            out = vec_sub(bm["rho"](Tc[i], basis_vector(bm.space, j)),
                          vec_scale(sign(pV[i] * pV[j]), bm["rho"](T(twV[j]), utwV[i])))
        if lam:
            out = vec_add(out, vec_scale(lam, bm.products[k].c[i][j]))
        return out

    return fn


def check_o_operator(bm, T, weight=ZERO, witness_cap=DEFAULT_WITNESS_CAP):
    """O-operator of the given weight on the bimodule ``bm``."""
    _check_shapes(bm, T)
    s = bm.base
    rep = Report("%s O-operator of weight %s" % (s.variety, format_rational(Q(weight))),
                 witness_cap)
    _commutes(rep, "alpha T = T alpha_V", T, s.alpha, bm.alphaV)
    _commutes(rep, "beta T = T beta_V", T, s.beta, bm.betaV)
    fn = o_operator_rhs(bm, T, weight)
    Tc = T.columns
    d = bm.space.dim
    labels = ["|>", "<|"] if s.variety == LDENDRIFORM else ["product"]
    for k, (label, op) in enumerate(zip(labels, s.products)):
        scan(rep, "T(u) %s T(v) = T(...)" % label, (d, d),
             lambda i, j, k=k, op=op: vec_sub(op(Tc[i], Tc[j]), T(fn(i, j, k))))
    return rep


def check_rota_baxter(s, R, weight=ZERO, witness_cap=DEFAULT_WITNESS_CAP):
    """R(x)*R(y) = R(R(x)*y + x*R(y) + lambda x*y), with R commuting with alpha, beta.

    Pre-Lie and Lie structures use the untwisted form; for Lie this agrees
    with the twisted O-operator identity on the adjoint representation.
    """
    if R.domain != s.space or R.codomain != s.space:
        raise DimensionMismatch("Rota-Baxter operator must be an endomorphism")
    require_even(R, "Rota-Baxter operator")
    lam = Q(weight)
    rep = Report("%s Rota-Baxter operator of weight %s" % (s.variety, format_rational(lam)),
                 witness_cap)
    _commutes(rep, "alpha R = R alpha", R, s.alpha, s.alpha)
    _commutes(rep, "beta R = R beta", R, s.beta, s.beta)
    Rc = R.columns
    d = s.space.dim
    labels = ["|>", "<|"] if s.variety == LDENDRIFORM else ["product"]
    for label, op in zip(labels, s.products):
        def res(i, j, op=op):
            ei, ej = basis_vector(s.space, i), basis_vector(s.space, j)
            inner = vec_add(op(Rc[i], ej), op(ei, Rc[j]))
            if lam:
                inner = vec_add(inner, vec_scale(lam, op.c[i][j]))
            return vec_sub(op(Rc[i], Rc[j]), R(inner))
        scan(rep, "R(x) %s R(y) = R(...)" % label, (d, d), res)
    return rep


def check_extended_o_operator(bm, T, T2, weight=ZERO, witness_cap=DEFAULT_WITNESS_CAP):
    """Extended O-operator (T, T2) of weight lambda; T2 is the modification.

    Conditions: T and T2 commute with the structure maps; the balance
    lambda l(T2 u)v = lambda r(T2 v)u; and
    T(u)T(v) = T(l(Tu)v + (-1)^{|u||v|} r(Tv)u) + lambda T2(u)T2(v).
    The lambda-scaled conditions are vacuous at lambda = 0.
    """
    if bm.variety != ASSOCIATIVE:
        raise VarietyMismatch("extended O-operators are defined for associative structures")
    _check_shapes(bm, T)
    _check_shapes(bm, T2)
    s = bm.base
    lam = Q(weight)
    rep = Report("extended O-operator of weight %s" % format_rational(lam), witness_cap)
    _commutes(rep, "alpha T = T alpha_V", T, s.alpha, bm.alphaV)
    _commutes(rep, "beta T = T beta_V", T, s.beta, bm.betaV)
    _commutes(rep, "alpha T' = T' alpha_V", T2, s.alpha, bm.alphaV)
    _commutes(rep, "beta T' = T' beta_V", T2, s.beta, bm.betaV)
    l, r = bm["l"], bm["r"]
    Tc, Sc = T.columns, T2.columns
    d = bm.space.dim
    e = [basis_vector(bm.space, k) for k in range(d)]
    scan(rep, "lambda l(T'u)v = lambda r(T'v)u", (d, d),
         lambda i, j: vec_scale(lam, vec_sub(l(Sc[i], e[j]), r(Sc[j], e[i]))))
    fn = o_operator_rhs(bm, T)
    mu = s.product
    scan(rep, "T(u)T(v) = T(...) + lambda T'(u)T'(v)", (d, d),
         lambda i, j: vec_sub(vec_sub(mu(Tc[i], Tc[j]), T(fn(i, j))),
                              vec_scale(lam, mu(Sc[i], Sc[j]))))
    return rep


def check_module_rota_baxter(bm, R, RV, witness_cap=DEFAULT_WITNESS_CAP):
    """Weight-zero Rota-Baxter operator R_V on a bimodule, relative to R.

    Mixed products are those of the semidirect product: x.v = l(x)v and
    v.x = (-1)^{|v||x|} r(x)v; for a Lie representation [x,v] = rho(x)v and
    [v,x] = -(-1)^{|v||x|} rho(a^-1 b x)(a_V b_V^-1 v).  Equivalently,
    R + R_V is a weight-zero Rota-Baxter operator on the semidirect product.
    """
    s = bm.base
    if R.domain != s.space or R.codomain != s.space:
        raise DimensionMismatch("R must be an endomorphism of A")
    if RV.domain != bm.space or RV.codomain != bm.space:
        raise DimensionMismatch("R_V must be an endomorphism of V")
    require_even(R, "Rota-Baxter operator")
    require_even(RV, "module Rota-Baxter operator")
    rep = Report("%s module Rota-Baxter operator" % s.variety, witness_cap)
    _commutes(rep, "alpha_V R_V = R_V alpha_V", RV, bm.alphaV, bm.alphaV)
    _commutes(rep, "beta_V R_V = R_V beta_V", RV, bm.betaV, bm.betaV)
    pA, pV = s.space.parity, bm.space.parity
    dA, dV = s.space.dim, bm.space.dim
    Rc, RVc = R.columns, RV.columns
    eA = [basis_vector(s.space, i) for i in range(dA)]
    eV = [basis_vector(bm.space, k) for k in range(dV)]

    if s.variety == LIE:
        if not (s.invertible and bm.invertible):
            raise InvertibilityRequired("the mixed bracket [v, x] uses inverse structure maps")
        tw = s.twist
        uV = bm.alphaV @ bm.betaV.inverse()
        rho = bm["rho"]
        pairs = [("[", lambda x, v: rho(x, v),
                  lambda v, x, pv, px: vec_scale(-sign(pv * px), rho(tw(x), uV(v))))]
    else:
        names = [("l", "r")] if s.variety != LDENDRIFORM else [("l>", "r>"), ("l<", "r<")]
        pairs = []
        for ln, rn in names:
            l, r = bm[ln], bm[rn]
            pairs.append((ln[1:] or ".",
                          lambda x, v, l=l: l(x, v),
                          lambda v, x, pv, px, r=r: vec_scale(sign(pv * px), r(x, v))))
    for label, xv, vx in pairs:
        label = label if label != "[" else ""
        scan(rep, "R(x)%sR_V(v) = R_V(R(x)%sv + x%sR_V(v))" % ((label,) * 3), (dA, dV),
             lambda i, k, xv=xv: vec_sub(xv(Rc[i], RVc[k]),
                                         RV(vec_add(xv(Rc[i], eV[k]), xv(eA[i], RVc[k])))))
        scan(rep, "R_V(v)%sR(x) = R_V(R_V(v)%sx + v%sR(x))" % ((label,) * 3), (dA, dV),
             lambda i, k, vx=vx: vec_sub(
                 vx(RVc[k], Rc[i], pV[k], pA[i]),
                 RV(vec_add(vx(RVc[k], eA[i], pV[k], pA[i]), vx(eV[k], Rc[i], pV[k], pA[i])))))
    return rep


def check_operator(s_or_bm, spec, witness_cap=DEFAULT_WITNESS_CAP):
    """Dispatch on ``spec.kind``; Rota-Baxter specs take a Structure, others a Bimodule."""
    if spec.kind == ROTA_BAXTER:
        return check_rota_baxter(s_or_bm, spec.map, spec.weight, witness_cap)
    if spec.kind == O_OPERATOR:
        return check_o_operator(s_or_bm, spec.map, spec.weight, witness_cap)
    if spec.kind == EXTENDED_O_OPERATOR:
        return check_extended_o_operator(s_or_bm, spec.map, spec.modification, spec.weight,
                                         witness_cap)
    # module Rota-Baxter: spec.map is R_V, the operator on A sits in meta["base"]
    if spec.weight:
        raise WeightNotZero("module Rota-Baxter operators are defined for weight 0")
    R = spec.meta.get("base")
    if R is None:
        raise ValueError("a module Rota-Baxter spec needs meta['base'], the operator on A")
    return check_module_rota_baxter(s_or_bm, R, spec.map, witness_cap)


def rota_baxter_as_o_operator(s, R, weight=ZERO, witness_cap=DEFAULT_WITNESS_CAP):
    """Check R as an O-operator on the regular bimodule."""
    return check_o_operator(regular_bimodule(s), R, weight, witness_cap)
