"""Command-line interface.

    bihomsuper check FILE [--variety [NAME]] [--bimodule] [--module-algebra]
                          [--operator NAME] [--rota-baxter NAME] [--o-operator NAME]
                          [--weight W]
    bihomsuper construct FILE --recipe NAME [--operator R] [--weight W] ...
    bihomsuper cohomology FILE [--n-max N]
    bihomsuper search FILE [--target rota-baxter|o-operator] [--weight W] [--grid ...]
    bihomsuper report FILE

Global options (accepted before or after the subcommand): --output json|text,
--witness-cap N.  Exit codes: 0 pass, 1 identity violation, 2 input error.
"""

import argparse
import json
import sys

from . import constructions as C
from .cohomology import CochainComplex, cochain_dims, cohomology_table, verify_d_squared
from .errors import AxiomViolation, BiHomError, DSquaredViolation, WrongWeight
from .exact import format_rational, parse_rational
from .operators import (MODULE_ROTA_BAXTER, O_OPERATOR, ROTA_BAXTER, OperatorSpec,
                        check_o_operator, check_operator, check_rota_baxter)
from .report import DEFAULT_WITNESS_CAP, Report
from .representations import check_bimodule, check_module_k_superalgebra, regular_bimodule
from .search import DEFAULT_CAP, SHAPES, SearchSpec, search, search_size
from .varieties import LDENDRIFORM, PRELIE, VARIETIES, check_variety
from .workspace import Workspace, matrix_out, dumps, load, serialize, to_dict

EXIT_PASS, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _weight(text):
    try:
        return parse_rational(text)
    except BiHomError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _grid(text):
    try:
        return tuple(parse_rational(t.strip()) for t in text.split(",") if t.strip())
    except BiHomError as exc:
        raise argparse.ArgumentTypeError(str(exc))


# -- output -----------------------------------------------------------------------

class Out:
    def __init__(self, args):
        self.mode = args.output
        self.cap = args.witness_cap
        self.stream = sys.stdout

    def reports(self, reports):
        if self.mode == "json":
            json.dump({"overall": "pass" if all(r.passed for r in reports) else "fail",
                       "reports": [r.to_dict() for r in reports]},
                      self.stream, indent=2, sort_keys=True)
            self.stream.write("\n")
        else:
            for r in reports:
                self.stream.write(r.render() + "\n")

    def data(self, obj, text):
        if self.mode == "json":
            self.stream.write(dumps(obj) + "\n")
        else:
            self.stream.write(text.rstrip("\n") + "\n")


def _verdict(reports):
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_VIOLATION


# -- check --------------------------------------------------------------------------

def _check_all(ws, cap):
    reports = [check_variety(ws.structure, cap)]
    if ws.module is not None:
        reports.append(check_bimodule(ws.module, cap))
    for name, spec in sorted(ws.operators.items()):
        target = ws.structure if spec.kind == ROTA_BAXTER else ws.require_module()
        rep = check_operator(target, spec, cap)
        rep.subject = "%s: %s" % (name, rep.subject)
        reports.append(rep)
    return reports


def cmd_check(args, out):
    ws = load(args.file)
    cap = out.cap
    reports = []
    if args.variety is not None:
        s = ws.structure
        if args.variety and args.variety != s.variety:
            s = s.retag(args.variety)
        reports.append(check_variety(s, cap))
    if args.bimodule:
        reports.append(check_bimodule(ws.require_module(), cap))
    if args.module_algebra:
        reports.append(check_module_k_superalgebra(ws.require_module(), cap))
    for name in args.operator or ():
        spec = ws.operator(name)
        if args.weight is not None:
            spec = OperatorSpec(spec.kind, spec.map, args.weight, spec.modification, spec.meta)
        target = ws.structure if spec.kind == ROTA_BAXTER else ws.require_module()
        reports.append(check_operator(target, spec, cap))
    for name in args.rota_baxter or ():
        w = _given_weight(ws, name, args.weight)
        reports.append(check_rota_baxter(ws.structure, _endo(ws, name), w, cap))
    for name in args.o_operator or ():
        w = _given_weight(ws, name, args.weight)
        reports.append(check_o_operator(ws.require_module(), ws.operator(name).map, w, cap))
    if not reports:
        reports = _check_all(ws, cap)
    out.reports(reports)
    return _verdict(reports)


def _given_weight(ws, name, weight):
    # --weight wins; otherwise a stored operator keeps its own weight and a bare map gets 0
    if weight is not None:
        return weight
    return ws.operators[name].weight if name in ws.operators else 0


def _endo(ws, name):
    """An endomorphism of A by name: an operator's map or an entry of ``maps``."""
    if name in ws.operators:
        return ws.operators[name].map
    return ws.map(name)


# -- construct ---------------------------------------------------------------------

RECIPES = {}


def recipe(name, help_):
    def deco(fn):
        RECIPES[name] = (fn, help_)
        return fn
    return deco


def _op_arg(ws, args, name="operator"):
    key = getattr(args, name)
    if key is None:
        raise InputError("this recipe needs --%s" % name.replace("_", "-"))
    spec = ws.operator(key)
    return spec


def _rb(ws, args):
    spec = _op_arg(ws, args)
    w = args.weight if args.weight is not None else spec.weight
    return spec.map, w


def _module_or_regular(ws):
    return ws.module if ws.module is not None else regular_bimodule(ws.structure)


@recipe("supercommutator", "untwisted supercommutator of an associative structure")
def _r_supercommutator(ws, args):
    return {"result": Workspace(C.supercommutator(ws.structure))}


@recipe("twisted-supercommutator", "twisted supercommutator (Lie-admissible)")
def _r_twisted(ws, args):
    return {"result": Workspace(C.twisted_supercommutator(ws.structure))}


@recipe("subadjacent", "sub-adjacent Lie structure of a pre-Lie structure")
def _r_subadjacent(ws, args):
    return {"result": Workspace(C.subadjacent(ws.structure))}


@recipe("yau-twist", "x o' y = a(x) o b(y); --maps A B name entries of the maps block")
def _r_yau(ws, args):
    if not args.maps:
        raise InputError("yau-twist needs --maps A B")
    a, b = (ws.map(n) for n in args.maps)
    return {"result": Workspace(C.yau_twist_prelie(ws.structure, a, b))}


@recipe("prelie-from-rb-assoc", "pre-Lie from a Rota-Baxter operator of weight 0 or -1")
def _r_prelie_rb(ws, args):
    R, w = _rb(ws, args)
    return {"result": _keep_op(C.prelie_from_rb_assoc(ws.structure, R, w), ws, args, w)}


@recipe("lie-from-rb-assoc", "six-term bracket from a weight -1 Rota-Baxter operator")
def _r_lie_rb(ws, args):
    R, w = _rb(ws, args)
    if w != -1:
        raise WrongWeight("lie-from-rb-assoc needs weight -1")
    return {"result": _keep_op(C.lie_from_rb_assoc_minus1(ws.structure, R), ws, args, w)}


@recipe("prelie-star-from-rb-prelie", "x*y from a weight-0 Rota-Baxter pre-Lie structure")
def _r_star(ws, args):
    R, w = _rb(ws, args)
    if w:
        raise WrongWeight("needs weight 0")
    return {"result": _keep_op(C.prelie_star_from_rb_prelie(ws.structure, R), ws, args, w)}


@recipe("prelie-from-rb-lie-admissible", "x*y = [R(x), y] on a Lie-admissible structure")
def _r_lieadm(ws, args):
    R, _ = _rb(ws, args)
    return {"result": Workspace(C.prelie_from_rb_lie_admissible(ws.structure, R))}


@recipe("prelie-from-o-op-lie", "u o v = rho(T u) v on the module of a Lie structure")
def _r_prelie_lie(ws, args):
    T = _op_arg(ws, args).map
    return {"result": Workspace(C.prelie_from_o_op_lie(_module_or_regular(ws), T))}


@recipe("ldend-from-o-op-assoc", "L-dendriform on V from an associative O-operator")
def _r_ld_assoc(ws, args):
    T = _op_arg(ws, args).map
    return {"result": Workspace(C.ldend_from_o_op_assoc(_module_or_regular(ws), T))}


@recipe("ldend-from-o-op-prelie", "L-dendriform on V and on T(V) from a pre-Lie O-operator")
def _r_ld_prelie(ws, args):
    T = _op_arg(ws, args).map
    vs, image = C.ldend_from_o_op_prelie(_module_or_regular(ws), T)
    return {"module": Workspace(vs), "image": Workspace(image.structure)}


@recipe("ldend-from-rb-prelie", "L-dendriform from a weight-0 Rota-Baxter pre-Lie structure")
def _r_ld_rb_prelie(ws, args):
    R, _ = _rb(ws, args)
    return {"result": Workspace(C.ldend_from_rb_prelie(ws.structure, R))}


@recipe("ldend-derived", "vertical, horizontal, transpose and bracket of an L-dendriform structure")
def _r_derived(ws, args):
    d = C.ldend_derived(ws.structure)
    out = {"vertical": d.vertical, "horizontal": d.horizontal, "transpose": d.transpose,
           "bracket": d.bracket}
    if args.part:
        return {args.part: Workspace(out[args.part])}
    return {k: Workspace(v) for k, v in out.items()}


@recipe("bimodule-transfer", "bimodule over a derived structure; --kind selects the transfer")
def _r_transfer(ws, args):
    kind = (args.kind or "").replace("-", "_")
    R = RV = None
    if kind == C.RB_TWISTED_ACTIONS:
        R = _op_arg(ws, args).map
        RV = _op_arg(ws, args, "module_operator").map
    bm = C.bimodule_transfer(ws.require_module(), kind, R, RV)
    return {"result": Workspace(bm.base, bm)}


@recipe("compatible-ldend", "search for an invertible O-operator and build the compatible structure")
def _r_compat(ws, args):
    grid = args.grid or (-1, 0, 1)
    bm = _module_or_regular(ws)
    found = C.compatible_ldend_exists(ws.structure, grid, args.shape or "diagonal", args.cap, bm)
    if found is None:
        return {}
    s, T = found
    # the maps block holds endomorphisms of A, so T is kept only when V = A
    res = Workspace(s, maps={"T": T} if T.domain == s.space else {})
    where = "the module of the input" if ws.module is not None else "the regular bimodule"
    res.metadata["witness"] = "T is an invertible O-operator of %s" % where
    return {"result": res}


def _keep_op(s, ws, args, w):
    """Carry the operator along when it is re-verified on the result."""
    out = Workspace(s)
    spec = ws.operator(args.operator)
    out.operators[args.operator] = OperatorSpec(ROTA_BAXTER, spec.map, w)
    return out


def cmd_construct(args, out):
    if args.recipe not in RECIPES:
        raise InputError("unknown recipe %r; known: %s" % (args.recipe, ", ".join(sorted(RECIPES))))
    ws = load(args.file)
    fn, _ = RECIPES[args.recipe]
    results = fn(ws, args)
    prov = {"recipe": args.recipe, "input": args.file, "certified": True}
    for key in ("operator", "weight", "kind", "part"):
        v = getattr(args, key, None)
        if v is not None:
            prov[key] = format_rational(v) if key == "weight" else v
    if not results:
        out.data({"provenance": dict(prov, certified=False), "result": None},
                 "no witness found on the grid (inconclusive)")
        return EXIT_PASS
    for r in results.values():
        r.provenance = prov
    if len(results) == 1 and "result" in results:
        text = serialize(results["result"])
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        out.data(to_dict(results["result"]), text)
    else:
        bundle = {k: to_dict(v) for k, v in results.items()}
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(dumps(bundle) + "\n")
        out.data(bundle, "\n".join("== %s ==\n%s" % (k, serialize(v)) for k, v in results.items()))
    return EXIT_PASS


# -- cohomology ---------------------------------------------------------------------

def cmd_cohomology(args, out):
    ws = load(args.file)
    bm = _module_or_regular(ws)
    cx = CochainComplex.build(ws.structure, bm, args.n_max)
    rep = verify_d_squared(cx, out.cap)
    if not rep.passed:
        out.reports([rep])
        return EXIT_VIOLATION
    rows = cohomology_table(ws.structure, bm, args.n_max)
    dims = {n: (cx.parities(n).count(0), cx.parities(n).count(1)) for n in range(1, args.n_max + 1)}
    table = [{"degree": r.degree, "parity": r.parity, "dim_c": dims[r.degree][r.parity],
              "dim_z": r.dim_z, "dim_b": r.dim_b, "dim_h": r.dim_h} for r in rows]
    lines = ["coefficients: %s" % ("file module" if ws.module is not None else "regular bimodule"),
             "d^2 = 0 verified for degrees 1..%d" % args.n_max,
             "H^1 is ker D_1 (no degree-0 quotient)",
             "%6s %6s %6s %6s %6s %6s" % ("n", "parity", "dim C", "dim Z", "dim B", "dim H")]
    for t in table:
        lines.append("%6d %6s %6d %6d %6d %6d" % (t["degree"], "even" if t["parity"] == 0 else "odd",
                                              t["dim_c"], t["dim_z"], t["dim_b"], t["dim_h"]))
    totals = {n: sum(t["dim_h"] for t in table if t["degree"] == n) for n in dims}
    lines.append("dim H: " + ", ".join("H^%d=%d" % (n, h) for n, h in sorted(totals.items())))
    out.data({"table": table, "dim_h": [totals[n] for n in sorted(totals)],
              "d_squared": "pass"}, "\n".join(lines))
    return EXIT_PASS


# -- search ---------------------------------------------------------------------------

def cmd_search(args, out):
    ws = load(args.file)
    target = ROTA_BAXTER if args.target == "rota-baxter" else O_OPERATOR
    spec = SearchSpec(target=target, weight=args.weight if args.weight is not None else 0,
                      grid=args.grid or (-2, -1, 0, 1, 2), shape=args.shape or "diagonal",
                      invertible_only=args.invertible_only)
    obj = ws.structure if target == ROTA_BAXTER else _module_or_regular(ws)
    dom = obj.space
    cod = obj.space if target == ROTA_BAXTER else obj.base.space
    size = search_size(dom, cod, spec)
    print("search space: %d candidates" % size, file=sys.stderr)
    found = search(obj, spec, args.cap)
    items = [matrix_out(m) for m in found]
    lines = ["search space: %d candidates, %d accepted" % (size, len(found))]
    for n, m in enumerate(found):
        lines.append("#%d %s" % (n, " ".join("%s<-%s:%s" % tuple(e) for e in matrix_out(m)) or "0"))
    out.data({"size": size, "accepted": items, "target": target,
              "weight": format_rational(spec.weight),
              "grid": [format_rational(g) for g in spec.grid], "shape": spec.shape},
             "\n".join(lines))
    return EXIT_PASS


# -- report -----------------------------------------------------------------------------

def cmd_report(args, out):
    ws = load(args.file)
    reports = _check_all(ws, out.cap)
    s = ws.structure
    summary = Report("workspace summary", out.cap)
    summary.metadata["variety"] = s.variety
    summary.metadata["space"] = str(s.space)
    summary.metadata["alpha, beta invertible"] = str(s.invertible)
    if ws.module is not None:
        summary.metadata["module"] = str(ws.module.space)
        if ws.module.products:
            reports.append(check_module_k_superalgebra(ws.module, out.cap))
    if s.variety == PRELIE and s.invertible and check_variety(s).passed:
        bm = _module_or_regular(ws)
        summary.metadata["cochain dims C^1..C^3"] = ", ".join(
            str(cochain_dims(s, bm, n)[0]) for n in (1, 2, 3))
    reports.insert(0, summary)
    out.reports(reports)
    return _verdict(reports)


# -- entry point ---------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--witness-cap", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="bihomsuper", parents=[common],
                                description="Exact checks and constructions for BiHom superalgebras")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="verify identities")
    c.add_argument("file")
    c.add_argument("--variety", nargs="?", const="", choices=("",) + VARIETIES)
    c.add_argument("--bimodule", action="store_true")
    c.add_argument("--module-algebra", action="store_true")
    c.add_argument("--operator", action="append")
    c.add_argument("--rota-baxter", action="append")
    c.add_argument("--o-operator", action="append")
    c.add_argument("--weight", type=_weight)
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("construct", parents=[common], help="run a construction")
    k.add_argument("file")
    k.add_argument("--recipe", required=True)
    k.add_argument("--operator")
    k.add_argument("--module-operator")
    k.add_argument("--weight", type=_weight)
    k.add_argument("--kind", choices=[t.replace("_", "-") for t in C.TRANSFER_KINDS])
    k.add_argument("--part", choices=("vertical", "horizontal", "transpose", "bracket"))
    k.add_argument("--maps", nargs=2)
    k.add_argument("--grid", type=_grid)
    k.add_argument("--shape", choices=SHAPES)
    k.add_argument("--cap", type=int, default=DEFAULT_CAP)
    k.add_argument("-o", "--out")
    k.set_defaults(func=cmd_construct)

    h = sub.add_parser("cohomology", parents=[common], help="cohomology dimensions")
    h.add_argument("file")
    h.add_argument("--n-max", type=int, default=2)
    h.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("search", parents=[common], help="grid search for operators")
    s.add_argument("file")
    s.add_argument("--target", choices=("rota-baxter", "o-operator"), default="rota-baxter")
    s.add_argument("--weight", type=_weight)
    s.add_argument("--grid", type=_grid)
    s.add_argument("--shape", choices=SHAPES)
    s.add_argument("--invertible-only", action="store_true")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("report", parents=[common], help="check everything in a file")
    r.add_argument("file")
    r.set_defaults(func=cmd_report)
    return p


def _glue_grid(argv):
    # "--grid -1,0,1" would otherwise be read as an unknown option
    out = []
    for a in argv:
        if out and out[-1] == "--grid" and a.startswith("-"):
            out[-1] = "--grid=" + a
        else:
            out.append(a)
    return out


def main(argv=None):
    parser = build_parser()
    argv = _glue_grid(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    args.output = getattr(args, "output", "text")
    args.witness_cap = getattr(args, "witness_cap", DEFAULT_WITNESS_CAP)
    if args.witness_cap < 0:
        print("error: --witness-cap must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "n_max", 1) < 1:
        print("error: --n-max must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    out = Out(args)
    try:
        return args.func(args, out)
    except (AxiomViolation, DSquaredViolation) as exc:
        print("violation: %s" % exc, file=sys.stderr)
        rep = getattr(exc, "report", None)
        if rep is not None:
            out.reports([rep])
        return EXIT_VIOLATION
    except (BiHomError, InputError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
