"""Workspace files: one JSON document holding a structure, an optional module,
named maps and operators.

Layout (version 1)::

    {
      "version": 1,
      "structure": {
        "variety": "associative",
        "space": {"even": ["e"], "odd": []},
        "products": {"product": [["e", "e", "e", "1"]]},
        "alpha": [["e", "e", "1"]],          # optional, identity if missing
        "beta": [["e", "e", "1"]]
      },
      "module": {                               # optional; or the string "regular"
        "space": {"even": [...], "odd": [...]},
        "actions": {"l": [[x, v, w, "c"], ...], "r": [...]},
        "alpha": [...], "beta": [...],
        "products": {"product": [...]}          # optional module product
      },
      "maps": {"a": [[row, col, "c"], ...]},    # extra endomorphisms of A
      "operators": {
        "R": {"kind": "rota_baxter", "weight": "-1", "map": [[row, col, "c"], ...]}
      },
      "metadata": {"note": "..."},
      "provenance": {...}                       # written by construct
    }

Structure constants are listed sparsely as (x, y, z, c) with basis names;
maps as (row, column, c), i.e. the image of basis vector ``column`` has
coefficient ``c`` on ``row``.  Rationals are strings "p" or "p/q" in
lowest terms.  Unknown fields are rejected.
"""

import json
from dataclasses import dataclass, field

from .errors import BiHomError, ParseError, InvariantViolation, ParityViolation, UnknownName
from .exact import ZERO, Matrix, format_rational, parse_rational
from .graded import Action, BilinearOp, EvenMap, SuperSpace
from .operators import (EXTENDED_O_OPERATOR, KINDS, MODULE_ROTA_BAXTER, O_OPERATOR, ROTA_BAXTER,
                        OperatorSpec)
from .representations import ACTION_NAMES, Bimodule, regular_bimodule
from .varieties import LDENDRIFORM, LIE, VARIETIES, Structure

VERSION = 1

PRODUCT_NAMES = {LDENDRIFORM: ("succ", "prec"), LIE: ("bracket",)}


def product_names(variety):
    return PRODUCT_NAMES.get(variety, ("product",))


@dataclass
class Workspace:
    structure: Structure
    module: Bimodule = None
    maps: dict = field(default_factory=dict)
    operators: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)
    provenance: dict = None

    def operator(self, name):
        try:
            return self.operators[name]
        except KeyError:
            raise UnknownName("no operator named %r" % (name,)) from None

    def map(self, name):
        if name in ("alpha", "beta"):
            return getattr(self.structure, name)
        try:
            return self.maps[name]
        except KeyError:
            raise UnknownName("no map named %r" % (name,)) from None

    def require_module(self):
        if self.module is None:
            raise UnknownName("the workspace has no module")
        return self.module


# -- parsing ------------------------------------------------------------------------

def _fields(obj, path, required, optional=()):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", field=path)
    for k in obj:
        if k not in required and k not in optional:
            raise ParseError("unknown field %r" % (k,), field=path)
    for k in required:
        if k not in obj:
            raise ParseError("missing field %r" % (k,), field=path)


def _rational(text, path):
    if not isinstance(text, str):
        raise ParseError("rationals are written as strings like \"-3/2\"", field=path)
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError, BiHomError) as exc:
        raise ParseError("bad rational %r: %s" % (text, exc), field=path) from None


def _name_list(obj, path):
    if not isinstance(obj, list) or not all(isinstance(x, str) and x for x in obj):
        raise ParseError("expected a list of basis names", field=path)
    return obj


def _space(obj, path):
    _fields(obj, path, ("even", "odd"))
    even = _name_list(obj["even"], path + ".even")
    odd = _name_list(obj["odd"], path + ".odd")
    names = even + odd
    if len(set(names)) != len(names):
        raise ParseError("repeated basis name", field=path)
    return SuperSpace.of(even, odd)


def _index(space, name, path):
    if not isinstance(name, str):
        raise ParseError("basis elements are referred to by name", field=path)
    try:
        return space.index(name)
    except (KeyError, ValueError, BiHomError):
        raise ParseError("unknown basis name %r" % (name,), field=path) from None


def _tensor(entries, left, right, out, path, cls=None):
    if not isinstance(entries, list):
        raise ParseError("expected a list of [x, y, z, c] entries", field=path)
    seen = set()
    c = [[[ZERO] * out.dim for _ in range(right.dim)] for _ in range(left.dim)]
    for n, e in enumerate(entries):
        p = "%s[%d]" % (path, n)
        if not isinstance(e, list) or len(e) != 4:
            raise ParseError("expected [x, y, z, c]", field=p)
        i, j, k = _index(left, e[0], p), _index(right, e[1], p), _index(out, e[2], p)
        if (i, j, k) in seen:
            raise ParseError("duplicate entry", field=p)
        seen.add((i, j, k))
        v = _rational(e[3], p)
        if v and (left.parity[i] + right.parity[j]) % 2 != out.parity[k]:
            raise InvariantViolation("structure constant %s * %s -> %s breaks parity"
                                     % tuple(e[:3]), field=p)
        c[i][j][k] = v
    if cls is Action:
        return Action(left, out, c)
    return BilinearOp(left, c)


def _matrix(entries, dom, cod, path):
    if entries == "identity":
        if dom != cod:
            raise ParseError("identity needs equal domain and codomain", field=path)
        return EvenMap.identity(dom)
    if not isinstance(entries, list):
        raise ParseError("expected a list of [row, column, c] entries or \"identity\"",
                         field=path)
    rows = [[ZERO] * dom.dim for _ in range(cod.dim)]
    seen = set()
    for n, e in enumerate(entries):
        p = "%s[%d]" % (path, n)
        if not isinstance(e, list) or len(e) != 3:
            raise ParseError("expected [row, column, c]", field=p)
        i, j = _index(cod, e[0], p), _index(dom, e[1], p)
        if (i, j) in seen:
            raise ParseError("duplicate entry", field=p)
        seen.add((i, j))
        v = _rational(e[2], p)
        if v and cod.parity[i] != dom.parity[j]:
            raise InvariantViolation("map entry (%s, %s) is not parity preserving" % (e[0], e[1]),
                                     field=p)
        rows[i][j] = v
    return EvenMap(dom, cod, Matrix.from_rows(rows, dom.dim))


def _products(obj, variety, space, path):
    names = product_names(variety)
    _fields(obj, path, names)
    return tuple(_tensor(obj[n], space, space, space, path + "." + n) for n in names)


def _structure(obj):
    path = "structure"
    _fields(obj, path, ("variety", "space", "products"), ("alpha", "beta"))
    variety = obj["variety"]
    if variety not in VARIETIES:
        raise ParseError("unknown variety %r" % (variety,), field=path + ".variety")
    space = _space(obj["space"], path + ".space")
    prods = _products(obj["products"], variety, space, path + ".products")
    alpha = _matrix(obj.get("alpha", "identity"), space, space, path + ".alpha")
    beta = _matrix(obj.get("beta", "identity"), space, space, path + ".beta")
    return Structure(variety, space, prods, alpha, beta)


def _module(obj, s):
    path = "module"
    if obj == "regular":
        return regular_bimodule(s)
    _fields(obj, path, ("space", "actions"), ("alpha", "beta", "products"))
    V = _space(obj["space"], path + ".space")
    names = ACTION_NAMES[s.variety]
    _fields(obj["actions"], path + ".actions", names)
    acts = {n: _tensor(obj["actions"][n], s.space, V, V, "%s.actions.%s" % (path, n), Action)
            for n in names}
    aV = _matrix(obj.get("alpha", "identity"), V, V, path + ".alpha")
    bV = _matrix(obj.get("beta", "identity"), V, V, path + ".beta")
    prods = ()
    if "products" in obj:
        prods = _products(obj["products"], s.variety, V, path + ".products")
    return Bimodule(s, V, acts, aV, bV, prods)


def _operator(obj, name, ws):
    path = "operators." + name
    _fields(obj, path, ("kind", "map"), ("weight", "modification", "base"))
    kind = obj["kind"]
    if kind not in KINDS:
        raise ParseError("unknown operator kind %r" % (kind,), field=path + ".kind")
    A = ws.structure.space
    weight = _rational(obj.get("weight", "0"), path + ".weight")
    meta = {}
    if kind == ROTA_BAXTER:
        dom, cod = A, A
    else:
        if ws.module is None:
            raise ParseError("%s needs a module" % kind, field=path)
        V = ws.module.space
        dom, cod = (V, V) if kind == MODULE_ROTA_BAXTER else (V, A)
    m = _matrix(obj["map"], dom, cod, path + ".map")
    mod = None
    if kind == EXTENDED_O_OPERATOR:
        if "modification" not in obj:
            raise ParseError("extended O-operators need a modification", field=path)
        mod = _matrix(obj["modification"], dom, cod, path + ".modification")
    elif "modification" in obj:
        raise ParseError("only extended O-operators take a modification", field=path)
    if kind == MODULE_ROTA_BAXTER:
        base = obj.get("base")
        if not isinstance(base, str):
            raise ParseError("module Rota-Baxter operators name their base operator",
                             field=path + ".base")
        meta["base_name"] = base
    elif "base" in obj:
        raise ParseError("only module Rota-Baxter operators take a base", field=path)
    return OperatorSpec(kind, m, weight, mod, meta)


def _to_line(text, exc_field):
    """Best-effort line number of a field path's last key in the source text."""
    if not exc_field:
        return None
    key = exc_field.split(".")[-1].split("[")[0]
    needle = '"%s"' % key
    for n, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return n
    return None


def parse_workspace(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON: %s" % exc.msg, line=exc.lineno) from None
    try:
        return from_dict(data)
    except ParseError as exc:
        if exc.line is None:
            line = _to_line(text, exc.field)
            if line is not None:
                cls = type(exc)
                msg = str(exc).rsplit(" (", 1)[0]
                raise cls(msg, line=line, field=exc.field) from None
        raise
    except ParityViolation as exc:
        raise InvariantViolation(str(exc)) from None


def from_dict(data):
    _fields(data, "<root>", ("version", "structure"),
            ("module", "maps", "operators", "metadata", "provenance"))
    if data["version"] != VERSION:
        raise ParseError("unsupported format version %r" % (data["version"],), field="version")
    s = _structure(data["structure"])
    ws = Workspace(s)
    if "module" in data:
        ws.module = _module(data["module"], s)
    maps = data.get("maps", {})
    if not isinstance(maps, dict):
        raise ParseError("expected an object", field="maps")
    for name, entries in maps.items():
        ws.maps[name] = _matrix(entries, s.space, s.space, "maps." + name)
    ops = data.get("operators", {})
    if not isinstance(ops, dict):
        raise ParseError("expected an object", field="operators")
    for name, obj in ops.items():
        ws.operators[name] = _operator(obj, name, ws)
    for name, spec in ws.operators.items():
        if spec.kind == MODULE_ROTA_BAXTER:
            base = spec.meta["base_name"]
            if base not in ws.operators or ws.operators[base].kind != ROTA_BAXTER:
                raise ParseError("base %r is not a Rota-Baxter operator of this file" % (base,),
                                 field="operators.%s.base" % name)
            spec.meta["base"] = ws.operators[base].map
    meta = data.get("metadata", {})
    if not isinstance(meta, dict) or not all(isinstance(v, str) for v in meta.values()):
        raise ParseError("metadata is an object of strings", field="metadata")
    ws.metadata = dict(meta)
    ws.provenance = data.get("provenance")
    return ws


def load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc.strerror)) from None
    return parse_workspace(text)


# -- serialization ---------------------------------------------------------------------

def _space_out(space):
    even = [n for n, p in zip(space.basis_names, space.parity) if not p]
    odd = [n for n, p in zip(space.basis_names, space.parity) if p]
    return {"even": even, "odd": odd}


def _tensor_out(t):
    L, R, O = t.left, t.right, t.out
    out = []
    for i in range(L.dim):
        for j in range(R.dim):
            for k, v in enumerate(t.c[i][j]):
                if v:
                    out.append([L.basis_names[i], R.basis_names[j], O.basis_names[k],
                                format_rational(v)])
    return sorted(out)


def matrix_out(m):
    out = []
    for i in range(m.codomain.dim):
        for j in range(m.domain.dim):
            v = m.matrix[i, j]
            if v:
                out.append([m.codomain.basis_names[i], m.domain.basis_names[j],
                            format_rational(v)])
    return sorted(out)


def structure_dict(s):
    return {
        "variety": s.variety,
        "space": _space_out(s.space),
        "products": {n: _tensor_out(p) for n, p in zip(product_names(s.variety), s.products)},
        "alpha": matrix_out(s.alpha),
        "beta": matrix_out(s.beta),
    }


def module_dict(bm):
    out = {
        "space": _space_out(bm.space),
        "actions": {n: _tensor_out(bm[n]) for n in ACTION_NAMES[bm.base.variety]},
        "alpha": matrix_out(bm.alphaV),
        "beta": matrix_out(bm.betaV),
    }
    if bm.products:
        out["products"] = {n: _tensor_out(p)
                           for n, p in zip(product_names(bm.base.variety), bm.products)}
    return out


def operator_dict(spec):
    out = {"kind": spec.kind, "weight": format_rational(spec.weight), "map": matrix_out(spec.map)}
    if spec.modification is not None:
        out["modification"] = matrix_out(spec.modification)
    if spec.kind == MODULE_ROTA_BAXTER:
        out["base"] = spec.meta["base_name"]
    return out


def to_dict(ws):
    out = {"version": VERSION, "structure": structure_dict(ws.structure)}
    if ws.module is not None:
        out["module"] = module_dict(ws.module)
    if ws.maps:
        out["maps"] = {k: matrix_out(m) for k, m in sorted(ws.maps.items())}
    if ws.operators:
        out["operators"] = {k: operator_dict(v) for k, v in sorted(ws.operators.items())}
    if ws.metadata:
        out["metadata"] = dict(sorted(ws.metadata.items()))
    if ws.provenance is not None:
        out["provenance"] = ws.provenance
    return out


def dumps(obj, indent=0):
    """JSON with sorted keys, one structure-constant entry per line."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ["%s  %s: %s" % (pad, json.dumps(k), dumps(obj[k], indent + 1)) for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if not obj or not any(isinstance(x, (list, dict)) for x in obj):
            return json.dumps(obj)
        items = ["%s  %s" % (pad, dumps(x, indent + 1)) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def serialize(ws):
    return dumps(to_dict(ws)) + "\n"


def dump(ws, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(ws))
