"""Small printing helpers shared by the demos."""

from bihomsuper.exact import format_rational


def vec(space, v):
    terms = []
    for k, a in enumerate(v):
        if not a:
            continue
        c = format_rational(a)
        name = space.basis_names[k]
        terms.append(name if c == "1" else "-" + name if c == "-1" else "%s %s" % (c, name))
    return " + ".join(terms).replace("+ -", "- ") or "0"


def product(op, symbol="*", indent="  "):
    sp = op.left
    lines = []
    for i, j, _, _ in op.entries():
        line = "%s%s %s %s = %s" % (indent, sp.basis_names[i], symbol, sp.basis_names[j],
                                    vec(op.out, op.c[i][j]))
        if line not in lines:
            lines.append(line)
    print("\n".join(lines) if lines else indent + "(all products vanish)")


def matrix(m, indent="  "):
    for row in m.matrix.tolist():
        print(indent + "[" + "  ".join("%5s" % format_rational(a) for a in row) + " ]")
