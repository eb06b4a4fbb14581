"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`; there is no floating
point anywhere in the package.  Matrices are small and dense, but the
elimination routines work on sparse rows (dicts) because the constraint
systems built by the cohomology module are very sparse.
"""

from fractions import Fraction
from numbers import Rational

from .errors import DimensionMismatch, ParseError, Singular

ZERO = Fraction(0)
ONE = Fraction(1)


def Q(x):
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError("cannot use %r as an exact scalar" % (x,))


def format_rational(x):
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_rational(s):
    """Parse the canonical "p/q" or "p" form.

    Non-canonical spellings ("2/4", "3/1", "+1", "1.5") are rejected so
    that files round-trip bit-exactly.
    """
    if not isinstance(s, str):
        raise ParseError("rational must be a string, got %r" % (s,))
    text = s.strip()
    num, sep, den = text.partition("/")
    try:
        if not _is_int_literal(num) or (sep and not _is_int_literal(den, positive=True)):
            raise ValueError
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ParseError("malformed rational %r" % (s,)) from None
    value = Fraction(p, q)
    if format_rational(value) != text:
        raise ParseError("rational %r is not in canonical p/q form" % (s,))
    return value


def _is_int_literal(s, positive=False):
    if not s:
        return False
    body = s[1:] if (s[0] == "-" and not positive) else s
    return body.isdigit() and body.isascii()


class Matrix:
    """Immutable dense matrix with Fraction entries (row-major)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise DimensionMismatch("negative matrix shape")
        if entries is None:
            entries = (ZERO,) * (rows * cols)
        entries = tuple(Q(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                "expected %d entries for a %dx%d matrix, got %d"
                % (rows * cols, rows, cols, len(entries)))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __reduce__(self):
        return (Matrix, (self.rows, self.cols, self.entries))

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, columns, rows):
        columns = [list(c) for c in columns]
        return cls(rows, len(columns),
                   [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def diagonal(cls, values):
        n = len(values)
        return cls(n, n, [Q(values[i]) if i == j else ZERO
                          for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def tolist(self):
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def T(self):
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def is_zero(self):
        return not any(self.entries)

    def is_square(self):
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(e) for e in self.row(i))
                         for i in range(self.rows))
        return "Matrix(%dx%d: [%s])" % (self.rows, self.cols, body)

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c):
        c = Q(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch("cannot multiply %dx%d by %dx%d"
                                        % (self.rows, self.cols, other.rows, other.cols))
            out = []
            ocols = [other.column(j) for j in range(other.cols)]
            for i in range(self.rows):
                r = self.row(i)
                for c in ocols:
                    out.append(sum((a * b for a, b in zip(r, c) if a and b), ZERO))
            return Matrix(self.rows, other.cols, out)
        return self.apply(other)

    def apply(self, v):
        """Matrix-vector product; returns a tuple."""
        if len(v) != self.cols:
            raise DimensionMismatch("vector of length %d for %d columns" % (len(v), self.cols))
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append(sum((a * b for a, b in zip(r, v) if a and b), ZERO))
        return tuple(out)

    def power(self, k):
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            return invert(self).power(-k)
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch("shape %s vs %s" % (self.shape, other.shape))


# -- sparse row elimination ---------------------------------------------------

def _sparse_rows(m):
    rows = []
    for i in range(m.rows):
        r = {j: e for j, e in enumerate(m.row(i)) if e}
        if r:
            rows.append(r)
    return rows


def rref_sparse(rows, ncols):
    """Reduced row echelon form of sparse rows (dicts column -> Fraction).

    Returns ``(pivot_rows, pivots)``: pivot_rows[k] has a 1 in column
    pivots[k] and zeros in every other pivot column.  Pivots are sorted.
    """
    reduced = {}  # pivot column -> row
    for row in rows:
        r = {j: Q(v) for j, v in row.items() if v}
        # eliminate existing pivots from r
        for p in sorted(set(r) & set(reduced)):
            c = r.get(p)
            if c:
                _axpy(r, -c, reduced[p])
        if not r:
            continue
        p = min(r)
        inv = 1 / r[p]
        r = {j: v * inv for j, v in r.items()}
        # keep earlier pivot rows reduced against the new pivot
        for q, other in reduced.items():
            c = other.get(p)
            if c:
                _axpy(other, -c, r)
        reduced[p] = r
        # entries of r on columns that became pivots later are removed when
        # those pivots are inserted (loop above), so r stays reduced.
    pivots = sorted(reduced)
    return [reduced[p] for p in pivots], pivots


def _axpy(target, c, source):
    for j, v in source.items():
        nv = target.get(j, ZERO) + c * v
        if nv:
            target[j] = nv
        else:
            target.pop(j, None)


def rank(m):
    """Exact rank over Q."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = rref_sparse(_sparse_rows(m), m.cols)
    return len(pivots)


def sparse_kernel(rows, ncols):
    """Kernel basis of a sparse system, as sparse column dicts.

    Each returned vector has a 1 at its free column and 0 at every other
    free column, so coordinates of a kernel element in this basis are its
    values at the free columns (returned as the second component).
    """
    prows, pivots = rref_sparse(rows, ncols)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    # column view of the pivot rows restricted to free columns
    basis = []
    by_free = {f: [] for f in free}
    for p, r in zip(pivots, prows):
        for j, v in r.items():
            if j != p:
                by_free[j].append((p, v))
    for f in free:
        vec = {f: ONE}
        for p, v in by_free[f]:
            vec[p] = -v
        basis.append(vec)
    return basis, free


def kernel_basis(m):
    """Basis of the right null space, as a list of tuples."""
    basis, _ = sparse_kernel(_sparse_rows(m), m.cols)
    return [tuple(vec.get(j, ZERO) for j in range(m.cols)) for vec in basis]


def invert(m):
    if not m.is_square():
        raise DimensionMismatch("only square matrices can be inverted")
    n = m.rows
    rows = []
    for i in range(n):
        r = {j: e for j, e in enumerate(m.row(i)) if e}
        r[n + i] = ONE
        rows.append(r)
    prows, pivots = rref_sparse(rows, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise Singular("matrix is not invertible")
    return Matrix(n, n, [prows[i].get(n + j, ZERO) for i in range(n) for j in range(n)])


def is_invertible(m):
    return m.is_square() and rank(m) == m.rows


def solve(m, b):
    """One exact solution x of m x = b, or None when inconsistent."""
    if len(b) != m.rows:
        raise DimensionMismatch("right-hand side has wrong length")
    rows = []
    for i in range(m.rows):
        r = {j: e for j, e in enumerate(m.row(i)) if e}
        if b[i]:
            r[m.cols] = Q(b[i])
        if r:
            rows.append(r)
    prows, pivots = rref_sparse(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for p, r in zip(pivots, prows):
        x[p] = r.get(m.cols, ZERO)
    return tuple(x)


def column_space_basis(m):
    """Pivot columns of m: a basis of its column space taken from m itself."""
    chosen = []
    current = []
    for j in range(m.cols):
        trial = current + [m.column(j)]
        if rank(Matrix.from_columns(trial, m.rows)) == len(trial):
            current = trial
            chosen.append(j)
    return chosen


def echelon_column_basis(m):
    """Reduced echelon basis of the column space of m (list of tuples)."""
    prows, _ = rref_sparse(_sparse_rows(m.T), m.rows)
    return [tuple(r.get(i, ZERO) for i in range(m.rows)) for r in prows]


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def zero_vec(n):
    return (ZERO,) * n


def unit_vec(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))
