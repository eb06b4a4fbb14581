"""Z2-graded spaces, even maps, structure-constant products and Koszul signs."""

from dataclasses import dataclass, field
from functools import cached_property

from .errors import DimensionMismatch, ParityViolation, Singular, InvertibilityRequired
from .exact import Matrix, Q, ZERO, ONE, invert
from .report import Report


@dataclass(frozen=True)
class SuperSpace:
    """Ordered homogeneous basis, even elements first."""

    basis_names: tuple
    parity: tuple

    def __post_init__(self):
        object.__setattr__(self, "basis_names", tuple(self.basis_names))
        object.__setattr__(self, "parity", tuple(int(p) for p in self.parity))
        if len(self.basis_names) != len(self.parity):
            raise DimensionMismatch("one parity per basis element")
        if len(set(self.basis_names)) != len(self.basis_names):
            raise ValueError("basis names must be distinct")
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError("parities are 0 or 1")
        if list(self.parity) != sorted(self.parity):
            raise ValueError("even basis elements must precede odd ones")

    @classmethod
    def of(cls, even, odd=()):
        """``SuperSpace.of(["e1"], ["f1", "f2"])``; ints give default names."""
        if isinstance(even, int):
            even = ["e%d" % (i + 1) for i in range(even)]
        if isinstance(odd, int):
            odd = ["f%d" % (i + 1) for i in range(odd)]
        return cls(tuple(even) + tuple(odd), (0,) * len(even) + (1,) * len(odd))

    @property
    def dim(self):
        return len(self.parity)

    @property
    def even_dim(self):
        return self.parity.count(0)

    @property
    def odd_dim(self):
        return self.parity.count(1)

    def index(self, name):
        return self.basis_names.index(name)

    def __len__(self):
        return self.dim

    def __str__(self):
        return "%d|%d" % (self.even_dim, self.odd_dim)


def koszul_sign(parities, permutation):
    """Sign picked up by reordering graded-antisymmetric arguments.

    ``permutation[k]`` is the position (in the original list) of the element
    that ends up in slot k.  Each inversion of a pair with parities p, q
    contributes ``-(-1)**(p*q)``: ordinary antisymmetry for even elements,
    symmetry for two odd ones.
    """
    n = len(permutation)
    if sorted(permutation) != list(range(n)) or len(parities) != n:
        raise ValueError("not a permutation of the parity list")
    sign = 1
    for a in range(n):
        for b in range(a + 1, n):
            if permutation[a] > permutation[b]:
                if not (parities[permutation[a]] and parities[permutation[b]]):
                    sign = -sign
    return sign


def sign(k):
    """(-1)**k for an integer k."""
    return -1 if k & 1 else 1


@dataclass(frozen=True, eq=False)
class EvenMap:
    """Parity-preserving linear map ``domain -> codomain``."""

    domain: SuperSpace
    codomain: SuperSpace
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.dim, self.domain.dim):
            raise DimensionMismatch(
                "map matrix is %dx%d, expected %dx%d"
                % (self.matrix.rows, self.matrix.cols, self.codomain.dim, self.domain.dim))

    @classmethod
    def identity(cls, space):
        return cls(space, space, Matrix.identity(space.dim))

    @classmethod
    def zero(cls, domain, codomain=None):
        codomain = domain if codomain is None else codomain
        return cls(domain, codomain, Matrix.zero(codomain.dim, domain.dim))

    @classmethod
    def from_rows(cls, domain, codomain, rows):
        return cls(domain, codomain, Matrix.from_rows(rows, domain.dim))

    @classmethod
    def diagonal(cls, space, values):
        return cls(space, space, Matrix.diagonal(values))

    def __eq__(self, other):
        if not isinstance(other, EvenMap):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.domain, self.codomain, self.matrix))

    def __call__(self, v):
        return self.matrix.apply(v)

    def column(self, j):
        return self.matrix.column(j)

    @cached_property
    def columns(self):
        return tuple(self.matrix.column(j) for j in range(self.domain.dim))

    def __matmul__(self, other):
        if self.domain != other.codomain:
            raise DimensionMismatch("cannot compose maps with mismatched spaces")
        return EvenMap(other.domain, self.codomain, self.matrix @ other.matrix)

    def __add__(self, other):
        return EvenMap(self.domain, self.codomain, self.matrix + other.matrix)

    def __sub__(self, other):
        return EvenMap(self.domain, self.codomain, self.matrix - other.matrix)

    def __neg__(self):
        return EvenMap(self.domain, self.codomain, -self.matrix)

    def scale(self, c):
        return EvenMap(self.domain, self.codomain, self.matrix.scale(c))

    def __rmul__(self, c):
        return self.scale(c)

    def is_endomorphism(self):
        return self.domain == self.codomain

    def is_identity(self):
        return self.is_endomorphism() and self.matrix == Matrix.identity(self.domain.dim)

    def inverse(self):
        try:
            return EvenMap(self.codomain, self.domain, invert(self.matrix))
        except Singular:
            raise InvertibilityRequired("map is not invertible") from None

    def power(self, k):
        if k < 0:
            return self.inverse().power(-k)
        return EvenMap(self.domain, self.codomain, self.matrix.power(k))

    def cross_parity_entries(self):
        out = []
        for i in range(self.codomain.dim):
            for j in range(self.domain.dim):
                if self.codomain.parity[i] != self.domain.parity[j] and self.matrix[i, j]:
                    out.append((i, j))
        return out


def require_even(m, what="map"):
    bad = m.cross_parity_entries()
    if bad:
        i, j = bad[0]
        raise ParityViolation("%s sends %s to a vector with %s component (odd/even mix)"
                              % (what, m.domain.basis_names[j], m.codomain.basis_names[i]))
    return m


def _dense3(n1, n2, n3, c):
    c = [[[Q(c[i][j][k]) for k in range(n3)] for j in range(n2)] for i in range(n1)]
    return tuple(tuple(tuple(row) for row in plane) for plane in c)


class Trilinear:
    """Structure constants ``x_i * y_j = sum_k c[i][j][k] z_k`` between three spaces.

    Used both for products on one space and for actions ``A x V -> V``.
    """

    __slots__ = ("left", "right", "out", "c", "_table")

    def __init__(self, left, right, out, c):
        self.left = left
        self.right = right
        self.out = out
        if len(c) != left.dim or any(len(p) != right.dim for p in c) or any(
                len(r) != out.dim for p in c for r in p):
            raise DimensionMismatch("structure-constant tensor has the wrong shape")
        self.c = _dense3(left.dim, right.dim, out.dim, c)
        self._table = None

    @classmethod
    def zeros(cls, left, right, out):
        return cls(left, right, out,
                   [[[ZERO] * out.dim for _ in range(right.dim)] for _ in range(left.dim)])

    @classmethod
    def from_entries(cls, left, right, out, entries):
        """Build from sparse ``(i, j, k, value)`` entries (indices or names)."""
        c = [[[ZERO] * out.dim for _ in range(right.dim)] for _ in range(left.dim)]
        for i, j, k, v in entries:
            i = left.index(i) if isinstance(i, str) else i
            j = right.index(j) if isinstance(j, str) else j
            k = out.index(k) if isinstance(k, str) else k
            c[i][j][k] += Q(v)
        return cls(left, right, out, c)

    @classmethod
    def from_function(cls, left, right, out, fn):
        """``fn(i, j)`` returns the output vector for basis inputs i, j."""
        return cls(left, right, out,
                   [[fn(i, j) for j in range(right.dim)] for i in range(left.dim)])

    @property
    def table(self):
        if self._table is None:
            self._table = {
                (i, j): tuple((k, v) for k, v in enumerate(self.c[i][j]) if v)
                for i in range(self.left.dim) for j in range(self.right.dim)}
        return self._table

    def basis(self, i, j):
        return self.c[i][j]

    def __call__(self, u, v):
        if len(u) != self.left.dim or len(v) != self.right.dim:
            raise DimensionMismatch("input vector length does not match the spaces")
        out = [ZERO] * self.out.dim
        table = self.table
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in table[(i, j)]:
                    out[k] += ab * c
        return tuple(out)

    def parity_violations(self):
        pl, pr, po = self.left.parity, self.right.parity, self.out.parity
        return [(i, j, k) for (i, j), entries in self.table.items()
                for k, _ in entries if po[k] != (pl[i] + pr[j]) % 2]

    def is_zero(self):
        return not any(self.table.values())

    def map_c(self, fn):
        """New tensor with the same spaces and entries fn(i, j) (vectors)."""
        return Trilinear.from_function(self.left, self.right, self.out, fn)

    def __add__(self, other):
        self._check_same(other)
        return self.map_c(lambda i, j: tuple(a + b for a, b in zip(self.c[i][j], other.c[i][j])))

    def __sub__(self, other):
        self._check_same(other)
        return self.map_c(lambda i, j: tuple(a - b for a, b in zip(self.c[i][j], other.c[i][j])))

    def __neg__(self):
        return self.map_c(lambda i, j: tuple(-a for a in self.c[i][j]))

    def scale(self, s):
        s = Q(s)
        return self.map_c(lambda i, j: tuple(s * a for a in self.c[i][j]))

    def _check_same(self, other):
        if (self.left, self.right, self.out) != (other.left, other.right, other.out):
            raise DimensionMismatch("tensors over different spaces")

    def __eq__(self, other):
        if not isinstance(other, Trilinear):
            return NotImplemented
        return ((self.left, self.right, self.out) == (other.left, other.right, other.out)
                and self.c == other.c)

    def __hash__(self):
        return hash((self.left, self.right, self.out, self.c))

    def __repr__(self):
        nz = sum(1 for e in self.table.values() for _ in e)
        return "<%s %s x %s -> %s, %d nonzero>" % (
            type(self).__name__, self.left, self.right, self.out, nz)

    def entries(self):
        """Sparse ``(i, j, k, value)`` list in lexicographic index order."""
        return [(i, j, k, v) for i in range(self.left.dim) for j in range(self.right.dim)
                for k, v in enumerate(self.c[i][j]) if v]


class BilinearOp(Trilinear):
    """An even product on a single superspace."""

    __slots__ = ()

    def __init__(self, space, c):
        super().__init__(space, space, space, c)

    @property
    def space(self):
        return self.left

    @classmethod
    def zeros(cls, space):
        return cls(space, [[[ZERO] * space.dim for _ in range(space.dim)]
                           for _ in range(space.dim)])

    @classmethod
    def from_entries(cls, space, entries):
        t = Trilinear.from_entries(space, space, space, entries)
        return cls(space, t.c)

    @classmethod
    def from_function(cls, space, fn):
        return cls(space, [[fn(i, j) for j in range(space.dim)] for i in range(space.dim)])

    def map_c(self, fn):
        return BilinearOp.from_function(self.space, fn)

    def transport(self, m):
        """Pull the product back along an invertible map: m^-1(m x * m y)."""
        inv = m.inverse()
        cols = m.columns
        return BilinearOp.from_function(
            self.space, lambda i, j: inv(self(cols[i], cols[j])))


class Action(Trilinear):
    """Action tensor ``A x V -> V``: ``t[a][v][w]`` is the w-coordinate of a.v."""

    __slots__ = ()

    def __init__(self, algebra, module, c):
        super().__init__(algebra, module, module, c)

    @property
    def algebra(self):
        return self.left

    @property
    def module(self):
        return self.right

    @classmethod
    def zeros(cls, algebra, module):
        return cls(algebra, module, [[[ZERO] * module.dim for _ in range(module.dim)]
                                     for _ in range(algebra.dim)])

    @classmethod
    def from_function(cls, algebra, module, fn):
        return cls(algebra, module, [[fn(a, v) for v in range(module.dim)]
                                     for a in range(algebra.dim)])

    @classmethod
    def from_entries(cls, algebra, module, entries):
        t = Trilinear.from_entries(algebra, module, module, entries)
        return cls(algebra, module, t.c)

    def map_c(self, fn):
        return Action.from_function(self.algebra, self.module, fn)

    def operator(self, x):
        """The endomorphism of V given by acting with the vector x."""
        n = self.module.dim
        cols = [self(x, tuple(ONE if k == v else ZERO for k in range(n))) for v in range(n)]
        return EvenMap(self.module, self.module, Matrix.from_columns(cols, n))


def check_even(m):
    """Report on whether a linear map is parity preserving."""
    rep = Report("even map")
    if m.matrix.shape != (m.codomain.dim, m.domain.dim):
        raise DimensionMismatch("matrix shape does not match the spaces")
    witnesses = []
    for i, j in m.cross_parity_entries():
        witnesses.append(((i, j), (m.matrix[i, j],)))
    rep.add("even", witnesses)
    return rep


def apply_bilinear(op, u, v):
    return op(u, v)


def basis_vector(space, i):
    return tuple(ONE if k == i else ZERO for k in range(space.dim))


def vector_parity(space, v):
    """Parity of a homogeneous nonzero vector, None for mixed or zero."""
    ps = {space.parity[k] for k, a in enumerate(v) if a}
    return ps.pop() if len(ps) == 1 else None
