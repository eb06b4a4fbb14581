"""Bounded brute-force search for Rota-Baxter operators and O-operators.

Candidates are even matrices whose free entries run over a finite grid.
The search is exhaustive over the grid and deterministic: candidates are
enumerated in lexicographic order of the free entries (grid order), and
exactly the candidates accepted by the checker are returned.
"""

from dataclasses import dataclass
from itertools import product

from .errors import SearchSpaceTooLarge
from .exact import Q, ZERO, Matrix, is_invertible
from .graded import EvenMap
from .operators import O_OPERATOR, ROTA_BAXTER, check_o_operator, check_rota_baxter

DIAGONAL = "diagonal"
UPPER = "upper"
FULL = "full"
SHAPES = (DIAGONAL, UPPER, FULL)
DEFAULT_CAP = 200000


@dataclass(frozen=True)
class SearchSpec:
    target: str = ROTA_BAXTER
    weight: object = ZERO
    grid: tuple = (-2, -1, 0, 1, 2)
    shape: str = DIAGONAL
    invertible_only: bool = False

    def __post_init__(self):
        if self.target not in (ROTA_BAXTER, O_OPERATOR):
            raise ValueError("search target must be a Rota-Baxter operator or an O-operator")
        if self.shape not in SHAPES:
            raise ValueError("unknown shape %r" % (self.shape,))
        grid = tuple(dict.fromkeys(Q(g) for g in self.grid))
        if not grid:
            raise ValueError("empty grid")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "weight", Q(self.weight))


def free_positions(domain, codomain, shape):
    """Matrix entries (row, col) allowed by parity and shape."""
    out = []
    for i in range(codomain.dim):
        for j in range(domain.dim):
            if codomain.parity[i] != domain.parity[j]:
                continue
            if shape == DIAGONAL and i != j:
                continue
            if shape == UPPER and i > j:
                continue
            out.append((i, j))
    return out


def search_size(domain, codomain, spec):
    return len(spec.grid) ** len(free_positions(domain, codomain, spec.shape))


def candidates(domain, codomain, spec, cap=DEFAULT_CAP):
    pos = free_positions(domain, codomain, spec.shape)
    size = len(spec.grid) ** len(pos)
    if size > cap:
        raise SearchSpaceTooLarge("search space has %d candidates (cap %d)" % (size, cap))
    for values in product(spec.grid, repeat=len(pos)):
        rows = [[ZERO] * domain.dim for _ in range(codomain.dim)]
        for (i, j), v in zip(pos, values):
            rows[i][j] = v
        yield EvenMap(domain, codomain, Matrix.from_rows(rows, domain.dim))


def _accepts(spec, target, m):
    if spec.invertible_only and not _invertible(m):
        return False
    if spec.target == ROTA_BAXTER:
        return check_rota_baxter(target, m, spec.weight, witness_cap=1).passed
    return check_o_operator(target, m, spec.weight, witness_cap=1).passed


def _invertible(m):
    return is_invertible(m.matrix)


def search(target, spec, cap=DEFAULT_CAP):
    """All grid candidates passing the check.

    ``target`` is a Structure for Rota-Baxter searches and a Bimodule for
    O-operator searches.
    """
    if spec.target == ROTA_BAXTER:
        dom = cod = target.space
    else:
        dom, cod = target.space, target.base.space
    return [m for m in candidates(dom, cod, spec, cap) if _accepts(spec, target, m)]
