"""Seeded test corpus shared by the test modules.

Everything is built from ``random.Random`` with fixed seeds and cached, so
each family is computed once per session.
"""

import random
from functools import lru_cache

from bihomsuper import generate as g
from bihomsuper.graded import EvenMap
from bihomsuper.operators import check_o_operator
from bihomsuper.representations import regular_bimodule
from bihomsuper.search import FULL, UPPER, SearchSpec, candidates, search, search_size
from bihomsuper.varieties import check_bihom_prelie


@lru_cache(maxsize=None)
def twisted_prelie(count=60, seed=3):
    """Yau twists of classical pre-Lie superalgebras of dim <= 2|2.

    Every instance passes the pre-Lie checker and has invertible twists.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        s0 = g.random_prelie_family(rng)
        a, b = g.random_diagonal_morphism_pair(rng, s0)
        s = g.yau_twist(s0, a, b)
        if s.invertible and check_bihom_prelie(s).passed:
            out.append(s)
    return tuple(out)


@lru_cache(maxsize=None)
def prelie_with_rb(seed=5, per_instance=6, limit=12):
    """(s, [nonzero weight-0 Rota-Baxter operators]) on twisted pre-Lie instances.

    Operators come from an upper triangular {-1, 0, 1} grid; they are also
    O-operators of the regular bimodule, which is all the constructions need.
    """
    rng = random.Random(seed)
    spec = SearchSpec(grid=(-1, 0, 1), shape=UPPER)
    out = []
    tries = 0
    while len(out) < limit and tries < 200:
        tries += 1
        s0 = g.random_prelie_family(rng)
        a, b = g.random_diagonal_morphism_pair(rng, s0)
        s = g.yau_twist(s0, a, b)
        if not s.invertible or search_size(s.space, s.space, spec) > 800:
            continue
        bm = regular_bimodule(s)
        ops = [m for m in search(s, spec) if not m.matrix.is_zero()
               and check_o_operator(bm, m).passed]
        if ops:
            out.append((s, tuple(ops[:per_instance])))
    return tuple(out)


def _twists(s0, rng, n):
    maps = g.diagonal_morphisms(s0)
    ident = EvenMap.identity(s0.space)
    pairs = [(ident, ident)]
    while len(pairs) < n:
        pairs.append((rng.choice(maps), rng.choice(maps)))
    return pairs


SMALL_ASSOCIATIVE = ("ground_field", "grassmann1", "dual_numbers", "clifford1",
                     "upper_triangular_11")


@lru_cache(maxsize=None)
def associative_instances(names=SMALL_ASSOCIATIVE, seed=11, twists=3):
    """Yau-twisted associative fixtures (default: those of dim <= 2|1)."""
    rng = random.Random(seed)
    out = []
    for name in names:
        s0 = g.ASSOCIATIVE_FIXTURES[name]()
        for a, b in _twists(s0, rng, twists):
            s = g.yau_twist(s0, a, b)
            if s.invertible:
                out.append((name, s))
    return tuple(out)


@lru_cache(maxsize=None)
def associative_rb(weight, names=SMALL_ASSOCIATIVE):
    """(name, s, [nonzero Rota-Baxter operators of the given weight]) found by search.

    Full {-1, 0, 1} grids where cheap, upper triangular ones on 2|2.
    """
    out = []
    for name, s in associative_instances(names):
        spec = SearchSpec(weight=weight, grid=(-1, 0, 1), shape=FULL)
        if search_size(s.space, s.space, spec) > 1000:
            spec = SearchSpec(weight=weight, grid=(-1, 0, 1), shape=UPPER)
        ops = [m for m in search(s, spec) if not m.matrix.is_zero()]
        if ops:
            out.append((name, s, tuple(ops)))
    return tuple(out)


def invertible_candidates(space, grid=(-1, 1, 2)):
    spec = SearchSpec(grid=grid, shape=UPPER, invertible_only=True)
    return [m for m in candidates(space, space, spec)]
