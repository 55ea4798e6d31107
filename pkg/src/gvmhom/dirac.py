"""
Homomorphism graphs on the Weyl orbit of the Dirac weight
``[(2k-1)/2, ..., 1/2 | (n-1)/2, ..., 1]`` for so(n + 2k) with node k crossed.

Arrows are drawn in operator direction: ``u -> v`` records a nonzero
standard map M_p(v) -> M_p(u), so the grading value drops along arrows.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .homs import operator_order, orbit_p_dominant, standard_hom_nonzero
from .weights import HalfInt, ParabolicContext, Weight, dominant_rep, grading_eval, is_singular
from .weyl import RankTooLarge

__all__ = [
    "HomGraph", "OrbitReport", "dirac_weight", "embed_i", "embed_j", "sk_graph",
    "analyze_orbit", "DEFAULT_MAX_RANK",
]

log = logging.getLogger(__name__)

DEFAULT_MAX_RANK = 7

Arrow = tuple[int, int, "int | None", HalfInt]


@dataclass(frozen=True)
class HomGraph:
    vertices: list[Weight]
    arrows: list[Arrow]  # (from index, to index, order, grading drop)
    singular: bool = False
    k_equals_half_n_minus_1: bool = False

    def labelled_arrows(self) -> set[tuple[Weight, Weight, int | None]]:
        return {(self.vertices[a], self.vertices[b], o) for a, b, o, _ in self.arrows}

    def restrict(self, keep: set[Weight]) -> HomGraph:
        """Induced subgraph on ``keep``, re-indexed."""
        verts = [v for v in self.vertices if v in keep]
        index = {v: i for i, v in enumerate(verts)}
        arrows = [
            (index[self.vertices[a]], index[self.vertices[b]], o, d)
            for a, b, o, d in self.arrows
            if self.vertices[a] in index and self.vertices[b] in index
        ]
        return HomGraph(verts, sorted(arrows, key=_arrow_key), self.singular,
                        self.k_equals_half_n_minus_1)


def _arrow_key(arrow: Arrow):
    return arrow[0], arrow[1]


def _make_graph(edges: dict[tuple[Weight, Weight], int | None], vertices, **flags) -> HomGraph:
    verts = sorted(vertices, key=str)
    index = {v: i for i, v in enumerate(verts)}
    arrows = [
        (index[u], index[v], o, grading_eval(u) - grading_eval(v))
        for (u, v), o in edges.items()
    ]
    return HomGraph(verts, sorted(arrows, key=_arrow_key), **flags)


def dirac_weight(k: int, n: int) -> Weight:
    ParabolicContext(k, n)  # validates
    first = tuple(2 * (k - i) - 1 for i in range(k))
    second = tuple(2 * ((n - 1) // 2 - i) for i in range((n - 1) // 2))
    return Weight(first + second, k)


def embed_i(lam: Weight, k: int) -> Weight:
    """Prefix (2k-1)/2 to the first block; sends R_{k-1} into R_k^1."""
    if lam.split != k - 1:
        raise ValueError(f"expected a first block of size {k - 1}, got {lam.split}")
    return Weight((2 * k - 1,) + lam.twice, k)


def embed_j(lam: Weight, k: int) -> Weight:
    """Append -(2k-1)/2 to the first block; sends R_{k-1} into R_k^2."""
    if lam.split != k - 1:
        raise ValueError(f"expected a first block of size {k - 1}, got {lam.split}")
    return Weight(lam.first + (-(2 * k - 1),) + lam.second, k)


@lru_cache(maxsize=None)
def _sk_first_blocks(k: int) -> tuple[frozenset, frozenset]:
    """Vertices and (src, dst, order) arrows of S_k on doubled first blocks."""
    if k == 0:
        return frozenset({()}), frozenset()
    if k == 1:
        return frozenset({(1,), (-1,)}), frozenset({((1,), (-1,), 1)})
    top = 2 * k - 1
    verts1, arrows1 = _sk_first_blocks(k - 1)
    i = lambda x: (top,) + x  # noqa: E731
    j = lambda x: x + (-top,)  # noqa: E731
    verts = {i(x) for x in verts1} | {j(x) for x in verts1}
    arrows = {(i(a), i(b), o) for a, b, o in arrows1} | {(j(a), j(b), o) for a, b, o in arrows1}
    verts2, _ = _sk_first_blocks(k - 2)
    for x in verts2:
        arrows.add(((top,) + x + (-(top - 2),), (top - 2,) + x + (-top,), 2))
    return frozenset(verts), frozenset(arrows)


def sk_graph(k: int, ctx: ParabolicContext | None = None) -> HomGraph:
    """S_k labelled by Dirac-orbit weights; the second block is taken from ``ctx`` (default n=3)."""
    n = ctx.n if ctx is not None else 3
    if ctx is not None and ctx.k != k:
        raise ValueError("context k does not match")
    tail = tuple(2 * ((n - 1) // 2 - i) for i in range((n - 1) // 2))
    verts, arrows = _sk_first_blocks(k)
    as_weight = lambda x: Weight(x + tail, k)  # noqa: E731
    edges = {(as_weight(a), as_weight(b)): o for a, b, o in arrows}
    return _make_graph(edges, [as_weight(v) for v in verts])


@dataclass
class OrbitReport:
    ctx: ParabolicContext
    graph: HomGraph
    full_relation: set[tuple[int, int]]  # indices into graph.vertices, operator direction
    matches_sk: bool
    complex_violations: list[tuple[int, int, int]]
    dirac_family: list[int] = field(default_factory=list)
    extra_family: list[int] = field(default_factory=list)

    @property
    def k(self) -> int:
        return self.ctx.k

    @property
    def n(self) -> int:
        return self.ctx.n

    def family_graph(self) -> HomGraph:
        """The graph restricted to the 2^k weights sharing the Dirac weight's second block."""
        return self.graph.restrict({self.graph.vertices[i] for i in self.dirac_family})

    def crossing_pairs(self) -> list[tuple[int, int]]:
        fam = set(self.dirac_family)
        return sorted((a, b) for a, b in self.full_relation if (a in fam) != (b in fam))


def analyze_orbit(k: int, n: int, max_rank: int = DEFAULT_MAX_RANK) -> OrbitReport:
    ctx = ParabolicContext(k, n)
    if ctx.m > max_rank:
        raise RankTooLarge(f"rank {ctx.m} exceeds the bound {max_rank}")
    lam = dirac_weight(k, n)
    tilde = dominant_rep(lam)
    singular = is_singular(tilde)
    flagged = k == (n - 1) // 2
    if flagged:
        log.warning("k = (n-1)/2 = %d: the orbit carries an extra family of weights", k)
    weights = sorted(orbit_p_dominant(tilde, ctx), key=str)

    relation = set()
    for a, upper in enumerate(weights):
        for b, lower in enumerate(weights):
            if a != b and standard_hom_nonzero(lower, upper, ctx).standard_nonzero:
                relation.add((a, b))

    covering = {
        (a, b) for a, b in relation
        if not any((a, c) in relation and (c, b) in relation for c in range(len(weights)))
    }
    edges = {
        (weights[a], weights[b]): operator_order(weights[b], weights[a]).order
        for a, b in covering
    }
    graph = _make_graph(edges, weights, singular=singular, k_equals_half_n_minus_1=flagged)

    family = [i for i, w in enumerate(weights) if w.second == lam.second]
    extra = [i for i in range(len(weights)) if i not in set(family)]
    family_view = graph.restrict({weights[i] for i in family})
    expected = sk_graph(k, ctx)
    matches = (
        family_view.vertices == expected.vertices
        and family_view.labelled_arrows() == expected.labelled_arrows()
    )

    out_arrows: dict[int, list[int]] = {}
    for a, b, _, _ in graph.arrows:
        out_arrows.setdefault(a, []).append(b)
    violations = sorted(
        (u, v, w)
        for u, vs in out_arrows.items()
        for v in vs
        for w in out_arrows.get(v, [])
        if (u, w) in relation
    )
    return OrbitReport(ctx, graph, relation, matches, violations, family, extra)
