"""
The Weyl group of B_m as signed permutations, with Bruhat order and the
parabolic Hasse graph for a single crossed node.

An element is stored by the images of the basis vectors: ``images[j] = +-(p+1)``
means ``w(e_{j+1}) = +-e_{p+1}``.  This makes ``apply`` a left action, so
``apply(u * v, lam) == apply(u, apply(v, lam))``.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .weights import (
    ParabolicContext, Root, Weight, _pairing_twice, delta, is_singular, positive_roots,
    simple_roots,
)

__all__ = [
    "WeylElem", "HasseGraph", "RankTooLarge", "SingularWeight", "NotOnOrbit",
    "identity", "reflection", "apply", "length", "iter_weyl_group", "bruhat_leq",
    "bruhat_leq_oracle", "reduced_word", "min_coset_rep", "in_wp", "parabolic_hasse",
    "elem_taking", "is_reflection", "is_hasse_arrow", "FULL_GRAPH_MAX_RANK",
]

FULL_GRAPH_MAX_RANK = 5


class RankTooLarge(ValueError):
    pass


class SingularWeight(ValueError):
    pass


class NotOnOrbit(ValueError):
    pass


@dataclass(frozen=True, slots=True, order=True)
class WeylElem:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(abs(x) for x in self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @property
    def rank(self) -> int:
        return len(self.images)

    def __mul__(self, other: WeylElem) -> WeylElem:
        u = self.images
        return WeylElem(tuple(u[abs(x) - 1] if x > 0 else -u[abs(x) - 1] for x in other.images))

    def inverse(self) -> WeylElem:
        out = [0] * len(self.images)
        for j, x in enumerate(self.images):
            out[abs(x) - 1] = (j + 1) if x > 0 else -(j + 1)
        return WeylElem(tuple(out))

    def __str__(self) -> str:
        return "(" + " ".join(str(x) for x in self.images) + ")"


def identity(m: int) -> WeylElem:
    return WeylElem(tuple(range(1, m + 1)))


@lru_cache(maxsize=None)
def reflection(beta: Root, m: int) -> WeylElem:
    img = list(range(1, m + 1))
    i = beta.i - 1
    if beta.kind == "diff":
        j = beta.j - 1
        img[i], img[j] = j + 1, i + 1
    elif beta.kind == "sum":
        j = beta.j - 1
        img[i], img[j] = -(j + 1), -(i + 1)
    else:
        img[i] = -(i + 1)
    return WeylElem(tuple(img))


@lru_cache(maxsize=None)
def _reflections(m: int) -> dict[WeylElem, Root]:
    return {reflection(b, m): b for b in positive_roots(m)}


def is_reflection(w: WeylElem) -> bool:
    return w in _reflections(w.rank)


def _apply_twice(w: WeylElem, t: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(t)
    for a, x in zip(t, w.images):
        out[abs(x) - 1] = a if x > 0 else -a
    return tuple(out)


def apply(w: WeylElem, lam: Weight) -> Weight:
    if w.rank != lam.rank:
        raise ValueError(f"rank mismatch: {w.rank} vs {lam.rank}")
    return lam.with_twice(_apply_twice(w, lam.twice))


def length(w: WeylElem) -> int:
    """Number of positive roots sent to negative roots."""
    img = w.images
    m = len(img)
    count = sum(1 for x in img if x < 0)  # short roots
    for i in range(m):
        si, pi = (1 if img[i] > 0 else -1), abs(img[i])
        for j in range(i + 1, m):
            sj, pj = (1 if img[j] > 0 else -1), abs(img[j])
            # w(e_i - e_j) = si e_pi - sj e_pj ; w(e_i + e_j) = si e_pi + sj e_pj
            lead_diff = si if pi < pj else -sj
            lead_sum = si if pi < pj else sj
            count += (lead_diff < 0) + (lead_sum < 0)
    return count


def iter_weyl_group(m: int) -> Iterator[WeylElem]:
    """All 2**m * m! elements, lazily."""
    for perm in itertools.permutations(range(1, m + 1)):
        for signs in itertools.product((1, -1), repeat=m):
            yield WeylElem(tuple(s * p for s, p in zip(signs, perm)))


# -- Bruhat order ------------------------------------------------------------

_bruhat_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}
_bruhat_lock = threading.Lock()


def bruhat_leq(w: WeylElem, w2: WeylElem) -> bool:
    """w <= w2: a chain of reflections w -> s_b w, each raising the length by one, reaches w2."""
    if w.rank != w2.rank:
        raise ValueError("rank mismatch")
    key = (w.images, w2.images)
    hit = _bruhat_cache.get(key)
    if hit is not None:
        return hit
    verdict = _bruhat_bfs(w, w2)
    with _bruhat_lock:
        _bruhat_cache[key] = verdict
    return verdict


def _bruhat_bfs(w: WeylElem, w2: WeylElem) -> bool:
    if w == w2:
        return True
    target = length(w2)
    lw = length(w)
    if lw >= target:
        return False
    refl = list(_reflections(w.rank))
    layer = {w}
    for level in range(lw + 1, target + 1):
        nxt = set()
        for u in layer:
            for r in refl:
                v = r * u
                if v not in nxt and length(v) == level:
                    nxt.add(v)
        if w2 in nxt:
            return True
        if not nxt:
            return False
        layer = nxt
    return False


def reduced_word(w: WeylElem) -> list[int]:
    """Indices (1-based) of simple reflections with w = s_{i1} ... s_{il}; lowest descent first."""
    m = w.rank
    simples = [reflection(a, m) for a in simple_roots(m)]
    word: list[int] = []
    cur, cur_len = w, length(w)
    while cur_len:
        for idx, s in enumerate(simples, 1):
            nxt = s * cur
            nlen = length(nxt)
            if nlen < cur_len:
                word.append(idx)
                cur, cur_len = nxt, nlen
                break
    return word


@lru_cache(maxsize=None)
def _subword_products(images: tuple[int, ...]) -> frozenset[WeylElem]:
    w2 = WeylElem(images)
    m = w2.rank
    simples = [reflection(a, m) for a in simple_roots(m)]
    word = reduced_word(w2)
    found = set()
    for mask in range(1 << len(word)):
        g = identity(m)
        letters = 0
        for pos, idx in enumerate(word):
            if mask >> pos & 1:
                g = g * simples[idx - 1]
                letters += 1
        if length(g) == letters:
            found.add(g)
    return frozenset(found)


def bruhat_leq_oracle(w: WeylElem, w2: WeylElem) -> bool:
    """Subword property: w <= w2 iff a reduced word of w is a subword of a fixed reduced word of w2.

    Exponential in length(w2); meant for rank <= 3.
    """
    if w.rank != w2.rank:
        raise ValueError("rank mismatch")
    return w in _subword_products(w2.images)


# -- parabolic structure -----------------------------------------------------

def in_wp(w: WeylElem, ctx: ParabolicContext) -> bool:
    """w is a minimal representative of W_p w: w(delta) is strictly p-dominant."""
    wd = _apply_twice(w, delta(ctx).twice)
    return all(_pairing_twice(wd, a) > 0 for a in ctx.levi_simple_roots)


def min_coset_rep(w: WeylElem, ctx: ParabolicContext) -> tuple[WeylElem, WeylElem]:
    """Split ``w = w_p * wp`` with ``w_p`` in W_p and ``wp`` in W^p."""
    # wp * delta is the unique p-dominant point of W_p (w * delta)
    d = delta(ctx)
    t = _apply_twice(w, d.twice)
    k = ctx.k
    target = tuple(sorted(t[:k], reverse=True)) + tuple(sorted(map(abs, t[k:]), reverse=True))
    wp = elem_taking(d, Weight(target, k))
    return w * wp.inverse(), wp


@dataclass(frozen=True)
class HasseGraph:
    vertices: list[WeylElem]
    arrows: list[tuple[WeylElem, WeylElem, Root]]


def parabolic_hasse(ctx: ParabolicContext, max_length: int | None = None) -> HasseGraph:
    m = ctx.m
    if m > FULL_GRAPH_MAX_RANK:
        raise RankTooLarge(
            f"rank {m} exceeds the full-graph bound {FULL_GRAPH_MAX_RANK} (|W| = 2^m m!)"
        )
    lengths = {}
    for w in iter_weyl_group(m):
        if in_wp(w, ctx):
            lw = length(w)
            if max_length is None or lw <= max_length:
                lengths[w] = lw
    vertices = sorted(lengths, key=lambda v: (lengths[v], v.images))
    arrows = []
    roots = list(positive_roots(m))
    for v in vertices:
        for b in roots:
            u = reflection(b, m) * v
            if lengths.get(u) == lengths[v] + 1:
                arrows.append((v, u, b))
    return HasseGraph(vertices, arrows)


def is_hasse_arrow(w: WeylElem, w2: WeylElem, ctx: ParabolicContext) -> bool:
    """w -> w2 in the parabolic Hasse graph (no enumeration of W needed)."""
    return (
        in_wp(w, ctx) and in_wp(w2, ctx)
        and length(w2) == length(w) + 1
        and is_reflection(w2 * w.inverse())
    )


def elem_taking(dominant: Weight, target: Weight) -> WeylElem:
    """The unique w with apply(w, dominant) == target, for nonsingular dominant input."""
    if is_singular(dominant):
        raise SingularWeight(f"{dominant} is singular; the stabilizer is nontrivial")
    if dominant.rank != target.rank:
        raise ValueError("rank mismatch")
    if sorted(abs(t) for t in dominant.twice) != sorted(abs(t) for t in target.twice):
        raise NotOnOrbit(f"{target} is not on the orbit of {dominant}")
    where = {abs(t): (p, 1 if t > 0 else -1) for p, t in enumerate(target.twice)}
    images = []
    for a in dominant.twice:
        p, sign = where[abs(a)]
        images.append(sign * (p + 1) if a > 0 else -sign * (p + 1))
    return WeylElem(tuple(images))
