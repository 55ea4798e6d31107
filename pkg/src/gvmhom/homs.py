"""
Existence of Verma module homomorphisms and vanishing of standard maps
between generalized Verma modules, decided on shifted highest weights alone.

``verma_hom_exists(mu, lam)`` asks for a nonzero map M_b(mu) -> M_b(lam):
a chain lam = l_0, l_1, ..., l_r = mu with l_{i+1} = s_b l_i and
l_i(H_b) a positive integer.  The search runs downward from ``lam``.

The standard map M_p(mu) -> M_p(lam) is zero exactly when M_b(mu) already
lands in some M_b(s_a lam) with a a Levi simple root.
"""

from __future__ import annotations

import itertools
import threading
from collections import deque
from dataclasses import dataclass
from itertools import accumulate

from .weights import (
    HalfInt, ParabolicContext, Root, Weight, _pairing_twice, _reflect_twice, grading_eval,
    is_p_dominant_integral_shifted, positive_roots,
)

__all__ = [
    "HomVerdict", "OperatorOrder", "NotPDominant", "verma_hom_exists", "verma_chain",
    "standard_hom_nonzero", "operator_order", "orbit_p_dominant",
]


class NotPDominant(ValueError):
    pass


@dataclass(frozen=True)
class HomVerdict:
    true_verma_exists: bool
    standard_nonzero: bool
    vanishing_witness: Root | None
    order_bound: HalfInt


@dataclass(frozen=True)
class OperatorOrder:
    order: int | None
    bound: HalfInt


_verma_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}
_verma_lock = threading.Lock()


def _prefix_gap(state: tuple[int, ...], target_prefix: list[int]) -> bool:
    """state - target lies in N(positive roots): every prefix sum is a nonnegative integer."""
    s = 0
    for x, p in zip(state, target_prefix):
        s += x
        d = s - p
        if d < 0 or d & 1:
            return False
    return True


def _search(mu: tuple[int, ...], lam: tuple[int, ...], want_path: bool):
    m = len(lam)
    if sorted(map(abs, mu)) != sorted(map(abs, lam)):
        return None
    target_prefix = list(accumulate(mu))
    if not _prefix_gap(lam, target_prefix):
        return None
    roots = list(positive_roots(m))
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], Root] | None] = {lam: None}
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        if cur == mu:
            if not want_path:
                return []
            path = []
            node = cur
            while parent[node] is not None:
                prev, beta = parent[node]
                path.append(beta)
                node = prev
            return path[::-1]
        for beta in roots:
            p = _pairing_twice(cur, beta)
            if p <= 0 or p & 1:
                continue
            nxt = _reflect_twice(cur, beta)
            if nxt in parent or not _prefix_gap(nxt, target_prefix):
                continue
            parent[nxt] = (cur, beta)
            queue.append(nxt)
    return None


def verma_hom_exists(mu: Weight, lam: Weight) -> bool:
    """Is there a nonzero homomorphism M_b(mu) -> M_b(lam)?"""
    if mu.rank != lam.rank:
        raise ValueError("rank mismatch")
    key = (mu.twice, lam.twice)
    hit = _verma_cache.get(key)
    if hit is not None:
        return hit
    verdict = _search(mu.twice, lam.twice, want_path=False) is not None
    with _verma_lock:
        _verma_cache[key] = verdict
    return verdict


def verma_chain(mu: Weight, lam: Weight) -> list[Root] | None:
    """The reflections of a shortest chain from lam down to mu, or None."""
    return _search(mu.twice, lam.twice, want_path=True)


def standard_hom_nonzero(mu: Weight, lam: Weight, ctx: ParabolicContext) -> HomVerdict:
    """Decide the standard map M_p(mu) -> M_p(lam)."""
    for w, name in ((mu, "mu"), (lam, "lam")):
        if not is_p_dominant_integral_shifted(w, ctx):
            raise NotPDominant(f"{name} = {w} is not p-dominant and p-integral")
    bound = grading_eval(lam) - grading_eval(mu)
    if not verma_hom_exists(mu, lam):
        return HomVerdict(False, False, None, bound)
    for alpha in ctx.levi_simple_roots:
        if verma_hom_exists(mu, lam.with_twice(_reflect_twice(lam.twice, alpha))):
            return HomVerdict(True, False, alpha, bound)
    return HomVerdict(True, True, None, bound)


def operator_order(mu: Weight, lam: Weight) -> OperatorOrder:
    """Order of the operator dual to a nonzero map M_p(mu) -> M_p(lam).

    The grading difference bounds the order and equals it when it is 1 or 2.
    """
    bound = grading_eval(lam) - grading_eval(mu)
    return OperatorOrder(bound.twice // 2 if bound.twice in (2, 4) else None, bound)


def orbit_p_dominant(dominant: Weight, ctx: ParabolicContext) -> set[Weight]:
    """All W-images of ``dominant`` lying in P_p^{++} + delta."""
    k, m = ctx.k, ctx.m
    if dominant.rank != m:
        raise ValueError(f"rank {dominant.rank} does not match context rank {m}")
    values = sorted((abs(t) for t in dominant.twice), reverse=True)
    out: set[Weight] = set()
    for second_pos in itertools.combinations(range(m), m - k):
        second = [values[p] for p in second_pos]
        if len(set(second)) < len(second) or (second and second[-1] <= 0):
            continue
        if len({x & 1 for x in second}) > 1:
            continue
        rest = [values[p] for p in range(m) if p not in second_pos]
        if len({x & 1 for x in rest}) > 1:
            continue
        _signed_descents(rest, [], second, k, out)
    return out


def _signed_descents(rest, chosen, second, k, out):
    # place signed values of ``rest`` into a strictly decreasing first block
    if not rest:
        out.add(Weight(tuple(chosen) + tuple(second), k))
        return
    seen = set()
    for idx, v in enumerate(rest):
        for s in ((v, -v) if v else (0,)):
            if s in seen or (chosen and s >= chosen[-1]):
                continue
            # every remaining value must still fit below s
            remaining = rest[:idx] + rest[idx + 1:]
            if any(-abs(r) >= s for r in remaining):
                continue
            seen.add(s)
            _signed_descents(remaining, chosen + [s], second, k, out)
