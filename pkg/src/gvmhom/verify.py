"""Batch checks over a (k, n) grid plus the group-theoretic invariant suites."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

from .dirac import OrbitReport, analyze_orbit, dirac_weight
from .homs import standard_hom_nonzero, verma_hom_exists
from .weights import (
    ParabolicContext, Weight, delta, dominant_rep, grading_eval, is_singular, pairing,
    positive_roots, reflect,
)
from .weyl import (
    WeylElem, apply, bruhat_leq, bruhat_leq_oracle, elem_taking, identity, is_hasse_arrow,
    iter_weyl_group, length, min_coset_rep, parabolic_hasse, reflection,
)

__all__ = [
    "CheckResult", "GRIDS", "hasse_lepowsky_check", "grading_drop_check", "oracle_agreement",
    "bgg_bruhat_agreement", "property_suite", "orbit_checks", "verify_paper_suite",
]

GRIDS = {
    "default": [(k, n) for n in (3, 5, 7) for k in (1, 2, 3)],
    "extended": [(k, n) for n in (3, 5, 7) for k in (1, 2, 3)] + [(4, 3)],
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    flagged: bool = False

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        flag = " [flagged k=(n-1)/2]" if self.flagged else ""
        return f"{mark}  {self.name}{flag}  {self.detail}".rstrip()


def hasse_lepowsky_check(report: OrbitReport) -> tuple[int, list[tuple[str, str]]]:
    """Every Hasse arrow between orbit weights that carries a Verma map must give a nonzero standard map.

    Returns the number of Hasse arrows examined and the offending (upper, lower) pairs.
    """
    ctx = report.ctx
    weights = report.graph.vertices
    tilde = dominant_rep(dirac_weight(ctx.k, ctx.n))
    elems = [elem_taking(tilde, w) for w in weights]
    checked, bad = 0, []
    for (a, upper), (b, lower) in itertools.permutations(enumerate(weights), 2):
        if not is_hasse_arrow(elems[a], elems[b], ctx):
            continue
        if not verma_hom_exists(lower, upper):
            continue
        checked += 1
        if not standard_hom_nonzero(lower, upper, ctx).standard_nonzero:
            bad.append((str(upper), str(lower)))
    return checked, bad


def grading_drop_check(ctx: ParabolicContext) -> tuple[int, list]:
    """Along every parabolic Hasse arrow w -> w', (w delta - w' delta)(E) is a positive integer."""
    graph = parabolic_hasse(ctx)
    d = delta(ctx)
    bad = []
    for w, w2, gamma in graph.arrows:
        drop = grading_eval(apply(w, d)) - grading_eval(apply(w2, d))
        if not drop.is_positive_integer():
            bad.append((w, w2, gamma, drop))
    return len(graph.arrows), bad


def oracle_agreement(m: int) -> tuple[int, list[tuple[WeylElem, WeylElem]]]:
    group = list(iter_weyl_group(m))
    bad = [(u, v) for u in group for v in group if bruhat_leq(u, v) != bruhat_leq_oracle(u, v)]
    return len(group) ** 2, bad


def bgg_bruhat_agreement(m: int) -> tuple[int, list[tuple[WeylElem, WeylElem]]]:
    """verma_hom_exists(w' delta, w delta) iff w <= w' over all pairs of W(B_m)."""
    d = Weight(tuple(2 * (m - i) - 1 for i in range(m)), 0)
    group = list(iter_weyl_group(m))
    images = [apply(w, d) for w in group]
    bad = []
    for (w, wd), (w2, w2d) in itertools.product(zip(group, images), repeat=2):
        if verma_hom_exists(w2d, wd) != bruhat_leq(w, w2):
            bad.append((w, w2))
    return len(group) ** 2, bad


def _random_weight(rng: random.Random, m: int) -> Weight:
    return Weight(tuple(rng.randint(-12, 12) for _ in range(m)), rng.randint(0, m))


def _random_elem(rng: random.Random, m: int) -> WeylElem:
    perm = list(range(1, m + 1))
    rng.shuffle(perm)
    return WeylElem(tuple(p if rng.random() < 0.5 else -p for p in perm))


def property_suite(m: int, cases: int, seed: int = 0) -> list[CheckResult]:
    """Randomized invariants at rank ``m``; returns one result per property."""
    rng = random.Random(seed * 1000 + m)
    roots = list(positive_roots(m))
    k = rng.randint(1, m - 1) if m > 1 else None
    ctx = ParabolicContext(k, 2 * (m - k) + 1) if k else None
    failures = {name: 0 for name in ("involution", "sign flip", "parity flip", "coset", "idempotent")}
    for _ in range(cases):
        lam = _random_weight(rng, m)
        beta = rng.choice(roots)
        refl = reflect(lam, beta)
        if reflect(refl, beta) != lam or sorted(map(abs, refl.twice)) != sorted(map(abs, lam.twice)):
            failures["involution"] += 1
        if pairing(refl, beta) != -pairing(lam, beta):
            failures["sign flip"] += 1
        w = _random_elem(rng, m)
        if (length(reflection(beta, m) * w) - length(w)) % 2 != 1:
            failures["parity flip"] += 1
        if ctx is not None:
            w_p, wp = min_coset_rep(w, ctx)
            if w_p * wp != w or length(w) != length(w_p) + length(wp):
                failures["coset"] += 1
        dom = dominant_rep(lam)
        if dominant_rep(dom) != dom or dominant_rep(refl) != dom:
            failures["idempotent"] += 1
    return [
        CheckResult(f"B_{m} {name} x{cases}", count == 0, f"{count} failures")
        for name, count in failures.items()
    ]


def orbit_checks(k: int, n: int) -> list[CheckResult]:
    """Run analyze_orbit for (k, n) and check it against the expected S_k structure."""
    start = time.perf_counter()
    report = analyze_orbit(k, n)
    elapsed = time.perf_counter() - start
    g = report.graph
    fam = report.family_graph()
    flagged = g.k_equals_half_n_minus_1
    tag = f"orbit k={k} n={n}"
    rel = report.full_relation
    results = [
        CheckResult(f"{tag}: 2^k Dirac-family weights", len(fam.vertices) == 2 ** k,
                    f"{len(fam.vertices)} family / {len(g.vertices)} total, {elapsed:.2f}s", flagged),
        CheckResult(f"{tag}: no extra weights unless k=(n-1)/2",
                    flagged or len(g.vertices) == 2 ** k, "", flagged),
        CheckResult(f"{tag}: nonsingular", not is_singular(dominant_rep(dirac_weight(k, n))),
                    "", flagged),
        CheckResult(f"{tag}: matches S_k", report.matches_sk,
                    f"{len(fam.arrows)} family arrows", flagged),
        CheckResult(f"{tag}: orders in {{1,2}} and equal grading drop",
                    all(o in (1, 2) and d.twice == 2 * o for _, _, o, d in fam.arrows), "", flagged),
        CheckResult(f"{tag}: arrows within full relation",
                    all((a, b) in rel for a, b, _, _ in g.arrows), "", flagged),
        CheckResult(f"{tag}: no hom crosses families", not report.crossing_pairs(), "", flagged),
    ]
    if k == 2:
        cover = {(a, b) for a, b, _, _ in g.arrows}
        results.append(CheckResult(f"{tag}: complex (no composite survives)",
                                   not report.complex_violations, "", flagged))
        results.append(CheckResult(f"{tag}: arrows equal full relation", cover == rel, "", flagged))
    checked, bad = hasse_lepowsky_check(report)
    results.append(CheckResult(f"{tag}: Hasse arrows with Verma maps are standard-nonzero",
                               not bad, f"{checked} arrows checked", flagged))
    return results


def verify_paper_suite(grid: list[tuple[int, int]] | None = None, oracle: bool = False,
                       property_cases: int = 2000) -> list[CheckResult]:
    grid = GRIDS["default"] if grid is None else grid
    results: list[CheckResult] = []
    for k, n in grid:
        results.extend(orbit_checks(k, n))
    count, bad = grading_drop_check(ParabolicContext(2, 5))
    results.append(CheckResult("Hasse B_4 k=2: grading drops are positive integers", not bad,
                               f"{count} arrows"))
    for m in range(1, 6):
        results.extend(property_suite(m, property_cases))
    if oracle:
        for m in (2, 3):
            count, bad = oracle_agreement(m)
            results.append(CheckResult(f"B_{m}: Bruhat BFS agrees with subword oracle", not bad,
                                       f"{count} pairs"))
        count, bad = bgg_bruhat_agreement(3)
        results.append(CheckResult("B_3: Verma maps from delta orbit iff Bruhat", not bad,
                                   f"{count} pairs"))
        e = identity(3)
        results.append(CheckResult("B_3: identity is Bruhat-minimal",
                                   all(bruhat_leq(e, w) for w in iter_weyl_group(3))))
    return results
