"""
Acceptance gate: one test per criterion, each clause checked at its stated
tolerance and wall-clock budget. Run with ``pytest tests/test_acceptance.py``;
the terminal summary lists one PASS/FAIL line per criterion.
"""

import time

import pytest

from gvmhom.dirac import analyze_orbit
from gvmhom.verify import (
    bgg_bruhat_agreement, grading_drop_check, hasse_lepowsky_check, oracle_agreement,
    property_suite,
)
from gvmhom.weights import ParabolicContext, grading_eval, parse_weight

P = parse_weight


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def order2(graph):
    return sum(o == 2 for _, _, o, _ in graph.arrows)


@pytest.mark.criterion(1)
def test_criterion_1_k2_n7(criterion):
    r, secs = timed(analyze_orbit, 2, 7)
    g = r.graph
    expected = {P(s) for s in (
        "[3/2,1/2|3,2,1]", "[3/2,-1/2|3,2,1]", "[1/2,-3/2|3,2,1]", "[-1/2,-3/2|3,2,1]")}
    criterion.check("exactly the 4 listed weights", set(g.vertices) == expected
                    and len(g.vertices) == 4)
    chain = sorted(g.arrows, key=lambda a: -grading_eval(g.vertices[a[0]]).twice)
    is_chain = len(chain) == 3 and all(chain[i][1] == chain[i + 1][0] for i in range(2))
    criterion.check("3-arrow chain", is_chain)
    criterion.check("orders (1,2,1)", [o for _, _, o, _ in chain] == [1, 2, 1])
    criterion.check("matches_sk", r.matches_sk)
    criterion.check("complex_violations empty", not r.complex_violations)
    criterion.check(f"runtime {secs:.3f}s < 1s", secs < 1)
    criterion.verdict()


@pytest.mark.criterion(2)
def test_criterion_2_k3_n7(criterion):
    r, secs = timed(analyze_orbit, 3, 7)
    fam = r.family_graph()
    # k = (n-1)/2 here: the full orbit also holds a second family of 8 weights
    criterion.check(f"8 Dirac-family weights ({len(r.graph.vertices)} in full orbit)",
                    len(fam.vertices) == 8)
    criterion.check("8 arrows", len(fam.arrows) == 8)
    criterion.check(f"exactly 2 order-2 arrows (found {order2(fam)})", order2(fam) == 2)
    criterion.check("matches_sk", r.matches_sk)
    criterion.check(f"runtime {secs:.3f}s < 30s", secs < 30)
    criterion.verdict()


@pytest.mark.criterion(3)
def test_criterion_3_k4_n3(criterion):
    r, secs = timed(analyze_orbit, 4, 3)
    g = r.graph
    criterion.check("16 weights", len(g.vertices) == 16)
    criterion.check("20 arrows", len(g.arrows) == 20)
    criterion.check(f"4 order-2 arrows (found {order2(g)})", order2(g) == 4)
    criterion.check("matches_sk", r.matches_sk)
    criterion.check(f"runtime {secs:.3f}s < 30s", secs < 30)
    criterion.verdict()


@pytest.mark.criterion(4)
def test_criterion_4_k2_n5(criterion):
    r, secs = timed(analyze_orbit, 2, 5)
    listed = {P(s) for s in ("[2,1|3/2,1/2]", "[2,-1|3/2,1/2]", "[1,-2|3/2,1/2]",
                             "[-1,-2|3/2,1/2]")}
    criterion.check("8 weights", len(r.graph.vertices) == 8)
    criterion.check("contains the 4 integer-block weights", listed <= set(r.graph.vertices))
    criterion.check("no full_relation pair crosses families", not r.crossing_pairs())
    criterion.check(f"runtime {secs:.3f}s < 5s", secs < 5)
    criterion.verdict()


@pytest.mark.criterion(5)
def test_criterion_5_bruhat_oracle(criterion):
    start = time.perf_counter()
    n2, bad2 = oracle_agreement(2)
    n3, bad3 = oracle_agreement(3)
    secs = time.perf_counter() - start
    criterion.check(f"B_2 {n2} pairs agree", n2 == 64 and not bad2)
    criterion.check(f"B_3 {n3} pairs agree", n3 == 2304 and not bad3)
    criterion.check(f"runtime {secs:.3f}s < 10s", secs < 10)
    criterion.verdict()


@pytest.mark.criterion(6)
def test_criterion_6_bgg_bruhat(criterion):
    count, bad = bgg_bruhat_agreement(3)
    criterion.check(f"B_3 delta orbit: {count} pairs, {len(bad)} disagreements",
                    count == 2304 and not bad)
    criterion.verdict()


@pytest.mark.criterion(7)
def test_criterion_7_grading_drop(criterion):
    (count, bad), secs = timed(grading_drop_check, ParabolicContext(2, 5))
    criterion.check(f"B_4 k=2: {count} Hasse arrows drop by a positive integer",
                    count > 0 and not bad)
    criterion.check(f"runtime {secs:.3f}s < 10s", secs < 10)
    criterion.verdict()


@pytest.mark.criterion(8)
def test_criterion_8_hasse_arrows_standard(criterion):
    for k, n in [(2, 7), (3, 7)]:
        checked, bad = hasse_lepowsky_check(analyze_orbit(k, n))
        criterion.check(f"({k},{n}): {checked} Hasse arrows with Verma maps, {len(bad)} zero",
                        checked > 0 and not bad)
    criterion.verdict()


@pytest.mark.criterion(9)
def test_criterion_9_property_suites(criterion):
    start = time.perf_counter()
    results = [r for m in range(1, 6) for r in property_suite(m, 10_000)]
    secs = time.perf_counter() - start
    failed = [r.name for r in results if not r.passed]
    criterion.check(f"{len(results)} suites x 10000 cases, ranks 1..5", not failed)
    criterion.check(f"runtime {secs:.3f}s < 10s", secs < 10)
    criterion.verdict()
