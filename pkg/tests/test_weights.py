import pytest
from hypothesis import given, strategies as st

from gvmhom.weights import (
    HalfInt, ParabolicContext, Root, Weight, WeightParseError, delta, dominant_rep,
    grading_eval, is_p_dominant_integral_shifted, is_singular, pairing, parse_weight,
    positive_roots, reflect, simple_roots,
)

P = parse_weight


def test_halfint_arithmetic():
    a, b = HalfInt.of("3/2"), HalfInt.of(2)
    assert a + b == HalfInt.of("7/2")
    assert a - b == HalfInt.of("-1/2")
    assert -a == HalfInt(-3)
    assert not a.is_integer() and b.is_integer()
    assert b.is_positive_integer()
    assert not HalfInt(0).is_positive_integer()
    assert not HalfInt(-4).is_positive_integer()
    assert str(HalfInt(-3)) == "-3/2" and str(HalfInt(4)) == "2"
    with pytest.raises(ValueError):
        int(a)


def test_positive_root_count():
    for m in range(1, 8):
        roots = list(positive_roots(m))
        assert len(roots) == len(set(roots)) == m * m


@pytest.mark.parametrize("lam, beta, expected", [
    ("[5/2,3/2,1/2]", Root.diff(1, 2), 1),
    ("[5/2,3/2,1/2]", Root.short(3), 1),
    ("[3/2,1/2]", Root.sum(1, 2), 2),
])
def test_pairing_examples(lam, beta, expected):
    assert pairing(P(lam), beta) == HalfInt.of(expected)


def test_pairing_is_coroot_normalised():
    # lam(H_b) = 2 (lam, b) / (b, b) computed from the root vector
    lam = P("[7/2,-5/2|3,-1,2]")
    for beta in positive_roots(5):
        v = beta.vector(5)
        dot2 = sum(t * c for t, c in zip(lam.twice, v))  # twice (lam, b)
        norm = sum(c * c for c in v)
        assert pairing(lam, beta).twice * norm == 2 * dot2


def test_reflect_examples():
    assert reflect(P("[3/2,-1/2|3,2,1]"), Root.sum(1, 2)) == P("[1/2,-3/2|3,2,1]")
    assert reflect(P("[1/2]"), Root.short(1)) == P("[-1/2]")
    assert reflect(P("[3/2,1/2|2]"), Root.diff(1, 2)) == P("[1/2,3/2|2]")


def test_reflect_matches_formula():
    lam = P("[5/2,-3/2|4,1,-2]")
    for beta in positive_roots(5):
        v = beta.vector(5)
        p = pairing(lam, beta).twice
        expected = tuple(t - p * c for t, c in zip(lam.twice, v))
        assert reflect(lam, beta).twice == expected


def test_delta():
    assert delta(ParabolicContext(1, 3)) == P("[3/2|1/2]")
    assert delta(ParabolicContext(2, 7)) == P("[9/2,7/2|5/2,3/2,1/2]")
    for k, n in [(1, 3), (2, 5), (3, 9), (4, 3)]:
        ctx = ParabolicContext(k, n)
        d = delta(ctx)
        assert all(pairing(d, a) == HalfInt(2) for a in simple_roots(ctx.m))


@pytest.mark.parametrize("k, n", [(k, n) for k in range(1, 7) for n in (3, 5, 7, 9) if k + (n - 1) // 2 <= 7])
def test_delta_is_regular_and_p_dominant(k, n):
    ctx = ParabolicContext(k, n)
    assert is_p_dominant_integral_shifted(delta(ctx), ctx)
    assert not is_singular(delta(ctx))


def test_grading_eval():
    assert grading_eval(P("[3/2,1/2|3,2,1]")) == HalfInt(4)
    upper, lower = P("[5/2,1/2|9/2,7/2,3/2]"), P("[5/2,-1/2|9/2,7/2,3/2]")
    assert grading_eval(upper) - grading_eval(lower) == HalfInt(2)
    assert grading_eval(lower) - grading_eval(P("[1/2,-5/2|9/2,7/2,3/2]")) == HalfInt(8)


def test_p_dominant():
    c27 = ParabolicContext(2, 7)
    assert is_p_dominant_integral_shifted(P("[3/2,1/2|3,2,1]"), c27)
    assert not is_p_dominant_integral_shifted(P("[1/2,3/2|3,2,1]"), c27)
    assert is_p_dominant_integral_shifted(P("[2,1|3/2,1/2]"), ParabolicContext(2, 5))
    assert not is_p_dominant_integral_shifted(P("[3/2,1|3,2,1]"), c27)  # non-integral difference
    assert not is_p_dominant_integral_shifted(P("[3/2,1/2|3,2,1/2]"), c27)  # mixed second block
    assert not is_p_dominant_integral_shifted(P("[3/2,1/2|3,2,0]"), c27)  # last b not positive
    with pytest.raises(ValueError):
        is_p_dominant_integral_shifted(P("[1/2|1]"), c27)


def test_dominant_rep():
    assert dominant_rep(P("[1/2,-3/2|3,2,1]")).twice == P("[3,2|3/2,1,1/2]").twice
    assert dominant_rep(P("[3/2,1/2|3,2,1]")).twice == (6, 4, 3, 2, 1)
    d = P("[3,2|3/2,1,1/2]")
    assert dominant_rep(d) == d


def test_dominant_rep_is_on_the_orbit():
    from _oracles import act, group
    lam = P("[3/2,1/2|3,2,1]")
    tilde = dominant_rep(lam).twice
    assert any(act(w, tilde) == lam.twice for w in group(5))


def test_singular():
    assert not is_singular(P("[3,2,3/2,1,1/2]"))
    assert is_singular(P("[2,1,1]"))
    assert is_singular(P("[1,0]"))
    assert is_singular(P("[2,-2]"))


@pytest.mark.parametrize("text", [
    "[3/2,-1/2|3,2,1]", "[1/2|1]", "[5/2,3/2,1/2|2,1]", "[-1,-2|3/2,1/2]", "[3,2,1]", "[1/2|]",
])
def test_parse_round_trip(text):
    assert str(P(text)) == text


def test_parse_split_and_errors():
    assert P("[3/2,-1/2|3,2,1]").split == 2
    assert P(" [ 3/2 , -1/2 | 3 , 2 , 1 ] ") == P("[3/2,-1/2|3,2,1]")
    for bad in ["[1/3,1]", "3/2,1", "[a|1]", "[1|2|3]", "[1,,2]"]:
        with pytest.raises(WeightParseError):
            P(bad)


def test_context_validation():
    assert ParabolicContext(2, 7).m == 5
    for k, n in [(1, 4), (0, 3), (2, 1)]:
        with pytest.raises(ValueError):
            ParabolicContext(k, n)
    assert [str(a) for a in ParabolicContext(2, 5).levi_simple_roots] == ["e1-e2", "e3-e4", "e4"]


weights = st.integers(1, 6).flatmap(
    lambda m: st.builds(
        Weight,
        st.tuples(*[st.integers(-15, 15)] * m),
        st.integers(0, m),
    )
)


@given(weights, st.data())
def test_reflection_properties(lam, data):
    beta = data.draw(st.sampled_from(list(positive_roots(lam.rank))))
    r = reflect(lam, beta)
    assert reflect(r, beta) == lam
    assert sorted(map(abs, r.twice)) == sorted(map(abs, lam.twice))
    assert pairing(r, beta) == -pairing(lam, beta)
    assert (r == lam) == (pairing(lam, beta).twice == 0)
    assert dominant_rep(r) == dominant_rep(lam)


@given(weights)
def test_print_parse_round_trip(lam):
    assert P(str(lam)) == lam


@given(weights)
def test_dominant_rep_idempotent(lam):
    d = dominant_rep(lam)
    assert dominant_rep(d) == d
    assert all(pairing(d, a).twice >= 0 for a in simple_roots(lam.rank))
