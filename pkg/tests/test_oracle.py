import random

import pytest
from hypothesis import given, settings, strategies as st

from ribbonyd import ring as R
from ribbonyd.data import GROUPS, builtin, group_class
from ribbonyd.evaluation import framed_invariant
from ribbonyd.oracle import (MAX_CROSSINGS, OracleLimit, a_to_v, count_meridian_homs, jones_from_bracket_a,
                             kauffman_bracket, kauffman_bracket_a)
from ribbonyd.tangle import BraidWord, braid_closure

S3 = GROUPS["s3"]
TRANS = group_class(S3, "transpositions")


def A(e, c=1):
    return R.LaurentHalf({2 * e: c})


def v(e, c=1):
    return R.v_power(2 * e, c)


def b(word, n=None):
    return BraidWord.parse(word, n)


def test_bracket_of_unknot():
    # one strand, no crossings: a single loop
    assert kauffman_bracket_a(b("", 1)) == A(2, -1) + A(-2, -1)
    # sigma_1 closed on two strands is also an unknot, up to framing
    assert jones_from_bracket_a(b("1")) == A(2, -1) + A(-2, -1)


def test_bracket_of_right_trefoil():
    # standard value <sigma_1^3> = -A^5 - A^-3 + A^-7, times the loop factor for the closure
    delta = A(2, -1) + A(-2, -1)
    assert kauffman_bracket_a(b("1 1 1")) == (A(-7) - A(-3) - A(5)) * delta


def test_a_to_v_substitution():
    assert a_to_v(A(2)) == v(1, -1)    # A^2 = -v
    assert a_to_v(A(-4)) == v(-2)      # t = A^-4 = v^-2
    assert a_to_v(A(4, 3)) == v(2, 3)
    with pytest.raises(ValueError):
        a_to_v(A(1))


def test_jones_values():
    assert kauffman_bracket(b("", 1)) == v(1) + v(-1)
    assert kauffman_bracket(b("1 1 1")) == v(-9, -1) + v(-5) + v(-3) + v(-1)
    assert kauffman_bracket(b("-1 -1 -1")) == v(1) + v(3) + v(5) + v(9, -1)
    assert kauffman_bracket(b("1 1")) == v(-6) + v(-4) + v(-2) + v(0)
    assert kauffman_bracket(b("1 -1", 2)) == (v(1) + v(-1)) ** 2


def test_figure_eight_is_amphichiral():
    f8 = kauffman_bracket(b("1 -2 1 -2"))
    assert f8 == f8.mirror()
    assert f8 == v(-5) + v(5)


@settings(max_examples=30)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(
    st.sampled_from([i * s for i in range(1, n) for s in (1, -1)]), max_size=7))))
def test_mirror_relation(case):
    n, letters = case
    word = BraidWord(n, tuple(letters))
    mirror = BraidWord(n, tuple(-x for x in letters))
    assert kauffman_bracket(mirror) == kauffman_bracket(word).mirror()


def test_crossing_limit():
    with pytest.raises(OracleLimit):
        kauffman_bracket(BraidWord(2, (1,) * (MAX_CROSSINGS + 1)))
    with pytest.raises(OracleLimit):
        count_meridian_homs(BraidWord(14, ()), S3, list(range(6)))


@pytest.mark.parametrize("word,n,count", [("", 1, 3), ("1 1 1", None, 9), ("1 -2 1 -2", None, 3),
                                          ("", 2, 9), ("1 1", None, 3)])
def test_fox_colouring_counts(word, n, count):
    # colourings by transpositions are Fox 3-colourings: 3 * 3^(nullity)
    assert count_meridian_homs(b(word, n), S3, TRANS) == count


def test_trivial_group_counts_one():
    g = GROUPS["trivial"]
    assert count_meridian_homs(b("1 -2 1 -2"), g, [0]) == 1


def test_abelian_group_counts_components():
    # every meridian lands in a single conjugacy class of an abelian group: one colour per component
    g = GROUPS["z3"]
    for word, n, comps in [("1 1 1", None, 1), ("1 1", None, 2), ("", 3, 3)]:
        assert count_meridian_homs(b(word, n), g, [1]) == 1
        assert count_meridian_homs(b(word, n), g, [1, 2]) == 2 ** comps


def test_non_closed_subset_rejected():
    with pytest.raises(ValueError):
        count_meridian_homs(b("1"), S3, TRANS[:1])


@pytest.mark.parametrize("a,c", [("1 1 1", "1 1 1 2"), ("1 1 1", "1 1 1 -2"), ("1 -2 1 -2", "-2 1 -2 1"),
                                 ("1 2 1", "2 1 2"), ("1 1 1 2", "2 1 1 1 -2 2")])
def test_counts_invariant_under_rewrites(a, c):
    # stabilization, conjugation and braid relations
    assert count_meridian_homs(b(a), S3, TRANS) == count_meridian_homs(b(c), S3, TRANS)


def _random_braid(rng, n, length):
    return BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(length)))


def test_engine_agrees_on_random_braids():
    rng = random.Random(20261018)
    jones, grp = builtin("jones"), builtin("s3-transpositions")
    for _ in range(20):
        word = _random_braid(rng, rng.randint(2, 4), rng.randint(0, 8))
        t = braid_closure(word)
        assert framed_invariant(t, jones, normalize=True) == kauffman_bracket(word), str(word)
        assert framed_invariant(t, grp) == count_meridian_homs(word, S3, TRANS), str(word)
