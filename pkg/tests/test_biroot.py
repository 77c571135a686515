from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, strategies as st

from conftest import words
from primsets.biroot import (biroots, biroots_bruteforce, conjecture2_scan,
                             repetitiveness_score, small_biroot_bound,
                             squarefree_bound_check, unique_small_biroot)
from primsets.errors import PreconditionError
from primsets.maximality import is_primitive_pair
from primsets.words import is_primitive

# full list for abcbac, checked against biroots_bruteforce below
ABCBAC = [("a", "bcbac"), ("c", "abcba"), ("ab", "cbac"), ("ac", "abcb"), ("abc", "bac")]


def test_abcbac():
    got = [b.pair for b in biroots("abcbac", 6)]
    assert ("ab", "cbac") in got and ("ac", "abcb") in got
    assert got == ABCBAC
    assert biroots_bruteforce("abcbac", 6) == ABCBAC


def test_single_small_biroot():
    assert [b.pair for b in biroots("abcaabcabc", 3)] == [("a", "bc")]
    b = unique_small_biroot("abcaabcabc")
    assert b.pair == ("a", "bc") and b.size == 3 and str(b) == "{a, bc}"
    assert b.factorization == ("a", "bc", "a", "a", "bc", "a", "bc")


def test_distinct_letters():
    for w in ("ab", "abc", "abcde", "abcdefg"):
        found = biroots(w, len(w))
        assert len(found) == len(w) - 1
        assert all(b.size == len(w) for b in found)


def test_unique_small_biroot_absent():
    assert unique_small_biroot("abcbac") is None
    assert unique_small_biroot("ab") is None


def test_bound_is_exact_integer_sqrt():
    assert small_biroot_bound(10) == 3
    assert small_biroot_bound(9) == 2
    assert small_biroot_bound(16) == 3
    assert small_biroot_bound(17) == 4
    for n in range(1, 200):
        s = small_biroot_bound(n)
        assert s * s < n <= (s + 1) * (s + 1)


def test_conjecture2_scan_examples():
    assert conjecture2_scan("abcaabcabc").count_below_half == 1
    assert conjecture2_scan("ab").count_below_half == 0
    assert conjecture2_scan("abcbac").count_below_half == 0


def test_squarefree_check():
    assert squarefree_bound_check("abcacbabcb")
    assert squarefree_bound_check("abc")
    with pytest.raises(PreconditionError):
        squarefree_bound_check("aa")


def test_repetitiveness_score():
    assert repetitiveness_score("abcaabcabc", 5) == Fraction(3, 10)
    assert repetitiveness_score("ab", 2) == 1
    assert repetitiveness_score("abcbac", 5) is None


def test_rejects_non_primitive():
    with pytest.raises(PreconditionError):
        biroots("abab", 4)
    with pytest.raises(PreconditionError):
        biroots("ab", 1)


@given(words("abc", 2, 8), st.integers(2, 8))
def test_enumeration_matches_oracle(w, k):
    assume(is_primitive(w))
    got = biroots(w, k)
    assert [b.pair for b in got] == biroots_bruteforce(w, k)
    for b in got:
        assert "".join(b.factorization) == w
        assert is_primitive_pair(*b.pair)
        assert set(b.factorization) == set(b.pair)
        assert b.size <= k


def test_small_biroot_uniqueness_exhaustive():
    for n in range(1, 13):
        for t in product("ab", repeat=n):
            w = "".join(t)
            if is_primitive(w):
                s = small_biroot_bound(n)
                assert s < 2 or len(biroots(w, s)) <= 1
