from itertools import product

import pytest
from hypothesis import assume, given, strategies as st

from conftest import words
from primsets.errors import PreconditionError
from primsets.words import (commute, count_factorizations, has_square,
                            internal_occurrences, is_primitive, ls_decompose,
                            parse_over, primitive_root, word_set)


def brute_primitive(w):
    n = len(w)
    return not any(n % d == 0 and w[:d] * (n // d) == w for d in range(1, n))


@pytest.mark.parametrize("w,expected", [("ab", True), ("abab", False), ("abaab", True), ("a", True)])
def test_is_primitive_examples(w, expected):
    assert is_primitive(w) is expected
    assert brute_primitive(w) is expected


def test_is_primitive_matches_brute_force_exhaustively():
    for n in range(1, 9):
        for t in product("ab", repeat=n):
            w = "".join(t)
            assert is_primitive(w) == brute_primitive(w), w


@pytest.mark.parametrize("w,root", [("abab", ("ab", 2)), ("a", ("a", 1)), ("aaaaaa", ("a", 6))])
def test_primitive_root_examples(w, root):
    assert primitive_root(w) == root


def test_empty_word_rejected():
    with pytest.raises(PreconditionError):
        is_primitive("")
    with pytest.raises(PreconditionError):
        primitive_root("")


def test_commute_examples():
    assert commute("aa", "aaa")
    assert not commute("ab", "ba")
    assert commute("", "abc")


@given(words())
def test_root_reconstructs(w):
    r, n = primitive_root(w)
    assert r * n == w
    assert is_primitive(r)
    assert is_primitive(w) == (n == 1)


@given(words(max_size=5), words(max_size=5))
def test_commute_iff_same_root(x, y):
    assert commute(x, y) == (primitive_root(x)[0] == primitive_root(y)[0])


@pytest.mark.parametrize("t,u,v,expected", [
    ("ab", "a", "ba", ("a", "b", 1)),
    ("abab", "a", "baba", ("a", "b", 2)),
    ("ab", "aba", "ba", ("a", "b", 1)),
])
def test_ls_decompose_examples(t, u, v, expected):
    d = ls_decompose(t, u, v)
    assert (d.p, d.q, d.m) == expected


@given(words("ab", 1, 3), words("ab", 1, 3), st.integers(1, 3), st.integers(0, 3))
def test_ls_decompose_solves_equation(p, q, m, k):
    assume(is_primitive(p + q))
    t, u, v = (p + q) * m, (p + q) * k + p, (q + p) * m
    assume(t != v)
    d = ls_decompose(t, u, v)
    assert (d.p + d.q) * d.m == t
    assert (d.q + d.p) * d.m == v
    assert is_primitive(d.p + d.q)
    assert any(d.reconstruct(j)[1] == u for j in range(len(u) + 1))


def test_ls_decompose_rejects_bad_input():
    with pytest.raises(PreconditionError):
        ls_decompose("ab", "b", "ba")
    with pytest.raises(PreconditionError):
        ls_decompose("ab", "ab", "ab")


def test_parse_over_examples():
    assert parse_over("abcabc", {"a", "bc"}) == ("a", "bc", "a", "bc")
    assert parse_over("abcaabcabc", {"a", "bc"}) == ("a", "bc", "a", "a", "bc", "a", "bc")
    assert parse_over("ab", {"ba"}) is None
    assert parse_over("", {"a"}) == ()


def test_parse_prefers_small_blocks():
    assert parse_over("aa", {"a", "aa"}) == ("a", "a")


def test_count_factorizations_examples():
    assert count_factorizations("acba", {"a", "ab", "abc", "bca", "acb", "cba"}) == 2
    assert count_factorizations("a", {"a"}) == 1
    assert count_factorizations("aaaa", {"a", "aa"}) == 5


@given(words(max_size=8), st.sets(words(max_size=3), min_size=1, max_size=4))
def test_parse_and_count_agree(w, z):
    f = parse_over(w, z)
    n = count_factorizations(w, z)
    assert (f is not None) == (n >= 1)
    if f is not None:
        assert "".join(f) == w
        assert all(b in z for b in f)


def test_word_set_canonical_and_validated():
    assert word_set(["ba", "b", "ab", "b"]) == ("b", "ab", "ba")
    with pytest.raises(PreconditionError):
        word_set(["a", ""])


def test_has_square_and_internal_occurrences():
    assert has_square("abcacbabcb") is None
    assert has_square("abcbc") == "bcbc"
    assert internal_occurrences("ab", "abab") == []
    assert internal_occurrences("ab", "xabx") == [1]
