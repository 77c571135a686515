from itertools import combinations, product

import pytest
from hypothesis import assume, given, strategies as st

from conftest import word_sets, words
from primsets.codes import classify_fix, is_code
from primsets.errors import PreconditionError
from primsets.maximality import (RANK1, RANK2, canonical_pair, check_no_internal_xy,
                                 circular_witness, covering_pairs, internal_xy_occurrence,
                                 is_circular_up_to, is_primitive_pair,
                                 is_primitive_pair_bruteforce, is_primitive_set,
                                 is_pure_up_to, pair_root, primitive_roots_of_set,
                                 purity_witness)
from primsets.words import commute, in_star, is_primitive, word_set

SMALL_PRIMITIVE_PAIRS = [
    canonical_pair(x, y)
    for x, y in combinations(["".join(t) for n in range(1, 4) for t in product("abc", repeat=n)], 2)
    if is_primitive_pair(x, y)
]


@pytest.mark.parametrize("x,y,kind,root", [
    ("abca", "bc", RANK2, ("a", "bc")),
    ("abcabc", "bcabca", RANK2, ("a", "bc")),
    ("aa", "aaa", RANK1, ("a",)),
    ("ab", "ba", RANK2, ("a", "b")),
])
def test_pair_root_examples(x, y, kind, root):
    r = pair_root(x, y)
    assert r.kind == kind
    assert r.words == root
    for w, f in zip((x, y), r.factorizations):
        assert "".join(f) == w


def test_pair_root_rejects_degenerate():
    with pytest.raises(PreconditionError):
        pair_root("ab", "ab")
    with pytest.raises(PreconditionError):
        pair_root("", "ab")


@pytest.mark.parametrize("x,y,expected", [("a", "bc", True), ("abca", "bc", False), ("abcb", "ac", True), ("ab", "cbac", True)])
def test_is_primitive_pair_examples(x, y, expected):
    assert is_primitive_pair(x, y) is expected
    assert is_primitive_pair_bruteforce(x, y) is expected


@given(words("ab", 1, 5), words("ab", 1, 5))
def test_pair_root_matches_covering_pair_oracle(x, y):
    assume(x != y and not commute(x, y))
    prim = [p for p in covering_pairs(x, y) if is_primitive_pair_bruteforce(*p)]
    assert prim == [pair_root(x, y).root_pair]


@given(words("abc", 1, 5), words("abc", 1, 5))
def test_pair_root_invariants(x, y):
    assume(x != y)
    r = pair_root(x, y)
    assert (r.kind == RANK1) == commute(x, y)
    assert all(in_star(w, r.words) for w in (x, y))
    if r.kind == RANK2:
        assert is_primitive_pair(*r.root_pair)
        assert pair_root(*r.root_pair).root_pair == r.root_pair
    else:
        assert is_primitive(r.root1)


@pytest.mark.parametrize("x,maximal,dom", [
    (("a", "cbd", "dbd"), True, None),
    (("a", "cbd", "dcb"), False, ("a", "d", "cb")),
    (("ab", "cb", "cd"), True, None),
    (("abaab",), True, None),
    (("abab",), False, ("ab",)),
])
def test_is_primitive_set_examples(x, maximal, dom):
    cert = is_primitive_set(x)
    assert cert.is_maximal is maximal
    assert cert.dominating_set == dom


@given(word_sets("abc", 3, 4))
def test_certificate_invariants(x):
    x = word_set(x)
    cert = is_primitive_set(x)
    if cert.is_maximal:
        assert cert.dominating_set is None
        assert classify_fix(x).is_bifix
        assert all(is_primitive(w) for w in x)
        for a, b in combinations(x, 2):
            assert is_primitive_pair(a, b)
        assert is_pure_up_to(x, 8)
    else:
        z = cert.dominating_set
        assert len(z) <= len(x)
        assert all(in_star(w, z) for w in x)
        assert not all(in_star(w, x) for w in z)


def test_primitive_roots_of_set_examples():
    roots = primitive_roots_of_set(["abcbab", "abcdcbab", "abcdcdcbab"])
    assert ("ab", "cb", "cd") in roots and ("dc", "abc", "bab") in roots
    assert primitive_roots_of_set(["abab", "ababab"]) == [("ab",)]


@given(words("abc", 1, 4), words("abc", 1, 4))
def test_rank2_sets_have_one_root(x, y):
    assume(x != y and not commute(x, y))
    assert primitive_roots_of_set([x, y]) == [pair_root(x, y).root_pair]


def test_internal_xy_examples():
    assert check_no_internal_xy("a", "bc")
    occ = internal_xy_occurrence("abcabca", "bcaabcabc")
    assert (occ.triple, occ.pattern) == ("yxx", "xy")
    assert not check_no_internal_xy("abcabca", "bcaabcabc")
    # the converse fails: no internal occurrence, yet not a primitive pair
    assert check_no_internal_xy("abcaa", "bc")
    assert not is_primitive_pair("abcaa", "bc")


@pytest.mark.parametrize("pair", SMALL_PRIMITIVE_PAIRS[::7])
def test_no_internal_xy_and_circularity_on_small_pairs(pair):
    assert check_no_internal_xy(*pair)
    assert is_circular_up_to(pair, 3 * (len(pair[0]) + len(pair[1])))


@given(st.sampled_from(SMALL_PRIMITIVE_PAIRS), st.lists(st.integers(0, 1), min_size=2, max_size=4),
       st.lists(st.integers(0, 1), max_size=3), st.lists(st.integers(0, 1), max_size=3))
def test_occurrences_are_aligned(pair, mid, left, right):
    # any occurrence of a primitive w in X^2 X^* inside a word of X^* is aligned
    w = "".join(pair[i] for i in mid)
    assume(is_primitive(w))
    m = "".join(pair[i] for i in left) + w + "".join(pair[i] for i in right)
    start = m.find(w)
    while start != -1:
        if in_star(m[:start], pair) or in_star(m[start + len(w):], pair):
            assert in_star(m[:start], pair) and in_star(m[start + len(w):], pair)
        start = m.find(w, start + 1)


def test_circular_examples():
    assert is_circular_up_to(("a", "bc"), 12)
    assert circular_witness(("ab", "ba"), 4) == ("a", "b")
    assert is_circular_up_to(("aab",), 12)


def test_purity_examples():
    assert is_pure_up_to(("a", "bc"), 12)
    assert purity_witness(("aa",), 6) == "a"
    # {ab, ba}^* holds no proper power of a word outside it up to length 8
    assert purity_witness(("ab", "ba"), 8) is None


@given(word_sets("ab", 3, 4))
def test_codes_and_pairs(x):
    x = word_set(x)
    if len(x) == 2 and is_primitive_pair(*x):
        assert is_code(x) and classify_fix(x).is_bifix
