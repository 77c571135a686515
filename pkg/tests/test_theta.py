import pytest
from hypothesis import assume, given, strategies as st

from conftest import words
from primsets.errors import PreconditionError
from primsets.maximality import is_primitive_pair, pair_root
from primsets.theta import (ANTIMORPHIC, MIRROR, MORPHIC, SELF, ThetaMap, apply,
                            check_prop16, check_prop17, check_prop18_19,
                            check_theorem20, involutions, is_theta_invariant,
                            is_theta_palindrome, is_theta_primitive,
                            theta_power_tags, theta_root)

SWAP = ThetaMap.parse("a:b,b:a,c:c", MORPHIC)
MIRROR_ABC = ThetaMap.parse("a:a,b:b,c:c", ANTIMORPHIC)
ALL = involutions("abc", MORPHIC) + involutions("abc", ANTIMORPHIC)


def test_construction():
    with pytest.raises(PreconditionError):
        ThetaMap.parse("a:a,b:b", MORPHIC)
    with pytest.raises(PreconditionError):
        ThetaMap.parse("a:b,b:c,c:a", MORPHIC)
    assert SWAP.render() == "a:b,b:a,c:c"
    assert len(involutions("abc", MORPHIC)) == 3
    assert len(involutions("abc", ANTIMORPHIC)) == 4


def test_apply_examples():
    assert apply(SWAP, "abc") == "bac"
    assert apply(MIRROR_ABC, "abb") == "bba"
    assert apply(SWAP, "") == ""
    assert apply(MIRROR_ABC, "") == ""


def test_palindromes():
    assert is_theta_palindrome(MIRROR_ABC, "bcb")
    assert not is_theta_palindrome(MIRROR_ABC, "ab")
    assert is_theta_palindrome(MIRROR_ABC, "a")
    with pytest.raises(PreconditionError):
        is_theta_palindrome(SWAP, "a")


def test_theta_root_examples():
    r = theta_root(SWAP, "abcabcabc")
    assert r.root == "abc" and r.tags == (SELF, SELF, SELF)
    r = theta_root(MIRROR_ABC, "abbaabba")
    assert r.root == "ab" and r.tags == (SELF, MIRROR, SELF, MIRROR)
    assert theta_root(SWAP, "a").root == "a"
    assert theta_root(SWAP, "abcbacabc").tags == (SELF, MIRROR, SELF)


def test_theta_primitive_examples():
    assert is_theta_primitive(MIRROR_ABC, "abbaabbacbc")
    assert not is_theta_primitive(SWAP, "abcabcabc")
    assert not is_theta_primitive(SWAP, "ab")


def test_invariance_examples():
    assert is_theta_invariant(SWAP, {"abc", apply(SWAP, "abc")})
    assert not is_theta_invariant(SWAP, {"abc"})


def test_reversal_pair_with_palindromic_root():
    # abcbbcb is not a palindrome, so this pair is not invariant under
    # reversal, yet its root {a, bcb} consists of palindromes.
    assert not is_theta_invariant(MIRROR_ABC, {"abcbbcb", "abcba"})
    assert pair_root("abcbbcb", "abcba").root_pair == ("a", "bcb")
    assert all(is_theta_palindrome(MIRROR_ABC, w) for w in ("a", "bcb"))
    with pytest.raises(PreconditionError):
        check_prop16(MIRROR_ABC, "abcbbcb", "abcba")
    # the symmetric variant abcbbcba is invariant and has the same root
    assert is_theta_invariant(MIRROR_ABC, {"abcbbcba", "abcba"})
    assert check_prop16(MIRROR_ABC, "abcbbcba", "abcba")
    assert pair_root("abcbbcba", "abcba").root_pair == ("a", "bcb")


def test_theta_primitive_word_with_non_primitive_pair():
    w = "abbaabbacbc"
    assert check_prop16(MIRROR_ABC, w, apply(MIRROR_ABC, w))
    res = check_prop18_19(MIRROR_ABC, w)
    assert res.theta_primitive and res.pair_primitive is False
    assert set(res.palindromic_root) == {"abba", "cbc"}
    assert check_theorem20(MIRROR_ABC, w)


def test_antimorphic_record_examples():
    res = check_prop18_19(MIRROR_ABC, "ab")
    assert (res.theta_primitive, res.pair_primitive, res.palindromic_root) == (True, False, ("a", "b"))
    res = check_prop18_19(MIRROR_ABC, "abba")
    assert not res.theta_primitive and res.palindromic_root is None


def test_invariant_replacement_pair():
    # t θ(t) and θ(t) t for t = abc under the swap
    assert is_theta_invariant(SWAP, {"abcbac", "bacabc"})
    assert pair_root("abcbac", "bacabc").root_pair == ("abc", "bac")
    assert check_prop16(SWAP, "abcbac", "bacabc")


def test_morphic_biconditional_examples():
    assert is_theta_primitive(SWAP, "abc") and is_primitive_pair("abc", "bac")
    assert not is_theta_primitive(SWAP, "abcbac") and not is_primitive_pair("abcbac", "bacabc")
    assert is_theta_primitive(SWAP, "a") and is_primitive_pair("a", "b")
    for w in ("abc", "abcbac", "a"):
        assert check_prop17(SWAP, w)


def test_no_internal_occurrence_examples():
    assert check_theorem20(SWAP, "abc")
    with pytest.raises(PreconditionError):
        check_theorem20(SWAP, "abcbac")


@given(st.sampled_from(ALL), words("abc", 0, 8))
def test_apply_is_involution(theta, w):
    assert apply(theta, apply(theta, w)) == w


@given(st.sampled_from(ALL), words("abc", 1, 9))
def test_theta_root_uniqueness(theta, w):
    r = theta_root(theta, w)
    roots = [w[:d] for d in range(1, len(w) + 1)
             if len(w) % d == 0 and theta_power_tags(theta, w, w[:d]) is not None]
    prim = [t for t in roots if is_theta_primitive(theta, t)]
    assert prim == [r.root] == roots[:1]
    assert is_theta_primitive(theta, r.root)


@given(st.sampled_from(involutions("abc", ANTIMORPHIC)), words("abc", 1, 8))
def test_antimorphic_implication(theta, w):
    res = check_prop18_19(theta, w)  # raises on a violation
    if res.pair_primitive:
        assert res.theta_primitive


@given(st.sampled_from(ALL), words("abc", 1, 6))
def test_root_invariance_on_orbit_pairs(theta, x):
    y = apply(theta, x)
    assume(x + y != y + x)
    assert check_prop16(theta, x, y)


@given(st.sampled_from(involutions("abc", ANTIMORPHIC)), words("abc", 1, 3), words("abc", 0, 3),
       st.sampled_from(["", "a", "b", "c"]), st.sampled_from(["", "a", "b", "c"]))
def test_root_invariance_on_palindrome_pairs(theta, s, t, m, n):
    # s m θ(s) is a θ-palindrome whenever m is
    x, y = s + m + apply(theta, s), t + n + apply(theta, t)
    assume(y and is_theta_palindrome(theta, x) and is_theta_palindrome(theta, y))
    assume(x != y and x + y != y + x)
    assert check_prop16(theta, x, y)


@given(st.sampled_from(ALL), words("abc", 1, 6))
def test_no_internal_occurrence(theta, x):
    assume(is_theta_primitive(theta, x))
    assert check_theorem20(theta, x)
