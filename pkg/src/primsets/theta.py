"""Involutive morphisms and antimorphisms, and pseudo-primitivity.

``w`` is a theta-power of ``t`` when ``w`` is in ``t{t, θ(t)}^*``: it
starts with ``t`` and continues with copies of ``t`` and ``θ(t)``.  (A
literal ``t{θ(t)}^*`` reading would make ``abcabcabc`` under ``a<->b``
theta-primitive, contradicting the standard case whose theta-root is
``abc``.)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .errors import InvariantViolation, PreconditionError
from .maximality import RANK2, canonical_pair, is_primitive_pair, pair_root
from .words import Word, commute, in_star, internal_occurrences, is_primitive

MORPHIC = "morphic"
ANTIMORPHIC = "antimorphic"
SELF = "Self"
MIRROR = "Mirror"


@dataclass(frozen=True)
class ThetaMap:
    letter_map: tuple  # sorted (letter, image) pairs
    kind: str

    def __post_init__(self):
        if self.kind not in (MORPHIC, ANTIMORPHIC):
            raise PreconditionError(f"kind must be {MORPHIC!r} or {ANTIMORPHIC!r}")
        m = dict(self.letter_map)
        for a, b in m.items():
            if len(a) != 1 or len(b) != 1:
                raise PreconditionError("theta maps letters to letters")
            if m.get(b) != a:
                raise PreconditionError(f"not an involution: {a} -> {b} -> {m.get(b)}")
        if self.kind == MORPHIC and all(a == b for a, b in m.items()):
            raise PreconditionError("the identity morphism is excluded")
        object.__setattr__(self, "_table", str.maketrans(m))

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, str], kind: str) -> "ThetaMap":
        return cls(tuple(sorted(mapping.items())), kind)

    @classmethod
    def parse(cls, spec: str, kind: str) -> "ThetaMap":
        """Parse ``"a:b,b:a,c:c"``."""
        mapping = {}
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            try:
                a, b = item.split(":")
            except ValueError:
                raise PreconditionError(f"bad theta entry {item!r}") from None
            mapping[a] = b
        return cls.from_mapping(mapping, kind)

    @property
    def alphabet(self) -> str:
        return "".join(a for a, _ in self.letter_map)

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def render(self) -> str:
        return ",".join(f"{a}:{b}" for a, b in self.letter_map)


def apply(theta: ThetaMap, w: Word) -> Word:
    bad = set(w) - set(theta.alphabet)
    if bad:
        raise PreconditionError(f"symbols {''.join(sorted(bad))} are outside theta's alphabet")
    img = w.translate(theta._table)
    return img[::-1] if theta.kind == ANTIMORPHIC else img


def is_theta_palindrome(theta: ThetaMap, w: Word) -> bool:
    if theta.kind != ANTIMORPHIC:
        raise PreconditionError("theta-palindromes are defined for antimorphisms")
    return apply(theta, w) == w


@dataclass(frozen=True)
class ThetaRootResult:
    root: Word
    tags: tuple  # SELF / MIRROR per block; the first is always SELF


def theta_power_tags(theta: ThetaMap, w: Word, t: Word) -> Optional[tuple]:
    """Block tags if ``w`` is in ``t{t, θ(t)}^*``, else None."""
    d = len(t)
    if not t or len(w) % d or not w.startswith(t):
        return None
    mirror = apply(theta, t)
    tags = []
    for i in range(0, len(w), d):
        block = w[i:i + d]
        if block == t:
            tags.append(SELF)
        elif block == mirror:
            tags.append(MIRROR)
        else:
            return None
    return tuple(tags)


def theta_root(theta: ThetaMap, w: Word) -> ThetaRootResult:
    """Shortest ``t`` (a prefix whose length divides ``|w|``) with ``w`` a theta-power of ``t``."""
    if not w:
        raise PreconditionError("theta-root of the empty word")
    for d in range(1, len(w) + 1):
        if len(w) % d == 0:
            tags = theta_power_tags(theta, w, w[:d])
            if tags is not None:
                return ThetaRootResult(w[:d], tags)
    raise AssertionError("w is a theta-power of itself")  # pragma: no cover


def is_theta_primitive(theta: ThetaMap, w: Word) -> bool:
    return theta_root(theta, w).root == w


def is_theta_invariant(theta: ThetaMap, words: Iterable[Word]) -> bool:
    s = set(words)
    return {apply(theta, w) for w in s} == s


def _root_words(x: Word, y: Word) -> tuple:
    return pair_root(x, y).words


def check_prop16(theta: ThetaMap, x: Word, y: Word) -> bool:
    """The root of a theta-invariant non-commuting pair is theta-invariant."""
    if x == y or commute(x, y):
        raise PreconditionError("x and y must be distinct and must not commute")
    if not is_theta_invariant(theta, (x, y)):
        raise PreconditionError(f"{{{x}, {y}}} is not theta-invariant")
    return is_theta_invariant(theta, _root_words(x, y))


def check_prop17(theta: ThetaMap, w: Word) -> bool:
    """For a morphic theta: ``w`` is theta-primitive iff ``{w, θ(w)}`` is a primitive pair.

    When ``w = θ(w)`` the pair degenerates to a single word and the right
    side becomes ordinary primitivity of ``w``.
    """
    if theta.kind != MORPHIC:
        raise PreconditionError("this check is for involutive morphisms")
    if not w:
        raise PreconditionError("w must be nonempty")
    left = is_theta_primitive(theta, w)
    tw = apply(theta, w)
    right = is_primitive(w) if tw == w else is_primitive_pair(w, tw)
    return left == right


@dataclass(frozen=True)
class AntimorphicCheck:
    theta_primitive: bool
    pair_primitive: Optional[bool]
    palindromic_root: Optional[tuple]


def check_prop18_19(theta: ThetaMap, w: Word) -> AntimorphicCheck:
    """For an antimorphic theta: a primitive pair ``{w, θ(w)}`` forces ``w``
    theta-primitive; a theta-primitive ``w`` whose pair is not primitive
    factors over a pair of theta-palindromes (the root).  Raises
    InvariantViolation if either fails."""
    if theta.kind != ANTIMORPHIC:
        raise PreconditionError("this check is for involutive antimorphisms")
    if not w:
        raise PreconditionError("w must be nonempty")
    tp = is_theta_primitive(theta, w)
    tw = apply(theta, w)
    if tw == w:
        return AntimorphicCheck(tp, None, None)
    pp = is_primitive_pair(w, tw)
    if pp and not tp:
        raise InvariantViolation(f"{{{w}, {tw}}} is a primitive pair but {w} is not theta-primitive")
    if not tp or pp:
        return AntimorphicCheck(tp, pp, None)
    root = pair_root(w, tw)
    if root.kind != RANK2:
        raise InvariantViolation(f"{w} is theta-primitive but commutes with its image")
    p, q = root.root_pair
    if not (is_theta_palindrome(theta, p) and is_theta_palindrome(theta, q) and in_star(w, (p, q))):
        raise InvariantViolation(f"root {{{p}, {q}}} of {{{w}, {tw}}} is not two theta-palindromes")
    return AntimorphicCheck(tp, pp, canonical_pair(p, q))


def theorem20_occurrence(theta: ThetaMap, x: Word) -> Optional[tuple[str, str, int]]:
    """First internal occurrence of ``xθ(x)`` or ``θ(x)x`` in a word of ``{x, θ(x)}^3``."""
    if not x or not is_theta_primitive(theta, x):
        raise PreconditionError(f"{x!r} is not a nonempty theta-primitive word")
    names = {"x": x, "t": apply(theta, x)}
    for triple in ("xxx", "xxt", "xtx", "xtt", "txx", "txt", "ttx", "ttt"):
        w = "".join(names[c] for c in triple)
        for pat in ("xt", "tx"):
            hits = internal_occurrences(names[pat[0]] + names[pat[1]], w)
            if hits:
                return triple, pat, hits[0]
    return None


def check_theorem20(theta: ThetaMap, x: Word) -> bool:
    return theorem20_occurrence(theta, x) is None


def involutions(alphabet: str, kind: str) -> list[ThetaMap]:
    """Every involutive letter map of ``alphabet`` of the given kind, in canonical order
    (the morphic identity excluded)."""
    letters = sorted(alphabet)
    out = []

    def rec(i, m):
        if i == len(letters):
            if kind == MORPHIC and all(a == b for a, b in m.items()):
                return
            out.append(ThetaMap.from_mapping(dict(m), kind))
            return
        a = letters[i]
        if a in m:
            rec(i + 1, m)
            return
        for b in letters[i:]:
            if b in m:
                continue
            m[a] = b
            m[b] = a
            rec(i + 1, m)
            del m[a]
            if b != a:
                del m[b]

    rec(0, {})
    return out
