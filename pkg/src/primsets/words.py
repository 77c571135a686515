"""Elementary operations on words.

A word is a ``str``: one character per symbol.  Python strings are
immutable sequences of code points, so any alphabet size is supported and
words hash, compare and slice without wrapping.  A finite set of words is
a tuple in canonical order (length, then lexicographic) with no duplicates
and no empty word; :func:`word_set` builds one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import PreconditionError

Word = str
WordSet = tuple  # tuple[str, ...] in canonical order
Factorization = tuple  # tuple[str, ...] of blocks


def word_key(w: Word) -> tuple[int, str]:
    return (len(w), w)


def word_set(words: Iterable[Word]) -> WordSet:
    """Canonical duplicate-free tuple of nonempty words."""
    out = set()
    for w in words:
        if not isinstance(w, str):
            raise PreconditionError(f"not a word: {w!r}")
        if not w:
            raise PreconditionError("the empty word cannot be a member of a generating set")
        out.add(w)
    return tuple(sorted(out, key=word_key))


def render_set(words: Iterable[Word]) -> str:
    return "{" + ", ".join(sorted(words, key=word_key)) + "}"


def alphabet_of(words: Iterable[Word]) -> str:
    return "".join(sorted(set("".join(words))))


def _require_nonempty(w: Word) -> None:
    if not w:
        raise PreconditionError("operation requires a nonempty word")


def is_primitive(w: Word) -> bool:
    """True iff ``w`` is not a proper power, i.e. not an internal factor of ``ww``."""
    _require_nonempty(w)
    return (w + w).find(w, 1) == len(w)


def primitive_root(w: Word) -> tuple[Word, int]:
    """Return ``(r, n)`` with ``w == r * n`` and ``r`` primitive."""
    _require_nonempty(w)
    # the first nontrivial occurrence of w in ww is at its smallest
    # period dividing |w|
    p = (w + w).find(w, 1)
    return w[:p], len(w) // p


def commute(x: Word, y: Word) -> bool:
    return x + y == y + x


@dataclass(frozen=True)
class OverlapDecomposition:
    """``t = (pq)^m``, ``v = (qp)^m`` and ``u`` in ``(pq)^* p``."""

    p: Word
    q: Word
    m: int

    def reconstruct(self, k: int) -> tuple[Word, Word, Word]:
        """The triple ``(t, u, v)`` with ``u = (pq)^k p``."""
        pq = self.p + self.q
        return pq * self.m, pq * k + self.p, (self.q + self.p) * self.m


def ls_decompose(t: Word, u: Word, v: Word) -> OverlapDecomposition:
    """Solve the conjugacy equation ``tu = uv`` (``t != v``) for ``(p, q, m)``."""
    if not t or not v:
        raise PreconditionError("t and v must be nonempty")
    if t + u != u + v:
        raise PreconditionError("the equation tu = uv does not hold")
    if t == v:
        raise PreconditionError("t and v must differ")
    pq, m = primitive_root(t)
    k = 0
    while u.startswith(pq, k * len(pq)):
        k += 1
    p = u[k * len(pq):]
    # tu = uv forces the residue to be a proper prefix of pq; it is
    # nonempty because t != v
    q = pq[len(p):]
    assert pq.startswith(p) and p and q
    assert (q + p) * m == v
    return OverlapDecomposition(p, q, m)


def _suffix_reach(w: Word, blocks: Sequence[Word]) -> list[bool]:
    """``reach[i]`` is True iff ``w[i:]`` factors over ``blocks``."""
    n = len(w)
    reach = [False] * (n + 1)
    reach[n] = True
    for i in range(n - 1, -1, -1):
        for b in blocks:
            j = i + len(b)
            if j <= n and reach[j] and w.startswith(b, i):
                reach[i] = True
                break
    return reach


def in_star(w: Word, blocks: Sequence[Word]) -> bool:
    """Membership of ``w`` in ``blocks^*``."""
    return _suffix_reach(w, blocks)[0]


def parse_over(w: Word, blocks: Iterable[Word]) -> Optional[Factorization]:
    """A factorization of ``w`` over ``blocks``, or None.

    Among several factorizations the one whose block sequence is smallest
    is returned, blocks being compared by (length, lexicographic).
    """
    z = word_set(blocks)
    reach = _suffix_reach(w, z)
    if not reach[0]:
        return None
    out = []
    i = 0
    while i < len(w):
        for b in z:
            j = i + len(b)
            if j <= len(w) and reach[j] and w.startswith(b, i):
                out.append(b)
                i = j
                break
    return tuple(out)


def count_factorizations(w: Word, blocks: Iterable[Word]) -> int:
    z = word_set(blocks)
    n = len(w)
    ways = [0] * (n + 1)
    ways[n] = 1
    for i in range(n - 1, -1, -1):
        ways[i] = sum(ways[i + len(b)] for b in z if w.startswith(b, i))
    return ways[0]


def factor_closure(words: Iterable[Word]) -> WordSet:
    """All nonempty factors of the given words, canonically ordered."""
    out = set()
    for w in words:
        for i in range(len(w)):
            for j in range(i + 1, len(w) + 1):
                out.add(w[i:j])
    return tuple(sorted(out, key=word_key))


def has_square(w: Word) -> Optional[Word]:
    """Return some factor ``uu`` of ``w`` (``u`` nonempty), else None."""
    n = len(w)
    for half in range(1, n // 2 + 1):
        for i in range(n - 2 * half + 1):
            if w[i:i + half] == w[i + half:i + 2 * half]:
                return w[i:i + 2 * half]
    return None


def internal_occurrences(pattern: Word, text: Word) -> list[int]:
    """Offsets of ``pattern`` in ``text`` with nonempty material on both sides."""
    out = []
    i = text.find(pattern, 1)
    while i != -1 and i + len(pattern) < len(text):
        out.append(i)
        i = text.find(pattern, i + 1)
    return out
