"""Primitive sets, primitive roots and k-maximal submonoids."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional

from .codes import _canon_set_key, covering_sets, minimum_covers
from .errors import InvariantViolation, PreconditionError
from .words import (Factorization, Word, WordSet, commute, factor_closure,
                    in_star, internal_occurrences, is_primitive, parse_over,
                    primitive_root, word_key, word_set)

RANK1 = "rank1"
RANK2 = "rank2"


def canonical_pair(x: Word, y: Word) -> tuple[Word, Word]:
    """Unordered pair as (shorter, longer), lexicographic on equal length."""
    return (x, y) if word_key(x) <= word_key(y) else (y, x)


@dataclass(frozen=True)
class PairRoot:
    kind: str
    root1: Optional[Word]
    root_pair: Optional[tuple[Word, Word]]
    factorizations: tuple  # one Factorization per input word, in input order

    @property
    def words(self) -> tuple:
        return (self.root1,) if self.kind == RANK1 else self.root_pair

    @property
    def size(self) -> int:
        return sum(len(w) for w in self.words)


def _strip(w: Word, u: Word) -> Word:
    k = 0
    while w.startswith(u, k):
        k += len(u)
    return w[k:]


def _root_candidates(x: Word, y: Word) -> list[tuple[Word, Word]]:
    # The root is a bifix code.  Call u the first block of x; the first
    # block different from u (in x, or else in y) is a prefix of what is
    # left after stripping u's.
    out = []
    for i in range(1, len(x) + 1):
        u = x[:i]
        src = _strip(x, u) or _strip(y, u)
        for j in range(1, len(src) + 1):
            v = src[:j]
            if u.startswith(v) or v.startswith(u):
                continue
            if not (x.endswith(u) or x.endswith(v)):
                continue
            if not (y.endswith(u) or y.endswith(v)):
                continue
            if not (y.startswith(u) or y.startswith(v)):
                continue
            out.append(canonical_pair(u, v))
    return sorted(set(out), key=lambda p: (len(p[0]) + len(p[1]), word_key(p[0]), word_key(p[1])))


def _validate_pair(x: Word, y: Word) -> None:
    if not x or not y:
        raise PreconditionError("pair members must be nonempty")
    if x == y:
        raise PreconditionError("a pair needs two distinct words")


@lru_cache(maxsize=1 << 16)
def _pair_root_canonical(a: Word, b: Word) -> tuple:
    if commute(a, b):
        return (RANK1, primitive_root(a)[0])
    # Every covering pair Z of a rank-2 set lies in R^* for its unique
    # primitive root R, so |Z| >= |R| with equality only at Z = R: the
    # root is the covering pair of least total length.
    best = None
    for u, v in _root_candidates(a, b):
        size = len(u) + len(v)
        if best is not None and size > len(best[0]) + len(best[1]):
            break
        if in_star(a, (u, v)) and in_star(b, (u, v)):
            if best is not None:
                raise InvariantViolation(
                    f"two covering pairs of least size for {{{a}, {b}}}", best, (u, v))
            best = (u, v)
    assert best is not None, "the pair covers itself"
    return (RANK2, best)


def pair_root(x: Word, y: Word) -> PairRoot:
    """The unique primitive root of ``{x, y}``: one word if they commute,
    otherwise the unique primitive pair ``{u, v}`` with ``x, y`` in ``{u, v}^*``."""
    _validate_pair(x, y)
    kind, root = _pair_root_canonical(*canonical_pair(x, y))
    blocks = (root,) if kind == RANK1 else root
    facts = (parse_over(x, blocks), parse_over(y, blocks))
    if kind == RANK1:
        return PairRoot(RANK1, root, None, facts)
    return PairRoot(RANK2, None, root, facts)


def is_primitive_pair(x: Word, y: Word) -> bool:
    r = pair_root(x, y)
    return r.kind == RANK2 and r.root_pair == canonical_pair(x, y)


def covering_pairs(x: Word, y: Word) -> list[tuple[Word, Word]]:
    """Every unordered pair of distinct factors covering ``{x, y}``; slow oracle."""
    facs = factor_closure((x, y))
    px = [f for f in facs if x.startswith(f)]
    out = []
    for u in px:
        for v in facs:
            if u == v:
                continue
            if in_star(x, (u, v)) and in_star(y, (u, v)):
                out.append(canonical_pair(u, v))
    return sorted(set(out), key=lambda p: (word_key(p[0]), word_key(p[1])))


def is_primitive_pair_bruteforce(u: Word, v: Word) -> bool:
    """Definition-level check: no other pair and no single word covers ``{u, v}``."""
    if commute(u, v):
        return False
    return covering_pairs(u, v) == [canonical_pair(u, v)]


@dataclass(frozen=True)
class MaximalityCertificate:
    is_maximal: bool
    dominating_set: Optional[WordSet]
    search_bound_note: str


def is_primitive_set(words: Iterable[Word]) -> MaximalityCertificate:
    """Decide whether ``X^*`` is ``|X|``-maximal with ``X`` its basis."""
    x = word_set(words)
    if not x:
        raise PreconditionError("primitivity of the empty set")
    if len(x) == 1:
        w = x[0]
        r, _ = primitive_root(w)
        if r == w:
            return MaximalityCertificate(True, None, "single word: primitive")
        return MaximalityCertificate(False, (r,), "single word: a proper power")
    basis = tuple(w for w in x if not in_star(w, [z for z in x if z != w]))
    if basis != x:
        # X^* has fewer than |X| generators, so some cover strictly enlarges it
        note = "not a minimal generating set"
        for k in range(1, len(x) + 1):
            for z in sorted((c for c in covering_sets(x, k) if len(c) == k), key=_canon_set_key):
                if not all(in_star(w, x) for w in z):
                    return MaximalityCertificate(False, word_set(z), note)
        fresh = next(c for c in "abcdefghijklmnopqrstuvwxyz" + "".join(map(chr, range(0x100, 0x200)))
                     if c not in "".join(x))
        return MaximalityCertificate(False, word_set(basis + (fresh,)),
                                     note + "; dominated by its basis plus a fresh letter")
    if len(x) == 2:
        r = pair_root(*x)
        if r.kind == RANK2 and r.root_pair == x:
            return MaximalityCertificate(True, None, "pair: least covering pair is itself")
        return MaximalityCertificate(False, word_set(r.words), "pair: least covering pair")
    note = f"all covers of size <= {len(x)} drawn from the factors of X"
    for k in range(1, len(x) + 1):
        covers = sorted((c for c in covering_sets(x, k) if len(c) == k), key=_canon_set_key)
        for z in covers:
            if not all(in_star(w, x) for w in z):
                return MaximalityCertificate(False, word_set(z), note)
    return MaximalityCertificate(True, None, note)


def primitive_roots_of_set(words: Iterable[Word]) -> list[WordSet]:
    """Every primitive set ``Y`` with ``X ⊆ Y^*`` and ``|Y|`` equal to the rank of ``X``."""
    _, covers = minimum_covers(words)
    return [y for y in covers if is_primitive_set(y).is_maximal]


@dataclass(frozen=True)
class InternalOccurrence:
    triple: str  # e.g. "yxx"
    pattern: str  # "xy" or "yx"
    offset: int


def internal_xy_occurrence(x: Word, y: Word) -> Optional[InternalOccurrence]:
    """First internal occurrence of ``xy`` or ``yx`` in a word of ``{x, y}^3``."""
    if not x or not y:
        raise PreconditionError("x and y must be nonempty")
    names = {"x": x, "y": y}
    for triple in map("".join, product("xy", repeat=3)):
        w = "".join(names[c] for c in triple)
        for pat in ("xy", "yx"):
            hits = internal_occurrences(names[pat[0]] + names[pat[1]], w)
            if hits:
                return InternalOccurrence(triple, pat, hits[0])
    return None


def check_no_internal_xy(x: Word, y: Word) -> bool:
    return internal_xy_occurrence(x, y) is None


def star_words(words: Iterable[Word], max_len: int) -> list[set]:
    """``out[n]`` is the set of words of length ``n`` in ``X^*``, for ``n <= max_len``."""
    x = word_set(words)
    out = [set() for _ in range(max_len + 1)]
    out[0].add("")
    for n in range(1, max_len + 1):
        for b in x:
            if len(b) <= n:
                out[n].update(s + b for s in out[n - len(b)])
    return out


def circular_witness(words: Iterable[Word], bound: int) -> Optional[tuple[Word, Word]]:
    """A split ``m = uv`` with ``uv, vu`` in ``X^*`` but ``u`` or ``v`` outside,
    among ``|m| <= bound``; None if there is none.  This is a bounded check,
    not a decision procedure."""
    layers = star_words(words, bound)
    for n in range(1, bound + 1):
        layer = layers[n]
        for m in sorted(layer):
            for i in range(1, n):
                u, v = m[:i], m[i:]
                if v + u in layer and (u not in layers[i] or v not in layers[n - i]):
                    return u, v
    return None


def is_circular_up_to(words: Iterable[Word], bound: int) -> bool:
    return circular_witness(words, bound) is None


def purity_witness(words: Iterable[Word], bound: int) -> Optional[Word]:
    """A word ``z`` outside ``X^*`` with a power ``z^n`` (``n >= 2``, ``|z^n| <= bound``) inside."""
    layers = star_words(words, bound)
    for n in range(2, bound + 1):
        for m in sorted(layers[n]):
            r, e = primitive_root(m)
            if e >= 2 and r not in layers[len(r)]:
                return r
    return None


def is_pure_up_to(words: Iterable[Word], bound: int) -> bool:
    return purity_witness(words, bound) is None
