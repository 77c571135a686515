"""Bi-roots of a primitive word.

A bi-root of ``w`` is a primitive pair ``{x, y}`` such that ``w`` factors
over it using both words; its size is ``|x| + |y|``.  Short bi-roots
expose hidden repetition, and below ``sqrt(|w|)`` there is at most one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from .errors import InvariantViolation, PreconditionError
from .maximality import canonical_pair, is_primitive_pair
from .words import (Factorization, Word, factor_closure, has_square, in_star,
                    is_primitive, parse_over, word_key)


@dataclass(frozen=True)
class BiRoot:
    pair: tuple[Word, Word]
    factorization: Factorization

    @property
    def size(self) -> int:
        return len(self.pair[0]) + len(self.pair[1])

    def __str__(self) -> str:
        return "{" + ", ".join(self.pair) + "}"


def _require_primitive(w: Word) -> None:
    if not w:
        raise PreconditionError("bi-roots are defined for nonempty words")
    if not is_primitive(w):
        raise PreconditionError(f"{w} is not primitive; take its primitive_root first")


def _sort_key(b: BiRoot):
    return (b.size, word_key(b.pair[0]), word_key(b.pair[1]))


def biroots(w: Word, max_size: int) -> list[BiRoot]:
    """All bi-roots of ``w`` of size at most ``max_size``, smallest first."""
    _require_primitive(w)
    if max_size < 2:
        raise PreconditionError("max_size must be at least 2")
    n = len(w)
    found = {}
    # x is the first block; y is the first block that differs from x
    for lx in range(1, min(n, max_size)):
        x = w[:lx]
        pos = lx
        while pos < n:
            for ly in range(1, min(n - pos, max_size - lx) + 1):
                y = w[pos:pos + ly]
                if y == x:
                    continue
                pair = canonical_pair(x, y)
                if pair in found or not is_primitive_pair(x, y):
                    continue
                f = parse_over(w, pair)
                if f is not None and x in f and y in f:
                    found[pair] = BiRoot(pair, f)
            if not w.startswith(x, pos):
                break
            pos += lx
    return sorted(found.values(), key=_sort_key)


def biroots_bruteforce(w: Word, max_size: int) -> list[tuple[Word, Word]]:
    """Every unordered pair of distinct factors of ``w`` of size ``<= max_size``
    that covers ``w`` with both words used and is a primitive pair; slow oracle."""
    facs = [f for f in factor_closure([w]) if len(f) < max_size]
    out = set()
    for i, x in enumerate(facs):
        for y in facs[i + 1:]:
            if len(x) + len(y) > max_size or not in_star(w, (x, y)):
                continue
            f = parse_over(w, (x, y))
            if x in f and y in f and is_primitive_pair(x, y):
                out.add(canonical_pair(x, y))
    return sorted(out, key=lambda p: (len(p[0]) + len(p[1]), word_key(p[0]), word_key(p[1])))


def small_biroot_bound(n: int) -> int:
    """Largest size ``s`` with ``s*s < n``."""
    return isqrt(n - 1) if n > 0 else 0


def unique_small_biroot(w: Word) -> Optional[BiRoot]:
    """The bi-root of size below ``sqrt(|w|)``, if any; two would refute uniqueness."""
    _require_primitive(w)
    bound = small_biroot_bound(len(w))
    if bound < 2:
        return None
    small = biroots(w, bound)
    if len(small) > 1:
        raise InvariantViolation(f"{w} has {len(small)} bi-roots of size below sqrt(|w|)", *small)
    return small[0] if small else None


@dataclass(frozen=True)
class Conjecture2Scan:
    word: Word
    count_below_half: int
    witnesses: tuple

    @property
    def candidate(self) -> bool:
        return self.count_below_half >= 2


def conjecture2_scan(w: Word) -> Conjecture2Scan:
    """Count bi-roots of size strictly below ``|w|/2``; two or more is a candidate counterexample."""
    _require_primitive(w)
    bound = (len(w) - 1) // 2
    found = biroots(w, bound) if bound >= 2 else []
    return Conjecture2Scan(w, len(found), tuple(found))


def squarefree_bound_check(w: Word) -> bool:
    """For square-free ``w``, confirm there is no bi-root of size below ``|w|/4``."""
    sq = has_square(w)
    if sq is not None:
        raise PreconditionError(f"{w} contains the square {sq}")
    bound = (len(w) - 1) // 4
    if bound < 2:
        return True
    found = biroots(w, bound)
    if found:
        raise InvariantViolation(f"square-free {w} has a bi-root of size below |w|/4", *found)
    return True


def repetitiveness_score(w: Word, max_size: int) -> Optional[Fraction]:
    """Least bi-root size within ``max_size`` over ``|w|``."""
    found = biroots(w, max_size)
    if not found:
        return None
    return Fraction(found[0].size, len(w))
