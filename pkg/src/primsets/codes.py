"""Codes, free hulls and ranks of finite sets of words."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .automata import build_monoid_automaton, product_nonempty
from .errors import PreconditionError
from .words import (Factorization, Word, WordSet, factor_closure, in_star,
                    word_key, word_set)


@dataclass(frozen=True)
class CodeWitness:
    word: Word
    factorization_a: Factorization
    factorization_b: Factorization


@dataclass(frozen=True)
class FixClass:
    is_prefix: bool
    is_suffix: bool

    @property
    def is_bifix(self) -> bool:
        return self.is_prefix and self.is_suffix


@dataclass(frozen=True)
class DependencyGraph:
    vertices: WordSet
    edges: tuple  # of (u, v) with u a proper prefix of v
    component_count: int
    components: tuple


@dataclass(frozen=True)
class HullStep:
    u: Word
    v: Word
    replacement: Word


@dataclass(frozen=True)
class FreeHull:
    basis: WordSet
    trace: tuple  # of HullStep


def _fact_key(f: Factorization) -> tuple:
    return tuple(word_key(b) for b in f)


def _dangling_costs(words: WordSet) -> dict[str, float]:
    """Least extra length needed to close each reachable dangling suffix.

    A dangling suffix ``s`` means one factorization is ahead of the other
    by ``s``.  The behind side appends ``z``: ``z == s`` closes,
    ``z`` a proper prefix of ``s`` leaves ``z^-1 s`` at no cost, and ``s``
    a proper prefix of ``z`` swaps sides leaving ``s^-1 z`` at cost
    ``|z| - |s|``.
    """
    todo = [b[len(a):] for a in words for b in words if a != b and b.startswith(a)]
    dangling = set(todo)
    while todo:
        s = todo.pop()
        for z in words:
            if z != s and s.startswith(z):
                t = s[len(z):]
            elif z != s and z.startswith(s):
                t = z[len(s):]
            else:
                continue
            if t not in dangling:
                dangling.add(t)
                todo.append(t)
    inf = float("inf")
    h = dict.fromkeys(dangling, inf)
    changed = True
    while changed:
        changed = False
        for s in dangling:
            best = h[s]
            for z in words:
                if z == s:
                    c = 0
                elif s.startswith(z):
                    c = h[s[len(z):]]
                elif z.startswith(s):
                    c = len(z) - len(s) + h[z[len(s):]]
                else:
                    continue
                if c < best:
                    best = c
            if best < h[s]:
                h[s] = best
                changed = True
    return h


def code_witness(words: Iterable[Word]) -> Optional[CodeWitness]:
    """Shortest word with two factorizations, or None when ``words`` is a code.

    Ties are broken colexicographically (comparing from the last letter),
    then by the pair of factorizations.
    """
    x = word_set(words)
    h = _dangling_costs(x)
    starts = [(b, a) for a in x for b in x if a != b and b.startswith(a)]
    best_len = min((len(b) + h[b[len(a):]] for b, a in starts), default=float("inf"))
    if best_len == float("inf"):
        return None

    found = []

    def walk(s, ahead, behind, length):
        # ``ahead`` covers ``behind`` plus the dangling suffix ``s``
        for z in x:
            if z == s:
                found.append(("".join(ahead), ahead, behind + (z,)))
            elif s.startswith(z):
                t = s[len(z):]
                if length + h[t] == best_len:
                    walk(t, ahead, behind + (z,), length)
            elif z.startswith(s):
                t = z[len(s):]
                nl = length + len(t)
                if nl + h[t] == best_len:
                    walk(t, behind + (z,), ahead, nl)

    for b, a in starts:
        s = b[len(a):]
        if len(b) + h[s] == best_len:
            walk(s, (b,), (a,), len(b))

    def order(item):
        w, f, g = item
        f, g = sorted((f, g), key=_fact_key)
        return (w[::-1], _fact_key(f), _fact_key(g)), (w, f, g)

    _, (w, f, g) = min(order(item) for item in found)
    return CodeWitness(w, f, g)


def is_code(words: Iterable[Word]) -> bool:
    return code_witness(words) is None


def classify_fix(words: Iterable[Word]) -> FixClass:
    x = word_set(words)
    prefix = suffix = True
    for a in x:
        for b in x:
            if a != b:
                if b.startswith(a):
                    prefix = False
                if b.endswith(a):
                    suffix = False
    return FixClass(prefix, suffix)


def dependency_graph(words: Iterable[Word]) -> DependencyGraph:
    """Edges join ``u != v`` whenever ``uX^*`` and ``vX^*`` intersect."""
    x = word_set(words)
    dfa = build_monoid_automaton(x)
    edges = []
    for u in x:
        for v in x:
            if u != v and v.startswith(u):
                # uX* meets vX* iff tX* meets X* where v = ut
                q = dfa.run(dfa.base, v[len(u):])
                if q is not None and product_nonempty(dfa, q, dfa, dfa.base):
                    edges.append((u, v))
    parent = {w: w for w in x}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for u, v in edges:
        parent[find(u)] = find(v)
    groups: dict[str, list] = {}
    for w in x:
        groups.setdefault(find(w), []).append(w)
    comps = sorted((tuple(g) for g in groups.values()), key=lambda g: word_key(g[0]))
    return DependencyGraph(x, tuple(edges), len(comps), tuple(comps))


def free_hull(words: Iterable[Word]) -> FreeHull:
    """Basis of the smallest free submonoid containing ``words``.

    While the set is not a code, the canonical witness starts with blocks
    ``u`` and ``v = ut``; ``t`` lies in every free submonoid containing
    the set (``Ft`` and ``tF`` both meet ``F``), so ``v`` is replaced by
    ``t``.  The total length drops at each step.
    """
    x = word_set(words)
    if not x:
        raise PreconditionError("free hull of the empty set")
    trace = []
    while True:
        wit = code_witness(x)
        if wit is None:
            return FreeHull(x, tuple(trace))
        u, v = wit.factorization_a[0], wit.factorization_b[0]
        if len(u) > len(v):
            u, v = v, u
        t = v[len(u):]
        trace.append(HullStep(u, v, t))
        x = word_set([w for w in x if w != v] + [t])


def free_rank(words: Iterable[Word]) -> int:
    return len(free_hull(words).basis)


def covering_sets(words: Iterable[Word], k: int) -> set[frozenset]:
    """Every set ``Y`` with ``|Y| <= k`` whose members all occur as blocks
    in some factorization of each word of ``words`` over ``Y``.

    Any ``Y`` with ``X ⊆ Y^*`` contains such a set, and its members are
    factors of ``X``, so this enumerates the covers that matter.
    """
    x = sorted(word_set(words), key=lambda w: -len(w))
    out: set[frozenset] = set()
    seen = set()

    def rec(wi, pos, y):
        key = (wi, pos, y)
        if key in seen:
            return
        seen.add(key)
        if wi == len(x):
            out.add(y)
            return
        w = x[wi]
        if pos == len(w):
            rec(wi + 1, 0, y)
            return
        for b in y:
            if w.startswith(b, pos):
                rec(wi, pos + len(b), y)
        if len(y) < k:
            for j in range(pos + 1, len(w) + 1):
                b = w[pos:j]
                if b not in y:
                    rec(wi, j, y | {b})

    rec(0, 0, frozenset())
    return out


def _canon_set_key(y) -> tuple:
    return tuple(word_key(w) for w in sorted(y, key=word_key))


def minimum_covers(words: Iterable[Word]) -> tuple[int, list[WordSet]]:
    """Rank of ``words`` and every cover of that size, canonically ordered."""
    x = word_set(words)
    if not x:
        raise PreconditionError("rank of the empty set")
    bound = min(len(x), len(set("".join(x))))
    for k in range(1, bound + 1):
        covers = [c for c in covering_sets(x, k) if len(c) == k]
        if covers:
            return k, sorted((word_set(c) for c in covers), key=_canon_set_key)
    raise AssertionError("the alphabet always covers")  # pragma: no cover


def combinatorial_rank(words: Iterable[Word]) -> tuple[int, WordSet]:
    k, covers = minimum_covers(words)
    return k, covers[0]


def brute_force_rank(words: Iterable[Word]) -> int:
    """Rank by testing every subset of the factor closure; slow oracle."""
    from itertools import combinations

    x = word_set(words)
    cands = factor_closure(x)
    for k in range(1, len(x) + 1):
        for y in combinations(cands, k):
            if all(in_star(w, y) for w in x):
                return k
    raise AssertionError("X covers itself")  # pragma: no cover


def is_elementary(words: Iterable[Word]) -> bool:
    x = word_set(words)
    return combinatorial_rank(x)[0] == len(x)
