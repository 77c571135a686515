"""Automata recognizing submonoids ``X^*`` and their products.

The basic machine is the prefix trie of ``X``: its states are the proper
prefixes of members of ``X`` (the empty prefix is the base state) and
completing a member returns to the base.  It is deterministic exactly when
``X`` is a prefix code and unambiguous exactly when ``X`` is a code.
:class:`MonoidAutomaton` is the deterministic form: the trie itself for
prefix codes, its subset construction otherwise.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional

from .errors import PreconditionError
from .words import Word, WordSet, word_key, word_set


def is_prefix_set(words: WordSet) -> bool:
    """No member is a proper prefix of another."""
    for i, a in enumerate(words):
        for b in words[i + 1:]:
            if b.startswith(a) or a.startswith(b):
                return False
    return True


class TrieNFA:
    """Prefix-trie automaton for ``X^*`` with string-valued states."""

    def __init__(self, words: Iterable[Word]):
        self.words = word_set(words)
        if not self.words:
            raise PreconditionError("generating set must be nonempty")
        self.members = frozenset(self.words)
        self.prefixes = frozenset(w[:i] for w in self.words for i in range(len(w)))
        self.alphabet = "".join(sorted(set("".join(self.words))))
        self._cache: dict[tuple[str, str], tuple[str, ...]] = {}

    def step(self, state: str, c: str) -> tuple[str, ...]:
        key = (state, c)
        out = self._cache.get(key)
        if out is None:
            nxt = state + c
            res = []
            if nxt in self.members:
                res.append("")
            if nxt in self.prefixes:
                res.append(nxt)
            out = self._cache[key] = tuple(res)
        return out

    def read(self, states: frozenset, w: Word) -> frozenset:
        for c in w:
            states = frozenset(t for s in states for t in self.step(s, c))
            if not states:
                break
        return states


class MonoidAutomaton:
    """Deterministic automaton for ``source^*``; state 0 is the base state.

    For prefix codes the base is the only accepting state and the state
    count is at most ``sum |x| - |X| + 1``.  For other sets the states are
    subsets of trie states and every subset containing the base accepts.
    """

    def __init__(self, source: WordSet, alphabet: str, n_states: int,
                 delta: dict[tuple[int, str], int], accepting: frozenset,
                 labels: Optional[list] = None):
        self.source = source
        self.alphabet = alphabet
        self.n_states = n_states
        self.base = 0
        self.delta = delta
        self.accepting = accepting
        self.labels = labels

    def run(self, state: int, w: Word) -> Optional[int]:
        for c in w:
            state = self.delta.get((state, c))
            if state is None:
                return None
        return state

    def accepts(self, w: Word) -> bool:
        return self.run(self.base, w) in self.accepting

    def successors(self, state: int) -> Iterator[tuple[str, int]]:
        for c in self.alphabet:
            t = self.delta.get((state, c))
            if t is not None:
                yield c, t

    def to_text(self) -> str:
        """Line format: ``base N`` header, ``accept S...``, then ``state symbol state``."""
        lines = [f"base {self.base}",
                 "accept " + " ".join(str(s) for s in sorted(self.accepting))]
        for (s, c), t in sorted(self.delta.items()):
            lines.append(f"{s} {c} {t}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, source: WordSet = ()) -> "MonoidAutomaton":
        delta = {}
        base = 0
        accepting: frozenset = frozenset()
        states = {0}
        for line in text.strip().splitlines():
            parts = line.split()
            if parts[0] == "base":
                base = int(parts[1])
                states.add(base)
            elif parts[0] == "accept":
                accepting = frozenset(int(p) for p in parts[1:])
            else:
                s, c, t = int(parts[0]), parts[1], int(parts[2])
                delta[(s, c)] = t
                states.update((s, t))
        if base != 0:
            raise ValueError("exported automata always use base 0")
        alphabet = "".join(sorted({c for _, c in delta}))
        return cls(source, alphabet, max(states) + 1, delta, accepting or frozenset({0}))


def build_monoid_automaton(words: Iterable[Word]) -> MonoidAutomaton:
    nfa = TrieNFA(words)
    if is_prefix_set(nfa.words):
        order = sorted(nfa.prefixes, key=word_key)
        index = {p: i for i, p in enumerate(order)}
        delta = {}
        for p in order:
            for c in nfa.alphabet:
                nxt = nfa.step(p, c)
                if nxt:
                    (t,) = nxt
                    delta[(index[p], c)] = index[t]
        return MonoidAutomaton(nfa.words, nfa.alphabet, len(order), delta,
                               frozenset({0}), labels=order)

    # subset construction; states are named in breadth-first discovery
    # order over the sorted alphabet
    start = frozenset({""})
    index = {start: 0}
    order = [start]
    delta = {}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for c in nfa.alphabet:
            t = frozenset(x for p in s for x in nfa.step(p, c))
            if not t:
                continue
            if t not in index:
                index[t] = len(order)
                order.append(t)
                queue.append(t)
            delta[(index[s], c)] = index[t]
    accepting = frozenset(i for i, s in enumerate(order) if "" in s)
    labels = [tuple(sorted(s, key=word_key)) for s in order]
    return MonoidAutomaton(nfa.words, nfa.alphabet, len(order), delta, accepting, labels)


def product_nonempty(a: MonoidAutomaton, qa: int, b: MonoidAutomaton, qb: int) -> bool:
    """Is there a word accepted from ``qa`` in ``a`` and from ``qb`` in ``b``?"""
    seen = {(qa, qb)}
    stack = [(qa, qb)]
    while stack:
        p, q = stack.pop()
        if p in a.accepting and q in b.accepting:
            return True
        for c, p2 in a.successors(p):
            q2 = b.delta.get((q, c))
            if q2 is not None and (p2, q2) not in seen:
                seen.add((p2, q2))
                stack.append((p2, q2))
    return False
