"""Intersections of finitely generated submonoids.

For codes ``X`` and ``U`` the product of their prefix-trie automata is
unambiguous on ``X^* ∩ U^*``: each word of the intersection has exactly one
run from the paired base state back to itself, and its visits to the base
are the common cut points of the two factorizations.  The basis of the
(free) intersection is therefore the language of runs that leave the base
and return to it without an intermediate visit.

When either set is not a code the intersection need not be free, and the
basis is computed as ``M+ \\ M+M+`` on the determinized product instead.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .automata import MonoidAutomaton, TrieNFA, build_monoid_automaton
from .codes import is_code
from .errors import InvariantViolation, PreconditionError
from .maximality import canonical_pair, is_primitive_pair
from .words import Word, WordSet, is_primitive, word_key, word_set


@dataclass(frozen=True)
class BasisMachine:
    """Automaton for the basis language of an intersection.

    States are numbered canonically (breadth-first over the sorted
    alphabet).  When ``first_return`` is set, state 0 is the paired base
    state and the basis is the set of labels of paths 0 -> 0 with no
    intermediate visit to 0; otherwise the basis is the language accepted
    from state 0 by ``accepting``.
    """

    n_states: int
    edges: tuple  # sorted (state, symbol, state)
    accepting: frozenset
    first_return: bool

    def to_text(self) -> str:
        lines = ["base 0", "accept " + " ".join(str(s) for s in sorted(self.accepting))]
        lines += [f"{s} {c} {t}" for s, c, t in self.edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class IntersectionResult:
    is_trivial: bool
    finitely_generated: bool
    finite_basis: Optional[WordSet]
    basis_automaton: Optional[BasisMachine]
    expression: Optional[str] = None


class _Graph:
    """Labelled graph with start node 0 and a set of final nodes."""

    def __init__(self):
        self.adj: list[list[tuple[str, int]]] = []
        self.final: set[int] = set()

    def add_node(self) -> int:
        self.adj.append([])
        return len(self.adj) - 1

    def trim(self) -> set[int]:
        n = len(self.adj)
        radj: list[list[int]] = [[] for _ in range(n)]
        for s in range(n):
            for _, t in self.adj[s]:
                radj[t].append(s)
        live = set(self.final)
        stack = list(self.final)
        while stack:
            t = stack.pop()
            for s in radj[t]:
                if s not in live:
                    live.add(s)
                    stack.append(s)
        return live

    def live_adj(self, live: set[int]) -> dict[int, list[tuple[str, int]]]:
        return {s: sorted((c, t) for c, t in self.adj[s] if t in live) for s in live}

    def has_cycle(self, adj: dict) -> bool:
        color = dict.fromkeys(adj, 0)
        for root in adj:
            if color[root]:
                continue
            stack = [(root, iter(adj[root]))]
            color[root] = 1
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    color[node] = 2
                    stack.pop()
                    continue
                t = nxt[1]
                if color[t] == 1:
                    return True
                if color[t] == 0:
                    color[t] = 1
                    stack.append((t, iter(adj[t])))
        return False

    def words(self, adj: dict) -> list[Word]:
        out = []
        stack = [(0, "")]
        while stack:
            s, w = stack.pop()
            if s in self.final and w:
                out.append(w)
            for c, t in adj[s]:
                stack.append((t, w + c))
        return sorted(set(out), key=word_key)


def _code_product(x: WordSet, u: WordSet) -> tuple[_Graph, int]:
    """First-return graph of the trie product; returns (graph, sink)."""
    ax, au = TrieNFA(x), TrieNFA(u)
    alphabet = sorted(set(ax.alphabet) & set(au.alphabet))
    g = _Graph()
    g.add_node()
    sink = g.add_node()
    g.final.add(sink)
    index = {("", ""): 0}
    queue = deque([("", "")])
    while queue:
        p, q = queue.popleft()
        s = index[(p, q)]
        for c in alphabet:
            for p2 in ax.step(p, c):
                for q2 in au.step(q, c):
                    if p2 == "" and q2 == "":
                        g.adj[s].append((c, sink))
                        continue
                    key = (p2, q2)
                    if key not in index:
                        index[key] = g.add_node()
                        queue.append(key)
                    g.adj[s].append((c, index[key]))
    return g, sink


def _general_product(x: WordSet, u: WordSet) -> _Graph:
    """Automaton for ``M+ \\ M+M+`` where ``M = X^* ∩ U^*``.

    A state records the product state reached on the whole prefix, the
    product states of runs restarted at every earlier nonempty prefix in
    ``M``, and whether the prefix read so far is a basis word.
    """
    ax, au = build_monoid_automaton(x), build_monoid_automaton(u)
    alphabet = sorted(set(ax.alphabet) & set(au.alphabet))

    def step(q, c):
        a = ax.delta.get((q[0], c))
        b = au.delta.get((q[1], c))
        return None if a is None or b is None else (a, b)

    def accepting(q):
        return q[0] in ax.accepting and q[1] in au.accepting

    q0 = (0, 0)
    g = _Graph()
    start = (q0, frozenset(), False)
    index = {start: g.add_node()}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        q, restarts, _ = state
        s = index[state]
        for c in alphabet:
            q2 = step(q, c)
            if q2 is None:
                continue
            r2 = {t for t in (step(r, c) for r in restarts) if t is not None}
            hit = accepting(q2) and not any(accepting(r) for r in r2)
            if accepting(q2):
                r2.add(q0)
            key = (q2, frozenset(r2), hit)
            if key not in index:
                index[key] = g.add_node()
                if hit:
                    g.final.add(index[key])
                queue.append(key)
            g.adj[s].append((c, index[key]))
    return g


def _canonical_machine(g: _Graph, adj: dict, sink: Optional[int]) -> BasisMachine:
    # renumber live states breadth-first; the sink is folded into 0
    order = {0: 0}
    queue = deque([0])
    edges = []
    while queue:
        s = queue.popleft()
        for c, t in adj[s]:
            if t == sink:
                t2 = 0
            else:
                if t not in order:
                    order[t] = len(order)
                    queue.append(t)
                t2 = order[t]
            edges.append((order[s], c, t2))
    if sink is not None:
        accepting = frozenset({0})
    else:
        accepting = frozenset(order[s] for s in g.final if s in order)
    return BasisMachine(len(order), tuple(sorted(edges)), accepting, sink is not None)


def _render_single_cycle(adj: dict, sink: int) -> Optional[str]:
    """``P(C)^*S`` when the live graph is one path through one simple cycle."""
    branching = [s for s, out in adj.items() if s != sink and len(out) != 1]
    if len(branching) != 1 or len(adj[branching[0]]) != 2:
        return None
    x = branching[0]
    # the path from the start is forced up to x
    prefix, s, seen = "", 0, set()
    while s != x:
        if s in seen or s == sink:
            return None
        seen.add(s)
        c, s = adj[s][0]
        prefix += c
    cycle = suffix = None
    for c, t in adj[x]:
        label, node, steps = c, t, 0
        while node not in (x, sink) and steps <= len(adj):
            d, node = adj[node][0]
            label += d
            steps += 1
        if node == x:
            cycle = label
        elif node == sink:
            suffix = label
    if cycle is None or suffix is None:
        return None
    return f"{prefix}({cycle})^*{suffix}"


def intersect(x: Iterable[Word], u: Iterable[Word]) -> IntersectionResult:
    xs, us = word_set(x), word_set(u)
    if not xs or not us:
        return IntersectionResult(True, True, (), None)
    if is_code(xs) and is_code(us):
        g, sink = _code_product(xs, us)
    else:
        g, sink = _general_product(xs, us), None
    live = g.trim()
    if 0 not in live:
        return IntersectionResult(True, True, (), None)
    adj = g.live_adj(live)
    machine = _canonical_machine(g, adj, sink)
    if g.has_cycle(adj):
        expr = _render_single_cycle(adj, sink) if sink is not None else None
        return IntersectionResult(False, False, None, machine, expr)
    return IntersectionResult(False, True, word_set(g.words(adj)), machine)


def intersection_accepts(x: Iterable[Word], u: Iterable[Word], w: Word) -> bool:
    """Membership of ``w`` in ``X^* ∩ U^*`` via the two deterministic automata."""
    return build_monoid_automaton(x).accepts(w) and build_monoid_automaton(u).accepts(w)


def _validate_primitive_pair(pair) -> tuple[Word, Word]:
    try:
        a, b = pair
    except (TypeError, ValueError):
        raise PreconditionError(f"expected a pair of words, got {pair!r}") from None
    if a == b or not a or not b or not is_primitive_pair(a, b):
        raise PreconditionError(f"{{{a}, {b}}} is not a primitive pair")
    return canonical_pair(a, b)


def _trie_table(pair: tuple[Word, Word]) -> list[dict[str, int]]:
    aut = build_monoid_automaton(pair)
    table: list[dict[str, int]] = [{} for _ in range(aut.n_states)]
    for (s, c), t in aut.delta.items():
        table[s][c] = t
    return table


def _single_generator(tx: list, tu: list) -> Optional[Word]:
    """Generator of the intersection of two 2-maximal monoids, from their trie tables.

    Raises InvariantViolation unless the first-return graph is empty or a
    single cycle through the base.
    """
    # product states are encoded as i * len(tu) + j
    m = len(tu)
    succ: dict[int, list[tuple[str, int]]] = {}
    stack = [0]
    seen = {0}
    returns = []
    while stack:
        s = stack.pop()
        i, j = divmod(s, m)
        row_u = tu[j]
        out = []
        for c, i2 in tx[i].items():
            j2 = row_u.get(c)
            if j2 is None:
                continue
            t = i2 * m + j2
            if t == 0:
                returns.append(s)
                out.append((c, -1))
                continue
            out.append((c, t))
            if t not in seen:
                seen.add(t)
                stack.append(t)
        succ[s] = out
    if not returns:
        return None
    # co-reachability to the return edge
    pred: dict[int, list[int]] = {}
    for s, out in succ.items():
        for _, t in out:
            pred.setdefault(t, []).append(s)
    live = {-1}
    stack = [-1]
    while stack:
        t = stack.pop()
        for s in pred.get(t, ()):
            if s not in live:
                live.add(s)
                stack.append(s)
    z = []
    s = 0
    visited = set()
    while s != -1:
        if s in visited:
            raise InvariantViolation("intersection of 2-maximal monoids is infinitely generated")
        visited.add(s)
        out = [(c, t) for c, t in succ[s] if t in live]
        if len(out) != 1:
            raise InvariantViolation("intersection of 2-maximal monoids has more than one generator")
        c, s = out[0]
        z.append(c)
    return "".join(z)


def intersect_2maximal(px, pu) -> Optional[Word]:
    """Generator ``z`` of ``{x, y}^* ∩ {u, v}^*`` for distinct primitive pairs, or None if trivial."""
    a = _validate_primitive_pair(px)
    b = _validate_primitive_pair(pu)
    if a == b:
        raise PreconditionError("the two primitive pairs must be distinct")
    z = _single_generator(_trie_table(a), _trie_table(b))
    if z is not None and not is_primitive(z):
        raise InvariantViolation(f"generator {z} of {a} ∩ {b} is not primitive", a, b, z)
    return z


@dataclass(frozen=True)
class BoundReport:
    z_length: int
    size_product_bound: int
    conjecture1_bound: int

    @property
    def conjecture1_holds(self) -> bool:
        return self.z_length < self.conjecture1_bound

    @property
    def conjecture1_margin(self) -> int:
        return self.conjecture1_bound - self.z_length


def bound_report(px, pu, z: Optional[Word]) -> Optional[BoundReport]:
    """Length bounds on the generator; None for a trivial intersection.

    The product bound is a theorem and is enforced; the sum bound is
    conjectural and only recorded.
    """
    if z is None:
        return None
    sx = len(px[0]) + len(px[1])
    su = len(pu[0]) + len(pu[1])
    rep = BoundReport(len(z), sx * su, sx + su)
    if not rep.z_length < rep.size_product_bound:
        raise InvariantViolation(f"|z| = {len(z)} is not below {sx * su}", px, pu, z)
    return rep
