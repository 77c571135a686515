"""Command-line interface.

Exit status: 0 success, 1 predicate false under ``--assert``, 2 usage or
input error, 3 invariant violation, 4 conjecture candidate.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Optional

from . import biroot, codes, intersection, lab, maximality, theta, words
from .errors import InvariantViolation, MalformedWitness, PreconditionError

_WORD = re.compile(r"[A-Za-z]+\Z")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_items(arg: str) -> list[str]:
    if arg.startswith("@"):
        try:
            text = Path(arg[1:]).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {arg[1:]}: {exc.strerror}") from None
        return [line.strip() for line in text.splitlines() if line.strip()]
    return [item for item in arg.split(",") if item]


def _words(args: list[str]) -> list[str]:
    out = []
    for arg in args:
        for w in _read_items(arg):
            if not _WORD.match(w):
                raise UsageError(f"not a word: {w!r} (words are runs of ASCII letters)")
            out.append(w)
    if not out:
        raise UsageError("no words given")
    return out


def _one(args: list[str], n: int, what: str) -> list[str]:
    ws = _words(args)
    if len(ws) != n:
        raise UsageError(f"{what} takes exactly {n} word(s), got {len(ws)}")
    return ws


def _pair_text(p) -> str:
    return "{" + ", ".join(maximality.canonical_pair(*p)) + "}"


def _fact_text(f) -> str:
    return ".".join(f) if f is not None else "none"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


class Outcome:
    """What a command produced: a JSON result, text lines, and an optional predicate."""

    def __init__(self, result, text, predicate: Optional[bool] = None, witnesses=None, status: int = 0):
        self.result = result
        self.text = text if isinstance(text, list) else [text]
        self.predicate = predicate
        self.witnesses = witnesses
        self.status = status


# ----------------------------------------------------------------------
# handlers


def cmd_is_primitive(a):
    (w,) = _one(a.words, 1, "is-primitive")
    r, n = words.primitive_root(w)
    ok = n == 1
    return Outcome(ok, "yes" if ok else f"no; {r}^{n}", ok)


def cmd_root(a):
    (w,) = _one(a.words, 1, "root")
    r, n = words.primitive_root(w)
    return Outcome({"root": r, "exponent": n}, f"{r} (exponent {n})")


def cmd_commute(a):
    x, y = _one(a.words, 2, "commute")
    ok = words.commute(x, y)
    return Outcome(ok, _yes(ok), ok)


def cmd_parse(a):
    ws = _words(a.words)
    if len(ws) < 2:
        raise UsageError("parse takes a word followed by the blocks")
    w, blocks = ws[0], words.word_set(ws[1:])
    f = words.parse_over(w, blocks)
    return Outcome(list(f) if f is not None else None, _fact_text(f), f is not None)


def cmd_is_code(a):
    x = words.word_set(_words(a.words))
    wit = codes.code_witness(x)
    if wit is None:
        return Outcome(True, "yes", True)
    fa, fb = _fact_text(wit.factorization_a), _fact_text(wit.factorization_b)
    return Outcome(False, f"no; {wit.word} = {fa} = {fb}", False,
                   {"word": wit.word, "factorizations": [list(wit.factorization_a), list(wit.factorization_b)]})


def cmd_fix_class(a):
    fc = codes.classify_fix(_words(a.words))
    res = {"prefix": fc.is_prefix, "suffix": fc.is_suffix, "bifix": fc.is_bifix}
    return Outcome(res, [f"{k}: {_yes(v)}" for k, v in res.items()])


def cmd_dep_graph(a):
    g = codes.dependency_graph(_words(a.words))
    res = {"edges": [list(e) for e in g.edges], "component_count": g.component_count,
           "components": [list(c) for c in g.components]}
    text = [f"{u} -- {v}" for u, v in g.edges]
    text.append(f"components: {g.component_count}")
    return Outcome(res, text)


def cmd_free_hull(a):
    h = codes.free_hull(_words(a.words))
    res = {"basis": list(h.basis), "free_rank": len(h.basis),
           "trace": [{"u": s.u, "v": s.v, "replacement": s.replacement} for s in h.trace]}
    text = [words.render_set(h.basis)]
    text += [f"  {s.v} -> {s.replacement} (via {s.u})" for s in h.trace]
    return Outcome(res, text)


def cmd_rank(a):
    k, cover = codes.combinatorial_rank(_words(a.words))
    return Outcome({"rank": k, "cover": list(cover)}, f"{k} via {words.render_set(cover)}")


def cmd_free_rank(a):
    r = codes.free_rank(_words(a.words))
    return Outcome(r, str(r))


def cmd_pair_root(a):
    x, y = _one(a.words, 2, "pair-root")
    r = maximality.pair_root(x, y)
    res = {"kind": r.kind, "root": list(r.words), "factorizations": [list(f) for f in r.factorizations]}
    text = r.root1 if r.kind == maximality.RANK1 else _pair_text(r.root_pair)
    return Outcome(res, text)


def cmd_is_primitive_pair(a):
    x, y = _one(a.words, 2, "is-primitive-pair")
    if x == y:
        raise UsageError("a pair needs two distinct words")
    ok = maximality.is_primitive_pair(x, y)
    return Outcome(ok, _yes(ok), ok)


def cmd_is_primitive_set(a):
    cert = maximality.is_primitive_set(_words(a.words))
    res = {"maximal": cert.is_maximal, "note": cert.search_bound_note,
           "dominating_set": list(cert.dominating_set) if cert.dominating_set else None}
    if cert.is_maximal:
        return Outcome(res, "yes", True)
    return Outcome(res, f"no; dominated by {words.render_set(cert.dominating_set)}", False)


def cmd_set_roots(a):
    roots = maximality.primitive_roots_of_set(_words(a.words))
    return Outcome([list(r) for r in roots], [words.render_set(r) for r in roots] or ["none"])


def cmd_intersect(a):
    if len(a.words) != 2:
        raise UsageError("intersect takes two sets, each comma-separated or @file")
    x, u = _words([a.words[0]]), _words([a.words[1]])
    r = intersection.intersect(x, u)
    res = {"trivial": r.is_trivial, "finitely_generated": r.finitely_generated,
           "basis": list(r.finite_basis) if r.finite_basis is not None else None,
           "expression": r.expression,
           "automaton": r.basis_automaton.to_text() if r.basis_automaton else None}
    if r.is_trivial:
        text = ["trivial"]
    elif r.finite_basis is not None:
        text = [words.render_set(r.finite_basis)]
    else:
        text = [r.expression or "infinitely generated", r.basis_automaton.to_text().rstrip("\n")]
    return Outcome(res, text)


def cmd_intersect_pairs(a):
    x, y, u, v = _one(a.words, 4, "intersect-pairs")
    z = intersection.intersect_2maximal((x, y), (u, v))
    rep = intersection.bound_report((x, y), (u, v), z)
    res = {"z": z, "bounds": asdict(rep) if rep else None}
    if rep is not None:
        res["bounds"]["conjecture1_holds"] = rep.conjecture1_holds
    status = 4 if rep is not None and not rep.conjecture1_holds else 0
    return Outcome(res, z if z is not None else "trivial", status=status)


def cmd_biroot(a):
    (w,) = _one(a.words, 1, "biroot")
    n = a.max_size if a.max_size is not None else len(w)
    found = biroot.biroots(w, n)
    res = [{"pair": list(b.pair), "size": b.size, "factorization": list(b.factorization)} for b in found]
    return Outcome(res, [f"{b} (size {b.size})" for b in found] or ["none"])


def cmd_small_biroot(a):
    (w,) = _one(a.words, 1, "small-biroot")
    b = biroot.unique_small_biroot(w)
    if b is None:
        return Outcome(None, "none", False)
    res = {"pair": list(b.pair), "size": b.size, "factorization": list(b.factorization)}
    return Outcome(res, f"{b} (size {b.size})", True)


def _theta(a) -> theta.ThetaMap:
    if not a.theta:
        raise UsageError("--theta is required, e.g. --theta a:b,b:a,c:c")
    return theta.ThetaMap.parse(a.theta, a.kind)


def cmd_theta_apply(a):
    (w,) = _one(a.words, 1, "theta-apply")
    img = theta.apply(_theta(a), w)
    return Outcome(img, img)


def cmd_theta_root(a):
    (w,) = _one(a.words, 1, "theta-root")
    r = theta.theta_root(_theta(a), w)
    return Outcome({"root": r.root, "tags": list(r.tags)}, f"{r.root} ({' '.join(r.tags)})")


def cmd_theta_primitive(a):
    (w,) = _one(a.words, 1, "theta-primitive")
    ok = theta.is_theta_primitive(_theta(a), w)
    return Outcome(ok, _yes(ok), ok)


def cmd_sweep(a):
    spec = lab.SweepSpec(a.experiment, a.alphabet_size, a.max_length, a.seed, a.count)
    if a.shard:
        try:
            i, n = (int(t) for t in a.shard.split("/"))
        except ValueError:
            raise UsageError("--shard is INDEX/COUNT") from None
        rep = lab.run_sweep(spec, shard=(i, n), budget_seconds=a.budget)
    else:
        rep = lab.run_sweep(spec, budget_seconds=a.budget, workers=a.workers)
    text = rep.render()
    if a.out:
        Path(a.out).write_text(text)
    res = {"instances_checked": rep.instances_checked, "filtered": rep.filtered,
           "partial": rep.partial, "violations": rep.violations, "candidates": rep.candidates,
           "stats": {k: {"op": op, "value": v, "witness": json.loads(w) if w else None}
                     for k, (op, v, w) in sorted(rep.stats.items())}}
    return Outcome(res, text.rstrip("\n").split("\n"), status=rep.exit_code)


def _records(args: list[str]) -> list[str]:
    out = []
    for arg in args:
        lines = _read_items(arg) if arg.startswith("@") else [arg]
        for line in lines:
            for tag in ("violation ", "candidate "):
                if line.startswith(tag):
                    line = line[len(tag):]
            if line.startswith("{"):
                out.append(line)
            elif not arg.startswith("@"):
                raise MalformedWitness(f"not a witness record: {line[:40]!r}")
    if not out:
        raise MalformedWitness("no witness records found")
    return out


def cmd_replay(a):
    results, text, status = [], [], 0
    for line in _records(a.words):
        rec = json.loads(line) if line.startswith("{") else line
        verdict = lab.replay(rec)
        match = None
        if isinstance(rec, dict) and "verdict" in rec:
            match = json.dumps(verdict, sort_keys=True) == json.dumps(rec["verdict"], sort_keys=True)
        results.append({"verdict": verdict, "reproduced": match})
        text.append(json.dumps(verdict, sort_keys=True) + ("" if match is None else
                                                          ("  (reproduced)" if match else "  (MISMATCH)")))
        if match is False:
            status = 3
        elif not verdict.get("ok", True):
            status = max(status, 4 if rec.get("experiment") in lab.CONJECTURES else 3)
    return Outcome(results, text, status=status)


COMMANDS = {
    "is-primitive": (cmd_is_primitive, "is the word primitive"),
    "root": (cmd_root, "primitive root and exponent"),
    "commute": (cmd_commute, "do two words commute"),
    "parse": (cmd_parse, "factorize WORD over BLOCKS..."),
    "is-code": (cmd_is_code, "is the set a code (with a double-factorization witness)"),
    "fix-class": (cmd_fix_class, "prefix / suffix / bifix"),
    "dep-graph": (cmd_dep_graph, "dependency graph and component count"),
    "free-hull": (cmd_free_hull, "basis of the free hull"),
    "rank": (cmd_rank, "combinatorial rank and a minimum cover"),
    "free-rank": (cmd_free_rank, "size of the free hull basis"),
    "pair-root": (cmd_pair_root, "primitive root of two words"),
    "is-primitive-pair": (cmd_is_primitive_pair, "is {x, y} a primitive pair"),
    "is-primitive-set": (cmd_is_primitive_set, "is X^* |X|-maximal"),
    "set-roots": (cmd_set_roots, "all primitive roots of a set"),
    "intersect": (cmd_intersect, "intersection X^* ∩ U^* of two sets"),
    "intersect-pairs": (cmd_intersect_pairs, "generator of {x,y}^* ∩ {u,v}^* for primitive pairs"),
    "biroot": (cmd_biroot, "bi-roots of a primitive word"),
    "small-biroot": (cmd_small_biroot, "the bi-root of size below sqrt(|w|)"),
    "theta-apply": (cmd_theta_apply, "apply an involution"),
    "theta-root": (cmd_theta_root, "theta-root of a word"),
    "theta-primitive": (cmd_theta_primitive, "is the word theta-primitive"),
    "sweep": (cmd_sweep, "run an exhaustive or sampled sweep"),
    "replay": (cmd_replay, "re-run witness records from a sweep report"),
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="primsets", description="Primitive sets and roots in free monoids.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, metavar="COMMAND")
    sub.required = True
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.add_argument("--json", action="store_true", help="emit one JSON object")
        sp.add_argument("--assert", dest="assert_", action="store_true",
                        help="exit 1 when the predicate is false")
        if name == "sweep":
            sp.add_argument("experiment", choices=lab.EXPERIMENTS)
            sp.add_argument("--alphabet-size", type=int, default=2)
            sp.add_argument("--max-length", type=int, default=4)
            sp.add_argument("--seed", type=int)
            sp.add_argument("--count", type=int)
            sp.add_argument("--workers", type=int, default=1)
            sp.add_argument("--shard", help="run only shard INDEX/COUNT")
            sp.add_argument("--budget", type=float, help="wall-clock budget in seconds")
            sp.add_argument("--out", help="also write the report to this file")
            continue
        sp.add_argument("words", nargs="*" if name == "replay" else "+", metavar="WORD")
        if name == "biroot":
            sp.add_argument("--max-size", type=int)
        if name.startswith("theta-"):
            sp.add_argument("--theta", help="letter map such as a:b,b:a,c:c")
            sp.add_argument("--kind", choices=(theta.MORPHIC, theta.ANTIMORPHIC), default=theta.MORPHIC)
    return p


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, default=str)


def main(argv: Optional[list[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"primsets: {exc}", file=sys.stderr)
        return 2
    handler = COMMANDS[args.command][0]
    inp = vars(args).get("words", [args.experiment] if args.command == "sweep" else [])
    try:
        out = handler(args)
    except (UsageError, PreconditionError, MalformedWitness) as exc:
        print(f"primsets {args.command}: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"primsets {args.command}: invariant violated: {exc}", file=sys.stderr)
        if args.json:
            print(_dump({"command": args.command, "input": inp, "error": str(exc),
                         "witnesses": list(exc.witnesses)}))
        return 3
    if args.json:
        obj = {"command": args.command, "input": inp, "result": out.result}
        if out.witnesses is not None:
            obj["witnesses"] = out.witnesses
        print(_dump(obj))
    else:
        print("\n".join(out.text))
    if out.status:
        return out.status
    if args.assert_ and out.predicate is False:
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
