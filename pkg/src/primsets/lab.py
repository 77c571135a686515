"""Exhaustive and sampled sweeps over small instances.

Each experiment walks a canonical instance grid (words by length then
lexicographic order, unordered pairs deduplicated) and applies one check.
Experiments for proven statements record violations; conjecture experiments only flag
candidates.  Reports are deterministic: the same spec gives the same bytes,
and merging shards gives the same report as a single run.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from math import isqrt
from typing import Any, Callable, Iterator, Optional

from .biroot import biroots, conjecture2_scan, small_biroot_bound
from .errors import InvariantViolation, MalformedWitness, PreconditionError
from .intersection import _single_generator, _trie_table, bound_report, intersect_2maximal
from .maximality import (canonical_pair, circular_witness, covering_pairs,
                         internal_xy_occurrence, is_primitive_pair,
                         is_primitive_pair_bruteforce, pair_root)
from .theta import MORPHIC, ThetaMap, apply, check_prop17, involutions, is_theta_primitive
from .words import commute, is_primitive

THEOREMS = ("thm6", "thm9", "thm11", "prop13", "thm14", "prop17")
CONJECTURES = ("conj1", "conj2")
EXPERIMENTS = THEOREMS + CONJECTURES


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class SweepSpec:
    experiment: str
    alphabet_size: int
    max_word_length: int
    sample_seed: Optional[int] = None
    sample_count: Optional[int] = None

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise PreconditionError(f"unknown experiment {self.experiment!r}; choose from {', '.join(EXPERIMENTS)}")
        if not 1 <= self.alphabet_size <= 26:
            raise PreconditionError("alphabet_size must be between 1 and 26")
        if self.max_word_length < 1:
            raise PreconditionError("max_word_length must be positive")
        if (self.sample_seed is None) != (self.sample_count is None):
            raise PreconditionError("sample_seed and sample_count go together")

    @property
    def alphabet(self) -> str:
        return "abcdefghijklmnopqrstuvwxyz"[: self.alphabet_size]

    @property
    def exhaustive(self) -> bool:
        return self.sample_seed is None


@dataclass
class SweepReport:
    spec: SweepSpec
    instances_checked: int = 0
    filtered: int = 0
    violations: list = field(default_factory=list)
    candidates: list = field(default_factory=list)
    # name -> [op, value, witness]; op is "sum", "max" or "min"
    stats: dict = field(default_factory=dict)
    partial: bool = False

    @property
    def exit_code(self) -> int:
        if self.violations:
            return 3
        if self.candidates:
            return 4
        return 0

    def record(self, name: str, op: str, value, witness: Any = None) -> None:
        w = _dumps(witness) if witness is not None else ""
        cur = self.stats.get(name)
        if cur is None:
            self.stats[name] = [op, value, w]
        elif op == "sum":
            cur[1] += value
        elif (op == "max" and (value, _neg(w)) > (cur[1], _neg(cur[2]))) or \
             (op == "min" and (value, w) < (cur[1], cur[2])):
            cur[1], cur[2] = value, w

    def render(self) -> str:
        lines = ["# " + _dumps(asdict(self.spec)),
                 f"instances_checked,{self.instances_checked}",
                 f"filtered,{self.filtered}",
                 f"partial,{str(self.partial).lower()}"]
        for name in sorted(self.stats):
            op, value, w = self.stats[name]
            lines.append(f"stat,{name},{op},{value},{w}")
        lines += sorted("violation " + _dumps(v) for v in self.violations)
        lines += sorted("candidate " + _dumps(c) for c in self.candidates)
        return "\n".join(lines) + "\n"


def _neg(s: str) -> tuple:
    # larger-is-better comparison that still prefers the smaller witness
    return tuple(-ord(c) for c in s) + (1,)


def merge_reports(reports: list[SweepReport]) -> SweepReport:
    if not reports:
        raise ValueError("nothing to merge")
    out = SweepReport(reports[0].spec)
    for r in reports:
        if r.spec != out.spec:
            raise ValueError("cannot merge reports of different sweeps")
        out.instances_checked += r.instances_checked
        out.violations += r.violations
        out.candidates += r.candidates
        out.partial = out.partial or r.partial
        for name, (op, value, w) in r.stats.items():
            out.record(name, op, value, json.loads(w) if w else None)
    out.filtered = reports[0].filtered
    return out


# ----------------------------------------------------------------------
# instance grids


def all_words(alphabet: str, max_len: int) -> list[str]:
    return ["".join(p) for n in range(1, max_len + 1) for p in product(alphabet, repeat=n)]


def primitive_pairs(alphabet: str, max_len: int) -> tuple[list, int]:
    """Primitive pairs with both components of length <= max_len, and the
    number of word pairs that the filter rejected."""
    ws = all_words(alphabet, max_len)
    out, rejected = [], 0
    for x, y in combinations(ws, 2):
        if is_primitive_pair(x, y):
            out.append(canonical_pair(x, y))
        else:
            rejected += 1
    return out, rejected


class _Grid:
    """An indexed instance grid; ``evaluate`` turns one instance into a verdict."""

    def __init__(self, spec: SweepSpec):
        self.spec = spec
        self.filtered = 0

    def __len__(self) -> int:
        raise NotImplementedError

    def items(self, keep: Callable[[int], bool]) -> Iterator[tuple[int, dict]]:
        raise NotImplementedError


class _ListGrid(_Grid):
    def __init__(self, spec, instances, filtered):
        super().__init__(spec)
        self.instances = instances
        self.filtered = filtered

    def __len__(self):
        return len(self.instances)

    def items(self, keep):
        for k, inst in enumerate(self.instances):
            if keep(k):
                yield k, inst


class _PairOfPairsGrid(_Grid):
    """Unordered pairs of distinct primitive pairs, indexed row by row."""

    def __init__(self, spec):
        super().__init__(spec)
        self.pairs, self.filtered = primitive_pairs(spec.alphabet, spec.max_word_length)
        self.tables = [_trie_table(p) for p in self.pairs]

    def __len__(self):
        n = len(self.pairs)
        return n * (n - 1) // 2

    def items(self, keep):
        n = len(self.pairs)
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                if keep(k):
                    yield k, (i, j)
                k += 1


def _build_grid(spec: SweepSpec) -> _Grid:
    e, al, n = spec.experiment, spec.alphabet, spec.max_word_length
    if e in ("thm6", "conj1"):
        return _PairOfPairsGrid(spec)
    if e == "thm9":
        ws = all_words(al, n)
        insts, rej = [], 0
        for x, y in combinations(ws, 2):
            if commute(x, y):
                rej += 1
            else:
                insts.append({"x": x, "y": y})
        return _ListGrid(spec, insts, rej)
    if e in ("thm11", "prop13"):
        pairs, rej = primitive_pairs(al, n)
        return _ListGrid(spec, [{"x": x, "y": y} for x, y in pairs], rej)
    if e in ("thm14", "conj2"):
        ws = all_words(al, n)
        prim = [{"w": w} for w in ws if is_primitive(w)]
        return _ListGrid(spec, prim, len(ws) - len(prim))
    if e == "prop17":
        insts, rej = [], 0
        for theta in involutions(al, MORPHIC):
            for w in all_words(al, n):
                if apply(theta, w) == w:
                    rej += 1
                else:
                    insts.append({"theta": theta.render(), "w": w})
        return _ListGrid(spec, insts, rej)
    raise PreconditionError(f"unknown experiment {e!r}")  # pragma: no cover


# ----------------------------------------------------------------------
# per-instance checks; each returns a verdict dict with an "ok" flag


def _field(inst: dict, name: str) -> str:
    v = inst.get(name)
    if not isinstance(v, str) or not v:
        raise MalformedWitness(f"instance field {name!r} missing or not a nonempty word")
    return v


def _eval_intersection(inst: dict) -> dict:
    px = (_field(inst, "x"), _field(inst, "y"))
    pu = (_field(inst, "u"), _field(inst, "v"))
    try:
        z = intersect_2maximal(px, pu)
    except InvariantViolation as exc:
        return {"ok": False, "reason": str(exc)}
    if z is None:
        return {"ok": True, "z": None}
    try:
        rep = bound_report(px, pu, z)
    except InvariantViolation as exc:
        return {"ok": False, "z": z, "reason": str(exc)}
    return {"ok": True, "z": z, "z_length": rep.z_length,
            "size_product_bound": rep.size_product_bound,
            "conjecture1_bound": rep.conjecture1_bound,
            "conjecture1_holds": rep.conjecture1_holds}


def _eval_thm9(inst: dict) -> dict:
    x, y = _field(inst, "x"), _field(inst, "y")
    covers = covering_pairs(x, y)
    prim = [p for p in covers if is_primitive_pair_bruteforce(*p)]
    root = pair_root(x, y)
    got = list(root.root_pair) if root.root_pair else None
    ok = len(prim) == 1 and got == list(prim[0])
    return {"ok": ok, "covering_pairs": len(covers),
            "primitive_covering_pairs": [list(p) for p in prim], "pair_root": got}


def _eval_thm11(inst: dict) -> dict:
    occ = internal_xy_occurrence(_field(inst, "x"), _field(inst, "y"))
    if occ is None:
        return {"ok": True}
    return {"ok": False, "triple": occ.triple, "pattern": occ.pattern, "offset": occ.offset}


def _eval_prop13(inst: dict) -> dict:
    x, y = _field(inst, "x"), _field(inst, "y")
    bound = 3 * (len(x) + len(y))
    wit = circular_witness((x, y), bound)
    if wit is None:
        return {"ok": True, "bound": bound}
    return {"ok": False, "bound": bound, "u": wit[0], "v": wit[1]}


def _eval_thm14(inst: dict) -> dict:
    w = _field(inst, "w")
    bound = small_biroot_bound(len(w))
    small = biroots(w, bound) if bound >= 2 else []
    return {"ok": len(small) <= 1, "small_biroots": [list(b.pair) for b in small]}


def _eval_prop17(inst: dict) -> dict:
    try:
        theta = ThetaMap.parse(_field(inst, "theta"), MORPHIC)
    except PreconditionError as exc:
        raise MalformedWitness(str(exc)) from None
    w = _field(inst, "w")
    tp = is_theta_primitive(theta, w)
    ok = check_prop17(theta, w)
    return {"ok": ok, "theta_primitive": tp}


def _eval_conj2(inst: dict) -> dict:
    scan = conjecture2_scan(_field(inst, "w"))
    return {"ok": not scan.candidate, "count_below_half": scan.count_below_half,
            "witnesses": [list(b.pair) for b in scan.witnesses]}


EVALUATORS: dict[str, Callable[[dict], dict]] = {
    "thm6": _eval_intersection,
    "conj1": _eval_intersection,
    "thm9": _eval_thm9,
    "thm11": _eval_thm11,
    "prop13": _eval_prop13,
    "thm14": _eval_thm14,
    "prop17": _eval_prop17,
    "conj2": _eval_conj2,
}


def _stats_for(report: SweepReport, experiment: str, inst: dict, verdict: dict) -> None:
    if experiment in ("thm6", "conj1"):
        if verdict.get("z") is not None and "z_length" in verdict:
            report.record("nontrivial", "sum", 1)
            wit = dict(inst, z=verdict["z"])
            report.record("max_z_length", "max", verdict["z_length"], wit)
            report.record("min_prop7_slack", "min",
                          verdict["size_product_bound"] - verdict["z_length"], wit)
            report.record("min_conj1_margin", "min",
                          verdict["conjecture1_bound"] - verdict["z_length"], wit)
    elif experiment == "thm9":
        report.record("max_covering_pairs", "max", verdict["covering_pairs"], inst)
    elif experiment == "thm14":
        if verdict["small_biroots"]:
            report.record("with_small_biroot", "sum", 1)
    elif experiment == "prop17":
        if verdict["theta_primitive"]:
            report.record("theta_primitive", "sum", 1)
    elif experiment == "conj2":
        if verdict["count_below_half"]:
            report.record("with_short_biroot", "sum", 1)
        report.record("max_count_below_half", "max", verdict["count_below_half"], inst)


def _witness(experiment: str, inst: dict, verdict: dict) -> dict:
    return {"experiment": experiment, "instance": inst, "verdict": verdict}


def _selection(spec: SweepSpec, size: int) -> Optional[set]:
    if spec.exhaustive:
        return None
    rng = random.Random(spec.sample_seed)
    return set(rng.sample(range(size), min(spec.sample_count, size)))


def run_sweep(spec: SweepSpec, shard: tuple[int, int] = (0, 1),
              budget_seconds: Optional[float] = None, workers: int = 1) -> SweepReport:
    """Run one experiment over its grid (or over ``shard = (index, count)`` of it).

    With ``workers > 1`` the grid is split into that many shards run in
    separate processes and merged.  A wall-clock ``budget_seconds`` stops
    early and marks the report partial.
    """
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            futs = [pool.submit(run_sweep, spec, (i, workers), budget_seconds)
                    for i in range(workers)]
            return merge_reports([f.result() for f in futs])

    index, count = shard
    if not 0 <= index < count:
        raise PreconditionError("shard index out of range")
    grid = _build_grid(spec)
    report = SweepReport(spec, filtered=grid.filtered)
    chosen = _selection(spec, len(grid))

    def keep(k):
        return k % count == index and (chosen is None or k in chosen)

    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
    if isinstance(grid, _PairOfPairsGrid):
        _run_pairs_of_pairs(grid, keep, report, deadline)
        return report

    evaluate = EVALUATORS[spec.experiment]
    conjecture = spec.experiment in CONJECTURES
    for k, inst in grid.items(keep):
        if deadline is not None and report.instances_checked % 64 == 0 and time.monotonic() > deadline:
            report.partial = True
            break
        try:
            verdict = evaluate(inst)
        except InvariantViolation as exc:
            verdict = {"ok": False, "reason": str(exc)}
        report.instances_checked += 1
        if not verdict["ok"]:
            (report.candidates if conjecture else report.violations).append(
                _witness(spec.experiment, inst, verdict))
        else:
            _stats_for(report, spec.experiment, inst, verdict)
    return report


def _run_pairs_of_pairs(grid: _PairOfPairsGrid, keep, report: SweepReport, deadline) -> None:
    # Same computation as intersect_2maximal, with the per-pair automata
    # built once for the whole grid.
    e = report.spec.experiment
    pairs, tables = grid.pairs, grid.tables
    for k, (i, j) in grid.items(keep):
        if deadline is not None and report.instances_checked % 4096 == 0 and time.monotonic() > deadline:
            report.partial = True
            break
        report.instances_checked += 1
        (x, y), (u, v) = pairs[i], pairs[j]
        try:
            z = _single_generator(tables[i], tables[j])
        except InvariantViolation as exc:
            inst = {"x": x, "y": y, "u": u, "v": v}
            report.violations.append(_witness(e, inst, {"ok": False, "reason": str(exc)}))
            continue
        if z is None:
            continue
        inst = {"x": x, "y": y, "u": u, "v": v}
        if not is_primitive(z):
            report.violations.append(_witness(e, inst, {"ok": False, "z": z, "reason": "z is not primitive"}))
            continue
        verdict = _eval_intersection_known(pairs[i], pairs[j], z)
        if not verdict["ok"]:
            report.violations.append(_witness(e, inst, verdict))
            continue
        _stats_for(report, e, inst, verdict)
        if e == "conj1" and not verdict["conjecture1_holds"]:
            report.candidates.append(_witness(e, inst, verdict))


def _eval_intersection_known(px, pu, z) -> dict:
    try:
        rep = bound_report(px, pu, z)
    except InvariantViolation as exc:
        return {"ok": False, "z": z, "reason": str(exc)}
    return {"ok": True, "z": z, "z_length": rep.z_length,
            "size_product_bound": rep.size_product_bound,
            "conjecture1_bound": rep.conjecture1_bound,
            "conjecture1_holds": rep.conjecture1_holds}


# ----------------------------------------------------------------------
# replay


def replay(record) -> dict:
    """Re-run the single instance of a witness record and return its verdict."""
    if isinstance(record, str):
        try:
            record = json.loads(record)
        except json.JSONDecodeError as exc:
            raise MalformedWitness(f"not JSON: {exc}") from None
    if not isinstance(record, dict):
        raise MalformedWitness("a witness record is a JSON object")
    experiment = record.get("experiment")
    inst = record.get("instance")
    if experiment not in EVALUATORS:
        raise MalformedWitness(f"unknown experiment {experiment!r}")
    if not isinstance(inst, dict):
        raise MalformedWitness("missing instance object")
    try:
        verdict = EVALUATORS[experiment](inst)
    except PreconditionError as exc:
        raise MalformedWitness(f"instance rejected: {exc}") from None
    except InvariantViolation as exc:
        verdict = {"ok": False, "reason": str(exc)}
    return verdict


def replay_matches(record) -> bool:
    """True when the recorded verdict is reproduced exactly."""
    if isinstance(record, str):
        try:
            record = json.loads(record)
        except json.JSONDecodeError as exc:
            raise MalformedWitness(f"not JSON: {exc}") from None
    if not isinstance(record, dict) or "verdict" not in record:
        raise MalformedWitness("record has no verdict to compare against")
    return _dumps(replay(record)) == _dumps(record["verdict"])
