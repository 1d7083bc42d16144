"""Closed-form branching rules as data, verified against the tensor engine.

Every rule is a record in data/rules.json: a fixed small factor, a list of
shift vectors with multiplicities, and optional subtraction clauses that
fire when a named parameter is zero.  D_n family rules carry symbolic
coordinate indices in n (with one iterator variable i); one evaluator
materializes them all.  Targets that leave the dominant chamber denote the
zero module and are dropped.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable

from .rootsystem import RootSystem, Weight, build_root_system
from .tensor import Decomposition, tensor_decompose

_TOKEN = re.compile(r"\d+|//|[ni()+*-]")


def eval_index_expr(expr: str, n: int = 0, i: int = 0) -> int:
    """Evaluate an integer expression over +, -, *, //, parentheses, n, i."""
    tokens = _TOKEN.findall(expr.replace(" ", ""))
    if "".join(tokens) != expr.replace(" ", ""):
        raise ValueError(f"bad index expression {expr!r}")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"truncated index expression {expr!r}")
        tok = tokens[pos]
        pos += 1
        return tok

    def atom():
        tok = take()
        if tok == "(":
            v = expr_()
            if take() != ")":
                raise ValueError(f"unbalanced parens in {expr!r}")
            return v
        if tok == "-":
            return -atom()
        if tok == "n":
            return n
        if tok == "i":
            return i
        return int(tok)

    def term():
        v = atom()
        while peek() in ("*", "//"):
            if take() == "*":
                v = v * atom()
            else:
                v = v // atom()
        return v

    def expr_():
        v = term()
        while peek() in ("+", "-"):
            if take() == "+":
                v = v + term()
            else:
                v = v - term()
        return v

    value = expr_()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in {expr!r}")
    return value


@dataclass(frozen=True)
class ClosedFormRule:
    rule_id: str
    series: str
    rank: int | None  # None when parametric in n
    params: tuple[str, ...]
    raw: dict = field(repr=False)

    def system(self, params: dict[str, int]) -> RootSystem:
        rank = self.rank if self.rank is not None else int(params["n"])
        return build_root_system(self.series, rank)


def _default_rules_path() -> str:
    return str(resources.files("weylchar").joinpath("data/rules.json"))


@lru_cache(maxsize=None)
def _load(path: str) -> dict[str, ClosedFormRule]:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    rules = {}
    for rec in payload["rules"]:
        rank = rec["rank"] if isinstance(rec["rank"], int) else None
        rules[rec["id"]] = ClosedFormRule(
            rule_id=rec["id"], series=rec["series"], rank=rank,
            params=tuple(rec["params"]), raw=rec)
    return rules


def load_rules(path: str | None = None) -> dict[str, ClosedFormRule]:
    return _load(path or _default_rules_path())


def get_rule(rule_id: str, path: str | None = None) -> ClosedFormRule:
    rules = load_rules(path)
    if rule_id not in rules:
        raise ValueError(f"unknown rule {rule_id!r}; known: {', '.join(sorted(rules))}")
    return rules[rule_id]


def _terms_to_weight(terms, rank: int, n: int) -> Weight:
    coords = [0] * rank
    for idx_expr, coeff in terms:
        idx = eval_index_expr(str(idx_expr), n=n)
        coords[idx - 1] += coeff
    return tuple(coords)


def _materialize_shifts(rec: dict, rank: int, n: int) -> list[tuple[Weight, int]]:
    shifts: list[tuple[Weight, int]] = []
    for entry in rec["shifts"]:
        mult = entry.get("mult", 1)
        if "nu" in entry:
            shifts.append((tuple(entry["nu"]), mult))
            continue
        it = entry.get("iter")
        if it is None:
            shifts.append((_terms_to_weight(entry["terms"], rank, n), mult))
            continue
        lo = eval_index_expr(it["lo"], n=n)
        hi = eval_index_expr(it["hi"], n=n)
        for i in range(lo, hi + 1):
            coords = [0] * rank
            for idx_expr, coeff in entry["terms"]:
                coords[eval_index_expr(str(idx_expr), n=n, i=i) - 1] += coeff
            shifts.append((tuple(coords), mult))
    return shifts


def _small_factor(rec: dict, rank: int, n: int) -> Weight:
    if "small_weight" in rec:
        return tuple(rec["small_weight"])
    return _terms_to_weight(rec["small"], rank, n)


def rule_factors(rule: ClosedFormRule, params: dict[str, int]) -> tuple[Weight, Weight]:
    """(small factor, family weight) for the rule at the given parameters."""
    rec = rule.raw
    rs = rule.system(params)
    n = rs.rank
    family = [0] * n
    for name, pos_expr in rec["family"]:
        family[eval_index_expr(pos_expr, n=n) - 1] = int(params[name])
    return _small_factor(rec, n, n), tuple(family)


def closed_form(rule_id: str, params: dict[str, int], path: str | None = None) -> Decomposition:
    """Predicted decomposition of small_factor (x) family at the parameters."""
    rule = get_rule(rule_id, path)
    rec = rule.raw
    missing = [p for p in rule.params if p not in params]
    if missing:
        raise ValueError(f"rule {rule_id} needs parameters {missing}")
    for p in rule.params:
        if int(params[p]) < 0:
            raise ValueError(f"rule parameters must be non-negative, got {p}={params[p]}")
    rs = rule.system(params)
    small, family = rule_factors(rule, params)

    free_params = [p for p in rule.params if p != "n"]
    if rec.get("trivial_when_all_zero") and all(int(params[p]) == 0 for p in free_params):
        return Decomposition(components={small: 1}, factors=(small, family), system=rs)

    acc: dict[Weight, int] = {}
    for nu, mult in _materialize_shifts(rec, rs.rank, rs.rank):
        target = tuple(x + y for x, y in zip(family, nu))
        if min(target) >= 0:
            acc[target] = acc.get(target, 0) + mult
    for name, entries in rec.get("subtract", {}).items():
        if int(params[name]) == 0:
            for entry in entries:
                target = tuple(x + y for x, y in zip(family, entry["nu"]))
                if min(target) >= 0:
                    acc[target] = acc.get(target, 0) - entry.get("mult", 1)
    components = {w: m for w, m in acc.items() if m}
    if any(m < 0 for m in components.values()):
        raise ValueError(f"rule {rule_id} produced a negative multiplicity at {params}")
    return Decomposition(components=components, factors=(small, family), system=rs)


@dataclass(frozen=True)
class RulePoint:
    params: dict[str, int]
    match: bool
    predicted: dict[Weight, int]
    computed: dict[Weight, int]


@dataclass(frozen=True)
class RuleReport:
    rule_id: str
    points: tuple[RulePoint, ...]

    @property
    def ok(self) -> bool:
        return all(p.match for p in self.points)

    def mismatches(self) -> list[RulePoint]:
        return [p for p in self.points if not p.match]

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.rule_id}: {status} ({len(self.points)} points, {len(self.mismatches())} mismatches)"


def verify_rule(rule_id: str, param_grid: Iterable[dict[str, int]],
                path: str | None = None) -> RuleReport:
    """Check the closed form against the tensor engine on every grid point."""
    rule = get_rule(rule_id, path)
    points = []
    for params in param_grid:
        predicted = closed_form(rule_id, params, path)
        small, family = rule_factors(rule, params)
        computed = tensor_decompose(rule.system(params), small, family)
        computed.check_dimension()
        points.append(RulePoint(
            params=dict(params),
            match=predicted.components == computed.components,
            predicted=predicted.components,
            computed=computed.components))
    return RuleReport(rule_id=rule_id, points=tuple(points))
