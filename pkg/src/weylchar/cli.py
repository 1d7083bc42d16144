"""Command-line front end with stable text and JSON output.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource
guard refused the computation.  Output ordering is deterministic: weights
sort lexicographically, levels ascend, and JSON keys are sorted, so repeated
invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from dataclasses import dataclass

from . import branchrules, dirac
from .errors import GuardError
from .hermitian import pair_data, schmid_components, schmid_level_dimension, to_branch_labels
from .rootsystem import build_root_system, coroot_pairing, invariant_form
from .tensor import Decomposition, tensor_decompose, tensor_oracle
from .weights import dominant_weight_multiplicities, full_weight_multiset, weyl_dimension
from .weyl import to_dominant, weyl_orbit

OK, MISMATCH, USAGE, GUARD = 0, 1, 2, 3


@dataclass(frozen=True)
class CommandResult:
    status: int
    payload: dict
    lines: tuple[str, ...]


def _parse_type(text: str):
    series, rank = text[0].upper(), text[1:]
    if not rank.isdigit():
        raise ValueError(f"bad root system {text!r}; expected e.g. A2, D5, E6")
    return build_root_system(series, int(rank))


def _parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"bad weight {text!r}; expected comma-separated integers") from None


def _parse_params(text: str) -> dict[str, int]:
    out = {}
    for piece in text.split(","):
        name, _, value = piece.partition("=")
        if not value:
            raise ValueError(f"bad parameter {piece!r}; expected name=value")
        out[name.strip()] = int(value)
    return out


def _parse_grid(text: str) -> list[dict[str, int]]:
    axes = []
    for piece in text.split(","):
        name, _, value = piece.partition("=")
        lo, sep, hi = value.partition("..")
        rng = range(int(lo), int(hi) + 1) if sep else [int(lo)]
        axes.append((name.strip(), list(rng)))
    names = [n for n, _ in axes]
    return [dict(zip(names, combo)) for combo in itertools.product(*(v for _, v in axes))]


def _decomposition_payload(dec: Decomposition) -> dict:
    return {
        "system": {"series": dec.system.series, "rank": dec.system.rank},
        "factors": [list(dec.factors[0]), list(dec.factors[1])],
        "components": [{"weight": list(w), "mult": m} for w, m in dec.sorted_items()],
    }


def _decomposition_lines(dec: Decomposition) -> list[str]:
    return [f"{m} x [{','.join(str(c) for c in w)}]" for w, m in dec.sorted_items()]


def _series_payload(series: dirac.KCharacterSeries) -> dict:
    levels = []
    for level in range(series.max_level + 1):
        levels.append({
            "level": level,
            "central": series.level_central(level),
            "ktypes": [{"ss": list(kt.ss), "central": kt.central, "mult": m}
                       for kt, m in series.sorted_level(level)],
        })
    return {"pair": series.pair_id, "base_central": series.base_central, "levels": levels}


def _series_lines(series: dirac.KCharacterSeries) -> list[str]:
    lines = []
    for level in range(series.max_level + 1):
        entries = " ".join(f"{m}x{kt}" for kt, m in series.sorted_level(level))
        lines.append(f"level {level} (central {series.level_central(level)}): {entries}")
    return lines


def _cmd_roots(args) -> CommandResult:
    rs = _parse_type(args.type)
    payload = {
        "system": {"series": rs.series, "rank": rs.rank},
        "positive_roots": [list(r) for r in rs.positive_roots],
        "cartan": [list(row) for row in rs.cartan],
        "rho": list(rs.rho),
        "weyl_order": rs.weyl_order,
    }
    lines = [f"{rs.series}{rs.rank}: {len(rs.positive_roots)} positive roots, |W| = {rs.weyl_order}"]
    lines += [f"  [{','.join(str(c) for c in r)}]" for r in rs.positive_roots]
    return CommandResult(OK, payload, tuple(lines))


def _cmd_dominant(args) -> CommandResult:
    rs = _parse_type(args.type)
    result = to_dominant(rs, _parse_weight(args.weight))
    payload = {"dominant": list(result.dominant), "sign": result.sign,
               "reflections": result.reflections}
    line = (f"[{','.join(str(c) for c in result.dominant)}] sign {result.sign:+d} "
            f"after {result.reflections} reflections")
    if result.sign == 0:
        line = f"[{','.join(str(c) for c in result.dominant)}] singular (sign 0)"
    return CommandResult(OK, payload, (line,))


def _cmd_dim(args) -> CommandResult:
    rs = _parse_type(args.type)
    dim = weyl_dimension(rs, _parse_weight(args.weight))
    return CommandResult(OK, {"dim": dim}, (str(dim),))


def _cmd_weights(args) -> CommandResult:
    rs = _parse_type(args.type)
    weight = _parse_weight(args.weight)
    if args.full:
        ms = full_weight_multiset(rs, weight)
        items = sorted(ms.entries.items())
        payload = {"total": ms.total,
                   "weights": [{"weight": list(w), "mult": m} for w, m in items]}
        lines = [f"total {ms.total}"] + [f"{m} x [{','.join(str(c) for c in w)}]" for w, m in items]
    else:
        mults = dominant_weight_multiplicities(rs, weight)
        items = sorted(mults.items())
        payload = {"dominant_multiplicities": [{"weight": list(w), "mult": m} for w, m in items]}
        lines = [f"{m} x [{','.join(str(c) for c in w)}]" for w, m in items]
    return CommandResult(OK, payload, tuple(lines))


def _cmd_tensor(args) -> CommandResult:
    rs = _parse_type(args.type)
    engine = tensor_oracle if args.oracle else tensor_decompose
    dec = engine(rs, _parse_weight(args.left), _parse_weight(args.right))
    dec.check_dimension()
    return CommandResult(OK, _decomposition_payload(dec), tuple(_decomposition_lines(dec)))


def _cmd_rule(args) -> CommandResult:
    dec = branchrules.closed_form(args.id, _parse_params(args.params), args.rules_file)
    return CommandResult(OK, _decomposition_payload(dec), tuple(_decomposition_lines(dec)))


def _cmd_schmid(args) -> CommandResult:
    pair = pair_data(args.pair, args.pairs_file)
    comps = schmid_components(pair, args.max_level)
    payload = {"pair": pair.pair_id, "components": [
        {"params": params, "ss": list(kt.ss), "central": kt.central}
        for params, kt in comps]}
    lines = [f"{kt} {params}" for params, kt in comps]
    return CommandResult(OK, payload, tuple(lines))


def _cmd_kspectrum(args) -> CommandResult:
    if args.closed_form:
        series = dirac.closed_form_spectrum(args.module, args.max_level)
    else:
        data = dirac.dirac_registry(args.module)
        series = dirac.dirac_k_spectrum(pair_data(data.pair_id, args.pairs_file), data, args.max_level)
    return CommandResult(OK, _series_payload(series), tuple(_series_lines(series)))


def _cmd_report(args) -> CommandResult:
    data = dirac.dirac_registry(args.module)
    pair = pair_data(data.pair_id, args.pairs_file)
    grouping = tuple(int(t) for t in args.group.split(","))
    rep = dirac.cancellation_report(pair, data, args.max_level, grouping)
    buckets_payload = []
    lines = []
    for bucket, entries in rep.buckets.items():
        cancels = rep.bucket_cancels(bucket)
        bucket_txt = f"({','.join(str(b) for b in bucket)})"
        if cancels:
            lines.append(f"bucket {bucket_txt}: cancels")
        else:
            leftovers = [f"{m}x{kt}" for bl in entries for kt, m in bl.leftover_plus]
            leftovers += [f"-{m}x{kt}" for bl in entries for kt, m in bl.leftover_minus]
            lines.append(f"bucket {bucket_txt}: leftover {' '.join(leftovers)}")
        buckets_payload.append({
            "bucket": list(bucket),
            "cancels": cancels,
            "levels": [{
                "level": bl.level,
                "central": bl.central,
                "plus": [{"ss": list(k.ss), "central": k.central, "mult": m} for k, m in bl.plus],
                "minus": [{"ss": list(k.ss), "central": k.central, "mult": m} for k, m in bl.minus],
                "leftover_plus": [{"ss": list(k.ss), "central": k.central, "mult": m}
                                  for k, m in bl.leftover_plus],
                "leftover_minus": [{"ss": list(k.ss), "central": k.central, "mult": m}
                                   for k, m in bl.leftover_minus],
            } for bl in entries],
        })
    payload = {"module": rep.module_id, "pair": rep.pair_id, "grouping": list(rep.grouping),
               "max_level": rep.max_level, "buckets": buckets_payload}
    return CommandResult(OK, payload, tuple(lines))


_DEFAULT_GRIDS = {
    "Thm3.2": "n=4..7,a1=0..2,an1=0..2",
    "Cor3.3": "a=0..3,d=0..3",
    "Lem3.": "a=0..3,f=0..3",
}


def _default_grid(rule_id: str) -> list[dict[str, int]]:
    for prefix, grid in _DEFAULT_GRIDS.items():
        if rule_id.startswith(prefix):
            return _parse_grid(grid)
    raise ValueError(f"no default grid for rule {rule_id!r}")


def _verify_rules(args, results: list, lines: list) -> None:
    rule_ids = sorted(branchrules.load_rules(args.rules_file)) if args.rule in (None, "all") else [args.rule]
    for rule_id in rule_ids:
        grid = _parse_grid(args.grid) if args.grid else _default_grid(rule_id)
        rep = branchrules.verify_rule(rule_id, grid, args.rules_file)
        results.append({"id": rule_id, "points": len(rep.points), "ok": rep.ok})
        lines.append(rep.summary())


def _verify_spectra(args, results: list, lines: list) -> None:
    modules = dirac.module_ids() if args.module in (None, "all") else [args.module]
    for module_id in modules:
        rep = dirac.verify_spectrum(module_id, args.max_level)
        results.append({"id": rep.module_id, "max_level": rep.max_level, "ok": rep.ok})
        lines.append(rep.summary())


def _random_dominant(rng: random.Random, rank: int, bound: int) -> tuple[int, ...]:
    return tuple(rng.randint(0, bound) for _ in range(rank))


def _verify_oracle(args, results: list, lines: list) -> None:
    systems = (args.systems or "A2,A3,D4,D5").split(",")
    rng = random.Random(args.seed)
    for name in systems:
        rs = _parse_type(name)
        checked = 0
        ok = True
        attempts = 0
        while checked < args.count and attempts < 50 * args.count:
            attempts += 1
            left = _random_dominant(rng, rs.rank, args.bound)
            right = _random_dominant(rng, rs.rank, args.bound)
            try:
                oracle = tensor_oracle(rs, left, right)
            except GuardError:
                continue
            fast = tensor_decompose(rs, left, right)
            fast.check_dimension()
            if fast.components != oracle.components:
                ok = False
                lines.append(f"oracle mismatch on {name} {left} (x) {right}")
            checked += 1
        results.append({"id": f"oracle-{name}", "points": checked, "ok": ok})
        lines.append(f"oracle {name}: {'PASS' if ok else 'FAIL'} ({checked} pairs)")


def _verify_schmid(args, results: list, lines: list) -> None:
    from math import comb

    for pair_id in ("EIII", "EVII"):
        pair = pair_data(pair_id, args.pairs_file)
        ok = True
        for d in range(args.max_level + 1):
            got = schmid_level_dimension(pair, d)
            want = comb(pair.dim_p_minus + d - 1, d)
            if got != want:
                ok = False
                lines.append(f"schmid {pair_id} level {d}: {got} != {want}")
        results.append({"id": f"schmid-{pair_id}", "max_level": args.max_level, "ok": ok})
        lines.append(f"schmid {pair_id}: {'PASS' if ok else 'FAIL'} (levels 0..{args.max_level})")


def _cmd_verify(args) -> CommandResult:
    results: list[dict] = []
    lines: list[str] = []
    suites = ["rules", "spectra", "oracle", "schmid"] if args.suite == "all" else [args.suite]
    for suite in suites:
        {"rules": _verify_rules, "spectra": _verify_spectra,
         "oracle": _verify_oracle, "schmid": _verify_schmid}[suite](args, results, lines)
    ok = all(r["ok"] for r in results)
    lines.append("PASS" if ok else "FAIL")
    payload = {"suite": args.suite, "results": results, "status": "PASS" if ok else "FAIL"}
    return CommandResult(OK if ok else MISMATCH, payload, tuple(lines))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylchar",
        description="Exact Weyl character computations for simply-laced root systems")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="positive roots and Cartan data")
    p.add_argument("--type", required=True)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("dominant", help="dominant representative with sign")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=_cmd_dominant)

    p = sub.add_parser("dim", help="Weyl dimension of an irreducible module")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("weights", help="weight multiplicities of a module")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--full", action="store_true", help="whole multiset, not only dominant weights")
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("tensor", help="tensor product decomposition")
    p.add_argument("--type", required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--oracle", action="store_true", help="use the brute-force engine")
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("rule", help="closed-form rule evaluation")
    p.add_argument("--id", required=True)
    p.add_argument("--params", required=True, help="e.g. a=2,f=2 or n=5,a1=1,an1=0")
    p.add_argument("--rules-file", default=None)
    p.set_defaults(func=_cmd_rule)

    p = sub.add_parser("schmid", help="symmetric-algebra components of a Hermitian pair")
    p.add_argument("--pair", required=True)
    p.add_argument("--max-level", type=int, default=4)
    p.add_argument("--pairs-file", default=None)
    p.set_defaults(func=_cmd_schmid)

    p = sub.add_parser("kspectrum", help="K-spectrum recovered from Dirac cohomology")
    p.add_argument("--module", required=True)
    p.add_argument("--max-level", type=int, default=8)
    p.add_argument("--closed-form", action="store_true", help="enumerate the known family instead")
    p.add_argument("--pairs-file", default=None)
    p.set_defaults(func=_cmd_kspectrum)

    p = sub.add_parser("report", help="cancellation ledger grouped by coordinates")
    p.add_argument("--module", required=True)
    p.add_argument("--max-level", type=int, default=6)
    p.add_argument("--group", default="2,3,4,5")
    p.add_argument("--pairs-file", default=None)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("verify", help="verification suites (exit 1 on mismatch)")
    p.add_argument("--suite", choices=("rules", "spectra", "oracle", "schmid", "all"), required=True)
    p.add_argument("--rule", default=None)
    p.add_argument("--grid", default=None)
    p.add_argument("--module", default=None)
    p.add_argument("--max-level", type=int, default=8)
    p.add_argument("--seed", type=int, default=20240)
    p.add_argument("--count", type=int, default=25)
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--systems", default=None)
    p.add_argument("--rules-file", default=None)
    p.add_argument("--pairs-file", default=None)
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv: list[str]) -> CommandResult:
    """Execute one CLI invocation and return its result without printing."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; normalize the exit code
        code = USAGE if exc.code not in (0,) else OK
        return CommandResult(code, {"error": "usage"}, ())
    try:
        result = args.func(args)
    except GuardError as exc:
        return CommandResult(GUARD, {"error": str(exc)}, (f"guard: {exc}",))
    except (ValueError, KeyError) as exc:
        return CommandResult(USAGE, {"error": str(exc)}, (f"error: {exc}",))
    if args.format == "json":
        return CommandResult(result.status, result.payload,
                             (json.dumps(result.payload, sort_keys=True, indent=2),))
    return result


def main(argv: list[str] | None = None) -> None:
    result = run(sys.argv[1:] if argv is None else argv)
    for line in result.lines:
        print(line)
    sys.exit(result.status)


if __name__ == "__main__":
    main()
