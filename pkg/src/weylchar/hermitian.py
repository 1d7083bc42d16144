"""Hermitian pair data: EIII and EVII conventions and Schmid gradings.

A K-type is a compact-side dominant weight together with an integer central
coordinate (the last entry of the bracket tuples; it may be negative).  The
grading level of a K-type is its central drop divided by the pair's step,
which is intrinsic: the center acts by a scalar on each symmetric-power
layer, so level d is exactly the degree-d layer.

The EIII compact system is D5 but labelled in reverse of the branching-rule
convention, so decompositions route through display_permutation both ways.
For EVII the two labellings agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .rootsystem import RootSystem, Weight, build_root_system, is_dominant_integral
from .tensor import tensor_decompose
from .weights import weyl_dimension


@dataclass(frozen=True)
class KType:
    ss: Weight
    central: int

    def bracket(self) -> tuple[int, ...]:
        return self.ss + (self.central,)

    def __repr__(self) -> str:
        return "[" + ",".join(str(c) for c in self.bracket()) + "]"


@dataclass(frozen=True)
class HermitianPair:
    pair_id: str
    k_system: RootSystem
    zeta_scale: int
    delta_n_central: int
    level_step: int
    dim_p_minus: int
    schmid_generators: tuple[tuple[KType, int, str], ...]  # (ktype, degree, param name)
    display_permutation: tuple[int, ...]  # 1-based positions into the K bracket
    g_side: dict

    def __hash__(self) -> int:
        return hash(self.pair_id)

    def delta_n(self) -> KType:
        return KType(ss=tuple([0] * self.k_system.rank), central=self.delta_n_central)


def _default_pairs_path() -> str:
    return str(resources.files("weylchar").joinpath("data/pairs.json"))


@lru_cache(maxsize=None)
def _load_pairs(path: str) -> dict[str, HermitianPair]:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    pairs = {}
    for rec in payload["pairs"]:
        ks = build_root_system(rec["k_series"], rec["k_rank"])
        gens = tuple(
            (KType(ss=tuple(g["ss"]), central=g["central"]), g["degree"], g["param"])
            for g in rec["schmid_generators"])
        pair = HermitianPair(
            pair_id=rec["id"],
            k_system=ks,
            zeta_scale=rec["zeta_scale"],
            delta_n_central=rec["delta_n_central"],
            level_step=rec["level_step"],
            dim_p_minus=rec["dim_p_minus"],
            schmid_generators=gens,
            display_permutation=tuple(rec["display_permutation"]),
            g_side=rec["g_side"],
        )
        _validate_pair(pair)
        pairs[rec["id"]] = pair
    return pairs


def _validate_pair(pair: HermitianPair) -> None:
    rank = pair.k_system.rank
    if sorted(pair.display_permutation) != list(range(1, rank + 1)):
        raise ValueError(f"{pair.pair_id}: display_permutation is not a permutation")
    for gen, degree, _ in pair.schmid_generators:
        if gen.central != -pair.level_step * degree:
            raise ValueError(
                f"{pair.pair_id}: generator {gen} has central {gen.central}, "
                f"expected {-pair.level_step * degree}")
        if not is_dominant_integral(gen.ss):
            raise ValueError(f"{pair.pair_id}: generator {gen} is not dominant")
    first = next(g for g, d, _ in pair.schmid_generators if d == 1)
    dim1 = weyl_dimension(pair.k_system, to_branch_labels(pair, first))
    if dim1 != pair.dim_p_minus:
        raise ValueError(
            f"{pair.pair_id}: degree-1 generator has dimension {dim1}, "
            f"expected {pair.dim_p_minus}")


def pair_data(pair_id: str, path: str | None = None) -> HermitianPair:
    """Load and validate one Hermitian pair record."""
    pairs = _load_pairs(path or _default_pairs_path())
    if pair_id not in pairs:
        raise ValueError(f"unknown pair {pair_id!r}; known: {', '.join(sorted(pairs))}")
    return pairs[pair_id]


def to_branch_labels(pair: HermitianPair, ktype_or_ss) -> Weight:
    """Semisimple part in the branching-rule labelling of the compact system."""
    ss = ktype_or_ss.ss if isinstance(ktype_or_ss, KType) else tuple(ktype_or_ss)
    return tuple(ss[p - 1] for p in pair.display_permutation)


def from_branch_labels(pair: HermitianPair, weight: Weight) -> Weight:
    """Inverse of to_branch_labels on semisimple parts."""
    out = [0] * len(weight)
    for j, p in enumerate(pair.display_permutation):
        out[p - 1] = weight[j]
    return tuple(out)


def schmid_components(pair: HermitianPair, max_level: int) -> list[tuple[dict[str, int], KType]]:
    """All symmetric-algebra components of level at most max_level.

    Components are the monomials in the generators; each appears exactly once
    per exponent tuple, tagged with the exponents under the generators'
    parameter names.
    """
    if max_level < 0:
        raise ValueError("max_level must be non-negative")
    out = []
    for level in range(max_level + 1):
        out.extend(schmid_level(pair, level))
    return out


def schmid_level(pair: HermitianPair, level: int) -> list[tuple[dict[str, int], KType]]:
    """Symmetric-algebra components of exactly the given level."""
    gens = pair.schmid_generators
    rank = pair.k_system.rank
    out = []

    def rec(idx: int, remaining: int, exps: list[int]):
        if idx == len(gens) - 1:
            gen, degree, _ = gens[idx]
            if remaining % degree == 0:
                out.append(exps + [remaining // degree])
            return
        degree = gens[idx][1]
        for m in range(remaining // degree, -1, -1):
            rec(idx + 1, remaining - m * degree, exps + [m])

    rec(0, level, [])
    components = []
    for exps in out:
        ss = [0] * rank
        central = 0
        params = {}
        for (gen, _, name), m in zip(gens, exps):
            central += m * gen.central
            params[name] = m
            for j, c in enumerate(gen.ss):
                ss[j] += m * c
        components.append((params, KType(ss=tuple(ss), central=central)))
    return components


def branch_tensor(pair: HermitianPair, left_ss: Weight, right_ss: Weight) -> tuple[tuple[Weight, int], ...]:
    """Decompose a product of compact-side modules, staying in K labels."""
    dec = tensor_decompose(
        pair.k_system,
        to_branch_labels(pair, left_ss),
        to_branch_labels(pair, right_ss))
    return tuple(sorted((from_branch_labels(pair, w), m) for w, m in dec.components.items()))


def k_dimension(pair: HermitianPair, ss: Weight) -> int:
    return weyl_dimension(pair.k_system, to_branch_labels(pair, ss))


def schmid_level_dimension(pair: HermitianPair, level: int) -> int:
    """Total dimension of the level-d layer of the symmetric algebra."""
    return sum(k_dimension(pair, kt.ss) for _, kt in schmid_level(pair, level))
