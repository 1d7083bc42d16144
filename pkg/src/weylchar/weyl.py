"""Dominant-chamber reduction with sign, and Weyl orbits.

The reduction walk always reflects at the lowest-index negative coordinate.
The dominant representative and the parity of the walk length are
order-independent, so only the logged reflection count depends on this
choice; fixing it keeps runs reproducible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import factorial

from .errors import GuardError
from .rootsystem import RootSystem, Weight

DEFAULT_ORBIT_GUARD = 10 ** 7


def orbit_guard_limit() -> int:
    return int(os.environ.get("WEYLCHAR_ORBIT_GUARD", DEFAULT_ORBIT_GUARD))


@dataclass(frozen=True)
class SignedDominant:
    """Dominant representative with det sign; sign 0 marks a singular weight."""

    dominant: Weight
    sign: int
    reflections: int


def to_dominant(rs: RootSystem, weight: Weight) -> SignedDominant:
    """Return the dominant Weyl-conjugate of an integral weight and its sign.

    The sign is (-1)^(number of reflections) when the weight is regular and 0
    when the dominant representative has a zero coordinate (the weight is
    fixed by some reflection).
    """
    coords = list(weight)
    if len(coords) != rs.rank:
        raise ValueError(f"weight has {len(coords)} coordinates, expected {rs.rank}")
    for c in coords:
        if not isinstance(c, int):
            raise ValueError(f"dominant reduction needs integral coordinates, got {list(weight)}")
    cartan = rs.cartan
    rank = rs.rank
    count = 0
    while True:
        for i in range(rank):
            v = coords[i]
            if v < 0:
                row = cartan[i]
                for j in range(rank):
                    coords[j] -= v * row[j]
                count += 1
                break
        else:
            break
    sign = 0 if 0 in coords else (-1 if count & 1 else 1)
    return SignedDominant(tuple(coords), sign, count)


def _branch_lengths(nodes: list[int], adj: dict[int, list[int]]) -> str:
    # Classify a connected simply-laced subdiagram by its single fork, if any.
    forks = [v for v in nodes if len(adj[v]) == 3]
    if not forks:
        return f"A{len(nodes)}"
    fork = forks[0]
    lengths = []
    for start in adj[fork]:
        ln, prev, cur = 1, fork, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        lengths.append(ln)
    lengths.sort()
    if lengths[0] == lengths[1] == 1:
        return f"D{len(nodes)}"
    return f"E{len(nodes)}"


_COMPONENT_ORDERS = {"E6": 51840, "E7": 2903040, "E8": 696729600}


def _parabolic_order(rs: RootSystem, zero_positions: list[int]) -> int:
    """Order of the parabolic Weyl subgroup generated by the given nodes."""
    if not zero_positions:
        return 1
    adj: dict[int, list[int]] = {v: [] for v in zero_positions}
    zset = set(zero_positions)
    for i in zero_positions:
        for j in zero_positions:
            if j > i and rs.cartan[i][j] == -1:
                adj[i].append(j)
                adj[j].append(i)
    order = 1
    todo = set(zset)
    while todo:
        comp = [todo.pop()]
        queue = [comp[0]]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w in todo:
                    todo.discard(w)
                    comp.append(w)
                    queue.append(w)
        label = _branch_lengths(comp, adj)
        kind, k = label[0], int(label[1:])
        if kind == "A":
            order *= factorial(k + 1)
        elif kind == "D":
            order *= 2 ** (k - 1) * factorial(k)
        else:
            order *= _COMPONENT_ORDERS[label]
    return order


def orbit_size(rs: RootSystem, dominant: Weight) -> int:
    """Predicted orbit size |W| / |W_stab| for a dominant weight."""
    zeros = [i for i, c in enumerate(dominant) if c == 0]
    return rs.weyl_order // _parabolic_order(rs, zeros)


def weyl_orbit(rs: RootSystem, dominant: Weight) -> frozenset[Weight]:
    """Full Weyl orbit of a dominant integral weight.

    Guarded by the index formula: orbits predicted above the configured
    ceiling are refused before any enumeration starts.
    """
    from .rootsystem import check_dominant_integral

    dominant = check_dominant_integral(rs, dominant)
    predicted = orbit_size(rs, dominant)
    limit = orbit_guard_limit()
    if predicted > limit:
        raise GuardError(
            f"orbit of {list(dominant)} in {rs.series}{rs.rank} has predicted size "
            f"{predicted} > guard {limit}")
    cartan = rs.cartan
    rank = rs.rank
    seen = {dominant}
    queue = [dominant]
    while queue:
        w = queue.pop()
        for i in range(rank):
            v = w[i]
            if v:
                row = cartan[i]
                image = tuple(w[j] - v * row[j] for j in range(rank))
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
    return frozenset(seen)
