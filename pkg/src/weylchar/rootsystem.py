"""Simply-laced root systems (types A, D, E6, E7) driven by Cartan matrices.

Weights are plain tuples of coordinates in the fundamental-weight basis, so
the bracket tuple [n_1, ..., n_l] common in the literature is exactly the
Python tuple (n_1, ..., n_l).  All arithmetic is exact: integer coordinates
throughout the engine, Fractions where the invariant form needs them.

The single source of truth is the Cartan matrix.  Positive roots are stored
in the simple-root basis; their fundamental-basis coordinates are the matrix
product with the Cartan matrix.  With every root normalized to squared
length 2, coroots and roots coincide and the Gram matrix of the fundamental
weights is the inverse Cartan matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Tuple

Weight = Tuple[int, ...]

#: node ordering follows Bourbaki: E- types have the chain 1-3-4-5-...,
#: with node 2 attached to node 4; D_n forks at node n-2 into n-1 and n.
_SUPPORTED = "types A_n (n>=1), D_n (n>=3), E6 and E7"


def _chain_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, n)]


def _edges(series: str, rank: int) -> list[tuple[int, int]]:
    if series == "A" and rank >= 1:
        return _chain_edges(rank)
    if series == "D" and rank >= 3:
        return [(i, i + 1) for i in range(1, rank - 2)] + [(rank - 2, rank - 1), (rank - 2, rank)]
    if series == "E" and rank in (6, 7):
        return [(1, 3), (3, 4), (4, 5), (5, 6)] + ([(6, 7)] if rank == 7 else []) + [(2, 4)]
    raise ValueError(f"unsupported root system {series}{rank}: engine covers {_SUPPORTED}")


def _cartan_matrix(series: str, rank: int) -> tuple[tuple[int, ...], ...]:
    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in _edges(series, rank):
        cartan[i - 1][j - 1] = cartan[j - 1][i - 1] = -1
    return tuple(tuple(row) for row in cartan)


def _invert_rational(mat: tuple[tuple[int, ...], ...]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    # Closure of the simple roots under all simple reflections, in
    # simple-root coordinates; positives are the vectors with no negative
    # coordinate.  s_i subtracts <beta, alpha_i~> alpha_i, and the pairing
    # of beta = sum c_j alpha_j with alpha_i~ is (C c)_i.
    rank = len(cartan)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        c = queue.pop()
        for i in range(rank):
            pair = sum(cartan[i][j] * c[j] for j in range(rank))
            if pair:
                image = list(c)
                image[i] -= pair
                image_t = tuple(image)
                if image_t not in seen:
                    seen.add(image_t)
                    queue.append(image_t)
    positives = [c for c in seen if min(c) >= 0]
    positives.sort(key=lambda c: (sum(c), c))
    return tuple(positives)


def _weyl_order(series: str, rank: int) -> int:
    if series == "A":
        return factorial(rank + 1)
    if series == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {6: 51840, 7: 2903040}[rank]


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data; safe to share between threads."""

    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]  # simple-root basis
    positive_roots_fund: tuple[tuple[int, ...], ...]  # fundamental basis
    rho: Weight
    form: tuple[tuple[Fraction, ...], ...]  # Gram matrix of fundamental weights
    weyl_order: int

    def __repr__(self) -> str:  # keep cache keys readable in logs
        return f"RootSystem({self.series}{self.rank})"

    def __hash__(self) -> int:
        return hash((self.series, self.rank))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and (self.series, self.rank) == (other.series, other.rank)


@lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystem:
    """Construct the root system of the given simply-laced type.

    Raises ValueError for anything outside A_n, D_n (n>=3), E6, E7.
    """
    cartan = _cartan_matrix(series, rank)
    pos = _positive_roots(cartan)
    fund = tuple(tuple(sum(cartan[j][i] * c[j] for j in range(rank)) for i in range(rank))
                 for c in pos)
    return RootSystem(
        series=series,
        rank=rank,
        cartan=cartan,
        positive_roots=pos,
        positive_roots_fund=fund,
        rho=tuple([1] * rank),
        form=_invert_rational(cartan),
        weyl_order=_weyl_order(series, rank),
    )


def coroot_pairing(rs: RootSystem, weight: Iterable, i: int):
    """<weight, alpha_i~> for the i-th simple coroot, 1-based index.

    In the fundamental basis this is just coordinate i.
    """
    coords = tuple(weight)
    if len(coords) != rs.rank:
        raise ValueError(f"weight has {len(coords)} coordinates, expected {rs.rank}")
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple-root index {i} out of range 1..{rs.rank}")
    return coords[i - 1]


def invariant_form(rs: RootSystem, left: Iterable, right: Iterable) -> Fraction:
    """W-invariant symmetric bilinear form, roots normalized to length^2 = 2."""
    a = tuple(left)
    b = tuple(right)
    if len(a) != rs.rank or len(b) != rs.rank:
        raise ValueError(f"weights must have {rs.rank} coordinates")
    total = Fraction(0)
    for i, ai in enumerate(a):
        if ai:
            row = rs.form[i]
            total += ai * sum(row[j] * bj for j, bj in enumerate(b) if bj)
    return total


def is_dominant(weight: Weight) -> bool:
    return all(c >= 0 for c in weight)


def is_dominant_integral(weight: Weight) -> bool:
    return all(isinstance(c, int) and c >= 0 for c in weight)


def check_dominant_integral(rs: RootSystem, weight: Weight, what: str = "weight") -> Weight:
    weight = tuple(weight)
    if len(weight) != rs.rank:
        raise ValueError(f"{what} has {len(weight)} coordinates, expected {rs.rank}")
    if not is_dominant_integral(weight):
        raise ValueError(f"{what} {list(weight)} is not dominant integral")
    return weight


def add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def root_lattice_coords(rs: RootSystem, weight: Weight) -> tuple[Fraction, ...]:
    """Express a weight in the simple-root basis (rational in general)."""
    return tuple(sum(rs.form[i][j] * weight[j] for j in range(rs.rank)) for i in range(rs.rank))
