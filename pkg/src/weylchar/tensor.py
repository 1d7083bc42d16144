"""Tensor product decomposition of irreducible modules.

tensor_decompose runs the signed reflection formula over the weight system
of whichever factor is smaller; tensor_oracle is a deliberately independent
check that convolves full weight multisets and peels highest weights, never
touching the signed formula.  The two must agree wherever the oracle guard
admits the pair.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import GuardError, NegativeMultiplicityError
from .rootsystem import RootSystem, Weight, check_dominant_integral
from .weights import full_weight_multiset, weyl_dimension
from .weyl import to_dominant

DEFAULT_ORACLE_GUARD = 10 ** 6

#: when set, every decomposition asserts dimension conservation before it is
#: returned; the test suite switches this on globally
AUDIT_DIMENSIONS = False


def oracle_guard_limit() -> int:
    return int(os.environ.get("WEYLCHAR_ORACLE_GUARD", DEFAULT_ORACLE_GUARD))


@dataclass(frozen=True)
class Decomposition:
    """Multiset of dominant highest weights with positive multiplicities."""

    components: dict[Weight, int]
    factors: tuple[Weight, Weight]
    system: RootSystem

    def __post_init__(self):
        object.__setattr__(self, "components", dict(self.components))

    def dimension(self) -> int:
        return sum(m * weyl_dimension(self.system, w) for w, m in self.components.items())

    def check_dimension(self) -> None:
        left, right = self.factors
        expected = weyl_dimension(self.system, left) * weyl_dimension(self.system, right)
        got = self.dimension()
        if got != expected:
            raise NegativeMultiplicityError(
                f"dimension conservation violated: {got} != {expected} "
                f"for {list(left)} (x) {list(right)}")

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self.components.items())


@lru_cache(maxsize=None)
def _klimyk(rs: RootSystem, small: Weight, big: Weight) -> tuple[tuple[Weight, int], ...]:
    rank = rs.rank
    acc: dict[Weight, int] = {}
    # v = mu + big + rho for every weight mu of the small factor; singular v
    # contribute nothing, regular ones contribute sign * E_{{v}-rho}.
    big_rho = tuple(b + 1 for b in big)
    for mu, mult in full_weight_multiset(rs, small).entries.items():
        v = tuple(m + b for m, b in zip(mu, big_rho))
        reduced = to_dominant(rs, v)
        if reduced.sign:
            target = tuple(c - 1 for c in reduced.dominant)
            acc[target] = acc.get(target, 0) + mult * reduced.sign
    for w, m in acc.items():
        if m < 0:
            raise NegativeMultiplicityError(
                f"negative net multiplicity {m} at {list(w)} in "
                f"{list(small)} (x) {list(big)}")
    return tuple(sorted((w, m) for w, m in acc.items() if m))


def tensor_decompose(rs: RootSystem, left: Weight, right: Weight) -> Decomposition:
    """Decompose E_left (x) E_right into irreducibles, exactly."""
    left = check_dominant_integral(rs, left, "left factor")
    right = check_dominant_integral(rs, right, "right factor")
    if weyl_dimension(rs, left) <= weyl_dimension(rs, right):
        small, big = left, right
    else:
        small, big = right, left
    components = dict(_klimyk(rs, small, big))
    dec = Decomposition(components=components, factors=(left, right), system=rs)
    if AUDIT_DIMENSIONS:
        dec.check_dimension()
    return dec


def _height_key(rs: RootSystem, w: Weight):
    h = sum(rs.form[i][j] * w[j] for i in range(rs.rank) for j in range(rs.rank))
    return (h, w)


def tensor_oracle(rs: RootSystem, left: Weight, right: Weight) -> Decomposition:
    """Brute-force decomposition: convolve weight multisets, peel from the top.

    Valid independently of the signed formula; guarded by the product of the
    factor dimensions.
    """
    left = check_dominant_integral(rs, left, "left factor")
    right = check_dominant_integral(rs, right, "right factor")
    product_dim = weyl_dimension(rs, left) * weyl_dimension(rs, right)
    limit = oracle_guard_limit()
    if product_dim > limit:
        raise GuardError(
            f"oracle guard: product dimension {product_dim} > {limit} for "
            f"{list(left)} (x) {list(right)}")
    lw = full_weight_multiset(rs, left).entries
    rw = full_weight_multiset(rs, right).entries
    remaining: dict[Weight, int] = {}
    for wl, ml in lw.items():
        for wr, mr in rw.items():
            key = tuple(a + b for a, b in zip(wl, wr))
            remaining[key] = remaining.get(key, 0) + ml * mr

    components: dict[Weight, int] = {}
    while remaining:
        top = max(remaining, key=lambda w: _height_key(rs, w))
        mult = remaining[top]
        assert min(top) >= 0 and mult > 0, "oracle peeling went inconsistent"
        components[top] = mult
        for w, m in full_weight_multiset(rs, top).entries.items():
            nv = remaining.get(w, 0) - mult * m
            if nv:
                remaining[w] = nv
            else:
                remaining.pop(w, None)
            assert nv >= 0, "oracle peeling produced a negative multiplicity"
    dec = Decomposition(components=components, factors=(left, right), system=rs)
    if AUDIT_DIMENSIONS:
        dec.check_dimension()
    return dec
