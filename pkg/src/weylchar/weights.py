"""Weight multiplicities and dimensions of irreducible modules.

Multiplicities come from Freudenthal's recursion evaluated only at dominant
weights (W-invariance fills in the rest), processed in decreasing height so
every lookup is already resolved.  The recursion denominator
<lam+rho, lam+rho> - <mu+rho, mu+rho> = <lam+mu+2 rho, lam-mu> stays in
integer arithmetic because lam-mu lies in the root lattice.

Results are memoized per (root system, highest weight): the spectral engine
re-requests the same small modules thousands of times.  The caches hold pure
immutable values, so concurrent use at worst duplicates work.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsystem import RootSystem, Weight, check_dominant_integral
from .weyl import to_dominant, weyl_orbit


@dataclass(frozen=True)
class WeightMultiset:
    """Weights of one irreducible module with exact multiplicities."""

    entries: dict[Weight, int]
    total: int

    def __post_init__(self):
        object.__setattr__(self, "entries", dict(self.entries))


@lru_cache(maxsize=None)
def weyl_dimension(rs: RootSystem, highest: Weight) -> int:
    """dim E_highest by the Weyl dimension formula, exact."""
    highest = check_dominant_integral(rs, highest, "highest weight")
    num = 1
    den = 1
    shifted = [c + 1 for c in highest]
    for beta in rs.positive_roots:
        num *= sum(c * s for c, s in zip(beta, shifted) if c)
        den *= sum(beta)  # <rho, beta> = height of beta
    q, r = divmod(num, den)
    assert r == 0, "Weyl dimension did not divide exactly"
    return q


@lru_cache(maxsize=None)
def _weight_system(rs: RootSystem, highest: Weight) -> frozenset[Weight]:
    # All weights of E_highest, generated by walking simple-root strings
    # downward; saturation of the weight system makes this complete.
    rank = rs.rank
    cartan = rs.cartan
    seen = {highest}
    queue = [highest]
    while queue:
        w = queue.pop()
        for i in range(rank):
            k = w[i]
            if k > 0:
                row = cartan[i]
                cur = w
                for _ in range(k):
                    cur = tuple(cur[j] - row[j] for j in range(rank))
                    if cur not in seen:
                        seen.add(cur)
                        queue.append(cur)
    return frozenset(seen)


@lru_cache(maxsize=None)
def _dominant_multiplicities(rs: RootSystem, highest: Weight) -> tuple[tuple[Weight, int], ...]:
    rank = rs.rank
    system = _weight_system(rs, highest)
    dominants = [w for w in system if min(w) >= 0]
    # Height order: <rho, lam - mu> strictly decreases going down, and every
    # weight referenced by the recursion at mu is strictly higher than mu.
    heights = {}
    for w in dominants:
        heights[w] = sum(rs.form[i][j] * w[j] for i in range(rank) for j in range(rank))
    dominants.sort(key=lambda w: heights[w], reverse=True)

    pos_simple = rs.positive_roots
    pos_fund = rs.positive_roots_fund
    mults: dict[Weight, int] = {highest: 1}
    lam_shift = tuple(c + 1 for c in highest)
    for mu in dominants:
        if mu == highest:
            continue
        total = 0
        for beta_s, beta_f in zip(pos_simple, pos_fund):
            k = 1
            while True:
                nu = tuple(m + k * b for m, b in zip(mu, beta_f))
                if nu not in system:
                    break
                m_nu = mults.get(to_dominant(rs, nu).dominant, 0)
                if m_nu:
                    # <nu, beta> pairs fundamental coordinates of nu against
                    # the simple-root coordinates of beta.
                    total += m_nu * sum(c * x for c, x in zip(beta_s, nu))
                k += 1
        # denominator <lam+mu+2rho, lam-mu> via root-lattice coordinates,
        # which are integers since lam-mu is in the root lattice
        diff = tuple(a - b for a, b in zip(highest, mu))
        diff_simple = []
        for i in range(rank):
            c = sum(rs.form[i][j] * diff[j] for j in range(rank))
            assert c.denominator == 1
            diff_simple.append(c.numerator)
        mu_shift = tuple(c + 1 for c in mu)
        den = sum(ds * (a + b) for ds, a, b in zip(diff_simple, lam_shift, mu_shift))
        num = 2 * total
        mult, rem = divmod(num, den)
        assert rem == 0 and mult > 0, "Freudenthal recursion failed"
        mults[mu] = mult
    return tuple(sorted(mults.items()))


def dominant_weight_multiplicities(rs: RootSystem, highest: Weight) -> dict[Weight, int]:
    """Multiplicity of every dominant weight of E_highest."""
    highest = check_dominant_integral(rs, highest, "highest weight")
    return dict(_dominant_multiplicities(rs, highest))


@lru_cache(maxsize=None)
def _full_multiset(rs: RootSystem, highest: Weight) -> WeightMultiset:
    entries: dict[Weight, int] = {}
    for mu, mult in _dominant_multiplicities(rs, highest):
        for w in weyl_orbit(rs, mu):
            entries[w] = mult
    total = sum(entries.values())
    expected = weyl_dimension(rs, highest)
    assert total == expected, f"weight multiset total {total} != dim {expected}"
    return WeightMultiset(entries=entries, total=total)


def full_weight_multiset(rs: RootSystem, highest: Weight) -> WeightMultiset:
    """Every weight of E_highest with its exact multiplicity."""
    highest = check_dominant_integral(rs, highest, "highest weight")
    return _full_multiset(rs, highest)
