"""Weight multiplicities and the Weyl dimension formula."""

import pytest
from hypothesis import given, settings, strategies as st

from weylchar import (build_root_system, dominant_weight_multiplicities,
                      full_weight_multiset, to_dominant, weyl_dimension)
from weylchar.rootsystem import root_lattice_coords

E6 = build_root_system("E", 6)
D5 = build_root_system("D", 5)


@pytest.mark.parametrize("weight,dim", [
    ((0, 0, 0, 0, 0, 0), 1),
    ((1, 0, 0, 0, 0, 0), 27),
    ((0, 0, 0, 0, 0, 1), 27),
    ((0, 1, 0, 0, 0, 0), 78),
    ((1, 0, 0, 0, 0, 1), 650),
])
def test_e6_dimensions(weight, dim):
    assert weyl_dimension(E6, weight) == dim


@pytest.mark.parametrize("n", range(4, 9))
def test_half_spin_dimensions(n):
    dn = build_root_system("D", n)
    for node in (n - 1, n):
        hw = tuple(int(i == node - 1) for i in range(n))
        assert weyl_dimension(dn, hw) == 2 ** (n - 1)


@pytest.mark.parametrize("b,dim", [(0, 1), (1, 16), (2, 126), (3, 672)])
def test_d5_half_spin_powers(b, dim):
    assert weyl_dimension(D5, (0, 0, 0, b, 0)) == dim


def test_dimension_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_dimension(E6, (1, -1, 0, 0, 0, 0))


def test_minuscule_has_single_dominant_weight():
    assert dominant_weight_multiplicities(E6, (1, 0, 0, 0, 0, 0)) == {(1, 0, 0, 0, 0, 0): 1}


def test_adjoint_zero_weight_multiplicity_is_rank():
    mults = dominant_weight_multiplicities(E6, (0, 1, 0, 0, 0, 0))
    assert mults[(0, 0, 0, 0, 0, 0)] == 6
    assert mults[(0, 1, 0, 0, 0, 0)] == 1


def test_trivial_module():
    assert dominant_weight_multiplicities(D5, (0,) * 5) == {(0,) * 5: 1}


def test_27_weight_free_and_bounded_below():
    ms = full_weight_multiset(E6, (1, 0, 0, 0, 0, 0))
    assert len(ms.entries) == 27
    assert set(ms.entries.values()) == {1}
    assert all(min(w) >= -1 for w in ms.entries)


def test_650_total():
    ms = full_weight_multiset(E6, (1, 0, 0, 0, 0, 1))
    assert ms.total == 650


def test_d5_vector_module_weights():
    ms = full_weight_multiset(D5, (1, 0, 0, 0, 0))
    assert len(ms.entries) == 10
    assert set(ms.entries.values()) == {1}


def test_highest_weight_multiplicity_one():
    for rs, lam in [(E6, (1, 0, 0, 0, 0, 1)), (D5, (2, 0, 0, 1, 0))]:
        assert full_weight_multiset(rs, lam).entries[lam] == 1


def test_weights_live_below_highest():
    lam = (1, 0, 0, 1, 0)
    for mu in full_weight_multiset(D5, lam).entries:
        diff = tuple(a - b for a, b in zip(lam, mu))
        coords = root_lattice_coords(D5, diff)
        assert all(c.denominator == 1 and c >= 0 for c in coords)


def test_multiplicities_weyl_invariant():
    ms = full_weight_multiset(E6, (1, 0, 0, 0, 0, 1)).entries
    for w, m in ms.items():
        for i in range(6):
            image = tuple(w[j] - w[i] * E6.cartan[i][j] for j in range(6))
            assert ms[image] == m


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["A2", "A3", "D4", "D5"]),
       st.tuples(*[st.integers(min_value=0, max_value=2)] * 5))
def test_freudenthal_total_matches_weyl_dimension(name, raw):
    rs = build_root_system(name[0], int(name[1]))
    lam = raw[:rs.rank]
    ms = full_weight_multiset(rs, lam)
    assert ms.total == weyl_dimension(rs, lam)


def test_e6_moderate_module_consistency():
    # not multiplicity-free; exercises the recursion properly
    lam = (2, 0, 0, 0, 0, 1)
    ms = full_weight_multiset(E6, lam)
    assert ms.total == weyl_dimension(E6, lam)
    mults = dominant_weight_multiplicities(E6, lam)
    assert all(to_dominant(E6, w).dominant in mults for w in ms.entries)
