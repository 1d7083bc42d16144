"""Spectrum recovery from Dirac cohomology data, and the cancellation tables."""

from fractions import Fraction

import pytest

from weylchar import (DiracCohomologyData, KType, NegativeMultiplicityError,
                      cancellation_report, closed_form_spectrum, dirac_k_spectrum,
                      dirac_registry, invariant_form, level_dimension_audit,
                      module_ids, pair_data, to_branch_labels, verify_spectrum,
                      verma_k_character)

EIII = pair_data("EIII")
EVII = pair_data("EVII")


def test_registry_ids():
    assert module_ids() == ["E6_L_minus3zeta", "E6_L_mu", "E7_pi1", "E7_pi2"]
    with pytest.raises(ValueError):
        dirac_registry("E8_pi")


def test_registry_aliases():
    assert dirac_registry("E6_wallach").module_id == "E6_L_minus3zeta"
    assert dirac_registry("E7_wallach2").module_id == "E7_pi2"


def test_registry_contents():
    wallach = dirac_registry("E6_L_minus3zeta")
    assert wallach.plus == (KType((0, 0, 0, 0, 0), 12), KType((1, 0, 0, 0, 0), 3),
                            KType((0, 0, 0, 0, 1), -6))
    assert wallach.minus == (KType((0, 0, 0, 0, 0), -12), KType((0, 1, 0, 0, 0), -3),
                             KType((0, 0, 0, 0, 1), 6))
    lmu = dirac_registry("E6_L_mu")
    assert len(lmu.plus) == 3 and len(lmu.minus) == 2
    pi1 = dirac_registry("E7_pi1")
    assert len(pi1.plus) == 6 and len(pi1.minus) == 6
    assert KType((0, 0, 0, 0, 0, 0), 15) in pi1.plus
    assert KType((0, 0, 1, 0, 0, 0), -5) in pi1.minus
    pi2 = dirac_registry("E7_pi2")
    assert pi2.plus == (KType((0, 0, 0, 0, 0, 0), 3),)
    assert pi2.minus == (KType((0, 0, 0, 0, 0, 0), -3),)


def test_registry_members_share_infinitesimal_character_norm():
    # every cohomology member of one module must have the same squared
    # length after the compact rho-shift
    for module_id in module_ids():
        data = dirac_registry(module_id)
        pair = pair_data(data.pair_id)
        norms = set()
        for kt in data.plus + data.minus:
            shifted = tuple(c + 1 for c in to_branch_labels(pair, kt.ss))
            ss_part = invariant_form(pair.k_system, shifted, shifted)
            zeta_sq = sum(Fraction(x) ** 2 for x in pair.g_side["zeta"])
            norms.add(ss_part + Fraction(kt.central, pair.zeta_scale) ** 2 * zeta_sq)
        assert len(norms) == 1, module_id


def test_verma_of_trivial_type_is_symmetric_algebra():
    series = verma_k_character(EIII, KType((0, 0, 0, 0, 0), 24), 1)
    assert series.levels[0] == {KType((0, 0, 0, 0, 0), 0): 1}
    assert series.levels[1] == {KType((0, 1, 0, 0, 0), -3): 1}


def test_verma_level_zero_is_lowest_k_type():
    series = verma_k_character(EIII, KType((0, 0, 0, 0, 0), 12), 0)
    assert series.levels[0] == {KType((0, 0, 0, 0, 0), -12): 1}
    assert series.base_central == -12


def test_verma_rejects_non_dominant():
    with pytest.raises(ValueError):
        verma_k_character(EIII, KType((0, -1, 0, 0, 0), 12), 2)


from wallach_tables import LMU_ROWS, WALLACH_ROWS, rows_by_level


@pytest.mark.parametrize("xi_bracket,rows", sorted(WALLACH_ROWS.items()))
def test_wallach_table_rows_match_verma_characters(xi_bracket, rows):
    xi = KType(xi_bracket[:5], xi_bracket[5])
    series = verma_k_character(EIII, xi, 9)
    assert series.levels == rows_by_level(rows, 9)


@pytest.mark.parametrize("xi_bracket,rows", sorted(LMU_ROWS.items()))
def test_lmu_table_rows_match_verma_characters(xi_bracket, rows):
    xi = KType(xi_bracket[:5], xi_bracket[5])
    series = verma_k_character(EIII, xi, 9)
    assert series.levels == rows_by_level(rows, 9)


@pytest.mark.parametrize("module_id", ["E6_L_minus3zeta", "E6_L_mu", "E7_pi1", "E7_pi2"])
def test_spectrum_recovery(module_id):
    report = verify_spectrum(module_id, 6)
    assert report.ok, report.summary()
    for check in report.levels:
        assert all(m == 1 for _, m in check.expected)


def test_closed_form_families():
    series = closed_form_spectrum("E6_L_minus3zeta", 3)
    got = [kt.bracket() for l in range(4) for kt, _ in series.sorted_level(l)]
    assert got == [(0, 0, 0, 0, 0, -12), (0, 1, 0, 0, 0, -15),
                   (0, 2, 0, 0, 0, -18), (0, 3, 0, 0, 0, -21)]
    series = closed_form_spectrum("E6_L_mu", 0)
    assert [kt.bracket() for kt, _ in series.sorted_level(0)] == [(0, 0, 0, 0, 1, -18)]
    series = closed_form_spectrum("E7_pi2", 4)
    assert [kt.bracket() for kt, _ in series.sorted_level(4)] == [
        (0, 0, 0, 0, 0, 4, -32), (1, 0, 0, 0, 0, 2, -32), (2, 0, 0, 0, 0, 0, -32)]


def test_lowest_k_type_of_each_spectrum():
    lowest = {
        "E6_L_minus3zeta": (0, 0, 0, 0, 0, -12),
        "E6_L_mu": (0, 0, 0, 0, 1, -18),
        "E7_pi1": (0, 0, 0, 0, 0, 0, -12),
        "E7_pi2": (0, 0, 0, 0, 0, 0, -24),
    }
    for module_id, bracket in lowest.items():
        data = dirac_registry(module_id)
        spectrum = dirac_k_spectrum(pair_data(data.pair_id), data, 2)
        (kt, mult), = spectrum.levels[0].items()
        assert kt.bracket() == bracket and mult == 1


def test_level_counts_for_lmu():
    series = closed_form_spectrum("E6_L_mu", 6)
    for level in range(7):
        count = sum(1 for b in range(level + 1)
                    if (level - b) % 2 == 0)
        assert len(series.levels[level]) == count


def test_level_dimension_audit():
    for module_id in module_ids():
        for level, net, expected in level_dimension_audit(module_id, 6):
            assert net == expected, (module_id, level)


def test_truncation_stability():
    data = dirac_registry("E6_L_mu")
    slices = [dirac_k_spectrum(EIII, data, bound).truncate(4).levels for bound in (4, 6, 8)]
    assert slices[0] == slices[1] == slices[2]


def test_pair_module_mismatch_rejected():
    with pytest.raises(ValueError):
        dirac_k_spectrum(EVII, dirac_registry("E6_L_mu"), 2)


def test_swapped_registry_halves_fail_negativity():
    data = dirac_registry("E6_L_minus3zeta")
    swapped = DiracCohomologyData(module_id="swapped", pair_id="EIII",
                                  plus=data.minus, minus=data.plus)
    with pytest.raises(NegativeMultiplicityError):
        dirac_k_spectrum(EIII, swapped, 4)


def test_wallach_cancellation_leftovers():
    data = dirac_registry("E6_L_minus3zeta")
    report = cancellation_report(EIII, data, 10, (2, 3, 4, 5))
    assert report.minus_leftovers() == {}
    expected = closed_form_spectrum("E6_L_minus3zeta", 10)
    family = {kt: m for l in range(11) for kt, m in expected.levels[l].items()}
    assert report.leftovers() == family
    for bucket in report.buckets:
        if bucket[1:] != (0, 0, 0):
            assert report.bucket_cancels(bucket), bucket


def test_pi1_buckets_cancel_as_published():
    data = dirac_registry("E7_pi1")
    report = cancellation_report(EVII, data, 8, (2, 3, 4, 5))
    assert (0, 0, 1, 0) in report.buckets
    assert (1, 0, 0, 1) in report.buckets
    assert report.bucket_cancels((0, 0, 1, 0))
    assert report.bucket_cancels((1, 0, 0, 1))
    assert report.minus_leftovers() == {}
    expected = closed_form_spectrum("E7_pi1", 8)
    family = {kt: m for l in range(9) for kt, m in expected.levels[l].items()}
    assert report.leftovers() == family
    # the surviving family sits entirely in the zero bucket
    for bucket in report.buckets:
        if bucket != (0, 0, 0, 0):
            assert report.bucket_cancels(bucket), bucket


def test_pi2_telescope():
    data = dirac_registry("E7_pi2")
    report = cancellation_report(EVII, data, 6, (2, 3, 4, 5))
    expected = closed_form_spectrum("E7_pi2", 6)
    family = {kt: m for l in range(7) for kt, m in expected.levels[l].items()}
    assert report.leftovers() == family
    assert report.minus_leftovers() == {}


def test_grouping_positions_validated():
    with pytest.raises(ValueError):
        cancellation_report(EIII, dirac_registry("E6_L_mu"), 2, (0, 6))
