"""Exact-arithmetic Weyl character engine for simply-laced root systems."""

from .branchrules import ClosedFormRule, RuleReport, closed_form, load_rules, verify_rule
from .dirac import (CancellationReport, DiracCohomologyData, KCharacterSeries,
                    SpectrumReport, cancellation_report, closed_form_spectrum,
                    dirac_k_spectrum, dirac_registry, level_dimension_audit,
                    module_ids, verify_spectrum, verma_k_character)
from .errors import GuardError, NegativeMultiplicityError
from .hermitian import (HermitianPair, KType, branch_tensor, from_branch_labels,
                        k_dimension, pair_data, schmid_components, schmid_level,
                        schmid_level_dimension, to_branch_labels)
from .rootsystem import (RootSystem, Weight, build_root_system, coroot_pairing,
                         invariant_form)
from .tensor import Decomposition, tensor_decompose, tensor_oracle
from .weights import (WeightMultiset, dominant_weight_multiplicities,
                      full_weight_multiset, weyl_dimension)
from .weyl import SignedDominant, orbit_size, to_dominant, weyl_orbit

__version__ = "0.1.0"

__all__ = [
    "ClosedFormRule", "RuleReport", "closed_form", "load_rules", "verify_rule",
    "CancellationReport", "DiracCohomologyData", "KCharacterSeries", "SpectrumReport",
    "cancellation_report", "closed_form_spectrum", "dirac_k_spectrum", "dirac_registry",
    "level_dimension_audit", "module_ids", "verify_spectrum", "verma_k_character",
    "GuardError", "NegativeMultiplicityError",
    "HermitianPair", "KType", "branch_tensor", "from_branch_labels", "k_dimension",
    "pair_data", "schmid_components", "schmid_level", "schmid_level_dimension",
    "to_branch_labels",
    "RootSystem", "Weight", "build_root_system", "coroot_pairing", "invariant_form",
    "Decomposition", "tensor_decompose", "tensor_oracle",
    "WeightMultiset", "dominant_weight_multiplicities", "full_weight_multiset",
    "weyl_dimension",
    "SignedDominant", "orbit_size", "to_dominant", "weyl_orbit",
]
