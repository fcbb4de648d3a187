"""Finite permutation groups under coprime actions: decide whether every
maximal A-invariant subgroup of order divisible by p is nilpotent, and
classify the group into the matching structural case."""

from .action import (
    Automorphism,
    CoprimeAction,
    build_action,
    build_automorphism,
    is_invariant,
    maximal_invariant_subgroups,
    restrict_action,
    trivial_action,
)
from .estimator import CaseClassifier, HypothesisClassifier
from .groups import (
    PermGroup,
    Permutation,
    Subgroup,
    derived_subgroup,
    generate_group,
    parse_permutation,
)
from .lattice import LatticeIndex, all_subgroups, is_normal, join, maximal_members, meet
from .structure import (
    centralizes,
    internal_product_kind,
    invariant_sylow,
    is_nilpotent,
    is_p_nilpotent,
    is_solvable,
    lower_central_series,
    sylow_subgroups,
)
from .theorem import (
    Case,
    CaseReport,
    HypothesisVerdict,
    check_corollary,
    check_remark_examples,
    check_solvability_implication,
    check_theorem_A,
    classify,
    cross_validate,
    hypothesis_holds,
    replay_witnesses,
)

__version__ = "0.1.0"

__all__ = [
    "all_subgroups",
    "Automorphism",
    "build_action",
    "build_automorphism",
    "Case",
    "CaseClassifier",
    "CaseReport",
    "centralizes",
    "check_corollary",
    "check_remark_examples",
    "check_solvability_implication",
    "check_theorem_A",
    "classify",
    "CoprimeAction",
    "cross_validate",
    "derived_subgroup",
    "generate_group",
    "hypothesis_holds",
    "HypothesisClassifier",
    "HypothesisVerdict",
    "internal_product_kind",
    "invariant_sylow",
    "is_invariant",
    "is_nilpotent",
    "is_normal",
    "is_p_nilpotent",
    "is_solvable",
    "join",
    "LatticeIndex",
    "lower_central_series",
    "maximal_invariant_subgroups",
    "maximal_members",
    "meet",
    "parse_permutation",
    "PermGroup",
    "Permutation",
    "replay_witnesses",
    "restrict_action",
    "Subgroup",
    "sylow_subgroups",
    "trivial_action",
]
