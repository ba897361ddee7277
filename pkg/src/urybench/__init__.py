"""Workbench for finite extended-metric spaces over distance monoids."""

from .errors import (DomainError, PreconditionError, StructuralError,
                     UnsupportedOperationError, UrybenchError)
from .harness import (AXIOM_IDS, AXIOM_NAMES, SuiteReport, Violation,
                      check_axiom, mix_seed, replay_trial, run_all_axioms)
from .independence import (RELATION_IDS, Config, Relation,
                           counterexample_cor35, extension_witness, get_relation,
                           indep, indep_a, indep_infty, local_character_base,
                           parse_config)
from .monoid import (DistanceSet, Monoid, NatStar, QStar, TableMonoid,
                     TruncatedNat, ext_add, ext_leq, extend_monoid,
                     is_fraisse_distance_set, monoid_from_designator,
                     sop_scalar_witness, threshold_is_equivalence,
                     truncated_sum, validate_monoid)
from .reports import CheckResult, ValidationReport
from .space import (OnePointSpec, RandomSpaceParams, Space, build_space,
                    d_max, disjoint_union_at_infinity, dist_to_set,
                    free_amalgam, isometric_over, one_point_extend, parse_dms,
                    random_space, validate_space)

__all__ = [
    "AXIOM_IDS",
    "AXIOM_NAMES",
    "CheckResult",
    "Config",
    "DistanceSet",
    "DomainError",
    "Monoid",
    "NatStar",
    "OnePointSpec",
    "PreconditionError",
    "QStar",
    "RELATION_IDS",
    "RandomSpaceParams",
    "Relation",
    "Space",
    "StructuralError",
    "SuiteReport",
    "TableMonoid",
    "TruncatedNat",
    "UnsupportedOperationError",
    "UrybenchError",
    "ValidationReport",
    "Violation",
    "build_space",
    "check_axiom",
    "counterexample_cor35",
    "d_max",
    "disjoint_union_at_infinity",
    "dist_to_set",
    "ext_add",
    "ext_leq",
    "extend_monoid",
    "extension_witness",
    "free_amalgam",
    "get_relation",
    "indep",
    "indep_a",
    "indep_infty",
    "is_fraisse_distance_set",
    "isometric_over",
    "local_character_base",
    "mix_seed",
    "monoid_from_designator",
    "one_point_extend",
    "parse_config",
    "parse_dms",
    "random_space",
    "replay_trial",
    "run_all_axioms",
    "sop_scalar_witness",
    "threshold_is_equivalence",
    "truncated_sum",
    "validate_monoid",
    "validate_space",
]
