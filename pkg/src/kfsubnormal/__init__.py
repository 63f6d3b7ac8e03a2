"""Subgroup embeddings in small permutation groups.

Modular, submodular, subnormal and K-F-subnormal subgroups, formation
residuals and solvable radicals, with exhaustive theorem checks over a
catalog of groups.
"""
from .catalog import CatalogEntry, default_catalog, direct_product, load_catalog
from .embeddings import (
    StepKind,
    WitnessChain,
    is_kf_subnormal,
    is_modular,
    is_submodular,
    is_subnormal,
    simplicity_check,
    star_overgroup,
)
from .formations import (
    Formation,
    fitting_subgroup,
    is_member,
    is_nilpotent,
    is_solvable,
    is_supersolvable,
    register_formation,
    residual,
    solvable_radical,
)
from .lattice import SubgroupLattice, SubgroupRef, all_subgroups
from .perm import Group, Permutation, compose, element_order, exponent, generate_group, inverse, parse_permutation, prime_divisors
from .quotients import QuotientGroup, pull_subgroup, push_subgroup, quotient
from .verifier import CheckResult, Report, Status, run_corpus, verify_corollaries, verify_lemma_suite, verify_theorem1, verify_theorem2

__version__ = "0.1.0"
