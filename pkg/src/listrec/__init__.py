"""Exact list-recovery tools for Reed-Solomon and explicit codes over finite fields.

Finite-field arithmetic, Reed-Solomon and explicit codes, exact list
recovery, the Johnson-type bounds and theorem hypothesis checks, two
adversarial list constructions, the code expander graph and a seeded
experiment runner.
"""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .gf import FieldSpec, make_field, is_prime, is_irreducible, least_irreducible
from .code import (
    ReedSolomonCode, ExplicitCode, PunctureMap, rs_encode, rs_enumerate, iter_codewords,
    codeword_matrix, hamming_distance, distance_to_lists, min_distance, pairwise_min_distance,
    puncture, random_puncture, rate,
)
from .listrecovery import (
    ListFamily, RecoveryResult, ZeroErrorResult, recover, recover_explicit, recover_rs,
    is_zero_error_recoverable,
)
from .theorem import (
    johnson_decoding, johnson_recovery, johnson_recovery_or_none, theorem_params,
    check_main_theorem, check_simple_theorem,
)
from .adversarial import (
    gr06_build, gr06_count, gr06_report, sumset, sumset_interval, sumset_build, sumset_verify,
    random_sumset_points,
)
from .expander import (
    BipartiteCodeGraph, code_graph, expansion_exhaustive, expansion_sampled, corollary_params,
    zero_error_bridge,
)
from .experiments import (
    ExperimentConfig, run_experiment, agreement_set, witness_bound_check, hypergeometric_tail,
    hypergeometric_empirical,
)
