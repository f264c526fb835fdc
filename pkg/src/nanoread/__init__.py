"""Substitution-correcting codes for sliding-window (nanopore) read vectors."""

from .channel import (
    ChannelParams,
    SubstitutionPattern,
    apply_substitutions,
    hamming_distance,
    invert_parity,
    is_t_sub_read_code,
    mod2_prefix,
    read_vector,
    reconstruct_from_clean_read,
)
from .codec import CodecInstance, code_redundancy, construct_codeword, decode_read, simulate
from .counting import (
    count_cliques_enumerate,
    count_cliques_formula,
    log2_cover_size,
    partial_sum_s1,
    partial_sum_s2,
    redundancy_lower_bound,
)
from .cover import CoverParams, assign_clique, clique_members, lambda_sets, verify_cover
from .inner import DecodeFailure, InnerCodeSpec, bch, identity, repetition
from .permutation import PermSpec, apply_pi, f_pi, invert_pi

__version__ = "0.1.0"
