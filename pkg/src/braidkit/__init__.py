"""Braid group algorithms: normal forms, cyclic-subgroup membership, conjugacy,
cyclic amalgamations of braid groups, and key agreement simulations."""

from .amalgam import (
    AmalgamConjugacyCertificate,
    AmalgamPresentation,
    AmalgamWord,
    Syllable,
    amalgam_are_conjugate,
    amalgam_equal,
    amalgam_exp_invariant,
    amalgam_reduce,
    amalgam_word_is_trivial,
    cyclically_reduce,
    normalize_syllables,
    parse_amalgam_word,
)
from .conjugacy import (
    PowerSearchResult,
    SummitSet,
    are_conjugate,
    conjugate_power_of_h_search,
    cycling,
    decycling,
    double_coset_search,
    generator_power_conjugacy_search,
    super_summit_set,
)
from .crypto import AagParams, KlchkpParams, ProtocolTranscript, aag_run, klchkp_run, sample_secret
from .errors import (
    BraidError,
    CommutingInput,
    IndexOutOfRange,
    ParamError,
    ParseError,
    ResourceLimit,
    StrandMismatch,
    ZeroExponent,
)
from .garside import NormalForm, compare, delta, inf_sup, is_left_weighted, normal_form
from .gwp import GwpResult, gwp, gwp_divisibility_gate
from .words import (
    BandGenerator,
    BraidWord,
    Permutation,
    band_to_artin,
    concat,
    exp_sum,
    free_reduce,
    invert,
    parse_word,
    permutation_image,
    power,
)

__version__ = "0.1.0"
