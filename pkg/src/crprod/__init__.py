"""Cyclically reduced products of free group words.

The submodules build on each other: :mod:`~crprod.words` (notation,
reduction, rotations), :mod:`~crprod.equations` (literal factorizations),
:mod:`~crprod.identities` (sequences of conjugated relators and Peiffer
moves) and :mod:`~crprod.twisted` (certified witnesses), with
:mod:`~crprod.oracle` as an independent brute-force check.
"""
from .equations import (
    LeviSide,
    LeviSolution,
    ShirvCase1,
    ShirvCase2,
    ShirvCase3,
    WordEquationError,
    align_factorizations,
    levi_split,
    max_cancellation,
    shirv_decompose,
)
from .identities import (
    ConjugatedRelator,
    IdentitySequence,
    Move,
    MoveError,
    NotAnIdentityError,
    TwoSidedIdentity,
    collapse_search,
    conjugate_term,
    eval_sequence,
    exchange,
    is_basic,
    is_strictly_basic,
    normal_forms,
    parse_identity,
    peiffer_delete,
    term,
)
from .oracle import OracleBoundError, oracle_witness_search
from .twisted import (
    BaseLemmaWitness,
    Certificate,
    MainWitness,
    Mode,
    TwistWitness,
    VerificationReport,
    base_lemma,
    corollary_witness,
    main_theorem,
    tec2,
    tec2a,
    tec2b,
    tec2c,
    verify_witness,
)
from .words import (
    EMPTY,
    WordSyntaxError,
    are_rotations,
    canonical_rotation,
    concat,
    crp,
    cyc_core,
    cyc_reduce,
    cyc_reduced_product,
    format_word,
    invert,
    is_cyclic_perm,
    is_cyclically_reduced,
    is_reduced,
    parse_word,
    primitive_root,
    reduce,
    reverse,
    rotate,
    rotations,
)

__version__ = "0.1.0"
