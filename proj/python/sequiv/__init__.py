"""Exact Seifert matrix toolkit.

S-equivalence moves, Alexander-module invariants, and Blanchfield pairings
computed in exact arithmetic over Z[t, t^-1] and Q(t).
"""

from ._core import (  # noqa: F401
    BlanchfieldForm,
    CompareReport,
    CongruenceMove,
    EnlargeMove,
    InvariantDiff,
    InvariantReport,
    Isometry,
    LaurentPoly,
    MoveChain,
    NotSeifertTypeError,
    RatFun,
    ReduceMove,
    SeifertMatrix,
    TorsionClass,
    Verdict,
    __version__,
    alexander_poly,
    apply_chain,
    apply_move,
    build_form,
    chain_isometry,
    chain_search,
    class_eq,
    compare,
    congruate,
    congruence_isometry,
    det_at_minus_one,
    divide_exact,
    enlarge,
    enlargement_isometry,
    find_reductions,
    hermitian_check,
    invariant_diffs,
    invariant_report,
    involute,
    involute_rat,
    isometry_search,
    normalize_unit,
    parse_poly,
    random_chain,
    random_seifert,
    reduce,
    signature,
    validate,
    verify_verdict,
)
