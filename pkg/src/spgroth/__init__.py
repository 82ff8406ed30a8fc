"""Exact computer algebra for Grothendieck and symplectic Grothendieck
polynomials: polynomial families, transition identities, stable limits, and
triangular expansions into the shape-indexed bases."""

from .coxeter import (
    FpfInvolution,
    Permutation,
    ShiftedFpfInvolution,
    all_fpf_involutions,
    all_permutations,
    ascent_chain_to_top,
    bruhat_cover_up,
    dearc,
    fpf_cover_up,
    fpf_grassmannian_from_shape,
    fpf_length,
    fpf_transition_indices,
    grassmannian_perm,
    is_fpf_grassmannian,
    perm_length,
    reduced_word,
    shift_fpf,
    shift_perm,
    sp_code,
    sp_rothe_diagram,
    sp_shape,
    transition_indices_perm,
    visible_descents,
)
from .grothendieck import (
    ExpansionDegreeError,
    GrothExpansion,
    SpGrothExpansion,
    beta_rescale_check,
    expand_in_grothendieck_basis,
    grothendieck,
    is_sp_dominant,
    lenart_signed_terms,
    schubert,
    sp_dominant_poly,
    sp_grothendieck,
    sp_transition_recurrence,
    verify_lenart_transition,
    verify_sp_transition,
)
from .polyring import (
    BetaInt,
    MultiPoly,
    act_si,
    apply_word,
    beta_divided_diff,
    divided_diff,
    isobaric,
    oplus,
    set_beta,
    truncate,
)
from .stable import (
    GLambdaExpansion,
    GPLambdaExpansion,
    Window,
    expand_in_G_basis,
    expand_in_GP_basis,
    g_via_pi_formula,
    gp_partition,
    gp_sp,
    gp_sp_positive_recurrence,
    gp_sp_stabilized,
    gp_via_pi_formula,
    sp_grassmannian_formula,
    stable_groth_partition,
    stable_groth_perm,
    verify_f_grass,
    verify_stable_sp_transition,
)

__version__ = "0.1.0"
