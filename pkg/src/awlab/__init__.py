"""Exact combinatorics of affine Deligne-Lusztig varieties for GL_n."""

from .weyl import (
    AffWeylElt, AffineRoot, OmegaDecomposition, Permutation, act_on_affine_root,
    bruhat_leq, compose, decompose, format_element, from_cycles, identity, inverse,
    is_coxeter, length, omega_generator, parse_element, simple_reflection, support,
    translation,
)
from .alcove import (
    BasicClass, dominance_leq, dual_cocharacter, kottwitz, newton, p1, p2,
)
from .emptiness import (
    LeviShape, PAlcovePair, basic_in_bg_lambda, empty_shortcut, explain_nonempty,
    is_p_alcove, nonempty_basic, p_alcove_pairs,
)
from .admissible import (
    FamilyParams, adm_set, classify_by_criteria, classify_closed_form,
    dimension_formula, is_min_coset_rep, make_family, s_adm_circ, s_adm_circ_cox,
    translation_orbit,
)
from .reduction import (
    approx_equiv, classify_move, conj_by, export_dot, graph_json, reduction_graph,
)

__version__ = "0.1.0"
