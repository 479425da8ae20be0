"""Workbench for the free modular lattice on four generators.

Symbolic side: lattice terms in e1..e4, admissible index sequences and
their canonical classes, admissible/atomic polynomials, substitution
endomorphisms and the perfect-element cube.  Semantic side: exact
evaluation in subspace lattices of GF(p)^d quadruple representations,
with the derived-representation construction and its elementary maps.
"""

from .gf import (
    PrimeField,
    Subspace,
    apply_map,
    intersect_spaces,
    kernel,
    leq,
    rref,
    sum_spaces,
)
from .terms import (
    BOTTOM,
    TOP,
    ParseError,
    Term,
    format_term,
    gen,
    join,
    meet,
    parse_term,
    substitute,
)
from .seqs import (
    CanonForm,
    canonicalize,
    class_closure,
    class_members,
    classes_of_length,
    is_admissible,
    prepend,
    representative,
    rewrite_neighbors,
    seq_from_string,
    seq_to_string,
    slice_enumerate,
)
from .poly import (
    atomic,
    cumulative_e,
    cumulative_f0,
    e_alpha,
    f_alpha0,
    gp_e,
    gp_f,
    inv_cumulative_e,
    inv_cumulative_f0,
    unified_e,
    unified_f,
)
from .endo import (
    CubeRow,
    EndoSpec,
    cube,
    gamma,
    h_poly,
    p_poly,
    q_poly,
    r_endo,
    s_poly,
    t_poly,
)
from .reps import (
    CoxeterStep,
    QuadRep,
    catalog,
    coxeter_plus,
    default_reps,
    direct_sum,
    eval_term,
    nu_eval,
    perfect_check,
    phi_compose,
    psi,
    rep_from_json,
    rep_to_json,
    semantically_equal,
    semantically_leq,
    tower,
)
from .suites import SuiteConfig, SuiteReport, run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "PrimeField", "Subspace", "apply_map", "intersect_spaces", "kernel", "leq",
    "rref", "sum_spaces",
    "BOTTOM", "TOP", "ParseError", "Term", "format_term", "gen", "join", "meet",
    "parse_term", "substitute",
    "CanonForm", "canonicalize", "class_closure", "class_members",
    "classes_of_length", "is_admissible", "prepend", "representative",
    "rewrite_neighbors", "seq_from_string", "seq_to_string", "slice_enumerate",
    "atomic", "cumulative_e", "cumulative_f0", "e_alpha", "f_alpha0", "gp_e",
    "gp_f", "inv_cumulative_e", "inv_cumulative_f0", "unified_e", "unified_f",
    "CubeRow", "EndoSpec", "cube", "gamma", "h_poly", "p_poly", "q_poly",
    "r_endo", "s_poly", "t_poly",
    "CoxeterStep", "QuadRep", "catalog", "coxeter_plus", "default_reps",
    "direct_sum", "eval_term", "nu_eval", "perfect_check", "phi_compose", "psi",
    "rep_from_json", "rep_to_json", "semantically_equal", "semantically_leq",
    "tower",
    "SuiteConfig", "SuiteReport", "run_suite", "suite_names",
]
