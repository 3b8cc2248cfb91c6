"""Coxeter polynomials of canonical and extended canonical algebras, via
exact integer polynomial arithmetic, symmetrization and Sturm chains."""

from .chebyshev import u, verify_v_u_identity
from .coxeter import (
    CoxeterBundle,
    WeightType,
    canonical_coxeter,
    extended_canonical_coxeter,
    one_point_reduction,
    q_poly,
    star_coxeter,
    tree_coxeter,
    verify_f_recursion,
    verify_q_recursion,
    verify_recursion,
    verify_representation,
    weight_types,
)
from .cyclotomic import (
    cyclo,
    extract_cyclotomic_part,
    is_cyclotomic_product,
    represent_unit_disk,
    representing_factor,
    sr_decompose_cyclotomic,
    v,
)
from .graphs import Multigraph, charpoly, dynkin, kronecker_graph, path, star, tree_charpoly
from .polyring import IntPoly, compose_T2, gcd, poly, squarefree_decomposition
from .spectra import (
    RootLocationReport,
    circle_census,
    classify_self_reciprocal,
    count_real_roots,
    interlacing_check,
    isolate_real_roots,
    monotonicity_check,
    off_circle_bound_check,
    sign_alternation_check,
    sturm_chain,
)
from .symmetry import desymmetrize, even_decompress, is_self_reciprocal, split_parity, symmetrize

__version__ = "0.1.0"
