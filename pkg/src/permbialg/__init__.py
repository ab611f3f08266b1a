"""Exact-arithmetic kernel for perm algebras, perm bialgebras and their
Rota-Baxter correspondences."""

from .algebra import (PermAlgebra, PermCoalgebra, ad, direct_sum, dual_algebra_from_coproduct,
                      is_homomorphism, left_mult, multiply, perm_axiom_defects, right_mult,
                      zero_algebra)
from .bialgebra import (Classification, PermBialgebra, bialgebra_defects, classify,
                        coalgebra_defects, coboundary_coproduct, dual_mult_r, factorize,
                        image_subalgebra_report, trivial_bialgebra)
from .double import DoubleAlgebra, build_double, canonical_r, double_iso, standard_form_Bd
from .errors import *  # noqa: F401,F403
from .linalg import invert, is_clean, rank, scalar
from .representations import (APermAlgebra, Representation, a_perm_algebra_defects,
                              coadjoint_representation, diamond_from_skew, dual_representation,
                              operator_form_defects, regular_a_perm_algebra,
                              regular_representation, relative_rb_defect,
                              representation_defects, semidirect_product)
from .rotabaxter import (QuadraticRBData, companion, phi_of_form, prbw_defect, qrb_to_r,
                         quadratic_defects, quadratic_rb_defects, r_to_qrb, rb_defect,
                         rb_to_double_r, search_rb_operators, semidirect_quadratic_rb, sharp)
from .tensors import (TwoTensor, coboundary_conditions_defect, pybe_defect, rad_invariance_defect,
                      skew_part, t_map, twist)

__version__ = "0.1.0"
