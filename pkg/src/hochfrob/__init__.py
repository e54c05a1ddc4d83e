"""Exact Hochschild (co)chain algebra of finite group rings.

The package materializes the cyclic bar chain complex of k[G] with its
boundary and coproducts, both cochain models with their products
(convolution, bar-side, simplicial cup and cup-one, insertion), the
norm-element pairing, exact (co)homology dimension tables over Q and
F_p, and the two-dimensional TQFT carried by degree-0 cocycles.
"""

__version__ = "0.1.0"

from .chains import (Chain, TensorChain, aw_coproduct, apply_counit_left,
                     back_face, boundary, convolution_coproduct, counit, face,
                     front_face, has_identity_product, identity_product_tuples,
                     tensor_boundary)
from .cochains import (BarCochain, Cochain, bar_coboundary, bar_cup,
                       bar_to_cochain, circle_product, coboundary,
                       cochain_to_bar, convolution_cup, convolution_unit,
                       eval_multilinear, homotopy_commutator_defect,
                       homotopy_signs, in_norm_radical, insertion_product,
                       is_identity_supported, norm_pairing, norm_profile,
                       restrict_to_identity_support, simplicial_cup,
                       simplicial_cup_one)
from .errors import (ArityMismatchError, DegeneratePairingError,
                     FieldMismatchError, NotAGroupError, SizeGuardError,
                     SpecParseError)
from .groups import (FiniteGroup, GroupRingElement, cyclic, dihedral,
                     direct_product, group_from_spec, group_from_table,
                     load_group_table, norm_element, symmetric, trivial)
from .homology import (BettiReport, Complex, betti, betti_table,
                       boundary_matrix, cocycle_representatives, radical_basis,
                       random_cocycle, verify_phi_iso)
from .linalg import Matrix, kernel_basis, matrix_rank
from .rng import random_cochain, random_identity_supported_cochain
from .scalars import Field
from .tqft import (CobordismWord, FrobeniusData, evaluate_cobordism,
                   frobenius_data, handle_element, hom_count_oracle,
                   surface_invariant)
from .verify import RunConfig, run_verification
