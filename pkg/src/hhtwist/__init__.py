"""Gerstenhaber brackets on Hochschild cohomology of twisted tensor products."""

from .fields import (FieldSpec, Scalar, Twist, parse_scalar, scalar_order,
                     RationalField, PrimeField, RationalFunctionField,
                     CyclotomicField)
from .algebra import (GradedAlgebra, parse_algebra, truncated_poly,
                      twisted_tensor_algebra, quantum_plane_algebra,
                      normalization_split)
from .complexes import (FreeBimoduleComplex, TensorComplex, GenMap,
                        bar_resolution, normalized_bar_resolution,
                        koszul_dual_numbers, twisted_tensor_resolution,
                        tensor_over_algebra, lift_chain_map)
from .homotopies import (f_left, f_right, f_total, sigma, phi_bar,
                         phi_normalized_bar, phi_koszul_dual_numbers,
                         phi_twisted, phi_qci, verify_homotopy)
from .diagonals import (diagonal_bar, diagonal_koszul_dual_numbers,
                        diagonal_qci, iota_qci, aw_twisted, ez_twisted,
                        diagonal_twisted_nbar)
from .cohomology import (Cochain, coboundary, cup, circle, bracket,
                         CohomologyRing, GerstenhaberContext,
                         subgroup_restriction, transport_pair,
                         tensor_bracket, verify_main_theorem)
from .qci import QciCase, QciBuild, classify, build_case, case_from_options

__version__ = "0.1.0"
