"""Quiver invariants of trees of semisimple algebras.

The pipeline: a tree of semisimple algebras determines a Zariski quiver
whose admissible dimension vectors form a finitely generated semigroup;
the semigroup generators span the (always symmetric) etale quiver, which
controls simplicity and smoothness of the quotient varieties.  Doubling
the etale quiver yields a path algebra with a double Poisson bracket and
a necklace Lie algebra whose one-way necklaces integrate to symplectic
flows; all of it can be evaluated exactly on representations.
"""

from .algebra_tree import (PRESET_NAMES, RestrictionMap, SemiSimpleAlgebra,
                           TreeEdge, TreeOfAlgebras, parse_tree, preset_tree,
                           random_tree, serialize_tree, tree_from_doc,
                           tree_to_doc, validate_tree)
from .quiver import (Arrow, DimVector, Quiver, double_quiver, euler_form,
                     is_symmetric, preset_double_quiver, preset_quiver,
                     symmetrize_to_double, to_dot, unit_vector)
from .zariski import ArrowMatrix, sigma_matrix, zariski_quiver
from .dimvec import (decompose_in_generators, dimvec_check, hilbert_basis,
                     semigroup_generators)
from .etale import (EtaleQuiver, LocalQuiverSetting, component_has_simples,
                    etale_quiver, is_cherry_tree, is_simple_dimvector,
                    is_smooth_component, is_smooth_point, local_quiver)
from .paths import NCPoly, Path, Tensor2, Tensor3, parse_ncpoly, parse_path
from .necklace import (Necklace, NecklacePoly, SymplecticDerivation,
                       double_bracket, double_jacobiator, flow, flow_compose,
                       induced_bracket, is_locally_nilpotent, is_one_way,
                       is_one_way_necklace, moment_element, necklace,
                       necklace_bracket, necklace_derivative, parse_necklace,
                       theta, theta_apply, theta_power)
from .repvar import (Representation, SemiInvariantSpec, act,
                     cm_phase_space_check, det_semi_invariant,
                     e_semistable_inequality, evaluate, evaluate_components,
                     flow_on_rep, moment_evaluate, poisson_trace_bracket,
                     random_representation, sigma_invertible, sigma_spec,
                     trace_necklace, trace_ncpoly)
from .compactify import (EdgeDelta, SDeltaSpec, canonical_spec,
                         etale_quiver_localized, gl2z_delta_spec,
                         sdelta_generators)

__version__ = "0.1.0"
