"""Exact least interpolation on embedded manifold germs.

Least spaces of pulled-back polynomial spaces over the Gaussian rationals,
D-invariance and bundle-point classification, Taylor projectors and
annihilator ideals, Artinian quotient structure, Bos-Calvi higher-order
tangents, and zero-estimate tables.
"""

from .artin import (ArtinAlgebra, build_artin_algebra,
                    compare_under_linear_change)
from .errors import (CombinatorialBlowup, ComputationError, ConfigError,
                     DependentGenerators, DimensionMismatch,
                     NonRationalExpansion, NotAnImmersion, NotDInvariant,
                     ParseError, SingularMatrix, StabilityCheckFailed,
                     TruncationAmbiguous, TruncationInsufficient)
from .invariants import (PointClassification, ZeroEstimateReport,
                         classify_point, zero_estimate_table)
from .jets import Jet, least_part, order_of, truncated_compose
from .least import (FunctionSpace, LeastSpace, apply_linear_substitution,
                    compute_least_space, is_d_invariant)
from .pairing import (AnnihilatorBasis, Projector, annihilator_basis,
                      dual_pair, taylor_project)
from .parametrization import (BosCalviTangentSet, Parametrization,
                              PolynomialFunctionSpace, adjoint_pushforward,
                              bos_calvi_tangents, polynomial_function_space,
                              pullback_polynomial)
from .poly import Poly
from .scalar import Scalar, parse_scalar
from .wronskian import (JetRankProfile, YoungLikeSet, enumerate_young_like,
                        generalized_wronskian, is_bundle_point,
                        jet_rank_profile)

__version__ = "0.1.0"

__all__ = [
    "ArtinAlgebra", "AnnihilatorBasis", "BosCalviTangentSet",
    "CombinatorialBlowup", "ComputationError", "ConfigError",
    "DependentGenerators", "DimensionMismatch", "FunctionSpace", "Jet",
    "JetRankProfile", "LeastSpace", "NonRationalExpansion", "NotAnImmersion",
    "NotDInvariant", "Parametrization", "ParseError", "PointClassification",
    "Poly", "PolynomialFunctionSpace", "Projector", "Scalar",
    "SingularMatrix", "StabilityCheckFailed", "TruncationAmbiguous",
    "TruncationInsufficient", "YoungLikeSet", "ZeroEstimateReport",
    "adjoint_pushforward", "annihilator_basis", "apply_linear_substitution",
    "bos_calvi_tangents", "build_artin_algebra", "classify_point",
    "compare_under_linear_change", "compute_least_space", "dual_pair",
    "enumerate_young_like", "generalized_wronskian", "is_bundle_point",
    "is_d_invariant", "jet_rank_profile", "least_part", "order_of",
    "parse_scalar", "polynomial_function_space", "pullback_polynomial",
    "taylor_project", "truncated_compose", "zero_estimate_table",
]
