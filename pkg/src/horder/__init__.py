"""Spectral order of hyperbolic polynomials under the operators D_lam.

D_lam P(x) = P(x + lam) - lam P'(x + lam).  The package finds zeros, decides
majorization between zero sets, builds contraction chains and runs seeded
randomized checks of the order relations.
"""
from .contractions import ContractionChain, ContractionStep, apply_contraction, chain_decompose, verify_chain
from .errors import HorderError
from .order import (
    Relation,
    birkhoff_decompose,
    classical_witness,
    compare_complex,
    compare_hyperbolic,
    compare_real_parts,
    hlp_majorize,
    multivariate_majorize,
)
from .polynomials import (
    Polynomial,
    apply_d_lambda,
    derivative,
    from_roots,
    normalized_derivative,
    one_minus_lambda_d,
    taylor_shift,
)
from .rootfinding import (
    RootMultiset,
    all_roots,
    d_lambda_root_multiset,
    d_lambda_roots,
    is_hyperbolic,
    real_root_multiset,
    root_trajectory,
    root_velocity,
)

__version__ = "0.1.0"

__all__ = [
    "ContractionChain",
    "ContractionStep",
    "HorderError",
    "Polynomial",
    "Relation",
    "RootMultiset",
    "all_roots",
    "apply_contraction",
    "apply_d_lambda",
    "birkhoff_decompose",
    "chain_decompose",
    "classical_witness",
    "compare_complex",
    "compare_hyperbolic",
    "compare_real_parts",
    "d_lambda_root_multiset",
    "d_lambda_roots",
    "derivative",
    "from_roots",
    "hlp_majorize",
    "is_hyperbolic",
    "multivariate_majorize",
    "normalized_derivative",
    "one_minus_lambda_d",
    "real_root_multiset",
    "root_trajectory",
    "root_velocity",
    "taylor_shift",
    "verify_chain",
]
