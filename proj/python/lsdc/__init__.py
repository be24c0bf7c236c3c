"""Coded schemes for linearly-separable distributed computing.

Factor a K x L demand matrix F over GF(q) into D * E = F, where D is the
parity check of a (partial) covering code and the columns of E are
minimum-weight coset leaders; report exact computation/communication
costs and the entropy bounds around them.
"""

from ._core import (
    DomainError,
    Error,
    InfeasibleD,
    InfeasibleRadius,
    ResourceLimit,
    Scheme,
    achievable_gamma,
    brute_force_optimal_gamma,
    build_coded,
    build_uncoded_centralized,
    build_uncoded_decentralized,
    converse_gamma,
    entropy,
    entropy_inv,
    example_scheme,
    multishot_gamma_bound,
    multishot_gamma_bound_derivative,
    region_report,
)

__all__ = [
    "DomainError",
    "Error",
    "InfeasibleD",
    "InfeasibleRadius",
    "ResourceLimit",
    "Scheme",
    "achievable_gamma",
    "brute_force_optimal_gamma",
    "build_coded",
    "build_uncoded_centralized",
    "build_uncoded_decentralized",
    "converse_gamma",
    "entropy",
    "entropy_inv",
    "example_scheme",
    "multishot_gamma_bound",
    "multishot_gamma_bound_derivative",
    "region_report",
]

__version__ = "0.1.0"
