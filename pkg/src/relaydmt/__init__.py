"""Diversity-multiplexing tradeoff toolkit for MIMO half-duplex relay channels."""

from .core import (
    AntennaConfig,
    ConfigurationError,
    DmtCurve,
    DmtPoint,
    DomainError,
    ExponentTriple,
    density_exponent,
    direct_level_range,
    diversity_objective,
    exponent_profile,
    fd_dmt,
    in_support,
    ptp_dmt,
    rate_exponent,
    relay_level_range,
)
from .simulate import (
    ChannelSample,
    CutsetTerms,
    IndependenceReport,
    InsufficientDataError,
    OutageEstimate,
    SlopeFit,
    channel_rng,
    conditional_independence_check,
    cutset_terms,
    diversity_fit,
    eigen_exponents,
    optimal_switch_time,
    outage_probability,
    rate_upper,
    sample_channel,
)
from .solvers import (
    LevelTriple,
    SolveResult,
    SolverRefusal,
    VARIANTS,
    dmt_1k1,
    dmt_curve,
    dmt_ddf_1k1,
    dmt_n1n,
    dmt_static_1k1,
    dmt_symmetric_upper,
    solve_general_grid,
    solve_static_n1n,
    solve_two_var,
)
from .verify import run_verify

__version__ = "0.1.0"

__all__ = [
    "AntennaConfig",
    "ChannelSample",
    "ConfigurationError",
    "CutsetTerms",
    "DmtCurve",
    "DmtPoint",
    "DomainError",
    "ExponentTriple",
    "IndependenceReport",
    "InsufficientDataError",
    "LevelTriple",
    "OutageEstimate",
    "SlopeFit",
    "SolveResult",
    "SolverRefusal",
    "VARIANTS",
    "channel_rng",
    "conditional_independence_check",
    "cutset_terms",
    "density_exponent",
    "direct_level_range",
    "diversity_fit",
    "diversity_objective",
    "dmt_1k1",
    "dmt_curve",
    "dmt_ddf_1k1",
    "dmt_n1n",
    "dmt_static_1k1",
    "dmt_symmetric_upper",
    "eigen_exponents",
    "exponent_profile",
    "fd_dmt",
    "in_support",
    "optimal_switch_time",
    "outage_probability",
    "ptp_dmt",
    "rate_exponent",
    "rate_upper",
    "relay_level_range",
    "run_verify",
    "sample_channel",
    "solve_general_grid",
    "solve_static_n1n",
    "solve_two_var",
    "__version__",
]
