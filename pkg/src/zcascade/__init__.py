"""Capacity analysis for cascade Gaussian Z-interference channels.

A chain of K transmitter-receiver pairs in which each receiver hears its own
transmitter plus the previous one.  The package provides the closed-form
optimized sum rate of the common/private power-splitting scheme, an
independent LP-over-polytope grid oracle, exact 3-user regime classification,
and capacity-preserving decomposition of long chains.
"""

from .channel import (
    ChannelConfig,
    DegenerateChannelError,
    GeneralChannel,
    InvalidChannelError,
    ValidationIssue,
    channel_from_json,
    channel_to_json,
    gaussian_capacity,
    inverse_capacity,
    require_valid,
    to_standard_form,
    validate,
    very_strong_threshold,
)
from .decompose import (
    Cut,
    Segmentation,
    SegmentInfo,
    decompose,
    lemma2_segment,
    remove_very_strong,
    subchain,
)
from .polytope import (
    GridResourceError,
    OracleReport,
    RatePolytope,
    build_polytope,
    grid_oracle,
    max_sum_lp,
)
from .regimes import (
    RegimeError,
    RegimeReport,
    StrongRegion,
    VeryStrongLinkError,
    classify,
    mixed1_sum_capacity,
    mixed2_bounds,
    noisy_sum_capacity,
    strong_region,
    strong_sum_capacity,
)
from .sumrate import (
    EffectiveGains,
    PowerSplit,
    SumRateResult,
    effective_gains,
    max_sum_rate,
    optimal_split,
    r_star_case_form,
)
from .verify import (
    CampaignReport,
    ChannelRecord,
    check_channel,
    sample_channel,
    verify_campaign,
)

__version__ = "1.0.0"

__all__ = [
    "ChannelConfig",
    "GeneralChannel",
    "ValidationIssue",
    "InvalidChannelError",
    "DegenerateChannelError",
    "gaussian_capacity",
    "inverse_capacity",
    "very_strong_threshold",
    "validate",
    "require_valid",
    "to_standard_form",
    "channel_from_json",
    "channel_to_json",
    "EffectiveGains",
    "PowerSplit",
    "SumRateResult",
    "effective_gains",
    "optimal_split",
    "max_sum_rate",
    "r_star_case_form",
    "RatePolytope",
    "OracleReport",
    "GridResourceError",
    "build_polytope",
    "max_sum_lp",
    "grid_oracle",
    "RegimeReport",
    "StrongRegion",
    "RegimeError",
    "VeryStrongLinkError",
    "classify",
    "noisy_sum_capacity",
    "strong_region",
    "strong_sum_capacity",
    "mixed1_sum_capacity",
    "mixed2_bounds",
    "SegmentInfo",
    "Cut",
    "Segmentation",
    "subchain",
    "remove_very_strong",
    "lemma2_segment",
    "decompose",
    "ChannelRecord",
    "CampaignReport",
    "sample_channel",
    "check_channel",
    "verify_campaign",
    "__version__",
]
