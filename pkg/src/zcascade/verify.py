"""Randomized verification of the closed-form sum rate against the grid oracle.

Channels are drawn from a seeded generator (numpy PCG64), so every campaign is
replayable from its seed.  Each sampled channel is swept by the grid oracle;
the campaign records the worst oracle-minus-closed-form violation and checks
that the rate polytope at the claimed optimal split reproduces the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channel import ChannelConfig, channel_to_json, require_valid
from .polytope import (
    DEFAULT_MAX_GRID_POINTS,
    build_polytope,
    grid_oracle,
    max_sum_lp,
)
from .sumrate import max_sum_rate, optimal_split

__all__ = [
    "DEFAULT_POWER_RANGE",
    "DEFAULT_TOLERANCE",
    "ChannelRecord",
    "CampaignReport",
    "sample_channel",
    "sample_noisy",
    "sample_strong",
    "sample_mixed1",
    "sample_mixed2",
    "verify_campaign",
]

DEFAULT_POWER_RANGE = (0.1, 100.0)
DEFAULT_TOLERANCE = 1e-6


def _log_uniform(rng: np.random.Generator, lo: float, hi: float, size: int) -> np.ndarray:
    return np.exp(rng.uniform(np.log(lo), np.log(hi), size))


def sample_channel(
    rng: np.random.Generator,
    k: int,
    power_range: tuple[float, float] = DEFAULT_POWER_RANGE,
) -> ChannelConfig:
    """Random K-user chain: powers log-uniform, each gain below very-strong."""
    p = _log_uniform(rng, *power_range, k)
    a = rng.uniform(0.0, np.sqrt(1.0 + p[1:]))
    return require_valid(ChannelConfig(K=k, a=a, P=p))


def sample_noisy(
    rng: np.random.Generator,
    power_range: tuple[float, float] = DEFAULT_POWER_RANGE,
) -> ChannelConfig:
    """Random 3-user chain satisfying the weak-interference condition."""
    p = _log_uniform(rng, *power_range, 3)
    a1 = rng.uniform(0.0, 1.0)
    a2_max = np.sqrt(1.0 - a1**2) / (1.0 + a1**2 * p[0])
    a2 = rng.uniform(0.0, a2_max)
    return require_valid(ChannelConfig(K=3, a=(a1, a2), P=p))


def sample_strong(
    rng: np.random.Generator,
    power_range: tuple[float, float] = DEFAULT_POWER_RANGE,
) -> ChannelConfig:
    """Random 3-user chain with both gains in [1, very-strong)."""
    p = _log_uniform(rng, *power_range, 3)
    a = rng.uniform(1.0, np.sqrt(1.0 + p[1:]))
    return require_valid(ChannelConfig(K=3, a=a, P=p))


def sample_mixed1(
    rng: np.random.Generator,
    power_range: tuple[float, float] = DEFAULT_POWER_RANGE,
) -> ChannelConfig:
    """Random 3-user chain in mixed regime I (weak first link, strong second)."""
    p = _log_uniform(rng, *power_range, 3)
    a1 = rng.uniform(0.0, 1.0)
    lo = np.sqrt((1.0 + p[2]) / (1.0 + a1**2 * p[0]))
    hi = np.sqrt(1.0 + p[2])
    a2 = rng.uniform(lo, hi)
    return require_valid(ChannelConfig(K=3, a=(a1, a2), P=p))


def sample_mixed2(
    rng: np.random.Generator,
    power_range: tuple[float, float] = DEFAULT_POWER_RANGE,
) -> ChannelConfig:
    """Random 3-user chain in mixed regime II (strong first link, weak second)."""
    p = _log_uniform(rng, *power_range, 3)
    a1 = rng.uniform(1.0, np.sqrt(1.0 + p[1]))
    a2 = rng.uniform(0.0, np.sqrt(1.0 / (1.0 + a1**2 * p[0])))
    return require_valid(ChannelConfig(K=3, a=(a1, a2), P=p))


@dataclass(frozen=True)
class ChannelRecord:
    """Oracle outcome for one channel.

    ``split_gap`` is |LP value at the claimed optimal split - closed form|; it
    should sit at floating-point noise regardless of the grid step.
    """

    channel: ChannelConfig
    best_sum: float
    best_split: tuple
    closed_form: float
    max_violation: float
    split_gap: float

    def to_json_dict(self) -> dict:
        return {
            "channel": channel_to_json(self.channel),
            "best_sum": self.best_sum,
            "best_split": list(self.best_split),
            "closed_form": self.closed_form,
            "max_violation": self.max_violation,
            "split_gap": self.split_gap,
        }


@dataclass(frozen=True)
class CampaignReport:
    """Summary of a verification campaign."""

    count: int
    seed: Optional[int]
    grid_step: float
    k_range: tuple
    tolerance: float
    records: tuple

    @property
    def worst_violation(self) -> Optional[float]:
        if not self.records:
            return None
        return max(r.max_violation for r in self.records)

    @property
    def worst_split_gap(self) -> Optional[float]:
        if not self.records:
            return None
        return max(r.split_gap for r in self.records)

    @property
    def failures(self) -> tuple:
        return tuple(r for r in self.records if r.max_violation > self.tolerance)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self, include_channels: bool = False) -> dict:
        worst = max(
            self.records, key=lambda r: r.max_violation, default=None
        )
        out = {
            "count": self.count,
            "seed": self.seed,
            "grid_step": self.grid_step,
            "k_range": list(self.k_range),
            "tolerance": self.tolerance,
            "worst_violation": self.worst_violation,
            "worst_split_gap": self.worst_split_gap,
            "worst_channel": channel_to_json(worst.channel) if worst else None,
            "failure_count": len(self.failures),
            "failures": [r.to_json_dict() for r in self.failures],
            "passed": self.passed,
        }
        if include_channels:
            out["channels"] = [r.to_json_dict() for r in self.records]
        return out


def check_channel(
    cfg: ChannelConfig,
    grid_step: float,
    max_grid_points: int = DEFAULT_MAX_GRID_POINTS,
) -> ChannelRecord:
    """Run the grid oracle and the optimal-split LP cross-check on one channel."""
    require_valid(cfg)
    report = grid_oracle(cfg, grid_step, max_grid_points=max_grid_points)
    lp_at_optimal, _ = max_sum_lp(build_polytope(cfg, optimal_split(cfg)))
    split_gap = abs(lp_at_optimal - max_sum_rate(cfg).sum_rate)
    return ChannelRecord(
        channel=cfg,
        best_sum=report.best_sum,
        best_split=tuple(float(g) for g in report.best_split.gamma),
        closed_form=report.closed_form,
        max_violation=report.max_violation,
        split_gap=split_gap,
    )


def verify_campaign(
    count: int,
    k_range: tuple[int, int] = (2, 5),
    grid_step: float = 0.05,
    seed: Optional[int] = None,
    power_range: tuple[float, float] = DEFAULT_POWER_RANGE,
    tolerance: float = DEFAULT_TOLERANCE,
    max_grid_points: int = DEFAULT_MAX_GRID_POINTS,
    channels: Optional[list] = None,
) -> CampaignReport:
    """Sample channels, sweep each with the grid oracle, and summarize.

    With ``channels`` given, those are checked instead of sampling (``count``
    and ``k_range`` are then ignored).  Identical arguments and seed produce an
    identical report.
    """
    if channels is None:
        if count < 0:
            raise ValueError("count must be nonnegative")
        k_lo, k_hi = k_range
        if not (isinstance(k_lo, int) and isinstance(k_hi, int) and 2 <= k_lo <= k_hi):
            raise ValueError(f"invalid k_range {k_range}")
        rng = np.random.default_rng(seed)
        channels = [
            sample_channel(rng, int(rng.integers(k_lo, k_hi + 1)), power_range)
            for _ in range(count)
        ]
    else:
        channels = list(channels)
        count = len(channels)
        k_range = (
            min((c.K for c in channels), default=0),
            max((c.K for c in channels), default=0),
        )

    records = tuple(check_channel(c, grid_step, max_grid_points) for c in channels)
    return CampaignReport(
        count=count,
        seed=seed,
        grid_step=grid_step,
        k_range=tuple(k_range),
        tolerance=tolerance,
        records=records,
    )
