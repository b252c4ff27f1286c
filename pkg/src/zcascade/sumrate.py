"""Closed-form optimized sum rate of the no-time-sharing rate-splitting scheme.

Each user splits its power into a common part (decoded by the next receiver)
and a private part (treated as noise there).  Over the pure splits, where each
user is entirely common or entirely private, the best sum rate follows an
all-or-nothing rule: user i goes fully common when its interference gain
exceeds an effective direct gain h_i, fully private otherwise.  The h_i follow
a left-to-right recursion: once users 1..i-1 are settled, user i behaves like
an interference-free link with direct amplitude h_i, and its rate is
C(h_i^2 P_i).

For two users the pure optimum is optimal over all splits.  For longer chains
that is no longer guaranteed: outside the exactly solved regimes a fractional
split can beat it (a middle user sends part of its power as common purely so
the next receiver can cancel it), which the grid oracle in
:mod:`zcascade.polytope` exhibits.  Inside the exact regimes the value below
is the sum capacity, so no scheme of any kind improves on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelConfig, gaussian_capacity, require_valid, _readonly

__all__ = [
    "EffectiveGains",
    "PowerSplit",
    "SumRateResult",
    "effective_gains",
    "optimal_split",
    "max_sum_rate",
    "r_star_case_form",
    "gain_step",
    "rate_step_min_form",
]


@dataclass(frozen=True)
class EffectiveGains:
    """Per-user effective direct-gain amplitudes and the resulting rates.

    ``h[0] == 1`` and ``0 < h[i] <= 1``; ``r_star[i] ==
    gaussian_capacity(h[i]**2 * P[i])``.
    """

    h: np.ndarray
    r_star: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "h", _readonly(self.h))
        object.__setattr__(self, "r_star", _readonly(self.r_star))


@dataclass(frozen=True)
class PowerSplit:
    """Fraction of each user's power allocated to its common message."""

    gamma: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "gamma", _readonly(self.gamma))


@dataclass(frozen=True)
class SumRateResult:
    sum_rate: float
    gains: EffectiveGains
    split: PowerSplit


def gain_step(a_prev: float, h_prev: float, p_prev: float, p_cur: float) -> float:
    """One step of the effective-gain recursion.

    For a weak link (a_prev <= h_prev) the predecessor stays private and acts
    as noise; otherwise it goes common and the current user keeps whatever
    rate the joint-decoding constraint leaves, capped at the interference-free
    amplitude 1.
    """
    if a_prev <= h_prev:
        return math.sqrt(1.0 / (1.0 + a_prev**2 * p_prev))
    num = (a_prev**2 - h_prev**2) * p_prev + p_cur
    den = p_cur + h_prev**2 * p_prev * p_cur
    return min(math.sqrt(num / den), 1.0)


def rate_step_min_form(a_prev: float, h_prev: float, p_prev: float, p_cur: float) -> float:
    """Per-user rate written as an explicit case split, bypassing h.

    Weak link: treat the predecessor as noise.  Strong link: the rate left by
    joint decoding of the predecessor's (fully common) signal, capped at the
    single-user rate.  Algebraically identical to
    ``gaussian_capacity(gain_step(...)**2 * p_cur)``; kept as an independent
    cross-check of that identity.
    """
    if a_prev <= h_prev:
        return gaussian_capacity(p_cur / (1.0 + a_prev**2 * p_prev))
    return min(
        gaussian_capacity(a_prev**2 * p_prev + p_cur) - gaussian_capacity(h_prev**2 * p_prev),
        gaussian_capacity(p_cur),
    )


def effective_gains(cfg: ChannelConfig) -> EffectiveGains:
    """Run the effective-gain recursion over the whole chain."""
    require_valid(cfg)
    h = np.empty(cfg.K)
    h[0] = 1.0
    for i in range(1, cfg.K):
        h[i] = gain_step(cfg.a[i - 1], h[i - 1], cfg.P[i - 1], cfg.P[i])
    r_star = gaussian_capacity(h**2 * cfg.P)
    return EffectiveGains(h=h, r_star=r_star)


def optimal_split(cfg: ChannelConfig) -> PowerSplit:
    """Best pure split: user i fully common iff a_i > h_i.

    Ties a_i == h_i resolve to fully private.  The last user interferes with
    nobody, so its split is immaterial; it is pinned to 0 for deterministic
    output.
    """
    gains = effective_gains(cfg)
    gamma = np.zeros(cfg.K)
    gamma[: cfg.K - 1] = (cfg.a > gains.h[:-1]).astype(float)
    return PowerSplit(gamma=gamma)


def max_sum_rate(cfg: ChannelConfig) -> SumRateResult:
    """Closed-form best sum rate over pure common/private splits.

    Exact over all splits for K = 2; for K >= 3 see the module note on
    fractional splits.
    """
    gains = effective_gains(cfg)
    split = optimal_split(cfg)
    return SumRateResult(sum_rate=float(np.sum(gains.r_star)), gains=gains, split=split)


def r_star_case_form(cfg: ChannelConfig, i: int) -> float:
    """Rate of user ``i`` (1-based, 2 <= i <= K) via the explicit case split.

    Cross-check route for the recursion: must agree with
    ``effective_gains(cfg).r_star[i-1]`` to floating precision.
    """
    require_valid(cfg)
    if not 2 <= i <= cfg.K:
        raise IndexError(f"user index must be in [2, {cfg.K}], got {i}")
    gains = effective_gains(cfg)
    return rate_step_min_form(cfg.a[i - 2], gains.h[i - 2], cfg.P[i - 2], cfg.P[i - 1])
