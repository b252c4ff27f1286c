"""Three-user regime classification and sum-capacity results.

Four regions of the (a1, a2) gain plane admit capacity statements:

* noisy    - both links weak enough that treating all interference as noise
             is sum-capacity optimal (exact);
* strong   - both gains in [1, very-strong): all-common transmission achieves
             the whole capacity region (exact);
* mixed I  - weak first link, strong-enough second link (exact);
* mixed II - strong first link, weak second link (upper bound half a bit
             above the achieved sum rate).

In every case the achieved value is the closed-form optimized split sum rate;
only the matching upper bound differs.  Channels outside all four regions get
the trivial interference-free upper bound, clearly labeled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import (
    THRESHOLD_TOL,
    ChannelConfig,
    gaussian_capacity,
    require_valid,
    very_strong_threshold,
)
from .sumrate import max_sum_rate

__all__ = [
    "RegimeError",
    "VeryStrongLinkError",
    "RegimeReport",
    "StrongRegion",
    "EXACT_NOISY",
    "EXACT_STRONG",
    "EXACT_MIXED1",
    "GAP05_MIXED2",
    "ACHIEVABLE_ONLY",
    "EXACT_STATUSES",
    "classify",
    "noisy_condition",
    "strong_condition",
    "mixed1_condition",
    "mixed2_condition",
    "noisy_sum_capacity",
    "strong_region",
    "strong_sum_capacity",
    "mixed1_sum_capacity",
    "mixed2_bounds",
    "splitting_regime_label",
]

EXACT_NOISY = "ExactNoisy"
EXACT_STRONG = "ExactStrong"
EXACT_MIXED1 = "ExactMixedI"
GAP05_MIXED2 = "Gap05MixedII"
ACHIEVABLE_ONLY = "AchievableOnly"

EXACT_STATUSES = frozenset({EXACT_NOISY, EXACT_STRONG, EXACT_MIXED1})

# Sanity margin for the internal check that a regime's capacity formula agrees
# with the closed-form achieved rate; a breach means a classification bug.
_CONSISTENCY_TOL = 1e-6


class RegimeError(ValueError):
    """Operation applied outside its regime, or to an unsupported K."""


class VeryStrongLinkError(RegimeError):
    """Channel still contains a removable very-strong link."""


@dataclass(frozen=True)
class RegimeReport:
    """Classification outcome for a 3-user chain.

    ``achievable`` is always the optimized-split sum rate; ``upper`` equals it
    for exact statuses, exceeds it by exactly 0.5 for the mixed-II bound, and
    is the interference-free ceiling otherwise.
    """

    splitting_regime: str
    capacity_status: str
    achievable: float
    upper: float
    conditions_checked: tuple

    def to_json_dict(self) -> dict:
        return {
            "splitting_regime": self.splitting_regime,
            "capacity_status": self.capacity_status,
            "achievable": self.achievable,
            "upper": self.upper,
            "conditions": [{"name": n, "holds": bool(h)} for n, h in self.conditions_checked],
        }


@dataclass(frozen=True)
class StrongRegion:
    """Capacity region in the strong regime: seven inequalities over (R1,R2,R3)."""

    inequalities: tuple

    def coeff_matrix(self) -> np.ndarray:
        return np.array([c for c, _ in self.inequalities], dtype=float)

    def rhs_vector(self) -> np.ndarray:
        return np.array([r for _, r in self.inequalities], dtype=float)

    def contains(self, point, tol: float = 1e-12) -> bool:
        p = np.asarray(point, dtype=float)
        if np.any(p < -tol):
            return False
        return bool(np.all(self.coeff_matrix() @ p <= self.rhs_vector() + tol))


def _require_k3(cfg: ChannelConfig) -> None:
    require_valid(cfg)
    if cfg.K != 3:
        raise RegimeError(f"regime analysis is defined for K = 3, got K = {cfg.K}")


def noisy_condition(cfg: ChannelConfig, tol: float = THRESHOLD_TOL) -> bool:
    """a1^2 + a2^2 (1 + a1^2 P1)^2 <= 1."""
    _require_k3(cfg)
    a1, a2 = cfg.a
    return a1**2 + a2**2 * (1.0 + a1**2 * cfg.P[0]) ** 2 <= 1.0 + tol


def strong_condition(cfg: ChannelConfig, tol: float = THRESHOLD_TOL) -> bool:
    """Both gains at least 1 and below the very-strong threshold."""
    _require_k3(cfg)
    return all(
        1.0 - tol <= cfg.a[j] < very_strong_threshold(cfg.P[j + 1]) + tol for j in (0, 1)
    )


def mixed1_condition(cfg: ChannelConfig, tol: float = THRESHOLD_TOL) -> bool:
    """a1 < 1 and sqrt((1+P3)/(1+a1^2 P1)) <= a2 < sqrt(1+P3)."""
    _require_k3(cfg)
    a1, a2 = cfg.a
    lo = math.sqrt((1.0 + cfg.P[2]) / (1.0 + a1**2 * cfg.P[0]))
    return a1 < 1.0 + tol and lo - tol <= a2 < very_strong_threshold(cfg.P[2]) + tol


def mixed2_condition(cfg: ChannelConfig, tol: float = THRESHOLD_TOL) -> bool:
    """1 <= a1 < sqrt(1+P2) and a2 <= sqrt(1/(1+a1^2 P1))."""
    _require_k3(cfg)
    a1, a2 = cfg.a
    hi = math.sqrt(1.0 / (1.0 + a1**2 * cfg.P[0]))
    return 1.0 - tol <= a1 < very_strong_threshold(cfg.P[1]) + tol and a2 <= hi + tol


def noisy_sum_capacity(cfg: ChannelConfig, tol: float = THRESHOLD_TOL) -> float:
    """Exact sum capacity with all interference treated as noise."""
    if not noisy_condition(cfg, tol):
        raise RegimeError("channel is not in the noisy regime")
    a1, a2 = cfg.a
    p1, p2, p3 = cfg.P
    return float(
        gaussian_capacity(p1)
        + gaussian_capacity(p2 / (1.0 + a1**2 * p1))
        + gaussian_capacity(p3 / (1.0 + a2**2 * p2))
    )


def strong_region(cfg: ChannelConfig, tol: float = THRESHOLD_TOL) -> StrongRegion:
    """Capacity region in the strong regime.

    Constraint order: the three single-user bounds, the two cross-link bounds
    on R1 and R2, then the two adjacent-pair sum bounds.
    """
    _require_k3(cfg)
    if not strong_condition(cfg, tol):
        raise RegimeError("channel is not in the strong regime")
    a1, a2 = cfg.a
    p1, p2, p3 = cfg.P
    rows = [
        ((1.0, 0.0, 0.0), gaussian_capacity(p1)),
        ((0.0, 1.0, 0.0), gaussian_capacity(p2)),
        ((0.0, 0.0, 1.0), gaussian_capacity(p3)),
        ((1.0, 0.0, 0.0), gaussian_capacity(a1**2 * p1)),
        ((0.0, 1.0, 0.0), gaussian_capacity(a2**2 * p2)),
        ((1.0, 1.0, 0.0), gaussian_capacity(a1**2 * p1 + p2)),
        ((0.0, 1.0, 1.0), gaussian_capacity(a2**2 * p2 + p3)),
    ]
    return StrongRegion(
        inequalities=tuple((np.array(c), float(r)) for c, r in rows)
    )


def strong_sum_capacity(cfg: ChannelConfig, tol: float = THRESHOLD_TOL) -> float:
    """Exact sum capacity in the strong regime (projection of the region)."""
    _require_k3(cfg)
    if not strong_condition(cfg, tol):
        raise RegimeError("channel is not in the strong regime")
    a1, a2 = cfg.a
    p1, p2, p3 = cfg.P
    return float(
        min(
            gaussian_capacity(p1) + gaussian_capacity(a2**2 * p2 + p3),
            gaussian_capacity(p3) + gaussian_capacity(a1**2 * p1 + p2),
        )
    )


def mixed1_sum_capacity(cfg: ChannelConfig, tol: float = THRESHOLD_TOL) -> float:
    """Exact sum capacity in mixed regime I."""
    if not mixed1_condition(cfg, tol):
        raise RegimeError("channel is not in mixed regime I")
    a1, _ = cfg.a
    p1, p2, p3 = cfg.P
    return float(
        gaussian_capacity(p1)
        + gaussian_capacity(p2 / (1.0 + a1**2 * p1))
        + gaussian_capacity(p3)
    )


def mixed2_bounds(cfg: ChannelConfig, tol: float = THRESHOLD_TOL) -> tuple[float, float]:
    """(achievable, upper) in mixed regime II; the gap is exactly half a bit."""
    if not mixed2_condition(cfg, tol):
        raise RegimeError("channel is not in mixed regime II")
    a1, a2 = cfg.a
    p1, p2, p3 = cfg.P
    achievable = float(
        gaussian_capacity(a1**2 * p1 + p2) + gaussian_capacity(p3 / (1.0 + a2**2 * p2))
    )
    return achievable, achievable + 0.5


def splitting_regime_label(split) -> str:
    """Quadrant label from the first two split fractions.

    I/II/III/VI mean user 1 and 2 send (common, common), (private, common),
    (private, private) and (common, private) respectively.
    """
    g1, g2 = (float(split.gamma[0]) > 0.5, float(split.gamma[1]) > 0.5)
    return {(True, True): "I", (False, True): "II", (False, False): "III", (True, False): "VI"}[
        (g1, g2)
    ]


def _check_consistency(formula: float, achievable: float, status: str) -> None:
    if abs(formula - achievable) > _CONSISTENCY_TOL:
        raise RuntimeError(
            f"internal inconsistency: {status} formula {formula!r} vs "
            f"optimized sum rate {achievable!r}"
        )


def classify(cfg: ChannelConfig, tol: float = THRESHOLD_TOL) -> RegimeReport:
    """Classify a 3-user chain and attach the matching capacity statement.

    The channel must not contain a very-strong link (remove those first; see
    :mod:`zcascade.decompose`).  The four region conditions are mutually
    exclusive: the noisy condition is taken together with a1 < 1, which it
    already implies except at the single boundary point (a1, a2) = (1, 0),
    conceded to mixed regime II.  Conditions are evaluated in the order noisy,
    strong, mixed I, mixed II for deterministic reporting.
    """
    _require_k3(cfg)
    for j in (0, 1):
        if cfg.a[j] >= very_strong_threshold(cfg.P[j + 1]) - tol:
            raise VeryStrongLinkError(
                f"link {j + 1} has a very-strong gain {cfg.a[j]}; remove it before classifying"
            )

    conditions = (
        ("noisy", noisy_condition(cfg, tol) and cfg.a[0] < 1.0 + tol),
        ("strong", strong_condition(cfg, tol)),
        ("mixed_i", mixed1_condition(cfg, tol)),
        ("mixed_ii", mixed2_condition(cfg, tol)),
    )

    result = max_sum_rate(cfg)
    achievable = result.sum_rate
    regime = splitting_regime_label(result.split)

    matched = next((name for name, holds in conditions if holds), None)
    if matched == "noisy":
        status = EXACT_NOISY
        _check_consistency(noisy_sum_capacity(cfg, tol), achievable, status)
        upper = achievable
    elif matched == "strong":
        status = EXACT_STRONG
        _check_consistency(strong_sum_capacity(cfg, tol), achievable, status)
        upper = achievable
    elif matched == "mixed_i":
        status = EXACT_MIXED1
        _check_consistency(mixed1_sum_capacity(cfg, tol), achievable, status)
        upper = achievable
    elif matched == "mixed_ii":
        status = GAP05_MIXED2
        _check_consistency(mixed2_bounds(cfg, tol)[0], achievable, status)
        upper = achievable + 0.5
    else:
        status = ACHIEVABLE_ONLY
        upper = float(np.sum(gaussian_capacity(cfg.P)))

    return RegimeReport(
        splitting_regime=regime,
        capacity_status=status,
        achievable=achievable,
        upper=upper,
        conditions_checked=conditions,
    )
