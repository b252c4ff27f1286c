"""Channel parameter types, validation, and standard-form reduction.

A cascade Z-interference channel chains K transmitter/receiver pairs:
receiver 1 hears only its own transmitter, receiver i (i >= 2) additionally
hears transmitter i-1 through a single interference gain.  The standard form
normalizes direct gains and noise variances to 1, leaving only the K-1
interference gains ``a`` and the K transmit powers ``P``.

All rates are in bits per real channel use (base-2 logarithms).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

__all__ = [
    "THRESHOLD_TOL",
    "ChannelConfig",
    "GeneralChannel",
    "InvalidChannelError",
    "DegenerateChannelError",
    "ValidationIssue",
    "gaussian_capacity",
    "inverse_capacity",
    "to_standard_form",
    "validate",
    "require_valid",
    "very_strong_threshold",
    "channel_from_json",
    "channel_to_json",
]

_LN2 = math.log(2.0)

#: Additive slack applied to regime-threshold comparisons.  The regime
#: definitions are sharp inequalities, so the default is exact floating-point
#: comparison; a nonzero value is only meant for deliberate boundary studies.
THRESHOLD_TOL = 0.0


@dataclass(frozen=True)
class ValidationIssue:
    """First violated invariant of a channel record."""

    field: str
    index: Optional[int]
    reason: str

    def __str__(self) -> str:
        where = self.field if self.index is None else f"{self.field}[{self.index}]"
        return f"{where}: {self.reason}"


class InvalidChannelError(ValueError):
    """Raised when an operation receives a channel that fails validation."""

    def __init__(self, issue: ValidationIssue):
        super().__init__(str(issue))
        self.issue = issue


class DegenerateChannelError(InvalidChannelError):
    """Raised for general-form channels that cannot be normalized (d_i = 0)."""


def _readonly(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class ChannelConfig:
    """Standard-form cascade channel: unit noise, unit direct gains.

    ``a[i]`` is the magnitude of the interference gain from user i+1 into
    receiver i+2 (0-based storage of the K-1 links); ``P`` holds the K
    average-power constraints.  Construction does not validate; use
    :func:`validate` or :func:`require_valid`.
    """

    K: int
    a: np.ndarray
    P: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", _readonly(self.a))
        object.__setattr__(self, "P", _readonly(self.P))


@dataclass(frozen=True)
class GeneralChannel:
    """Cascade channel with arbitrary direct gains, cross gains and noise.

    ``d`` (length K) are direct gains, ``c`` (length K-1) cross gains from
    user i into receiver i+1, ``sigma2`` noise variances, ``Q`` power limits.
    """

    K: int
    d: np.ndarray
    c: np.ndarray
    sigma2: np.ndarray
    Q: np.ndarray

    def __post_init__(self):
        for name in ("d", "c", "sigma2", "Q"):
            object.__setattr__(self, name, _readonly(getattr(self, name)))


def gaussian_capacity(x):
    """Capacity of a real AWGN link at SNR ``x``: 0.5 * log2(1 + x) bits.

    Accepts scalars or arrays; raises ValueError on negative or non-finite
    input.
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("SNR must be finite")
    if np.any(arr < 0):
        raise ValueError("SNR must be nonnegative")
    out = 0.5 * np.log1p(arr) / _LN2
    return float(out) if np.isscalar(x) or arr.ndim == 0 else out


def inverse_capacity(y):
    """SNR needed for ``y`` bits on a real AWGN link: 2**(2y) - 1."""
    arr = np.asarray(y, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("rate must be finite")
    if np.any(arr < 0):
        raise ValueError("rate must be nonnegative")
    out = np.expm1(2.0 * _LN2 * arr)
    return float(out) if np.isscalar(y) or arr.ndim == 0 else out


def _cap(x):
    # Unchecked fast path for internal use on already-sane values.
    return 0.5 * np.log1p(x) / _LN2


def very_strong_threshold(p_next: float) -> float:
    """Gain magnitude at which a link becomes removable.

    A link with a >= sqrt(1 + P_next) can always be decoded first by the
    interfered receiver, so cutting it loses no capacity.
    """
    return math.sqrt(1.0 + p_next)


def validate(cfg: ChannelConfig) -> Optional[ValidationIssue]:
    """Check all ChannelConfig invariants; return the first violation or None."""
    if not isinstance(cfg.K, (int, np.integer)) or isinstance(cfg.K, bool):
        return ValidationIssue("K", None, "must be an integer")
    if cfg.K < 2:
        return ValidationIssue("K", None, f"must be >= 2, got {cfg.K}")
    if cfg.a.ndim != 1 or len(cfg.a) != cfg.K - 1:
        return ValidationIssue("a", None, f"length must be K-1 = {cfg.K - 1}, got {cfg.a.shape}")
    if cfg.P.ndim != 1 or len(cfg.P) != cfg.K:
        return ValidationIssue("P", None, f"length must be K = {cfg.K}, got {cfg.P.shape}")
    for i, v in enumerate(cfg.a):
        if not np.isfinite(v):
            return ValidationIssue("a", i, "must be finite")
        if v < 0:
            return ValidationIssue("a", i, f"negative gain {v}")
    for i, v in enumerate(cfg.P):
        if not np.isfinite(v):
            return ValidationIssue("P", i, "must be finite")
        if v <= 0:
            return ValidationIssue("P", i, f"power must be positive, got {v}")
    return None


def require_valid(cfg: ChannelConfig) -> ChannelConfig:
    """Raise InvalidChannelError if ``cfg`` violates any invariant."""
    issue = validate(cfg)
    if issue is not None:
        raise InvalidChannelError(issue)
    return cfg


def to_standard_form(g: GeneralChannel) -> ChannelConfig:
    """Normalize a general cascade channel to unit noise and unit direct gains.

    P_i = d_i^2 Q_i / sigma2_i and a_i = |c_i| sqrt(sigma2_i) /
    (|d_i| sqrt(sigma2_{i+1})).  Signs are dropped: with Gaussian noise every
    capacity-relevant quantity depends on the gains only through their squares.
    """
    K = g.K
    if not isinstance(K, (int, np.integer)) or K < 2:
        raise InvalidChannelError(ValidationIssue("K", None, f"must be an integer >= 2, got {K}"))
    if g.d.shape != (K,) or g.sigma2.shape != (K,) or g.Q.shape != (K,):
        raise InvalidChannelError(ValidationIssue("d/sigma2/Q", None, f"must have length K = {K}"))
    if g.c.shape != (K - 1,):
        raise InvalidChannelError(ValidationIssue("c", None, f"length must be K-1 = {K - 1}"))
    for i in range(K):
        if not np.isfinite(g.d[i]) or g.d[i] == 0:
            raise DegenerateChannelError(ValidationIssue("d", i, "direct gain must be finite and nonzero"))
        if not np.isfinite(g.sigma2[i]) or g.sigma2[i] <= 0:
            raise InvalidChannelError(ValidationIssue("sigma2", i, "noise variance must be positive"))
        if not np.isfinite(g.Q[i]) or g.Q[i] <= 0:
            raise InvalidChannelError(ValidationIssue("Q", i, "power limit must be positive"))
    for i in range(K - 1):
        if not np.isfinite(g.c[i]):
            raise InvalidChannelError(ValidationIssue("c", i, "cross gain must be finite"))

    P = g.d**2 * g.Q / g.sigma2
    a = np.abs(g.c) * np.sqrt(g.sigma2[:-1]) / (np.abs(g.d[:-1]) * np.sqrt(g.sigma2[1:]))
    return require_valid(ChannelConfig(K=int(K), a=a, P=P))


def channel_from_json(source: Union[str, dict]) -> ChannelConfig:
    """Parse a channel from JSON text or an already-decoded object.

    Two schemas are accepted: ``{"K": int, "a": [...], "P": [...]}`` for
    standard form, and ``{"general": {"d": [...], "c": [...], "sigma2": [...],
    "Q": [...]}}`` which is normalized on the way in.
    """
    obj = json.loads(source) if isinstance(source, str) else source
    if not isinstance(obj, dict):
        raise ValueError("channel JSON must be an object")
    if "general" in obj:
        gen = obj["general"]
        for key in ("d", "c", "sigma2", "Q"):
            if key not in gen:
                raise ValueError(f"general channel JSON missing field {key!r}")
        return to_standard_form(
            GeneralChannel(
                K=len(gen["d"]),
                d=gen["d"],
                c=gen["c"],
                sigma2=gen["sigma2"],
                Q=gen["Q"],
            )
        )
    for key in ("K", "a", "P"):
        if key not in obj:
            raise ValueError(f"channel JSON missing field {key!r}")
    return require_valid(ChannelConfig(K=int(obj["K"]), a=obj["a"], P=obj["P"]))


def channel_to_json(cfg: ChannelConfig) -> dict:
    """Standard-form channel as a JSON-ready dict."""
    return {"K": int(cfg.K), "a": [float(v) for v in cfg.a], "P": [float(v) for v in cfg.P]}
