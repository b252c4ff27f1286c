"""Splitting long chains into independently solvable sub-chains.

Two cut rules shorten a chain without losing capacity:

* a very-strong link (gain at or above sqrt(1 + next power)) can be removed
  outright, because the interfered receiver can always decode and cancel it;
* a cut after user k is exact whenever the prefix sum capacity is known to be
  achieved by the simple superposition scheme and the gain out of user k is at
  least sqrt(1 + P_{k+1}) times the prefix's final effective gain.

The second rule applies to 2-user prefixes always and to 3-user prefixes whose
classification is exact.  Scanning is greedy left to right; segments that
cannot be resolved are reported with achievable-only values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .channel import (
    THRESHOLD_TOL,
    ChannelConfig,
    gaussian_capacity,
    require_valid,
    very_strong_threshold,
)
from .regimes import ACHIEVABLE_ONLY, EXACT_STATUSES, VeryStrongLinkError, classify
from .sumrate import effective_gains, max_sum_rate

__all__ = [
    "SegmentInfo",
    "Cut",
    "Segmentation",
    "SEG_POINT_TO_POINT",
    "SEG_TWO_USER",
    "REASON_VERY_STRONG",
    "REASON_LEMMA2",
    "EXACT_SEGMENT_STATUSES",
    "subchain",
    "remove_very_strong",
    "lemma2_segment",
    "decompose",
]

SEG_POINT_TO_POINT = "ExactPointToPoint"
SEG_TWO_USER = "ExactTwoUser"
REASON_VERY_STRONG = "VeryStrong"
REASON_LEMMA2 = "Lemma2"

EXACT_SEGMENT_STATUSES = frozenset({SEG_POINT_TO_POINT, SEG_TWO_USER}) | EXACT_STATUSES


@dataclass(frozen=True)
class SegmentInfo:
    """One sub-chain: users ``start..end`` (1-based, inclusive)."""

    start: int
    end: int
    value: float
    status: str

    @property
    def exact(self) -> bool:
        return self.status in EXACT_SEGMENT_STATUSES


@dataclass(frozen=True)
class Cut:
    """Severed link between user ``after`` and user ``after + 1``."""

    after: int
    reason: str


@dataclass(frozen=True)
class Segmentation:
    """Ordered partition of the chain with per-segment capacity statements.

    ``total`` is the chain sum capacity when every segment is exact, else None.
    """

    segments: tuple
    cuts: tuple
    total: Optional[float]

    def to_json_dict(self) -> dict:
        return {
            "segments": [
                {"range": [s.start, s.end], "value": s.value, "status": s.status}
                for s in self.segments
            ],
            "cuts": [{"after": c.after, "reason": c.reason} for c in self.cuts],
            "total": self.total,
        }


def subchain(cfg: ChannelConfig, start: int, end: int) -> ChannelConfig:
    """Restriction to users ``start..end`` (1-based, inclusive).

    A single-user result (start == end) is returned with K = 1; it is not a
    valid standalone chain but carries the right power for capacity lookups.
    """
    if not 1 <= start <= end <= cfg.K:
        raise IndexError(f"user range [{start}, {end}] outside 1..{cfg.K}")
    return ChannelConfig(
        K=end - start + 1,
        a=cfg.a[start - 1 : end - 1],
        P=cfg.P[start - 1 : end],
    )


def _is_very_strong(cfg: ChannelConfig, link: int, tol: float) -> bool:
    # link is 1-based: gain a_link into receiver link+1.
    return cfg.a[link - 1] >= very_strong_threshold(cfg.P[link]) - tol


def remove_very_strong(
    cfg: ChannelConfig, tol: float = THRESHOLD_TOL
) -> tuple[list[ChannelConfig], list[Cut]]:
    """Cut every very-strong link, returning the sub-chains and the cuts.

    The boundary gain equal to the threshold is cut.  Idempotent: the returned
    sub-chains contain no very-strong links.
    """
    require_valid(cfg)
    cuts = [
        Cut(after=k, reason=REASON_VERY_STRONG)
        for k in range(1, cfg.K)
        if _is_very_strong(cfg, k, tol)
    ]
    starts = [1] + [c.after + 1 for c in cuts]
    ends = [c.after for c in cuts] + [cfg.K]
    return [subchain(cfg, s, e) for s, e in zip(starts, ends)], cuts


def _segment_value(cfg: ChannelConfig, tol: float) -> tuple[float, str]:
    """Best-known sum rate and status for a whole sub-chain."""
    if cfg.K == 1:
        return float(gaussian_capacity(cfg.P[0])), SEG_POINT_TO_POINT
    if cfg.K == 2:
        return max_sum_rate(cfg).sum_rate, SEG_TWO_USER
    if cfg.K == 3:
        report = classify(cfg, tol)
        return report.achievable, report.capacity_status
    return max_sum_rate(cfg).sum_rate, ACHIEVABLE_ONLY


def _find_cut(cfg: ChannelConfig, start: int, tol: float):
    """First qualifying cut position scanning from segment ``start``.

    Returns (cut position, prefix value, prefix status) or None.  Only prefix
    lengths 2 and 3 can qualify: length 1 would be a very-strong link (already
    excluded) and longer prefixes have no known capacity.
    """
    for length in (2, 3):
        k = start + length - 1
        if k >= cfg.K:
            return None
        prefix = subchain(cfg, start, k)
        if length == 2:
            value, status = max_sum_rate(prefix).sum_rate, SEG_TWO_USER
        else:
            report = classify(prefix, tol)
            if report.capacity_status not in EXACT_STATUSES:
                continue
            value, status = report.achievable, report.capacity_status
        h_k = float(effective_gains(prefix).h[-1])
        if cfg.a[k - 1] >= very_strong_threshold(cfg.P[k]) * h_k - tol:
            return k, value, status
    return None


def lemma2_segment(cfg: ChannelConfig, tol: float = THRESHOLD_TOL) -> Segmentation:
    """Greedy left-to-right segmentation of a chain with no very-strong links.

    Raises VeryStrongLinkError if a very-strong link is still present; run
    :func:`remove_very_strong` (or :func:`decompose`) first.
    """
    require_valid(cfg)
    for k in range(1, cfg.K):
        if _is_very_strong(cfg, k, tol):
            raise VeryStrongLinkError(
                f"link {k} is very strong; apply remove_very_strong before segmenting"
            )

    segments = []
    cuts = []
    start = 1
    while start <= cfg.K:
        found = _find_cut(cfg, start, tol)
        if found is None:
            value, status = _segment_value(subchain(cfg, start, cfg.K), tol)
            segments.append(SegmentInfo(start, cfg.K, value, status))
            break
        k, value, status = found
        segments.append(SegmentInfo(start, k, value, status))
        cuts.append(Cut(after=k, reason=REASON_LEMMA2))
        start = k + 1

    return Segmentation(tuple(segments), tuple(cuts), _total(segments))


def _total(segments) -> Optional[float]:
    if all(s.exact for s in segments):
        return float(sum(s.value for s in segments))
    return None


def _shift(segmentation: Segmentation, offset: int) -> tuple[list, list]:
    segs = [
        SegmentInfo(s.start + offset, s.end + offset, s.value, s.status)
        for s in segmentation.segments
    ]
    cuts = [Cut(c.after + offset, c.reason) for c in segmentation.cuts]
    return segs, cuts


def decompose(cfg: ChannelConfig, tol: float = THRESHOLD_TOL) -> Segmentation:
    """Full pipeline: very-strong removal, then greedy segmentation per piece."""
    require_valid(cfg)
    pieces, vs_cuts = remove_very_strong(cfg, tol)
    segments = []
    cuts = list(vs_cuts)
    start = 1
    for piece in pieces:
        if piece.K == 1:
            value, status = _segment_value(piece, tol)
            segments.append(SegmentInfo(start, start, value, status))
        else:
            segs, piece_cuts = _shift(lemma2_segment(piece, tol), start - 1)
            segments.extend(segs)
            cuts.extend(piece_cuts)
        start += piece.K
    cuts.sort(key=lambda c: c.after)
    return Segmentation(tuple(segments), tuple(cuts), _total(segments))
