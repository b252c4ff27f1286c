"""Very-strong link removal and greedy exact segmentation of chains."""

import numpy as np
import pytest

from conftest import random_channel
from zcascade import (
    ChannelConfig,
    VeryStrongLinkError,
    decompose,
    gaussian_capacity,
    lemma2_segment,
    max_sum_rate,
    remove_very_strong,
    subchain,
)
from zcascade.decompose import (
    REASON_LEMMA2,
    REASON_VERY_STRONG,
    SEG_POINT_TO_POINT,
    SEG_TWO_USER,
)
from zcascade.regimes import ACHIEVABLE_ONLY, EXACT_MIXED1, EXACT_NOISY

P4 = (3.0, 3.0, 3.0, 3.0)


class TestSubchain:
    def test_slicing(self):
        cfg = ChannelConfig(K=4, a=(0.5, 0.4, 1.7), P=(1.0, 2.0, 3.0, 4.0))
        sub = subchain(cfg, 2, 4)
        assert sub.K == 3
        np.testing.assert_array_equal(sub.a, [0.4, 1.7])
        np.testing.assert_array_equal(sub.P, [2.0, 3.0, 4.0])

    def test_single_user(self):
        cfg = ChannelConfig(K=3, a=(0.5, 0.4), P=(1.0, 2.0, 3.0))
        sub = subchain(cfg, 2, 2)
        assert sub.K == 1
        assert len(sub.a) == 0
        np.testing.assert_array_equal(sub.P, [2.0])

    def test_bounds_checked(self):
        cfg = ChannelConfig(K=3, a=(0.5, 0.4), P=(3.0, 3.0, 3.0))
        with pytest.raises(IndexError):
            subchain(cfg, 0, 2)
        with pytest.raises(IndexError):
            subchain(cfg, 2, 4)
        with pytest.raises(IndexError):
            subchain(cfg, 3, 2)


class TestRemoveVeryStrong:
    def test_single_cut(self):
        cfg = ChannelConfig(K=3, a=(2.5, 0.4), P=(3.0, 3.0, 3.0))
        pieces, cuts = remove_very_strong(cfg)
        assert [c.after for c in cuts] == [1]
        assert all(c.reason == REASON_VERY_STRONG for c in cuts)
        assert [p.K for p in pieces] == [1, 2]
        np.testing.assert_array_equal(pieces[1].a, [0.4])

    def test_boundary_gain_is_cut(self):
        # Exactly at sqrt(1 + P_next): removable, so it is removed.
        cfg = ChannelConfig(K=2, a=(2.0,), P=(3.0, 3.0))
        pieces, cuts = remove_very_strong(cfg)
        assert [c.after for c in cuts] == [1]
        assert [p.K for p in pieces] == [1, 1]

    def test_no_cut(self):
        cfg = ChannelConfig(K=3, a=(0.5, 0.4), P=(3.0, 3.0, 3.0))
        pieces, cuts = remove_very_strong(cfg)
        assert cuts == []
        assert len(pieces) == 1 and pieces[0].K == 3

    def test_idempotent(self):
        rng = np.random.default_rng(40)
        for _ in range(50):
            k = int(rng.integers(2, 8))
            p = rng.uniform(0.2, 30.0, size=k)
            a = rng.uniform(0.0, 1.5) * np.sqrt(1.0 + p[1:])
            pieces, _ = remove_very_strong(ChannelConfig(K=k, a=a, P=p))
            for piece in pieces:
                again, cuts = remove_very_strong(piece) if piece.K > 1 else ([piece], [])
                assert cuts == []
                assert len(again) == 1

    def test_all_links_cut(self):
        cfg = ChannelConfig(K=3, a=(5.0, 5.0), P=(3.0, 3.0, 3.0))
        pieces, cuts = remove_very_strong(cfg)
        assert [c.after for c in cuts] == [1, 2]
        assert [p.K for p in pieces] == [1, 1, 1]


class TestLemma2Segment:
    def test_noisy_prefix_cut(self):
        cfg = ChannelConfig(K=4, a=(0.5, 0.4, 1.7), P=P4)
        seg = lemma2_segment(cfg)
        assert [(s.start, s.end) for s in seg.segments] == [(1, 3), (4, 4)]
        assert seg.segments[0].status == EXACT_NOISY
        assert seg.segments[1].status == SEG_POINT_TO_POINT
        assert [(c.after, c.reason) for c in seg.cuts] == [(3, REASON_LEMMA2)]
        assert seg.total == pytest.approx(3.519237073907, abs=1e-9)

    def test_two_user_prefix_cut(self):
        # Cut after a 2-user prefix; the result matches the whole-chain value
        # because (0.5, 1.7) also sits in an exact 3-user regime.
        cfg = ChannelConfig(K=3, a=(0.5, 1.7), P=(3.0, 3.0, 3.0))
        seg = lemma2_segment(cfg)
        assert [(s.start, s.end) for s in seg.segments] == [(1, 2), (3, 3)]
        assert seg.segments[0].status == SEG_TWO_USER
        assert seg.total == pytest.approx(max_sum_rate(cfg).sum_rate, abs=1e-9)

    def test_no_cut(self):
        cfg = ChannelConfig(K=4, a=(0.5, 0.4, 0.1), P=P4)
        seg = lemma2_segment(cfg)
        assert len(seg.segments) == 1
        only = seg.segments[0]
        assert (only.start, only.end) == (1, 4)
        assert only.status == ACHIEVABLE_ONLY
        assert only.value == pytest.approx(max_sum_rate(cfg).sum_rate, abs=1e-12)
        assert seg.total is None
        assert seg.cuts == ()

    def test_inexact_prefix_blocks_cut(self):
        # Users 1-3 sit in the half-bit-gap region, so even a gain that clears
        # the numeric threshold cannot justify an exact cut after user 3, and
        # no shorter prefix qualifies either.
        cfg = ChannelConfig(K=4, a=(1.5, 0.3, 1.9), P=P4)
        seg = lemma2_segment(cfg)
        assert len(seg.segments) == 1
        assert seg.segments[0].status == ACHIEVABLE_ONLY
        assert seg.total is None

    def test_rejects_very_strong_links(self):
        cfg = ChannelConfig(K=3, a=(2.5, 0.4), P=(3.0, 3.0, 3.0))
        with pytest.raises(VeryStrongLinkError):
            lemma2_segment(cfg)


class TestDecompose:
    def test_very_strong_then_lemma2(self):
        cfg = ChannelConfig(K=5, a=(2.5, 0.5, 0.4, 1.7), P=(3.0,) * 5)
        seg = decompose(cfg)
        assert [(s.start, s.end) for s in seg.segments] == [(1, 1), (2, 4), (5, 5)]
        assert [s.status for s in seg.segments] == [
            SEG_POINT_TO_POINT,
            EXACT_NOISY,
            SEG_POINT_TO_POINT,
        ]
        assert [(c.after, c.reason) for c in seg.cuts] == [
            (1, REASON_VERY_STRONG),
            (4, REASON_LEMMA2),
        ]
        assert seg.total == pytest.approx(4.519237073907, abs=1e-9)

    def test_very_strong_cut_value(self):
        cfg = ChannelConfig(K=3, a=(2.5, 0.4), P=(3.0, 3.0, 3.0))
        seg = decompose(cfg)
        expected = gaussian_capacity(3.0) + max_sum_rate(
            ChannelConfig(K=2, a=(0.4,), P=(3.0, 3.0))
        ).sum_rate
        assert seg.total == pytest.approx(expected, abs=1e-12)
        assert seg.total == pytest.approx(2.798950778, abs=1e-9)

    def test_two_user_chain(self):
        cfg = ChannelConfig(K=2, a=(0.5,), P=(3.0, 3.0))
        seg = decompose(cfg)
        assert len(seg.segments) == 1
        assert seg.segments[0].status == SEG_TWO_USER
        assert seg.total == pytest.approx(max_sum_rate(cfg).sum_rate, abs=1e-12)

    def test_total_is_segment_sum(self):
        rng = np.random.default_rng(41)
        for _ in range(100):
            k = int(rng.integers(2, 9))
            p = rng.uniform(0.2, 30.0, size=k)
            a = rng.uniform(0.0, 1.3) * np.sqrt(1.0 + p[1:])
            seg = decompose(ChannelConfig(K=k, a=a, P=p))
            if seg.total is not None:
                assert all(s.exact for s in seg.segments)
                assert seg.total == pytest.approx(
                    sum(s.value for s in seg.segments), abs=1e-12
                )
            else:
                assert any(not s.exact for s in seg.segments)

    def test_segments_partition_chain(self):
        rng = np.random.default_rng(42)
        for _ in range(100):
            k = int(rng.integers(2, 9))
            p = rng.uniform(0.2, 30.0, size=k)
            a = rng.uniform(0.0, 1.3) * np.sqrt(1.0 + p[1:])
            seg = decompose(ChannelConfig(K=k, a=a, P=p))
            assert seg.segments[0].start == 1
            assert seg.segments[-1].end == k
            for left, right in zip(seg.segments, seg.segments[1:]):
                assert right.start == left.end + 1
            cut_points = sorted(c.after for c in seg.cuts)
            assert cut_points == [s.end for s in seg.segments[:-1]]

    def test_segment_sum_dominates_full_chain(self):
        # Cutting only removes interference, so the per-segment optimum can
        # never fall below the whole-chain pure-split value.
        rng = np.random.default_rng(43)
        for _ in range(200):
            k = int(rng.integers(2, 8))
            cfg = random_channel(rng, k)
            seg = decompose(cfg)
            total = sum(s.value for s in seg.segments)
            assert total >= max_sum_rate(cfg).sum_rate - 1e-9

    def test_json_dict(self):
        cfg = ChannelConfig(K=4, a=(0.5, 0.4, 1.7), P=P4)
        doc = decompose(cfg).to_json_dict()
        assert doc["segments"] == [
            {
                "range": [1, 3],
                "value": pytest.approx(2.519237073907, abs=1e-9),
                "status": EXACT_NOISY,
            },
            {
                "range": [4, 4],
                "value": pytest.approx(1.0, abs=1e-12),
                "status": SEG_POINT_TO_POINT,
            },
        ]
        assert doc["cuts"] == [{"after": 3, "reason": REASON_LEMMA2}]
        assert doc["total"] == pytest.approx(3.519237073907, abs=1e-9)

    def test_json_total_null_when_inexact(self):
        cfg = ChannelConfig(K=4, a=(0.5, 0.4, 0.1), P=P4)
        assert decompose(cfg).to_json_dict()["total"] is None
