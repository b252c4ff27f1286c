"""Channel types, validation, capacity helpers, and standard-form reduction."""

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zcascade import (
    ChannelConfig,
    DegenerateChannelError,
    GeneralChannel,
    InvalidChannelError,
    channel_from_json,
    channel_to_json,
    gaussian_capacity,
    inverse_capacity,
    to_standard_form,
    validate,
    very_strong_threshold,
)
from zcascade.channel import require_valid


class TestGaussianCapacity:
    def test_known_values(self):
        assert gaussian_capacity(0.0) == 0.0
        assert gaussian_capacity(3.0) == pytest.approx(1.0, abs=1e-15)
        assert gaussian_capacity(1.0) == pytest.approx(0.5, abs=1e-15)
        assert gaussian_capacity(9.75) == pytest.approx(1.713132377351, abs=1e-12)
        assert gaussian_capacity(6.75) == pytest.approx(1.477098155193, abs=1e-12)

    def test_array_input(self):
        out = gaussian_capacity(np.array([0.0, 3.0, 15.0]))
        assert isinstance(out, np.ndarray)
        np.testing.assert_allclose(out, [0.0, 1.0, 2.0], atol=1e-15)

    def test_rejects_negative_and_nonfinite(self):
        with pytest.raises(ValueError):
            gaussian_capacity(-0.5)
        with pytest.raises(ValueError):
            gaussian_capacity(np.inf)
        with pytest.raises(ValueError):
            gaussian_capacity(np.array([1.0, np.nan]))

    def test_monotone(self):
        x = np.linspace(0.0, 40.0, 200)
        y = gaussian_capacity(x)
        assert np.all(np.diff(y) > 0)

    @given(st.floats(min_value=0.0, max_value=1e6, allow_nan=False))
    @settings(max_examples=200, deadline=None)
    def test_inverse_round_trip(self, x):
        assert inverse_capacity(gaussian_capacity(x)) == pytest.approx(x, rel=1e-9, abs=1e-9)

    def test_inverse_rejects_negative(self):
        with pytest.raises(ValueError):
            inverse_capacity(-1e-9)


class TestVeryStrongThreshold:
    def test_value(self):
        assert very_strong_threshold(3.0) == 2.0
        assert very_strong_threshold(0.0) == 1.0
        assert very_strong_threshold(8.0) == 3.0


class TestValidation:
    def test_valid_channel(self):
        cfg = ChannelConfig(K=3, a=(0.5, 0.4), P=(3.0, 3.0, 3.0))
        assert validate(cfg) is None
        assert require_valid(cfg) is cfg

    def test_arrays_are_read_only(self):
        cfg = ChannelConfig(K=2, a=(0.5,), P=(3.0, 3.0))
        with pytest.raises(ValueError):
            cfg.a[0] = 1.0
        with pytest.raises(ValueError):
            cfg.P[0] = 1.0

    def test_k_too_small(self):
        issue = validate(ChannelConfig(K=1, a=(), P=(3.0,)))
        assert issue is not None and issue.field == "K"

    def test_k_not_integer(self):
        issue = validate(ChannelConfig(K=2.0, a=(0.5,), P=(3.0, 3.0)))
        assert issue is not None and issue.field == "K"

    def test_length_mismatch_a(self):
        issue = validate(ChannelConfig(K=3, a=(0.5,), P=(3.0, 3.0, 3.0)))
        assert issue is not None and issue.field == "a"

    def test_length_mismatch_p(self):
        issue = validate(ChannelConfig(K=3, a=(0.5, 0.4), P=(3.0, 3.0)))
        assert issue is not None and issue.field == "P"

    def test_negative_gain(self):
        issue = validate(ChannelConfig(K=2, a=(-0.1,), P=(3.0, 3.0)))
        assert issue is not None and issue.field == "a" and issue.index == 0

    def test_nonfinite_gain(self):
        issue = validate(ChannelConfig(K=2, a=(np.nan,), P=(3.0, 3.0)))
        assert issue is not None and issue.field == "a"

    def test_nonpositive_power(self):
        issue = validate(ChannelConfig(K=2, a=(0.5,), P=(3.0, 0.0)))
        assert issue is not None and issue.field == "P" and issue.index == 1

    def test_require_valid_raises_with_issue(self):
        with pytest.raises(InvalidChannelError) as err:
            require_valid(ChannelConfig(K=2, a=(0.5,), P=(3.0, -1.0)))
        assert err.value.issue.field == "P"
        assert "P[1]" in str(err.value)


class TestStandardForm:
    def test_normalization(self):
        # d=(2,1), c=(0.5,), sigma2=(1,4), Q=(3,12): P=(12,3), a=0.5*1/(2*2)=0.125.
        g = GeneralChannel(K=2, d=(2.0, 1.0), c=(0.5,), sigma2=(1.0, 4.0), Q=(3.0, 12.0))
        cfg = to_standard_form(g)
        assert cfg.K == 2
        np.testing.assert_allclose(cfg.P, [12.0, 3.0], rtol=1e-15)
        np.testing.assert_allclose(cfg.a, [0.125], rtol=1e-15)

    def test_identity_when_already_standard(self):
        g = GeneralChannel(
            K=3,
            d=(1.0, 1.0, 1.0),
            c=(0.5, 0.4),
            sigma2=(1.0, 1.0, 1.0),
            Q=(3.0, 3.0, 3.0),
        )
        cfg = to_standard_form(g)
        np.testing.assert_allclose(cfg.a, [0.5, 0.4], rtol=1e-15)
        np.testing.assert_allclose(cfg.P, [3.0, 3.0, 3.0], rtol=1e-15)

    def test_sign_dropped(self):
        g = GeneralChannel(K=2, d=(-1.0, 1.0), c=(-0.7,), sigma2=(1.0, 1.0), Q=(3.0, 3.0))
        cfg = to_standard_form(g)
        assert cfg.a[0] == pytest.approx(0.7, abs=1e-15)

    def test_zero_direct_gain_degenerate(self):
        g = GeneralChannel(K=2, d=(0.0, 1.0), c=(0.5,), sigma2=(1.0, 1.0), Q=(3.0, 3.0))
        with pytest.raises(DegenerateChannelError):
            to_standard_form(g)

    def test_bad_noise_variance(self):
        g = GeneralChannel(K=2, d=(1.0, 1.0), c=(0.5,), sigma2=(1.0, 0.0), Q=(3.0, 3.0))
        with pytest.raises(InvalidChannelError):
            to_standard_form(g)

    def test_capacity_invariant_under_scaling(self):
        # Scaling d, c, sigma2 consistently must leave the standard form alone.
        base = GeneralChannel(
            K=3, d=(1.0, 1.0, 1.0), c=(0.6, 0.9), sigma2=(1.0, 1.0, 1.0), Q=(5.0, 2.0, 7.0)
        )
        scaled = GeneralChannel(
            K=3,
            d=(3.0, 3.0, 3.0),
            c=(1.8, 2.7),
            sigma2=(9.0, 9.0, 9.0),
            Q=(5.0, 2.0, 7.0),
        )
        c0, c1 = to_standard_form(base), to_standard_form(scaled)
        np.testing.assert_allclose(c0.a, c1.a, rtol=1e-12)
        np.testing.assert_allclose(c0.P, c1.P, rtol=1e-12)


class TestJsonRoundTrip:
    def test_standard_form_text(self):
        cfg = channel_from_json('{"K": 2, "a": [0.5], "P": [3, 3]}')
        assert cfg.K == 2 and cfg.a[0] == 0.5

    def test_standard_form_dict(self):
        cfg = channel_from_json({"K": 3, "a": [0.5, 0.4], "P": [3, 3, 3]})
        assert cfg.K == 3

    def test_general_form(self):
        obj = {
            "general": {
                "d": [2.0, 1.0],
                "c": [0.5],
                "sigma2": [1.0, 4.0],
                "Q": [3.0, 12.0],
            }
        }
        cfg = channel_from_json(json.dumps(obj))
        np.testing.assert_allclose(cfg.P, [12.0, 3.0], rtol=1e-15)

    def test_round_trip(self):
        cfg = ChannelConfig(K=4, a=(0.5, 0.4, 1.7), P=(3.0, 3.0, 3.0, 3.0))
        back = channel_from_json(channel_to_json(cfg))
        assert back.K == cfg.K
        np.testing.assert_array_equal(back.a, cfg.a)
        np.testing.assert_array_equal(back.P, cfg.P)

    def test_missing_field(self):
        with pytest.raises(ValueError, match="missing field"):
            channel_from_json('{"K": 2, "a": [0.5]}')

    def test_missing_general_field(self):
        with pytest.raises(ValueError, match="missing field"):
            channel_from_json({"general": {"d": [1, 1], "c": [0.5], "Q": [3, 3]}})

    def test_non_object(self):
        with pytest.raises(ValueError, match="object"):
            channel_from_json("[1, 2, 3]")

    def test_invalid_channel_rejected(self):
        with pytest.raises(InvalidChannelError):
            channel_from_json({"K": 2, "a": [0.5], "P": [3, -3]})
