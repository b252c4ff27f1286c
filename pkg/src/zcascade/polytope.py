"""Brute-force verification oracle for the closed-form sum rate.

For a fixed power split every receiver jointly decodes up to three messages
(the predecessor's common part plus its own common and private parts) over a
Gaussian multiple-access channel, with the predecessor's private part folded
into the noise.  Intersecting all receivers' subset constraints gives a small
polytope over the 2K per-user (common, private) rate variables; maximizing the
rate sum over it with an exact LP, then sweeping the split over a grid, bounds
the best achievable sum rate with no reference to the closed form.

At the closed form's own pure split the LP reproduces it exactly.  On grids
that include fractional splits the sweep can exceed the closed form for chains
of three or more users outside the exactly solved regimes; the report's
``max_violation`` field measures that excess.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import lp
from .channel import ChannelConfig, _cap, require_valid
from .sumrate import PowerSplit, max_sum_rate

__all__ = [
    "RatePolytope",
    "OracleReport",
    "GridResourceError",
    "build_polytope",
    "max_sum_lp",
    "grid_oracle",
    "grid_levels",
]

#: Subsets of receiver i's three decoded messages, i >= 2, in constraint
#: order: prev-common, own-common, own-private, then pairs, then all three.
_RX_SUBSETS = ((0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2))

DEFAULT_MAX_GRID_POINTS = 2_000_000


class GridResourceError(RuntimeError):
    """Grid sweep would exceed the configured cell cap."""


@dataclass(frozen=True)
class RatePolytope:
    """Linear constraints coeff . R <= rhs over 2K nonnegative rate variables.

    Variable order is (common_1, private_1, common_2, private_2, ...); rhs
    values are in bits.
    """

    num_vars: int
    constraints: tuple

    def coeff_matrix(self) -> np.ndarray:
        return np.array([c for c, _ in self.constraints], dtype=float)

    def rhs_vector(self) -> np.ndarray:
        return np.array([r for _, r in self.constraints], dtype=float)


@dataclass(frozen=True)
class OracleReport:
    """Outcome of a grid sweep against the closed form."""

    best_sum: float
    best_split: PowerSplit
    closed_form: float
    max_violation: float
    grid_step: float


@lru_cache(maxsize=None)
def _coeff_matrix(K: int) -> np.ndarray:
    """0/1 constraint pattern shared by every channel of a given K."""
    n = 2 * K
    rows = [np.zeros(n), np.zeros(n), np.zeros(n)]
    rows[0][0] = 1.0  # common_1
    rows[1][1] = 1.0  # private_1
    rows[2][0] = rows[2][1] = 1.0
    for i in range(2, K + 1):
        members = (2 * (i - 2), 2 * (i - 1), 2 * (i - 1) + 1)
        for subset in _RX_SUBSETS:
            row = np.zeros(n)
            for s in subset:
                row[members[s]] = 1.0
            rows.append(row)
    out = np.array(rows)
    out.flags.writeable = False
    return out


def _rhs_rows(cfg: ChannelConfig, gammas: np.ndarray) -> np.ndarray:
    """Right-hand sides, one row per split in ``gammas`` (shape G x K)."""
    a2p = cfg.a**2 * cfg.P[:-1]  # received interference power per link
    cols = []
    g1 = gammas[:, 0]
    cols.append(_cap(g1 * cfg.P[0]))
    cols.append(_cap((1.0 - g1) * cfg.P[0]))
    cols.append(np.full(len(gammas), _cap(cfg.P[0])))
    for i in range(2, cfg.K + 1):
        gp = gammas[:, i - 2]
        go = gammas[:, i - 1]
        noise = 1.0 + (1.0 - gp) * a2p[i - 2]
        power = (gp * a2p[i - 2], go * cfg.P[i - 1], (1.0 - go) * cfg.P[i - 1])
        for subset in _RX_SUBSETS:
            total = sum(power[s] for s in subset)
            cols.append(_cap(total / noise))
    return np.column_stack(cols)


def build_polytope(cfg: ChannelConfig, split: PowerSplit) -> RatePolytope:
    """Achievable-rate polytope of the joint-decoding scheme at a fixed split."""
    require_valid(cfg)
    gamma = np.asarray(split.gamma, dtype=float)
    if gamma.shape != (cfg.K,):
        raise ValueError(f"split must have K = {cfg.K} entries, got shape {gamma.shape}")
    if np.any(gamma < 0) or np.any(gamma > 1):
        raise ValueError("split fractions must lie in [0, 1]")
    coeffs = _coeff_matrix(cfg.K)
    rhs = _rhs_rows(cfg, gamma.reshape(1, -1))[0]
    constraints = tuple((coeffs[i], float(rhs[i])) for i in range(len(rhs)))
    return RatePolytope(num_vars=2 * cfg.K, constraints=constraints)


def max_sum_lp(poly: RatePolytope) -> tuple[float, np.ndarray]:
    """Exact maximum of the rate sum over the polytope, with an optimal vertex.

    Always solvable: every variable is capped by some single-message
    constraint, so the polytope is bounded, and 0 is feasible.
    """
    return lp.max_sum(poly.coeff_matrix(), poly.rhs_vector())


def grid_levels(grid_step: float) -> np.ndarray:
    """Grid values {0, step, ..., 1}; step must divide [0, 1] evenly."""
    if not 0 < grid_step <= 1:
        raise ValueError(f"grid_step must be in (0, 1], got {grid_step}")
    cells = round(1.0 / grid_step)
    if cells < 1 or abs(cells * grid_step - 1.0) > 1e-9:
        raise ValueError(f"grid_step {grid_step} does not divide [0, 1] evenly")
    return np.linspace(0.0, 1.0, cells + 1)


def _gamma_grid(K: int, levels: np.ndarray) -> np.ndarray:
    """All splits with free users 1..K-1 on the grid and user K pinned to 0.

    Rows are in lexicographic order, so "first maximum wins" reductions pick
    the lexicographically smallest argmax.
    """
    if K == 1:
        return np.zeros((1, 1))
    axes = np.meshgrid(*([levels] * (K - 1)), indexing="ij")
    flat = np.stack([ax.reshape(-1) for ax in axes], axis=1)
    return np.column_stack([flat, np.zeros(len(flat))])


def grid_oracle(
    cfg: ChannelConfig,
    grid_step: float,
    max_grid_points: int = DEFAULT_MAX_GRID_POINTS,
    return_grid: bool = False,
):
    """Sweep splits over a grid, LP-maximize each, and compare to closed form.

    ``max_violation`` is the largest LP(gamma) - closed_form over the grid; a
    nonpositive value (up to solver precision) is what the closed form's
    optimality predicts.  The last user's split is pinned to 0: no receiver
    decodes its common message separately, so the value cannot depend on it.

    With ``return_grid`` the per-point splits and LP values are returned
    alongside the report.
    """
    require_valid(cfg)
    levels = grid_levels(grid_step)
    n_points = len(levels) ** (cfg.K - 1)
    if n_points > max_grid_points:
        raise GridResourceError(
            f"grid has {n_points} points, exceeding the cap of {max_grid_points}"
        )
    gammas = _gamma_grid(cfg.K, levels)
    values = lp.max_sum_values(_coeff_matrix(cfg.K), _rhs_rows(cfg, gammas))
    best = int(np.argmax(values))  # first occurrence = lexicographically smallest
    closed = max_sum_rate(cfg).sum_rate
    report = OracleReport(
        best_sum=float(values[best]),
        best_split=PowerSplit(gamma=gammas[best]),
        closed_form=closed,
        max_violation=float(np.max(values) - closed),
        grid_step=float(grid_step),
    )
    if return_grid:
        return report, (gammas, values)
    return report
