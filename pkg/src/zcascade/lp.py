"""Small dense simplex solver for rate-sum maximization.

Solves max sum(x) subject to A x <= b, x >= 0 with b >= 0, which is the only
shape the rate polytopes take; the slack basis is then immediately feasible
and no phase-1 is needed.  Bland's rule makes the pivot sequence (and hence
the result, bit for bit) deterministic and cycle-free even on the degenerate
tableaus that zero-power constraints produce.

The batch entry point re-solves the same constraint matrix against many
right-hand sides; grid sweeps push millions of these tiny programs through it,
so the core loop is numba-compiled when numba is available.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:  # pragma: no cover - exercised only without numba
    NUMBA_ENABLED = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


__all__ = ["LpError", "max_sum", "max_sum_values", "NUMBA_ENABLED"]

_STATUS_OPTIMAL = 0
_STATUS_UNBOUNDED = 1
_STATUS_ITER_LIMIT = 2

_EPS = 1e-12
_MAX_PIVOTS = 10_000


class LpError(RuntimeError):
    """Simplex failed to certify an optimum (unbounded or pivot limit)."""


@njit(cache=True)
def _solve_batch(A, B, values, X, status):  # pragma: no cover - compiled
    m, n = A.shape
    width = n + m + 1
    T = np.empty((m + 1, width))
    basis = np.empty(m, np.int64)
    for g in range(B.shape[0]):
        for i in range(m):
            for j in range(n):
                T[i, j] = A[i, j]
            for j in range(m):
                T[i, n + j] = 1.0 if i == j else 0.0
            T[i, width - 1] = B[g, i]
            basis[i] = n + i
        for j in range(n):
            T[m, j] = -1.0
        for j in range(n, width):
            T[m, j] = 0.0

        st = _STATUS_ITER_LIMIT
        for _ in range(_MAX_PIVOTS):
            # Bland: entering column = lowest index with negative reduced cost.
            enter = -1
            for j in range(n + m):
                if T[m, j] < -_EPS:
                    enter = j
                    break
            if enter < 0:
                st = _STATUS_OPTIMAL
                break
            # Ratio test; ties broken toward the lowest basis variable.
            leave = -1
            best = np.inf
            for i in range(m):
                aij = T[i, enter]
                if aij > _EPS:
                    r = T[i, width - 1] / aij
                    if r < best or (r == best and (leave < 0 or basis[i] < basis[leave])):
                        best = r
                        leave = i
            if leave < 0:
                st = _STATUS_UNBOUNDED
                break
            piv = T[leave, enter]
            for j in range(width):
                T[leave, j] /= piv
            for i in range(m + 1):
                if i != leave:
                    f = T[i, enter]
                    if f != 0.0:
                        for j in range(width):
                            T[i, j] -= f * T[leave, j]
            basis[leave] = enter

        status[g] = st
        if st == _STATUS_OPTIMAL:
            values[g] = T[m, width - 1]
            for j in range(n):
                X[g, j] = 0.0
            for i in range(m):
                if basis[i] < n:
                    X[g, basis[i]] = T[i, width - 1]
        else:
            values[g] = np.nan
            for j in range(n):
                X[g, j] = np.nan


def max_sum_values(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Optimal values of max sum(x), A x <= b, x >= 0 for every row b of B."""
    A = np.ascontiguousarray(A, dtype=float)
    B = np.ascontiguousarray(B, dtype=float)
    if A.ndim != 2 or B.ndim != 2 or B.shape[1] != A.shape[0]:
        raise ValueError("B must have one column per constraint row of A")
    G = B.shape[0]
    values = np.empty(G)
    X = np.empty((G, A.shape[1]))
    status = np.empty(G, dtype=np.int64)
    _solve_batch(A, B, values, X, status)
    if np.any(status != _STATUS_OPTIMAL):
        bad = int(np.argmax(status != _STATUS_OPTIMAL))
        raise LpError(f"simplex failed on instance {bad} with status {int(status[bad])}")
    return values


def max_sum(A: np.ndarray, b: np.ndarray) -> tuple[float, np.ndarray]:
    """Optimal (value, vertex) of max sum(x), A x <= b, x >= 0."""
    A = np.ascontiguousarray(A, dtype=float)
    b = np.ascontiguousarray(b, dtype=float)
    values = np.empty(1)
    X = np.empty((1, A.shape[1]))
    status = np.empty(1, dtype=np.int64)
    _solve_batch(A, b.reshape(1, -1), values, X, status)
    if status[0] != _STATUS_OPTIMAL:
        raise LpError(f"simplex failed with status {int(status[0])}")
    return float(values[0]), X[0]
