"""Self-contained dense simplex for the small LPs used in this package.

Solves max c.x subject to A x <= b, x >= 0 with b >= 0, so the all-slack
basis is feasible and no phase-1 is needed.  Bland's rule avoids cycling on
the degenerate covering/packing instances that arise from stable-set
families.  Dual values are read off the final objective row, which is all
the caller needs to recover a covering solution from the packing LP.
"""

from __future__ import annotations

import numpy as np


class SimplexError(Exception):
    pass


def simplex_maximize(a, b, c, tol: float = 1e-9, max_iter: int = 100_000):
    """Returns (optimal value, x, duals y) for max c.x, A x <= b, x >= 0.

    `duals[i]` is the optimal dual multiplier of constraint i; for this
    form the duals are the reduced costs of the slack variables.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    m, n = a.shape
    if np.any(b < 0):
        raise SimplexError("requires b >= 0")

    # tableau rows: m constraint rows + objective row; columns: n structural
    # variables, m slacks, rhs
    t = np.zeros((m + 1, n + m + 1))
    t[:m, :n] = a
    t[:m, n:n + m] = np.eye(m)
    t[:m, -1] = b
    t[m, :n] = -c
    basis = list(range(n, n + m))

    for _ in range(max_iter):
        # Bland: entering variable = smallest index with negative reduced cost
        enter = -1
        for j in range(n + m):
            if t[m, j] < -tol:
                enter = j
                break
        if enter == -1:
            break
        # ratio test, ties broken by smallest basis variable index (Bland)
        leave = -1
        best = None
        for i in range(m):
            aij = t[i, enter]
            if aij > tol:
                ratio = t[i, -1] / aij
                if best is None or ratio < best - tol or (
                        abs(ratio - best) <= tol and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave == -1:
            raise SimplexError("LP is unbounded")
        piv = t[leave, enter]
        t[leave, :] /= piv
        for i in range(m + 1):
            if i != leave and t[i, enter] != 0.0:
                t[i, :] -= t[i, enter] * t[leave, :]
        basis[leave] = enter
    else:
        raise SimplexError("iteration limit exceeded")

    x = np.zeros(n)
    for i, var in enumerate(basis):
        if var < n:
            x[var] = t[i, -1]
    duals = t[m, n:n + m].copy()
    value = float(c @ x)
    return value, x, duals
