"""Dense two-phase primal simplex.

Deterministic LP core shared by the profile and packing-bound solvers.
Problem sizes in this package are a few hundred rows by a few hundred
columns, where a plain dense tableau is fast, dependency-free and
reproducible bit for bit.  Pricing is Dantzig's rule with a permanent
switch to Bland's rule once the objective stalls, which prevents cycling
on the (heavily degenerate) sign-constraint LPs that show up here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class LPResult:
    status: str           # "optimal" | "infeasible" | "unbounded" | "iteration_limit"
    x: np.ndarray | None
    value: float
    iterations: int


def _run_simplex(T, obj, basis, tol, max_iter, stall_limit=80):
    """Minimize over the tableau in place.  obj[-1] holds minus the current
    objective value.  Returns (status, iterations)."""
    m = T.shape[0]
    it = 0
    bland = False
    best = -obj[-1]
    stall = 0
    while it < max_iter:
        rc = obj[:-1]
        if bland:
            cand = np.nonzero(rc < -tol)[0]
            if len(cand) == 0:
                return "optimal", it
            j = int(cand[0])
        else:
            j = int(np.argmin(rc))
            if rc[j] >= -tol:
                return "optimal", it
        col = T[:, j]
        pos = col > tol
        if not np.any(pos):
            return "unbounded", it
        ratios = np.full(m, np.inf)
        ratios[pos] = T[pos, -1] / col[pos]
        rmin = ratios.min()
        ties = np.nonzero(ratios <= rmin + tol * (1.0 + abs(rmin)))[0]
        r = int(ties[np.argmin(basis[ties])])  # smallest basis label on ties

        piv = T[r, j]
        T[r] = T[r] / piv
        colv = T[:, j].copy()
        colv[r] = 0.0
        T -= np.outer(colv, T[r])
        T[:, j] = 0.0
        T[r, j] = 1.0
        if obj[j] != 0.0:
            obj -= obj[j] * T[r]
            obj[j] = 0.0
        basis[r] = j
        it += 1

        value = -obj[-1]
        if value < best - 1e-12 * (1.0 + abs(best)):
            best = value
            stall = 0
        else:
            stall += 1
            if stall >= stall_limit:
                bland = True
    return "iteration_limit", it


def solve_lp(c, A_ub=None, b_ub=None, A_eq=None, b_eq=None,
             maximize=False, tol=1e-9, max_iter=200_000) -> LPResult:
    """Solve min (or max) c.x subject to A_ub x <= b_ub, A_eq x = b_eq, x >= 0."""
    c = np.asarray(c, dtype=np.float64).ravel()
    n = len(c)
    if maximize:
        c = -c

    A_ub = np.zeros((0, n)) if A_ub is None else np.atleast_2d(np.asarray(A_ub, dtype=np.float64))
    b_ub = np.zeros(0) if b_ub is None else np.asarray(b_ub, dtype=np.float64).ravel()
    A_eq = np.zeros((0, n)) if A_eq is None else np.atleast_2d(np.asarray(A_eq, dtype=np.float64))
    b_eq = np.zeros(0) if b_eq is None else np.asarray(b_eq, dtype=np.float64).ravel()
    m1, m2 = len(b_ub), len(b_eq)
    m = m1 + m2

    A = np.vstack([A_ub, A_eq]) if m else np.zeros((0, n))
    b = np.concatenate([b_ub, b_eq])
    slack_sign = np.concatenate([np.ones(m1), np.zeros(m2)])
    neg = b < 0
    A[neg] *= -1.0
    b[neg] = -b[neg]
    slack_sign[neg[:m1].nonzero()[0]] = -1.0 if m1 else slack_sign[:0]
    if m1:
        slack_sign[:m1][neg[:m1]] = -1.0

    need_art = np.ones(m, dtype=bool)
    if m1:
        need_art[:m1] = slack_sign[:m1] < 0
    art_rows = np.nonzero(need_art)[0]
    n_art = len(art_rows)

    ncols = n + m1 + n_art
    T = np.zeros((m, ncols + 1))
    T[:, :n] = A
    for i in range(m1):
        T[i, n + i] = slack_sign[i]
    for a, r in enumerate(art_rows):
        T[r, n + m1 + a] = 1.0
    T[:, -1] = b

    basis = np.empty(m, dtype=np.int64)
    art_of_row = {int(r): n + m1 + a for a, r in enumerate(art_rows)}
    for i in range(m):
        if i < m1 and slack_sign[i] > 0:
            basis[i] = n + i
        else:
            basis[i] = art_of_row[i]

    # Phase 1: drive the artificial variables to zero.
    if n_art:
        obj = np.zeros(ncols + 1)
        obj[n + m1:n + m1 + n_art] = 1.0
        for i in range(m):
            if basis[i] >= n + m1:
                obj -= T[i]
        status, it1 = _run_simplex(T, obj, basis, tol, max_iter)
        if status != "optimal":
            return LPResult(status, None, np.nan, it1)
        if -obj[-1] > 1e-7:
            return LPResult("infeasible", None, np.nan, it1)
        # pivot remaining artificials out of the basis where possible
        for i in range(m):
            if basis[i] >= n + m1:
                row = T[i, :n + m1]
                cand = np.nonzero(np.abs(row) > tol)[0]
                if len(cand):
                    j = int(cand[0])
                    piv = T[i, j]
                    T[i] = T[i] / piv
                    colv = T[:, j].copy()
                    colv[i] = 0.0
                    T -= np.outer(colv, T[i])
                    T[:, j] = 0.0
                    T[i, j] = 1.0
                    basis[i] = j
        keep_rows = basis < n + m1
        T = T[keep_rows]
        basis = basis[keep_rows]
        m = len(basis)
        T = np.delete(T, np.s_[n + m1:n + m1 + n_art], axis=1)
        ncols = n + m1
    else:
        it1 = 0

    # Phase 2.
    obj = np.zeros(ncols + 1)
    obj[:n] = c
    for i in range(m):
        bj = basis[i]
        if bj < n and c[bj] != 0.0:
            obj -= c[bj] * T[i]
    status, it2 = _run_simplex(T, obj, basis, tol, max_iter)
    if status not in ("optimal",):
        return LPResult(status, None, np.nan, it1 + it2)

    x = np.zeros(ncols)
    x[basis] = T[:, -1]
    x = x[:n]
    value = float(c @ x)
    if maximize:
        value = -value
    return LPResult("optimal", x, value, it1 + it2)
