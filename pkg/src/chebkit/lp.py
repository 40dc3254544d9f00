"""Small dense linear-programming solver.

Two-phase tableau simplex with Bland's anti-cycling rule.  Problems here
have at most a few hundred variables, so the solver favors determinism and
auditability over speed.

Example::

    lp = LinearProgram([1.0, 0.0], lower=[None, 0.0], upper=[None, 0.0])
    lp.add([1.0, 1.0], ">=", 2.5)
    lp.add([1.0, -1.0], ">=", -2.5)
    solve(lp).objective_value  # 2.5
"""
from dataclasses import dataclass, field

import numpy as np

from .exceptions import DimensionMismatchError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
FAILED = "failed"

_RELATIONS = ("<=", "=", ">=")


@dataclass
class LinearProgram:
    """Minimize ``objective @ z`` subject to row constraints and variable bounds.

    ``None`` or an infinite value in ``lower`` / ``upper`` means unbounded on
    that side.  Variables default to free.
    """

    objective: np.ndarray
    lower: np.ndarray = None
    upper: np.ndarray = None
    rows: list = field(default_factory=list)
    relations: list = field(default_factory=list)
    rhs: list = field(default_factory=list)

    def __post_init__(self):
        self.objective = np.asarray(self.objective, dtype=float).ravel()
        nv = self.objective.size
        self.lower = _bound_array(self.lower, nv, -np.inf)
        self.upper = _bound_array(self.upper, nv, np.inf)
        if not np.all(np.isfinite(self.objective)):
            raise ValueError("objective coefficients must be finite")

    @property
    def n_vars(self):
        return self.objective.size

    def add(self, row, relation, rhs):
        if relation not in _RELATIONS:
            raise ValueError(f"relation must be one of {_RELATIONS}, got {relation!r}")
        row = np.asarray(row, dtype=float).ravel()
        if row.size != self.n_vars:
            raise DimensionMismatchError(
                f"constraint row has {row.size} entries, program has {self.n_vars} variables"
            )
        if not (np.all(np.isfinite(row)) and np.isfinite(rhs)):
            raise ValueError("constraint coefficients must be finite")
        self.rows.append(row)
        self.relations.append(relation)
        self.rhs.append(float(rhs))
        return self

    def add_rows(self, A, relation, b):
        A = np.atleast_2d(np.asarray(A, dtype=float))
        b = np.broadcast_to(np.asarray(b, dtype=float), (A.shape[0],))
        for row, value in zip(A, b):
            self.add(row, relation, value)
        return self

    def residuals(self, z):
        """Largest violation of any constraint or bound at ``z``."""
        z = np.asarray(z, dtype=float)
        worst = max(
            0.0,
            float(np.max(self.lower - z, initial=0.0)),
            float(np.max(z - self.upper, initial=0.0)),
        )
        if self.rows:
            gap = np.array(self.rows) @ z - np.asarray(self.rhs)
            rel = np.asarray(self.relations)
            viol = np.where(rel == "<=", gap, np.where(rel == ">=", -gap, np.abs(gap)))
            worst = max(worst, float(viol.max()))
        return worst


def _bound_array(values, nv, default):
    if values is None:
        return np.full(nv, default)
    out = np.array([default if v is None else v for v in values], dtype=float)
    if out.size != nv:
        raise DimensionMismatchError(f"bounds have {out.size} entries, expected {nv}")
    return out


@dataclass(frozen=True)
class LPSolution:
    status: str
    z: np.ndarray
    objective_value: float
    iterations: int = 0

    @property
    def optimal(self):
        return self.status == OPTIMAL


def _standardize(lp):
    """Rewrite ``lp`` as ``min c.y  s.t.  A y = b, y >= 0`` with ``x = offset + T y``.

    Fixed variables (``lower == upper``) become constants and get no column.
    """
    nv = lp.n_vars
    lo, hi = lp.lower, lp.upper
    if np.any(lo > hi):
        return None
    cols = []  # (original index, sign)
    offset = np.zeros(nv)
    bounded = []  # (column, upper) for y_col <= upper
    for j in range(nv):
        if np.isfinite(lo[j]):
            offset[j] = lo[j]
            if hi[j] == lo[j]:
                continue
            cols.append((j, 1.0))
            if np.isfinite(hi[j]):
                bounded.append((len(cols) - 1, hi[j] - lo[j]))
        elif np.isfinite(hi[j]):
            offset[j] = hi[j]
            cols.append((j, -1.0))
        else:
            cols.append((j, 1.0))
            cols.append((j, -1.0))
    ny = len(cols)
    T = np.zeros((nv, ny))
    for k, (j, sign) in enumerate(cols):
        T[j, k] = sign

    R = np.array(lp.rows, dtype=float).reshape(len(lp.rows), nv)
    rels = list(lp.relations) + ["<="] * len(bounded)
    B = np.zeros((len(bounded), ny))
    for i, (k, _) in enumerate(bounded):
        B[i, k] = 1.0
    rows = np.vstack([R @ T, B])
    b = np.concatenate([np.asarray(lp.rhs, dtype=float) - R @ offset, [ub for _, ub in bounded]])

    m = rows.shape[0]
    n_slack = sum(rel != "=" for rel in rels)
    A = np.zeros((m, ny + n_slack))
    A[:, :ny] = rows
    slack_of_row = [-1] * m
    s = ny
    for i, rel in enumerate(rels):
        if rel != "=":
            A[i, s] = 1.0 if rel == "<=" else -1.0
            slack_of_row[i] = s
            s += 1
    neg = b < 0
    A[neg] *= -1.0
    b[neg] *= -1.0
    c = np.zeros(ny + n_slack)
    c[:ny] = lp.objective @ T
    return A, b, c, slack_of_row, T, offset


class _Tableau:
    def __init__(self, A, b, basis, tol):
        m, n = A.shape
        self.tab = np.zeros((m + 1, n + 1))
        self.tab[:m, :n] = A
        self.tab[:m, n] = b
        self.basis = list(basis)
        self.tol = tol
        self.iterations = 0

    @property
    def m(self):
        return self.tab.shape[0] - 1

    def set_objective(self, c):
        n = self.tab.shape[1] - 1
        obj = np.zeros(n + 1)
        obj[: c.size] = c
        for i, j in enumerate(self.basis):
            if obj[j] != 0.0:
                obj -= obj[j] * self.tab[i]
        self.tab[-1] = obj

    def pivot(self, r, c):
        tab = self.tab
        tab[r] /= tab[r, c]
        col = tab[:, c].copy()
        col[r] = 0.0
        tab -= np.outer(col, tab[r])
        tab[:, c] = 0.0
        tab[r, c] = 1.0
        self.basis[r] = c
        self.iterations += 1

    def run(self, n_allowed, max_iter):
        """Bland's rule iterations over the first ``n_allowed`` columns; returns a status."""
        tol = self.tol
        tab = self.tab
        while True:
            if self.iterations >= max_iter:
                return FAILED
            improving = np.flatnonzero(tab[-1, :n_allowed] < -tol)
            if improving.size == 0:
                return OPTIMAL
            entering = int(improving[0])
            column = tab[:-1, entering]
            rows = np.flatnonzero(column > tol)
            if rows.size == 0:
                return UNBOUNDED
            ratios = tab[rows, -1] / column[rows]
            best = ratios.min()
            ties = rows[ratios <= best + tol * max(1.0, abs(best))]
            leave = min(ties, key=lambda i: self.basis[i])
            self.pivot(leave, entering)


def solve(lp, tol=1e-9, max_iter=None):
    """Solve ``lp`` and return an :class:`LPSolution`.

    The status is ``"failed"`` when the iteration cap is hit or the recovered
    optimum violates a constraint by more than ``1e3 * tol`` (relative to the
    data scale); a wrong answer is never reported as optimal.
    """
    std = _standardize(lp)
    if std is None:
        return LPSolution(INFEASIBLE, None, float("nan"))
    A, b, c, slack_of_row, T, offset = std
    m, n = A.shape
    if max_iter is None:
        max_iter = 50 * (m + n) + 100

    # Phase 1: artificial variables for rows without a usable +1 slack.
    basis = []
    art_rows = []
    for i in range(m):
        s = slack_of_row[i]
        if s >= 0 and A[i, s] == 1.0:
            basis.append(s)
        else:
            basis.append(n + len(art_rows))
            art_rows.append(i)
    n_art = len(art_rows)
    A1 = np.zeros((m, n + n_art))
    A1[:, :n] = A
    for k, i in enumerate(art_rows):
        A1[i, n + k] = 1.0
    tab = _Tableau(A1, b, basis, tol)
    scale = max(1.0, float(np.max(np.abs(b), initial=0.0)))
    if n_art:
        c1 = np.zeros(n + n_art)
        c1[n:] = 1.0
        tab.set_objective(c1)
        status = tab.run(n + n_art, max_iter)
        if status != OPTIMAL:
            return LPSolution(FAILED, None, float("nan"), tab.iterations)
        if -tab.tab[-1, -1] > tol * scale * 10:
            return LPSolution(INFEASIBLE, None, float("nan"), tab.iterations)
        # Drive zero-level artificials out of the basis; drop redundant rows.
        keep = []
        for i in range(m):
            if tab.basis[i] < n:
                keep.append(i)
                continue
            row = tab.tab[i, :n]
            candidates = np.flatnonzero(np.abs(row) > tol)
            if candidates.size:
                tab.pivot(i, int(candidates[0]))
                keep.append(i)
        keep_rows = keep + [m]
        kept = tab.tab[keep_rows]
        tab.tab = np.hstack([kept[:, :n], kept[:, n + n_art :]])
        tab.basis = [tab.basis[i] for i in keep]
        A = A[keep]
        b = b[keep]

    # Phase 2.
    tab.set_objective(c)
    status = tab.run(n, max_iter)
    if status != OPTIMAL:
        return LPSolution(status, None, float("nan"), tab.iterations)

    y = np.zeros(n)
    basis = tab.basis
    try:
        y_basic = np.linalg.solve(A[:, basis], b)
    except np.linalg.LinAlgError:
        y_basic = tab.tab[:-1, -1]
    if np.any(y_basic < -1e3 * tol * scale):
        y_basic = tab.tab[:-1, -1]
    y[basis] = np.maximum(y_basic, 0.0)
    x = offset + T @ y[: T.shape[1]]
    if lp.residuals(x) > 1e3 * tol * scale:
        return LPSolution(FAILED, None, float("nan"), tab.iterations)
    return LPSolution(OPTIMAL, x, float(lp.objective @ x), tab.iterations)
