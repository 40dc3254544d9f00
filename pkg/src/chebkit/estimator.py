"""scikit-learn style estimators wrapping the functional API.

``fit(X)`` takes the family as an array of shape ``(n_members, n_points)``:
each row is one function on the finite space.  After fitting, query rows can
be scored by their covering radius ``r(x, F)``.

>>> est = ChebyshevCenter().fit([[-1.0, 0.0], [1.0, 0.0]])
>>> est.radius_
1.0
>>> est.predict([[0.0, 0.5], [0.5, 0.0]])
array([ True, False])
"""
import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils import check_array
from sklearn.utils.validation import check_is_fitted

from .body import ConvexBody, whole_space
from .center import center_full_space, center_msummand
from .envelope import DEFAULT_TOL, envelopes_of_family
from .exceptions import DimensionMismatchError
from .restricted import verify_radius_identity
from .space import make_discrete


class _CoveringMixin:
    def _check_queries(self, X):
        check_is_fitted(self, "members_")
        X = check_array(X, dtype=float)
        if X.shape[1] != self.n_features_in_:
            raise DimensionMismatchError(
                f"X has {X.shape[1]} features, estimator was fitted with {self.n_features_in_}"
            )
        return X

    def transform(self, X):
        """Sup-norm distances from each query row to each fitted member, shape ``(n_queries, n_members)``."""
        X = self._check_queries(X)
        return np.abs(X[:, None, :] - self.members_[None, :, :]).max(axis=2)

    def score_samples(self, X):
        """Covering radius ``r(x, F)`` of each query row."""
        return self.transform(X).max(axis=1)

    def predict(self, X):
        """Whether each query row is an optimal center (within ``tol``)."""
        ok = self.score_samples(X) <= self.radius_ + self.tol
        if getattr(self, "body", None) is not None:
            X = self._check_queries(X)
            ok &= np.array([self.body.contains(x, tol=self.tol) for x in X], dtype=bool)
        return ok


class ChebyshevCenter(_CoveringMixin, BaseEstimator):
    """Chebyshev radius and center set of a finite family in ``C(K)``.

    Parameters
    ----------
    space : FiniteSpace, optional
        Defaults to the discrete space on ``n_points`` points (``l_inf^n``).
    zero_set : array-like, optional
        Indices (or mask) of a clopen set ``D``; centers are then sought in
        ``J_D = {h : h = 0 on D}`` and the family must vanish on ``D``.
    tol : float

    Attributes
    ----------
    radius_ : float
    center_lo_, center_hi_ : ndarray
        The center set is the order interval ``[center_lo_, center_hi_]``.
    center_ : ndarray
        A deterministic member of the center set.
    envelopes_ : EnvelopeSet
    """

    def __init__(self, space=None, zero_set=None, tol=DEFAULT_TOL):
        self.space = space
        self.zero_set = zero_set
        self.tol = tol

    def fit(self, X, y=None):
        X = check_array(X, dtype=float)
        space = self.space if self.space is not None else make_discrete(X.shape[1])
        self.envelopes_ = envelopes_of_family(space, X)
        if self.zero_set is None and space.is_discrete:
            report = center_full_space(space, self.envelopes_)
        else:
            report = center_msummand(space, self.zero_set, self.envelopes_, tol=self.tol)
        self.report_ = report
        self.radius_ = report.radius
        self.center_lo_ = report.center_set.lo
        self.center_hi_ = report.center_set.hi
        self.center_ = report.witness
        self.members_ = X
        self.n_features_in_ = X.shape[1]
        return self


class RestrictedChebyshevCenter(_CoveringMixin, BaseEstimator):
    """Restricted Chebyshev center of a finite family in a convex body ``V`` of ``l_inf^n``.

    Attributes
    ----------
    radius_ : float
        ``rad_V(F)``.
    center_ : ndarray
        A restricted center in ``V``.
    full_radius_ : float
        ``rad_X(F)``.
    distance_to_centers_ : float
        ``d(V, cent_X(F))``; ``radius_ == full_radius_ + distance_to_centers_``.
    identity_residual_ : float
    """

    def __init__(self, body=None, tol=DEFAULT_TOL):
        self.body = body
        self.tol = tol

    def fit(self, X, y=None):
        X = check_array(X, dtype=float)
        body = self.body if self.body is not None else whole_space(X.shape[1])
        if not isinstance(body, ConvexBody):
            raise TypeError(f"body must be a ConvexBody, got {type(body).__name__}")
        report = verify_radius_identity(make_discrete(X.shape[1]), body, X)
        self.report_ = report
        self.radius_ = report.rad_V
        self.center_ = report.v_star
        self.full_radius_ = report.r_F
        self.distance_to_centers_ = report.R
        self.identity_residual_ = report.identity_residual
        self.members_ = X
        self.n_features_in_ = X.shape[1]
        return self
