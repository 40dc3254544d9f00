"""Input validation helpers.

The estimators validate user input with :func:`sklearn.utils.check_array`;
the functional API uses these lighter checks, which sit on hot paths.
"""
import numpy as np

from .exceptions import DimensionMismatchError, EmptyFamilyError


def check_family(B, n_points=None):
    """Return ``B`` as a finite float array of shape ``(members, points)``."""
    if B is None:
        raise EmptyFamilyError("function family must have at least one member")
    arr = np.asarray(B, dtype=float)
    if arr.ndim == 1:
        arr = arr[np.newaxis, :]
    if arr.ndim != 2:
        raise ValueError(f"family must be 2-D (members x points), got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise EmptyFamilyError("function family must have at least one member")
    if not np.isfinite(arr).all():
        raise ValueError("family values must be finite")
    if n_points is not None and arr.shape[1] != n_points:
        raise DimensionMismatchError(
            f"family members have {arr.shape[1]} values, space has {n_points} points"
        )
    return arr


def check_vector(x, n_points=None, name="vector"):
    arr = np.asarray(x, dtype=float).ravel()
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} must be finite")
    if n_points is not None and arr.shape[0] != n_points:
        raise DimensionMismatchError(
            f"{name} has length {arr.shape[0]}, expected {n_points}"
        )
    return arr
