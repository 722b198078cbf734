"""Unit-sphere primitives: validation, projection, and the tangent-normal
decomposition of directional observations about a fixed pole.

Conventions: a directional sample is a float64 array of shape (n, p) whose
rows are unit vectors; the pole is a unit p-vector. Every observation x
splits as

    x = (x . pole) * pole + radial * sign,

with radial = sqrt(1 - (x . pole)^2) in [0, 1] and sign a unit vector
orthogonal to the pole.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateObservation, NearZeroVector, NotUnitVectors

#: Norm tolerance for vectors that are supposed to be exactly unit.
UNIT_NORM_TOL = 1e-12

#: Below this residual norm an observation counts as lying at the pole.
DEGENERACY_TOL = 1e-12


def check_unit_vector(vector, tol=UNIT_NORM_TOL, name="vector"):
    """Validate and return a unit vector as a float64 1-D array.

    Parameters
    ----------
    vector : array_like, shape (p,)
        Candidate unit vector, p >= 2.
    tol : float
        Allowed absolute deviation of the Euclidean norm from 1.
    name : str
        Label used in error messages.

    Raises
    ------
    ValueError
        If the shape is wrong or entries are not finite.
    NotUnitVectors
        If the norm deviates from 1 by more than ``tol``.
    """
    v = np.ascontiguousarray(vector, dtype=np.float64)
    if v.ndim != 1 or v.shape[0] < 2:
        raise ValueError(f"{name} must be a 1-D array of length >= 2, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite entries")
    norm = float(np.sqrt(np.einsum("i,i->", v, v)))
    if abs(norm - 1.0) > tol:
        raise NotUnitVectors(f"{name} has norm {norm!r}, expected 1 within {tol}")
    return v


def as_directional_sample(sample):
    """Coerce to a float64 (n, p) array and check the basic sample shape.

    Requires n >= 2 (the pairwise statistics need at least one pair) and
    p >= 2. Unit-norm validation is separate; see ``validate_unit_rows``.
    """
    X = np.ascontiguousarray(sample, dtype=np.float64)
    if X.ndim != 2:
        raise ValueError(f"sample must be a 2-D array, got shape {X.shape}")
    n, p = X.shape
    if n < 2:
        raise ValueError(f"sample needs at least 2 observations, got {n}")
    if p < 2:
        raise ValueError(f"sample dimension must be >= 2, got {p}")
    if not np.all(np.isfinite(X)):
        raise ValueError("sample contains non-finite entries")
    return X


def validate_unit_rows(sample, tol=1e-8, renormalize=True):
    """Check every row has unit norm within ``tol``; optionally renormalize.

    Text round-off in data files is tolerated up to ``tol``; rows passing the
    check are rescaled to exact unit norm so downstream formulas see clean
    input. Raises NotUnitVectors naming the first offending row (0-based).
    """
    X = as_directional_sample(sample)
    norms = np.sqrt(np.einsum("ij,ij->i", X, X))
    bad = np.flatnonzero(np.abs(norms - 1.0) > tol)
    if bad.size:
        i = int(bad[0])
        raise NotUnitVectors(
            f"row {i} has norm {norms[i]!r}, expected 1 within {tol}", index=i
        )
    if renormalize:
        return X / norms[:, None]
    return X


def project_to_sphere(vector, tol=1e-12):
    """Project a nonzero vector onto the unit sphere.

    Parameters
    ----------
    vector : array_like, shape (p,)
    tol : float
        Norms at or below this are treated as degenerate.

    Returns
    -------
    numpy.ndarray
        ``vector / ||vector||``.

    Raises
    ------
    NearZeroVector
        If ``||vector|| <= tol``.
    """
    v = np.ascontiguousarray(vector, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-D array, got shape {v.shape}")
    norm = float(np.sqrt(np.einsum("i,i->", v, v)))
    if not np.isfinite(norm) or norm <= tol:
        raise NearZeroVector(f"cannot project vector with norm {norm!r}")
    return v / norm


def project_rows(vectors, tol=1e-12):
    """Row-wise spherical projection of an (n, p) array.

    Raises NearZeroVector naming the first row whose norm is <= ``tol``.
    """
    Y = np.ascontiguousarray(vectors, dtype=np.float64)
    if Y.ndim != 2:
        raise ValueError(f"expected a 2-D array, got shape {Y.shape}")
    if not np.all(np.isfinite(Y)):
        raise ValueError("input contains non-finite entries")
    norms = np.sqrt(np.einsum("ij,ij->i", Y, Y))
    bad = np.flatnonzero(norms <= tol)
    if bad.size:
        i = int(bad[0])
        raise NearZeroVector(f"row {i} has norm {norms[i]!r}; cannot project", index=i)
    return Y / norms[:, None]


@dataclass(frozen=True)
class TangentDecomposition:
    """Per-observation split about a fixed pole.

    Attributes
    ----------
    cosines : numpy.ndarray, shape (n,)
        Inner products observation . pole, clamped to [-1, 1].
    radial : numpy.ndarray, shape (n,)
        sqrt(1 - cosine^2), the length of the tangent component.
    signs : numpy.ndarray, shape (n, p)
        Unit tangent directions, each orthogonal to the pole.
    pole : numpy.ndarray, shape (p,)
    """

    cosines: np.ndarray
    radial: np.ndarray
    signs: np.ndarray
    pole: np.ndarray

    @property
    def n(self):
        return self.signs.shape[0]

    @property
    def p(self):
        return self.signs.shape[1]

    def reconstruct(self):
        """Recompose the observations from (cosine, radial, sign)."""
        return self.cosines[:, None] * self.pole[None, :] + self.radial[:, None] * self.signs


def tangent_normal_decompose(sample, pole, tol=DEGENERACY_TOL):
    """Split each observation into its pole component and unit tangent part.

    Parameters
    ----------
    sample : array_like, shape (n, p)
        Unit-vector rows.
    pole : array_like, shape (p,)
        Unit vector to decompose about.
    tol : float
        An observation whose component orthogonal to the pole has norm
        <= ``tol`` is rejected: its tangent direction would be undefined.

    Returns
    -------
    TangentDecomposition

    Raises
    ------
    DegenerateObservation
        If some observation lies within ``tol`` of the pole or its antipode.

    Notes
    -----
    Cosines are clamped to [-1, 1] before radial parts are formed, so inputs
    normalized only to ~1e-12 cannot produce NaNs in sqrt(1 - cosine^2).
    """
    X = as_directional_sample(sample)
    axis = check_unit_vector(pole, name="pole")
    if X.shape[1] != axis.shape[0]:
        raise ValueError(
            f"sample dimension {X.shape[1]} does not match pole dimension {axis.shape[0]}"
        )
    cosines = np.einsum("ij,j->i", X, axis)
    residual = X - cosines[:, None] * axis[None, :]
    res_norms = np.sqrt(np.einsum("ij,ij->i", residual, residual))
    bad = np.flatnonzero(res_norms <= tol)
    if bad.size:
        raise DegenerateObservation(int(bad[0]))
    signs = residual / res_norms[:, None]
    cosines = np.clip(cosines, -1.0, 1.0)
    radial = np.sqrt(1.0 - cosines * cosines)
    return TangentDecomposition(cosines=cosines, radial=radial, signs=signs, pole=axis)


class HouseholderMap:
    """Orthogonal reflection sending the first basis vector to a given pole.

    The map is its own inverse and applies in O(p) per vector. When the pole
    already equals the first basis vector the map is the identity.
    """

    def __init__(self, pole, mirror=None):
        self.pole = pole
        self._mirror = mirror  # unit normal of the reflecting hyperplane

    @property
    def is_identity(self):
        return self._mirror is None

    def apply(self, vectors):
        """Reflect a (p,) vector or the rows of an (..., p) array."""
        v = np.asarray(vectors, dtype=np.float64)
        if self._mirror is None:
            return v
        w = self._mirror
        return v - 2.0 * np.einsum("...j,j->...", v, w)[..., None] * w


def householder_to_pole(pole):
    """Build the reflection mapping e1 to ``pole``.

    The mirror normal is proportional to e1 - pole; its first component is
    evaluated as ||pole[1:]||^2 / (1 + pole[0]) when pole[0] > 0 to avoid the
    cancellation in 1 - pole[0] for poles close to e1.
    """
    axis = check_unit_vector(pole, name="pole")
    p = axis.shape[0]
    tail = axis[1:]
    tail_sq = float(np.einsum("i,i->", tail, tail))
    if tail_sq == 0.0 and axis[0] > 0.0:
        return HouseholderMap(axis, mirror=None)
    if axis[0] > 0.0:
        head = tail_sq / (1.0 + axis[0])
    else:
        head = 1.0 - axis[0]
    mirror = np.empty(p, dtype=np.float64)
    mirror[0] = head
    mirror[1:] = -tail
    mirror /= np.sqrt(head * head + tail_sq)
    return HouseholderMap(axis, mirror=mirror)
