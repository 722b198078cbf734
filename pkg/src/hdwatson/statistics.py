"""Test statistics for spherical location and spiked covariance structure.

Four statistics share one geometric core. With cosines t_i = x_i . pole,
radial parts u_i = sqrt(1 - t_i^2) and unit tangent signs s_i:

* classical:  n (p-1) xbar' (I - pole pole') xbar / (1 - mean(t_i^2)),
  referred to chi-square with p-1 degrees of freedom;
* modified:   sqrt(2 (p-1)) * sum_{i<j} u_i u_j s_i's_j / sum_i u_i^2,
  referred to the standard normal for large n and p;
* sign:       (sqrt(2 (p-1)) / n) * sum_{i<j} s_i's_j, standard normal;
* spiked:     the modified statistic evaluated on row-normalized raw data,
  testing for a rank-one covariance spike along the pole.

The cross sums are evaluated in O(n p) through the identity
2 sum_{i<j} w_i w_j s_i's_j = ||sum_i w_i s_i||^2 - sum_i w_i^2, with exact
(order-independent) accumulation. The direct O(n^2 p) double loop is kept as
an oracle.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._accum import exact_column_sums, exact_dot
from .exceptions import DegenerateDenominator, NearZeroVector
from .sphere import (
    as_directional_sample,
    project_rows,
    tangent_normal_decompose,
)

#: Recognized statistic kinds, matching the CLI method names.
KINDS = ("classical", "modified", "sign", "spiked")


@dataclass(frozen=True)
class StatisticValue:
    """A computed statistic with enough context to pick its null law."""

    value: float
    kind: str
    n: int
    p: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown statistic kind {self.kind!r}")

    @property
    def reference(self):
        """Name of the null reference law: 'chisquare' or 'normal'."""
        return "chisquare" if self.kind == "classical" else "normal"

    @property
    def df(self):
        """Degrees of freedom of the chi-square reference, else None."""
        return self.p - 1 if self.kind == "classical" else None


def pairwise_cross_sum(weights, signs):
    """sum_{i<j} w_i w_j s_i's_j in O(n p) via the squared-resultant identity.

    Assumes the rows of ``signs`` are unit vectors. Returns the cross sum and
    sum_i w_i^2 (the identity produces both).
    """
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    weighted = weights[:, None] * signs
    resultant = exact_column_sums(weighted)
    norm_sq = exact_dot(resultant, resultant)
    weight_sq = exact_dot(weights, weights)
    return 0.5 * (norm_sq - weight_sq), weight_sq


def pairwise_cross_sum_direct(weights, signs):
    """O(n^2 p) double-loop evaluation of sum_{i<j} w_i w_j s_i's_j.

    Reference oracle for ``pairwise_cross_sum``; intended for n <= ~200.
    """
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    signs = np.ascontiguousarray(signs, dtype=np.float64)
    n = signs.shape[0]
    terms = []
    for i in range(n - 1):
        dots = np.einsum("ij,j->i", signs[i + 1 :], signs[i])
        terms.extend((weights[i] * weights[i + 1 :] * dots).tolist())
    return math.fsum(terms)


def _cross_and_denominator(decomposition):
    cross, radial_sq = pairwise_cross_sum(decomposition.radial, decomposition.signs)
    if radial_sq <= 0.0:
        raise DegenerateDenominator(
            "all observations lie at the pole; the radial sum of squares is zero"
        )
    return cross, radial_sq


def modified_from_decomposition(decomposition):
    """Modified statistic value from a precomputed decomposition."""
    cross, radial_sq = _cross_and_denominator(decomposition)
    scale = math.sqrt(2.0 * (decomposition.p - 1))
    return scale * cross / radial_sq


def sign_from_decomposition(decomposition):
    """Sign statistic value from a precomputed decomposition."""
    n = decomposition.n
    resultant = exact_column_sums(decomposition.signs)
    norm_sq = exact_dot(resultant, resultant)
    cross = 0.5 * (norm_sq - n)
    return math.sqrt(2.0 * (decomposition.p - 1)) / n * cross


def classical_from_sample(sample, decomposition):
    """Classical statistic via the quadratic form in the sample mean.

    This path is independent of the pairwise rewrite and is the second leg
    of the two-path consistency check.
    """
    X = as_directional_sample(sample)
    n, p = X.shape
    pole = decomposition.pole
    mean = exact_column_sums(X) / n
    along = exact_dot(mean, pole)
    tangent_mean = mean - along * pole
    quad_form = exact_dot(tangent_mean, tangent_mean)
    denominator = 1.0 - exact_dot(decomposition.cosines, decomposition.cosines) / n
    if denominator <= 0.0:
        raise DegenerateDenominator(
            "all observations lie at the pole; the statistic denominator is zero"
        )
    return n * (p - 1) * quad_form / denominator


def watson_classical(sample, pole):
    """Location test statistic with the fixed-dimension chi-square null law.

    Parameters
    ----------
    sample : array_like, shape (n, p)
        Unit-vector rows.
    pole : array_like, shape (p,)
        Null location.

    Returns
    -------
    StatisticValue
        Nonnegative value, referred to chi-square with p - 1 degrees of
        freedom.
    """
    X = as_directional_sample(sample)
    decomposition = tangent_normal_decompose(X, pole)
    value = classical_from_sample(X, decomposition)
    return StatisticValue(value=value, kind="classical", n=X.shape[0], p=X.shape[1])


def watson_modified(sample, pole):
    """Centered and scaled location statistic with a standard normal null
    law as both the sample size and the dimension grow.

    Computed through the pairwise cross-sum form; agrees with
    (classical - (p-1)) / sqrt(2 (p-1)) to floating-point accuracy.
    """
    X = as_directional_sample(sample)
    decomposition = tangent_normal_decompose(X, pole)
    value = modified_from_decomposition(decomposition)
    return StatisticValue(value=value, kind="modified", n=X.shape[0], p=X.shape[1])


def sign_statistic(sample, pole):
    """Location statistic using only the tangent directions (signs).

    Ignores the radial parts entirely, hence depends on the observations
    only through their unit tangent components.
    """
    X = as_directional_sample(sample)
    decomposition = tangent_normal_decompose(X, pole)
    value = sign_from_decomposition(decomposition)
    return StatisticValue(value=value, kind="sign", n=X.shape[0], p=X.shape[1])


def spiked_statistic(raw, pole):
    """Covariance-spike statistic: the modified statistic on the row-wise
    spherical projection of raw (unnormalized) observations.

    Raises NearZeroVector for any (near-)zero raw row; scale invariant by
    construction.
    """
    Y = np.ascontiguousarray(raw, dtype=np.float64)
    if Y.ndim != 2:
        raise ValueError(f"raw data must be a 2-D array, got shape {Y.shape}")
    if Y.shape[0] < 2:
        raise ValueError(f"need at least 2 observations, got {Y.shape[0]}")
    if not np.all(np.isfinite(Y)):
        raise ValueError("raw data contains non-finite entries")
    X = project_rows(Y, tol=1e-12)
    decomposition = tangent_normal_decompose(X, pole)
    value = modified_from_decomposition(decomposition)
    return StatisticValue(value=value, kind="spiked", n=X.shape[0], p=X.shape[1])
