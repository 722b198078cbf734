"""Scalar special functions backing the reference null laws.

The normal law goes through the C-library erfc. The regularized incomplete
gamma function (for chi-square) is implemented here with the classic pairing:
power series on x < a + 1, Lentz continued fraction otherwise. Both routines
are validated by quantile/CDF round trips in the test suite.
"""

import math

_SQRT2 = math.sqrt(2.0)
_SQRT2PI = math.sqrt(2.0 * math.pi)

_GAMMA_EPS = 1e-16
_GAMMA_FPMIN = 1e-300
_GAMMA_ITMAX = 500


def normal_cdf(x):
    """Standard normal CDF."""
    return 0.5 * math.erfc(-x / _SQRT2)


def normal_sf(x):
    """Standard normal survival function, accurate in the upper tail."""
    return 0.5 * math.erfc(x / _SQRT2)


def normal_pdf(x):
    return math.exp(-0.5 * x * x) / _SQRT2PI


def _gamma_series(a, x):
    """P(a, x) by series; requires 0 < x < a + 1."""
    term = 1.0 / a
    total = term
    denom = a
    for _ in range(_GAMMA_ITMAX):
        denom += 1.0
        term *= x / denom
        total += term
        if abs(term) < abs(total) * _GAMMA_EPS:
            return total * math.exp(-x + a * math.log(x) - math.lgamma(a))
    raise RuntimeError(f"incomplete gamma series did not converge (a={a}, x={x})")


def _gamma_continued_fraction(a, x):
    """Q(a, x) by Lentz's continued fraction; requires x >= a + 1."""
    b = x + 1.0 - a
    c = 1.0 / _GAMMA_FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _GAMMA_ITMAX + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _GAMMA_FPMIN:
            d = _GAMMA_FPMIN
        c = b + an / c
        if abs(c) < _GAMMA_FPMIN:
            c = _GAMMA_FPMIN
        d = 1.0 / d
        step = d * c
        h *= step
        if abs(step - 1.0) < _GAMMA_EPS:
            return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h
    raise RuntimeError(f"incomplete gamma continued fraction did not converge (a={a}, x={x})")


def gammainc_lower(a, x):
    """Regularized lower incomplete gamma P(a, x)."""
    if a <= 0.0:
        raise ValueError(f"shape parameter must be positive, got {a}")
    if x < 0.0:
        raise ValueError(f"argument must be nonnegative, got {x}")
    if x == 0.0:
        return 0.0
    if x < a + 1.0:
        return _gamma_series(a, x)
    return 1.0 - _gamma_continued_fraction(a, x)


def gammainc_upper(a, x):
    """Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x)."""
    if a <= 0.0:
        raise ValueError(f"shape parameter must be positive, got {a}")
    if x < 0.0:
        raise ValueError(f"argument must be nonnegative, got {x}")
    if x == 0.0:
        return 1.0
    if x < a + 1.0:
        return 1.0 - _gamma_series(a, x)
    return _gamma_continued_fraction(a, x)


def chisquare_cdf(x, df):
    """Chi-square CDF with ``df`` degrees of freedom."""
    if df < 1:
        raise ValueError(f"degrees of freedom must be >= 1, got {df}")
    if x <= 0.0:
        return 0.0
    return gammainc_lower(0.5 * df, 0.5 * x)


def chisquare_sf(x, df):
    """Chi-square survival function."""
    if df < 1:
        raise ValueError(f"degrees of freedom must be >= 1, got {df}")
    if x <= 0.0:
        return 1.0
    return gammainc_upper(0.5 * df, 0.5 * x)


def chisquare_pdf(x, df):
    if x <= 0.0:
        return 0.0
    half = 0.5 * df
    return math.exp((half - 1.0) * math.log(x) - 0.5 * x - math.lgamma(half) - half * math.log(2.0))
