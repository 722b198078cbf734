"""Order-independent, correctly rounded floating-point reductions.

The O(n*p) statistic path accumulates up to ~1e8 products; naive left-to-right
summation loses about three digits there, and any order-dependent scheme breaks
bit-level reproducibility under observation reordering or parallel scheduling.
The helpers below use error-free extraction: each pass splits every summand
against a power-of-two shift so the high parts add without rounding, and the
exact residuals are re-extracted until nothing is left. The few per-level
totals are then combined with ``math.fsum``. The result equals the correctly
rounded sum of the inputs and depends only on their multiset, not their order.

Preconditions: inputs must be finite float64 values (the callers validate).
"""

import math

import numpy as np

_MAX_LEVELS = 128


def _shift_for(amax, count):
    """Power of two >= 4 * count * amax; high parts extracted against it sum
    exactly in float64 for any summation order."""
    exponent = math.ceil(math.log2(amax)) + math.ceil(math.log2(max(count, 2))) + 2
    if exponent > 1023:
        raise OverflowError("summands too large for exact extraction")
    return 2.0 ** exponent

def _level_totals(values):
    """Extract per-level exact totals of ``values`` along axis 0."""
    work = np.array(values, dtype=np.float64, copy=True)
    count = work.shape[0]
    totals = []
    for _ in range(_MAX_LEVELS):
        amax = float(np.max(np.abs(work))) if work.size else 0.0
        if amax == 0.0:
            break
        shift = _shift_for(amax, count)
        high = (work + shift) - shift
        work -= high
        totals.append(high.sum(axis=0))
    else:
        raise RuntimeError("exact summation did not terminate")
    return totals


def exact_sum(values):
    """Correctly rounded, order-independent sum of a 1-D array."""
    values = np.ascontiguousarray(values, dtype=np.float64)
    totals = _level_totals(values.reshape(-1, 1))
    if not totals:
        return 0.0
    return math.fsum(float(t[0]) for t in totals)


def exact_dot(x, y):
    """Order-independent dot product: per-element products rounded once, then
    summed exactly."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    y = np.ascontiguousarray(y, dtype=np.float64)
    return exact_sum(x * y)


def exact_column_sums(matrix):
    """Correctly rounded, order-independent column sums of a 2-D array.

    Summing over axis 0, so permuting rows leaves the result bit-identical.
    """
    matrix = np.ascontiguousarray(matrix, dtype=np.float64)
    if matrix.ndim != 2:
        raise ValueError("expected a 2-D array")
    totals = _level_totals(matrix)
    if not totals:
        return np.zeros(matrix.shape[1], dtype=np.float64)
    if len(totals) == 1:
        return totals[0]
    stacked = np.stack(totals, axis=-1)
    return np.array([math.fsum(row) for row in stacked.tolist()])
