"""Exception types shared across the package."""


class NearZeroVector(ValueError):
    """A vector with (near-)zero norm cannot be projected onto the sphere.

    ``index`` is the offending row when the input was a batch, else None.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NotUnitVectors(ValueError):
    """Directional input failed unit-norm validation.

    ``index`` is the first offending row when the input was a batch.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DegenerateObservation(ValueError):
    """An observation lies at the pole (or its antipode): its sign vector,
    the unit direction of the component orthogonal to the pole, is undefined."""

    def __init__(self, index, message=None):
        if message is None:
            message = (
                f"observation {index} coincides with the pole (or its antipode); "
                "its tangent direction is undefined"
            )
        super().__init__(message)
        self.index = index


class DegenerateDenominator(ValueError):
    """All tangent components vanish, so the statistic denominator is zero."""


class SamplerStalled(RuntimeError):
    """A rejection sampler exceeded its proposal budget; this signals a
    parameter bug rather than bad luck."""


class TabulationFailed(RuntimeError):
    """Numeric tabulation of a cosine distribution produced a zero or
    non-finite normalizer (parameters out of any sane range)."""


class SimulationCellError(RuntimeError):
    """A Monte Carlo cell aborted. Carries (n, p, replicate) context so the
    failure can be reported precisely instead of silently dropping replicates."""

    def __init__(self, n, p, replicate, cause):
        super().__init__(
            f"simulation cell (n={n}, p={p}) aborted at replicate {replicate}: {cause}"
        )
        self.n = n
        self.p = p
        self.replicate = replicate
