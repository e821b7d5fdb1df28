"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid user-facing configuration (bad option value, bad knots, ...)."""


class IngestError(ValueError):
    """Raw price file cannot be turned into a clean daily series."""


class EvidenceError(RuntimeError):
    """Marginal-likelihood estimation failed (e.g. a rung chain died)."""
