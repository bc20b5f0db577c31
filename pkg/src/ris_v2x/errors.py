"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid scenario or experiment configuration."""


class ProtocolError(RuntimeError):
    """Environment API used out of order (e.g. step() after the episode ended)."""


class TrainingFault(RuntimeError):
    """A non-finite loss or gradient was produced during training."""


class UsageError(ValueError):
    """Bad command-line usage or an unknown configuration key."""
