"""Exception hierarchy with stable CLI exit codes per error class."""


class IrisSegError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class MissingInputError(IrisSegError):
    """A required file or directory does not exist."""

    exit_code = 3


class FormatError(IrisSegError):
    """A file (netpbm image, manifest, checkpoint, config) is malformed."""

    exit_code = 4


class ValidationError(IrisSegError):
    """Inputs violate a contract: bad dimensions, bad values, bad schema."""

    exit_code = 5


class ShapeError(ValidationError):
    """Tensor operands have incompatible shapes."""


class EmptyMaskError(ValidationError):
    """A ground-truth mask contains no foreground pixels."""


class ConfigError(ValidationError):
    """Unknown config key or value outside its allowed range."""
