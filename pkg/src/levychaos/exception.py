# -*- coding: utf-8 -*-
"""
Exceptions raised by the levychaos library.

Every error raised deliberately by levychaos
derives from LevyChaosError so that callers
(and the command line interface in particular)
can map failures onto exit codes without
catching unrelated exceptions.

"""


# =============================================================================
class LevyChaosError(Exception):
    """
    Base class for custom exceptions used by levychaos.

    """


# =============================================================================
class DimensionError(LevyChaosError):
    """
    Thrown when two objects of incompatible dimension are combined.

    """


# =============================================================================
class DomainError(LevyChaosError):
    """
    Thrown when a function is evaluated outside of its domain.

    """


# =============================================================================
class ParameterError(LevyChaosError):
    """
    Thrown when a model or operation parameter is out of range.

    """


# =============================================================================
class CoverageError(LevyChaosError):
    """
    Thrown when a moment table does not cover a requested index.

    """


# =============================================================================
class ConfigurationError(LevyChaosError):
    """
    Thrown when objects from inconsistent configurations are combined.

    """


# =============================================================================
class CapabilityError(LevyChaosError):
    """
    Thrown when a request lies beyond what is implemented.

    """


# =============================================================================
class NumericError(LevyChaosError):
    """
    Thrown when a numerical procedure fails or cannot certify its result.

    The residual (or error estimate) that caused
    the failure is kept on the exception so that
    reports can show how far off the result was.

    """

    # -------------------------------------------------------------------------
    def __init__(self, msg, residual = None):
        """
        Return a NumericError instance.

        """
        self.residual = residual
        super().__init__(msg)


# -----------------------------------------------------------------------------
def exit_code(err):
    """
    Return the command line exit code for the specified exception.

    """
    import levychaos.cfg.exception  # pylint: disable=C0415

    if isinstance(err, NumericError):
        return 3
    if isinstance(err, CapabilityError):
        return 4
    if isinstance(err, (levychaos.cfg.exception.CfgError,
                        ConfigurationError,
                        DimensionError,
                        DomainError,
                        ParameterError,
                        CoverageError)):
        return 2
    return 1
