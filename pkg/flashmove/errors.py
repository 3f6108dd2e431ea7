"""
Exception hierarchy for flashmove
"""
from typing import Optional


class FlashMoveError(Exception):
    """Base class for every error raised by flashmove"""


class ConfigurationError(FlashMoveError, ValueError):
    """An environment setting is missing or malformed"""


class FieldDomainError(FlashMoveError, ValueError):
    """Arithmetic outside the domain of a finite field (e.g. inverse of zero)"""


class RankDeficiencyError(FlashMoveError, ValueError):
    """A coefficient matrix that had to be nonsingular is not"""

    def __init__(self, message: str, rank: int):
        super().__init__(message)
        self.rank = rank


class InstanceError(FlashMoveError, ValueError):
    """A data-movement instance violates its definition"""


class ParseError(FlashMoveError, ValueError):
    """A document could not be decoded into a domain object"""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field '{field}'")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)
        self.line = line
        self.field = field


class ContractViolation(FlashMoveError, ValueError):
    """An input breaks the structural contract of an algorithm"""


class PreconditionError(FlashMoveError, ValueError):
    """A planner refuses its input"""


class BudgetError(FlashMoveError):
    """An exhaustive search was asked to exceed its size budget"""


class DeviceViolation(FlashMoveError):
    """A plan event broke the flash device contract"""

    reason = "device violation"

    def __init__(self, message: str, event_index: Optional[int] = None):
        super().__init__(message)
        self.event_index = event_index


class WriteOnceViolation(DeviceViolation):
    reason = "write-once violation"


class ComputabilityViolation(DeviceViolation):
    reason = "computability violation"


class RecoverabilityViolation(DeviceViolation):
    reason = "recoverability violation"
