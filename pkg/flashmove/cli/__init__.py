from .commands import cli
from .middleware import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION

__all__ = ["cli", "EXIT_OK", "EXIT_VERIFICATION", "EXIT_USAGE", "EXIT_BUDGET"]
