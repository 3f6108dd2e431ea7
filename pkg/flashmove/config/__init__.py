"""
Configuration module for flashmove
Loads settings from the environment (and an optional .env file)
"""

from .settings import Settings, load_settings, configure_logging, DEFAULT_POLYNOMIALS

__all__ = [
    "Settings",
    "load_settings",
    "configure_logging",
    "DEFAULT_POLYNOMIALS"
]
