"""
Settings Module
Reads flashmove configuration from environment variables
"""
import logging
import os
from dataclasses import dataclass
from typing import Dict, Optional

from dotenv import load_dotenv

from ..errors import ConfigurationError

# Load environment variables
load_dotenv()

DEFAULT_POLYNOMIALS: Dict[int, int] = {
    8: 0x11B,      # x^8 + x^4 + x^3 + x + 1
    16: 0x1100B,   # x^16 + x^12 + x^3 + x + 1
}


@dataclass(frozen=True)
class Settings:
    """Runtime configuration shared by the planners, simulator and CLI"""
    field_width: int = 8
    reduction_poly: int = DEFAULT_POLYNOMIALS[8]
    page_size: int = 16
    verify_payloads: bool = False
    exact_limit: int = 20
    seed_override: Optional[int] = None
    log_level: str = "WARNING"


def _read_int(name: str, default: Optional[int], base: int = 10) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.strip(), base)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}")


def _read_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


def load_settings() -> Settings:
    """Build Settings from FLASHMOVE_* environment variables"""
    width = _read_int("FLASHMOVE_FIELD_WIDTH", 8)
    if width not in DEFAULT_POLYNOMIALS:
        raise ConfigurationError(f"FLASHMOVE_FIELD_WIDTH must be 8 or 16, got {width}")

    poly = _read_int("FLASHMOVE_REDUCTION_POLY", DEFAULT_POLYNOMIALS[width], base=16)
    # field.py reads DEFAULT_POLYNOMIALS from this module
    from ..gf_arith.field import is_irreducible

    if poly.bit_length() - 1 != width:
        raise ConfigurationError(f"FLASHMOVE_REDUCTION_POLY {poly:#x} must have degree {width}")
    if not is_irreducible(poly):
        raise ConfigurationError(f"FLASHMOVE_REDUCTION_POLY {poly:#x} is reducible over GF(2)")

    page_size = _read_int("FLASHMOVE_PAGE_SIZE", 16)
    if page_size <= 0 or page_size % (width // 8) != 0:
        raise ConfigurationError(
            f"FLASHMOVE_PAGE_SIZE must be a positive multiple of {width // 8} bytes, got {page_size}"
        )

    exact_limit = _read_int("FLASHMOVE_EXACT_LIMIT", 20)
    if exact_limit < 2:
        raise ConfigurationError("FLASHMOVE_EXACT_LIMIT must be at least 2")

    log_level = os.getenv("FLASHMOVE_LOG_LEVEL", "WARNING").upper()
    if not isinstance(logging.getLevelName(log_level), int):
        raise ConfigurationError(f"Unknown FLASHMOVE_LOG_LEVEL {log_level!r}")

    return Settings(
        field_width=width,
        reduction_poly=poly,
        page_size=page_size,
        verify_payloads=_read_bool("FLASHMOVE_VERIFY_PAYLOADS", False),
        exact_limit=exact_limit,
        seed_override=_read_int("FLASHMOVE_SEED", None),
        log_level=log_level,
    )


def configure_logging(level: str = "WARNING") -> None:
    """Install a single stderr handler on the root logger"""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
