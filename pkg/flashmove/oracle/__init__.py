from .tools import (
    WIDE_FIELD_ASSUMPTION,
    min_erasures,
    min_y_bruteforce,
    mis_bruteforce,
    uncoded_feasible,
    uncoded_search,
)

__all__ = [
    "WIDE_FIELD_ASSUMPTION",
    "min_erasures",
    "min_y_bruteforce",
    "mis_bruteforce",
    "uncoded_feasible",
    "uncoded_search",
]
