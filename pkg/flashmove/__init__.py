# flashmove/__init__.py
"""
flashmove
Planner, verifier and simulator for moving data between flash memory blocks
with as few block erasures as possible
"""

from .coordinator.coordinator import MovementCoordinator
from .flash_sim.tools import execute
from .instance_model.tools import load_example, parse, random_instance, serialize, validate
from .planners.models import Algorithm, LabellingStrategy
from .planners.tools import plan_bubble, plan_bubble_xor, plan_gf2, plan_linear

__all__ = [
    "MovementCoordinator",
    "Algorithm",
    "LabellingStrategy",
    "execute",
    "load_example",
    "parse",
    "random_instance",
    "serialize",
    "validate",
    "plan_bubble",
    "plan_bubble_xor",
    "plan_gf2",
    "plan_linear",
]

__version__ = "1.0.0"
__author__ = "flashmove developers"
__description__ = "Erasure-minimising data movement planner for flash memory"
