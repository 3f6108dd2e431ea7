from .layout import MovementLayout, SetLayout
from .models import Algorithm, LabellingStrategy, PlannerConfig
from .tools import (
    build_plan,
    plan_bubble,
    plan_bubble_xor,
    plan_gf2,
    plan_linear,
    plan_summary,
    resolve_labelling,
)

__all__ = [
    "MovementLayout",
    "SetLayout",
    "Algorithm",
    "LabellingStrategy",
    "PlannerConfig",
    "build_plan",
    "plan_bubble",
    "plan_bubble_xor",
    "plan_gf2",
    "plan_linear",
    "plan_summary",
    "resolve_labelling",
]
