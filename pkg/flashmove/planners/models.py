# flashmove/planners/models.py
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..gf_arith.field import FieldContext
from ..labelling.models import Labelling


class Algorithm(Enum):
    BUBBLE = "bubble"
    BUBBLE_XOR = "bubble-xor"
    GF2 = "gf2"
    LINEAR = "linear"


class LabellingStrategy(Enum):
    EXACT = "exact"
    GREEDY = "greedy"
    IDENTITY = "identity"


@dataclass
class PlannerConfig:
    """
    Planner selection.

    labelling and y only matter for the linear planner: an explicit labelling
    wins over the strategy; y defaults to the labelling's own parameter.
    """
    algorithm: Algorithm = Algorithm.GF2
    strategy: LabellingStrategy = LabellingStrategy.EXACT
    labelling: Optional[Labelling] = None
    y: Optional[int] = None
    field: Optional[FieldContext] = None
