# flashmove/planners/tools.py
import logging
from typing import Dict, List, Optional

from ..config.settings import Settings
from ..errors import PreconditionError
from ..flash_sim.models import Plan
from ..gf_arith.field import FieldContext, get_field
from ..instance_model.models import MoveSpec
from ..labelling.models import Labelling
from ..labelling.tools import is_canonical, labelling_parameter, min_y_exact, min_y_greedy
from .layout import MovementLayout
from .models import Algorithm, LabellingStrategy, PlannerConfig

logger = logging.getLogger(__name__)


def _unit(size: int, coordinate: int) -> List[int]:
    coeffs = [0] * size
    coeffs[coordinate] = 1
    return coeffs


def _swap_pairs(n: int):
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            yield i, j


def _exchange(layout: MovementLayout, held: List[List[int]], k: int, i: int, j: int) -> None:
    """
    Swap step of the bubble schedule for set k: B_i takes the item of B_j when
    that item is destined for B_i.

    held[k - 1][b - 1] is the source block of the set-k item currently in B_b.
    """
    items = held[k - 1]
    if layout.destination(k, items[j - 1]) == i:
        items[i - 1], items[j - 1] = items[j - 1], items[i - 1]


def plan_bubble(spec: MoveSpec, aux_blocks: int = 2) -> Plan:
    """
    Uncoded bubble-sort movement with two auxiliary blocks B_0 and B_0'.

    For every pair i < j both blocks are copied out, erased and rewritten, so
    each data block is erased n - 1 times and each auxiliary block C(n, 2) times.
    """
    if aux_blocks < 2:
        raise PreconditionError("Uncoded bubble-sort movement needs two auxiliary blocks")

    n, m, size = spec.n, spec.m, spec.size
    layout = MovementLayout(spec)
    plan = Plan(n, m, aux_blocks=2, algorithm=Algorithm.BUBBLE.value)
    spare = n + 1

    held = [list(range(1, n + 1)) for _ in range(m)]
    page = [list(layout.set_layout(k).source_page) for k in range(1, m + 1)]

    def copy_out(block: int, into: int) -> None:
        for k in range(1, m + 1):
            source = held[k - 1][block - 1]
            plan.write(into, page[k - 1][block - 1], _unit(size, layout.datum(k, source)))

    def write_back(block: int) -> None:
        for k in range(1, m + 1):
            slot = layout.slot(k, block)
            plan.write(block, slot, _unit(size, layout.datum(k, held[k - 1][block - 1])))
            page[k - 1][block - 1] = slot

    for i, j in _swap_pairs(n):
        copy_out(i, 0)
        copy_out(j, spare)
        plan.erase(i)
        plan.erase(j)
        for k in range(1, m + 1):
            _exchange(layout, held, k, i, j)
        write_back(i)
        write_back(j)
        plan.erase(0)
        plan.erase(spare)

    logger.info("bubble plan for n=%d, m=%d: %d erasures", n, m, plan.erasures)
    return plan


def plan_bubble_xor(spec: MoveSpec) -> Plan:
    """
    Bubble-sort movement with one auxiliary block holding, in page k, the XOR
    of every datum of block-permutation set k.

    Within a swap B_i is erased and rewritten before B_j is erased; the XOR
    pages stay valid throughout because a swap never changes a set's data.
    """
    n, m, size = spec.n, spec.m, spec.size
    layout = MovementLayout(spec)
    plan = Plan(n, m, aux_blocks=1, algorithm=Algorithm.BUBBLE_XOR.value)

    for k in range(1, m + 1):
        parity = [0] * size
        for coordinate in layout.coordinates(k):
            parity[coordinate] = 1
        plan.write(0, k, parity)

    held = [list(range(1, n + 1)) for _ in range(m)]

    def rewrite(block: int) -> None:
        plan.erase(block)
        for k in range(1, m + 1):
            plan.write(block, layout.slot(k, block), _unit(size, layout.datum(k, held[k - 1][block - 1])))

    for i, j in _swap_pairs(n):
        for k in range(1, m + 1):
            _exchange(layout, held, k, i, j)
        rewrite(i)
        rewrite(j)

    plan.erase(0)
    logger.info("bubble-xor plan for n=%d, m=%d: %d erasures", n, m, plan.erasures)
    return plan


def plan_gf2(spec: MoveSpec) -> Plan:
    """
    XOR-coded movement in exactly 2n erasures.

    Forward pass, i = 1..n: page k of B_{i-1} receives D_i + D_{sigma^-1(i)} of
    set k (D_i alone when B_i is the tail of its semi-cycle), then B_i is erased.
    Backward pass, i = n..1: B_i receives its final data, then B_{i-1} is erased.
    """
    n, m, size = spec.n, spec.m, spec.size
    layout = MovementLayout(spec)
    plan = Plan(n, m, aux_blocks=1, algorithm=Algorithm.GF2.value)

    for i in range(1, n + 1):
        for k in range(1, m + 1):
            coeffs = _unit(size, layout.datum(k, i))
            if not layout.is_tail(k, i):
                coeffs[layout.arriving(k, i)] ^= 1
            plan.write(i - 1, k, coeffs)
        plan.erase(i)

    for i in range(n, 0, -1):
        for k in range(1, m + 1):
            plan.write(i, layout.slot(k, i), _unit(size, layout.arriving(k, i)))
        plan.erase(i - 1)

    logger.info("gf2 plan for n=%d, m=%d: %d erasures", n, m, plan.erasures)
    return plan


def plan_linear(
    spec: MoveSpec,
    labelling: Labelling,
    y: Optional[int] = None,
    field: Optional[FieldContext] = None,
) -> Plan:
    """
    Linear-coded movement in n + y + 1 erasures.

    Args:
        spec: the instance
        labelling: block ordering, canonical at y
        y: parameter to run with; defaults to labelling.y
        field: arithmetic for the Vandermonde rows; needs n nonzero elements

    Returns:
        Plan with one auxiliary block. Labels 0..y first receive the
        power-sum pages sum_l l^i D_l per set, labels y+1..n then receive their
        final data in order, and labels y..1 are back-filled before B_0 is
        erased.
    """
    n, m, size = spec.n, spec.m, spec.size
    y = labelling.y if y is None else y
    if labelling.n != n:
        raise PreconditionError(f"Labelling covers {labelling.n} blocks; instance has {n}")
    if not 0 <= y <= max(0, n - 2):
        raise PreconditionError(f"y must lie in 0..{max(0, n - 2)}, got {y}")
    if not is_canonical(spec, labelling.ordering, y):
        raise PreconditionError(
            f"Ordering {list(labelling.ordering)} is not canonical at y={y} "
            f"(its parameter is {labelling_parameter(spec, labelling.ordering)})"
        )
    field = field or get_field()
    field.require_capacity(n)

    layout = MovementLayout(spec)
    plan = Plan(n, m, aux_blocks=1, algorithm=Algorithm.LINEAR.value)

    def block(label: int) -> int:
        return 0 if label == 0 else labelling.block(label)

    def power_sum(k: int, power: int) -> List[int]:
        coeffs = [0] * size
        for label in range(1, n + 1):
            coeffs[layout.datum(k, labelling.block(label))] = field.pow(label, power)
        return coeffs

    def finalise(label: int) -> None:
        target = block(label)
        plan.erase(target)
        for k in range(1, m + 1):
            plan.write(target, layout.slot(k, target), _unit(size, layout.arriving(k, target)))

    for i in range(0, y + 1):
        if i > 0:
            plan.erase(block(i))
        for k in range(1, m + 1):
            plan.write(block(i), k, power_sum(k, i))
    for i in range(y + 1, n + 1):
        finalise(i)
    for i in range(y, 0, -1):
        finalise(i)
    plan.erase(0)

    logger.info("linear plan for n=%d, m=%d, y=%d: %d erasures", n, m, y, plan.erasures)
    return plan


def resolve_labelling(
    spec: MoveSpec,
    strategy: LabellingStrategy,
    settings: Optional[Settings] = None,
) -> Labelling:
    """Pick the ordering the linear planner runs with"""
    settings = settings or Settings()
    if strategy == LabellingStrategy.EXACT:
        return min_y_exact(spec, limit=settings.exact_limit)
    elif strategy == LabellingStrategy.GREEDY:
        return min_y_greedy(spec)
    ordering = tuple(range(1, spec.n + 1))
    return Labelling(ordering, labelling_parameter(spec, ordering))


_UNCODED = {
    Algorithm.BUBBLE: plan_bubble,
    Algorithm.BUBBLE_XOR: plan_bubble_xor,
    Algorithm.GF2: plan_gf2,
}


def build_plan(spec: MoveSpec, config: PlannerConfig, settings: Optional[Settings] = None) -> Plan:
    """Run the planner config selects"""
    settings = settings or Settings()
    if config.algorithm in _UNCODED:
        return _UNCODED[config.algorithm](spec)
    labelling = config.labelling or resolve_labelling(spec, config.strategy, settings)
    field = config.field or get_field(settings.field_width, settings.reduction_poly)
    return plan_linear(spec, labelling, y=config.y, field=field)


def plan_summary(plan: Plan) -> Dict[str, object]:
    return {
        "algorithm": plan.algorithm,
        "n": plan.n,
        "m": plan.m,
        "aux_blocks": plan.aux_blocks,
        "erasures": plan.erasures,
        "writes": plan.writes,
        "erase_profile": plan.erase_profile(),
    }
