# flashmove/flash_sim/tools.py
import json
import logging
from typing import Callable, List, Optional

from ..config.settings import Settings
from ..errors import DeviceViolation, ParseError, RecoverabilityViolation
from ..gf_arith.field import FieldContext, get_field
from ..instance_model.models import MoveSpec
from .device import FlashDevice
from .models import Erase, EventOp, ExecutionResult, Plan, TraceEvent, Verdict, Write

logger = logging.getLogger(__name__)

EventHook = Callable[[int, TraceEvent, FlashDevice], None]


def execute(
    spec: MoveSpec,
    plan: Plan,
    settings: Optional[Settings] = None,
    field: Optional[FieldContext] = None,
    payload_seed: int = 0,
    on_event: Optional[EventHook] = None,
) -> ExecutionResult:
    """
    Replay a plan on a fresh device holding the original data of spec.

    Args:
        spec: the instance; block i starts with D_{i,1}..D_{i,m}
        plan: events to apply in order
        settings: page size, payload verification and field defaults
        field: arithmetic context; defaults to the one settings describe
        payload_seed: seed for the random original payloads
        on_event: called after every applied event with (index, event, device)

    Returns:
        ExecutionResult; the first violation stops the replay and is reported
        with its event index. A wrong final placement is reported at index
        len(plan.events).
    """
    settings = settings or Settings()
    if field is None:
        field = get_field(settings.field_width, settings.reduction_poly)
    if (plan.n, plan.m) != (spec.n, spec.m):
        raise DeviceViolation(f"Plan is for n={plan.n}, m={plan.m}; instance has n={spec.n}, m={spec.m}")

    device = FlashDevice(
        spec,
        field,
        aux_blocks=plan.aux_blocks,
        page_size=settings.page_size,
        seed=payload_seed,
        verify_payloads=settings.verify_payloads,
    )
    applied: List[TraceEvent] = []

    for index, event in enumerate(plan.events):
        try:
            if isinstance(event, Erase):
                device.erase(event.block)
                if not device.check_recoverable():
                    raise RecoverabilityViolation(
                        f"erasing B_{event.block} leaves rank {device.stored_rank()} < {spec.size}"
                    )
            else:
                device.write(event.block, event.page, event.coeffs)
        except DeviceViolation as e:
            e.event_index = index
            logger.warning("Replay of %s plan failed at event %d: %s", plan.algorithm or "unnamed", index, e)
            return ExecutionResult(applied, list(device.erase_counts), Verdict(False, index, f"{e.reason}: {e}"))
        applied.append(event)
        if on_event is not None:
            on_event(index, event, device)

    placed, message = device.final_placement()
    if not placed:
        logger.warning("Plan %s ends in a wrong placement: %s", plan.algorithm or "unnamed", message)
        return ExecutionResult(
            applied, list(device.erase_counts), Verdict(False, len(plan.events), f"final placement: {message}")
        )
    logger.debug("Plan %s replayed: %d erasures", plan.algorithm, sum(device.erase_counts))
    return ExecutionResult(applied, list(device.erase_counts), Verdict(True))


def _hex(symbol: int, width: int) -> str:
    return f"0x{symbol:0{width}x}"


def write_trace(plan: Plan, result: Optional[ExecutionResult] = None, w: int = 8) -> str:
    """
    Serialize a plan as JSON lines: a header, one event per line, and a summary
    carrying erase counts (and the verdict when result is given).
    """
    digits = w // 4
    header = {"algorithm": plan.algorithm, "n": plan.n, "m": plan.m, "aux_blocks": plan.aux_blocks}
    lines = [json.dumps(header)]
    for event in plan.events:
        record = {"op": event.op.value, "block": event.block}
        if event.op is EventOp.WRITE:
            record["page"] = event.page
            record["coeffs"] = [_hex(c, digits) for c in event.coeffs]
        lines.append(json.dumps(record))
    summary = {"erase_counts": result.erase_counts if result else plan.erase_profile()}
    if result is not None:
        summary["verdict"] = result.verdict.describe()
    lines.append(json.dumps(summary))
    return "\n".join(lines) + "\n"


def _symbol(value, lineno: int) -> int:
    if isinstance(value, str):
        try:
            return int(value, 16)
        except ValueError:
            raise ParseError(f"bad hex symbol {value!r}", line=lineno, field="coeffs")
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    raise ParseError(f"bad symbol {value!r}", line=lineno, field="coeffs")


def read_trace(text: str, spec: Optional[MoveSpec] = None) -> Plan:
    """
    Decode a JSON-lines plan.

    The header line is optional when spec supplies n and m; without a header the
    second auxiliary block is assumed exactly when block n + 1 is referenced.
    """
    header = None
    events: List[TraceEvent] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            raise ParseError(f"malformed JSON: {e.msg}", line=lineno) from e
        if not isinstance(record, dict):
            raise ParseError("each line must be a JSON object", line=lineno)

        op = record.get("op")
        if op is None:
            if "n" in record and "m" in record and header is None and not events:
                header = record
            elif "erase_counts" not in record:
                raise ParseError("unrecognised record", line=lineno)
            continue
        try:
            op = EventOp(op)
        except ValueError:
            raise ParseError(f"unknown op {op!r}", line=lineno, field="op")

        if op is EventOp.ERASE:
            events.append(Erase(_block(record, lineno)))
        else:
            page = record.get("page")
            coeffs = record.get("coeffs")
            if not isinstance(page, int) or not isinstance(coeffs, list):
                raise ParseError("write needs integer 'page' and list 'coeffs'", line=lineno)
            events.append(Write(_block(record, lineno), page, tuple(_symbol(c, lineno) for c in coeffs)))

    if header is not None:
        n, m = header["n"], header["m"]
        aux_blocks = header.get("aux_blocks", 1)
        algorithm = header.get("algorithm", "")
    elif spec is not None:
        n, m = spec.n, spec.m
        aux_blocks = 2 if any(event.block == n + 1 for event in events) else 1
        algorithm = ""
    else:
        raise ParseError("trace has no header and no instance was given", line=1)

    if spec is not None and (n, m) != (spec.n, spec.m):
        raise ParseError(f"trace is for n={n}, m={m}; instance has n={spec.n}, m={spec.m}", line=1)
    return Plan(n=n, m=m, aux_blocks=aux_blocks, events=events, algorithm=algorithm)


def _block(record: dict, lineno: int) -> int:
    block = record.get("block")
    if isinstance(block, bool) or not isinstance(block, int) or block < 0:
        raise ParseError(f"bad block {block!r}", line=lineno, field="block")
    return block
