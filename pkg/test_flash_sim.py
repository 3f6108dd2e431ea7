import json

import numpy as np
import pytest

from flashmove.config.settings import Settings
from flashmove.errors import ComputabilityViolation, DeviceViolation, ParseError, WriteOnceViolation
from flashmove.flash_sim import Erase, EventOp, FlashDevice, Plan, Write, execute, read_trace, write_trace
from flashmove.planners import plan_bubble, plan_gf2


def unit(size, coordinate):
    coeffs = [0] * size
    coeffs[coordinate] = 1
    return coeffs


def test_initial_device_holds_the_originals(example2, gf256):
    device = FlashDevice(example2, gf256)
    assert device.check_recoverable()
    assert device.support(1) == [{1}, {2}]
    assert device.support(0) == [None, None]
    assert device.payload_bytes(2, 2) == device.originals[3].astype(np.uint8).tobytes()


def test_erasing_an_empty_block_still_counts(example2, gf256):
    device = FlashDevice(example2, gf256)
    device.erase(0)
    device.erase(0)
    assert device.erase_counts == [2, 0, 0]
    assert device.check_recoverable()


def test_occupied_page_cannot_be_rewritten(example2, gf256):
    device = FlashDevice(example2, gf256)
    with pytest.raises(WriteOnceViolation):
        device.write(1, 1, unit(4, 0))


def test_lost_data_cannot_be_written(example2, gf256):
    device = FlashDevice(example2, gf256)
    device.erase(1)
    with pytest.raises(ComputabilityViolation):
        device.write(0, 1, unit(4, 0))


def test_coded_write_computes_the_payload(example2, gf256):
    device = FlashDevice(example2, gf256, verify_payloads=True)
    device.write(0, 1, [1, 0, 3, 0])
    expected = device.originals[0] ^ gf256.multiply(3, device.originals[2])
    assert device.page_state(0, 1).payload.tolist() == expected.tolist()
    assert device.payload_consistent(0, 1)


def test_only_one_block_survives_a_wrong_uncoded_order(example2, gf256):
    # B_0 = {D_1,1, D_1,2}, B_1 = {D_1,1, D_2,2}, B_2 = {D_2,1, D_2,2}
    device = FlashDevice(example2, gf256)
    device.write(0, 1, unit(4, 0))
    device.write(0, 2, unit(4, 1))
    device.erase(1)
    assert device.check_recoverable()
    device.write(1, 1, unit(4, 0))
    device.write(1, 2, unit(4, 3))
    device.erase(2)
    assert not device.check_recoverable()
    assert device.stored_rank() == 3


def test_stored_rank_per_set(example2, gf256):
    device = FlashDevice(example2, gf256)
    assert device.stored_rank([0, 2]) == 2
    device.write(0, 1, [1, 0, 1, 0])
    device.erase(1)
    assert device.stored_rank([0, 2]) == 2
    assert device.stored_rank([1, 3]) == 1


def test_device_rejects_unknown_blocks_and_bad_vectors(example2, gf256):
    device = FlashDevice(example2, gf256)
    with pytest.raises(DeviceViolation):
        device.erase(3)
    with pytest.raises(DeviceViolation):
        device.write(0, 1, [1, 0, 0])
    with pytest.raises(DeviceViolation):
        FlashDevice(example2, gf256, aux_blocks=3)


def test_gf2_plan_replays_on_example3(example3):
    result = execute(example3, plan_gf2(example3))
    assert result.verdict.success
    assert result.erase_counts == [1, 2, 2, 2, 2, 2, 2, 2, 1]
    assert result.total_erasures == 16
    assert result.max_per_block == 2


def test_payload_verification_mode(example1):
    result = execute(example1, plan_gf2(example1), Settings(verify_payloads=True))
    assert result.verdict.success


def test_wide_symbols(example1):
    settings = Settings(field_width=16, reduction_poly=0x1100B, page_size=8)
    assert execute(example1, plan_gf2(example1), settings).verdict.success


def test_empty_plan_fails_on_final_placement(example3):
    result = execute(example3, Plan(8, 1))
    assert not result.verdict.success
    assert result.verdict.event_index == 0
    assert "final placement" in result.verdict.reason


def test_first_violation_stops_the_replay(swap):
    plan = Plan(2, 1, events=[Write(0, 1, (1, 0)), Write(0, 1, (0, 1)), Erase(1)])
    result = execute(swap, plan)
    assert not result.verdict.success
    assert result.verdict.event_index == 1
    assert result.verdict.reason.startswith("write-once violation")
    assert result.trace == plan.events[:1]


def test_erasing_the_last_copy_is_a_recoverability_violation(swap):
    result = execute(swap, Plan(2, 1, events=[Erase(1)]))
    assert result.verdict.event_index == 0
    assert result.verdict.reason.startswith("recoverability violation")
    assert result.erase_counts == [0, 1, 0]


def test_erase_counts_match_erase_events(example1):
    plan = plan_bubble(example1)
    result = execute(example1, plan)
    assert result.verdict.success
    assert result.total_erasures == sum(1 for event in plan.events if isinstance(event, Erase))
    assert result.erase_counts == plan.erase_profile()


def test_trace_file_layout(example3):
    plan = plan_gf2(example3)
    result = execute(example3, plan)
    lines = write_trace(plan, result).splitlines()
    assert json.loads(lines[0]) == {"algorithm": "gf2", "n": 8, "m": 1, "aux_blocks": 1}
    first_write = json.loads(lines[1])
    assert first_write["op"] == "write"
    assert first_write["coeffs"] == ["0x01", "0x00", "0x00", "0x01", "0x00", "0x00", "0x00", "0x00"]
    assert json.loads(lines[2]) == {"op": "erase", "block": 1}
    assert json.loads(lines[-1]) == {"erase_counts": [1, 2, 2, 2, 2, 2, 2, 2, 1], "verdict": "success"}
    assert read_trace("\n".join(lines)).events == plan.events


def test_headerless_trace_infers_the_spare_block(example2):
    plan = plan_bubble(example2)
    body = "\n".join(write_trace(plan).splitlines()[1:])
    decoded = read_trace(body, example2)
    assert decoded.aux_blocks == 2
    assert execute(example2, decoded).verdict.success


def test_trace_errors_carry_line_numbers(example2):
    with pytest.raises(ParseError) as exc:
        read_trace('{"op": "erase", "block": 1}\n{"op": "fly"}', example2)
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        read_trace('{"op": "erase", "block": 1}')


def test_trace_records_are_keyed_by_event_op(example2):
    plan = plan_bubble(example2)
    records = [json.loads(line) for line in write_trace(plan).splitlines()[1:-1]]
    assert [EventOp(record["op"]) for record in records] == [event.op for event in plan.events]
    assert {event.op for event in plan.events} == {EventOp.ERASE, EventOp.WRITE}
    for record in records:
        if record["op"] == EventOp.ERASE.value:
            assert set(record) == {"op", "block"}


@pytest.mark.parametrize("op", ["fly", "ERASE", 3, ["erase"]])
def test_unknown_op_names_its_field(example2, op):
    with pytest.raises(ParseError) as exc:
        read_trace(json.dumps({"op": op, "block": 1}), example2)
    assert exc.value.field == "op"
    assert exc.value.line == 1
