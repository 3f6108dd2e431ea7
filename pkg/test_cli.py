import json
import os

import pytest
from click.testing import CliRunner

from flashmove.cli import EXIT_BUDGET, EXIT_USAGE, EXIT_VERIFICATION, cli
from flashmove.instance_model import parse, validate


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def example(data_dir):
    return lambda name: os.path.join(data_dir, f"{name}.json")


def test_gen_is_deterministic(runner):
    first = runner.invoke(cli, ["gen", "-n", "4", "-m", "2", "--seed", "7"])
    second = runner.invoke(cli, ["gen", "-n", "4", "-m", "2", "--seed", "7"])
    assert first.exit_code == 0
    assert first.output == second.output
    spec = parse(first.output)
    assert (spec.n, spec.m) == (4, 2)


def test_seed_environment_variable_wins(runner):
    explicit = runner.invoke(cli, ["gen", "-n", "5", "-m", "1", "--seed", "7"])
    overridden = runner.invoke(cli, ["gen", "-n", "5", "-m", "1", "--seed", "0"], env={"FLASHMOVE_SEED": "7"})
    assert overridden.exit_code == 0
    assert overridden.output == explicit.output


def test_gen_all_pairs(runner):
    result = runner.invoke(cli, ["gen", "-n", "3", "-m", "3", "--all-pairs"])
    assert result.exit_code == 0
    assert validate(parse(result.output)).ok


def test_validate(runner, example, tmp_path):
    ok = runner.invoke(cli, ["validate", example("example1")])
    assert ok.exit_code == 0
    assert ok.output.strip() == "ok"

    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({"n": 2, "m": 1, "moves": [[1, 1, 1, 1], [2, 1, 1, 1]]}))
    result = runner.invoke(cli, ["validate", str(invalid)])
    assert result.exit_code == EXIT_VERIFICATION
    assert result.output.startswith("invalid: ")

    malformed = tmp_path / "malformed.json"
    malformed.write_text('{"n": 2,')
    assert runner.invoke(cli, ["validate", str(malformed)]).exit_code == EXIT_USAGE


def test_decompose_prints_cycles_and_tails(runner, example):
    result = runner.invoke(cli, ["decompose", example("example3")])
    assert result.exit_code == 0
    assert json.loads(result.output) == [{
        "set": 1,
        "pages": [1, 1, 1, 1, 1, 1, 1, 1],
        "cycles": [
            {"blocks": [1, 3, 8, 7, 4], "pages": [1, 1, 1, 1, 1], "tail": 8},
            {"blocks": [2, 6, 5], "pages": [1, 1, 1], "tail": 6},
        ],
    }]


def test_decompose_covers_every_page_once(runner, example, example1):
    result = runner.invoke(cli, ["decompose", example("example1")])
    assert result.exit_code == 0
    sets = json.loads(result.output)
    assert [entry["set"] for entry in sets] == list(range(1, example1.m + 1))
    members = [
        (block, page)
        for entry in sets
        for cycle in entry["cycles"]
        for block, page in zip(cycle["blocks"], cycle["pages"])
    ]
    assert sorted(members) == sorted(example1.pages())
    for entry in sets:
        for cycle in entry["cycles"]:
            assert cycle["tail"] == max(cycle["blocks"])
            assert [entry["pages"][b - 1] for b in cycle["blocks"]] == cycle["pages"]


def test_plan_then_verify(runner, example, tmp_path):
    plan_path = tmp_path / "gf2.jsonl"
    planned = runner.invoke(cli, ["plan", "--alg", "gf2", example("example3"), "-o", str(plan_path)])
    assert planned.exit_code == 0
    assert json.loads(plan_path.read_text().splitlines()[0])["algorithm"] == "gf2"

    trace_path = tmp_path / "replayed.jsonl"
    verified = runner.invoke(cli, ["verify", example("example3"), str(plan_path), "--trace-out", str(trace_path)])
    assert verified.exit_code == 0
    lines = verified.output.splitlines()
    assert lines[0] == "B_0\t1"
    assert "total\t16" in lines
    assert lines[-1] == "verdict\tsuccess"
    assert json.loads(trace_path.read_text().splitlines()[-1])["verdict"] == "success"


def test_linear_plan_on_example2(runner, example, tmp_path):
    plan_path = tmp_path / "linear.jsonl"
    planned = runner.invoke(
        cli, ["plan", "--alg", "linear", "--labelling", "exact", example("example2"), "-o", str(plan_path)]
    )
    assert planned.exit_code == 0
    verified = runner.invoke(cli, ["verify", example("example2"), str(plan_path)])
    assert verified.exit_code == 0
    assert "total\t3" in verified.output.splitlines()


def test_tampered_plan_fails_verification(runner, example, tmp_path):
    plan_path = tmp_path / "gf2.jsonl"
    runner.invoke(cli, ["plan", "--alg", "gf2", example("example3"), "-o", str(plan_path)])
    lines = plan_path.read_text().splitlines()
    tampered = tmp_path / "tampered.jsonl"
    tampered.write_text("\n".join(lines[:1] + lines[2:]) + "\n")

    result = runner.invoke(cli, ["verify", example("example3"), str(tampered)])
    assert result.exit_code == EXIT_VERIFICATION
    assert "verdict\tfailure at event 0: recoverability violation" in result.output


def test_planner_refusal_exits_with_one(runner, example, tmp_path):
    result = runner.invoke(cli, ["plan", "--alg", "linear", "--y", "5", example("example2"), "-o", str(tmp_path / "p")])
    assert result.exit_code == EXIT_VERIFICATION
    assert "error:" in result.output


def test_label(runner, example):
    exact = runner.invoke(cli, ["label", "--exact", example("example2")])
    assert exact.exit_code == 0
    lines = exact.output.splitlines()
    assert "y\t0" in lines
    assert "erasures\t3" in lines
    assert lines[-1].startswith("minimum\t3")

    greedy = runner.invoke(cli, ["label", "--greedy", example("example3")])
    assert greedy.exit_code == 0
    assert not any(line.startswith("minimum") for line in greedy.output.splitlines())


def test_exact_limit_from_environment_is_a_budget_error(runner, example):
    result = runner.invoke(cli, ["label", "--exact", example("example3")], env={"FLASHMOVE_EXACT_LIMIT": "2"})
    assert result.exit_code == EXIT_BUDGET


def test_bad_configuration_is_a_usage_error(runner, example):
    result = runner.invoke(cli, ["validate", example("example1")], env={"FLASHMOVE_FIELD_WIDTH": "12"})
    assert result.exit_code == EXIT_USAGE


@pytest.mark.parametrize("poly", ["100", "11a"])
def test_reducible_polynomial_is_a_usage_error(runner, example, poly):
    result = runner.invoke(cli, ["validate", example("example1")], env={"FLASHMOVE_REDUCTION_POLY": poly})
    assert result.exit_code == EXIT_USAGE


def test_reduce(runner, tmp_path):
    graph = tmp_path / "edge.json"
    graph.write_text(json.dumps({"vertices": 2, "edges": [[1, 2]]}))
    result = runner.invoke(cli, ["reduce", str(graph)])
    assert result.exit_code == 0
    spec = parse(result.output)
    assert (spec.n, spec.m) == (6, 5)

    looped = tmp_path / "loop.json"
    looped.write_text(json.dumps({"vertices": 2, "edges": [[1, 1]]}))
    assert runner.invoke(cli, ["reduce", str(looped)]).exit_code == EXIT_USAGE


def test_bench_without_timing_is_reproducible(runner, tmp_path):
    outputs = []
    for name in ("first.tsv", "second.tsv"):
        path = tmp_path / name
        result = runner.invoke(
            cli, ["bench", "--sizes", "3x1,4x2", "--seeds", "2", "--no-timing", "-o", str(path)]
        )
        assert result.exit_code == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]

    rows = outputs[0].decode().splitlines()
    assert rows[0] == "algorithm\tn\tm\tseed\ttotal_erasures\tmax_per_block\twall_ms"
    assert len(rows) == 17
    gf2 = [row.split("\t") for row in rows[1:] if row.startswith("gf2")]
    assert [(r[1], r[4], r[6]) for r in gf2] == [("3", "6", "0")] * 2 + [("4", "8", "0")] * 2


def test_bench_rejects_malformed_sizes(runner):
    result = runner.invoke(cli, ["bench", "--sizes", "4by2"])
    assert result.exit_code == EXIT_USAGE
