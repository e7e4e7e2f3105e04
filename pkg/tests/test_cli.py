"""Tests for CLI entry point."""

import json

from click.testing import CliRunner

from colorpack.cli import main


def _write(tmp_path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def _invoke(*args: str):
    runner = CliRunner()
    return runner.invoke(main, list(args))


def test_cli_help():
    """CLI --help should exit 0 and show usage."""
    result = _invoke("--help")
    assert result.exit_code == 0
    assert "Usage:" in result.output
    assert "--config" in result.output
    for command in ("solve", "verify", "predict", "oracle", "gen", "bench"):
        assert command in result.output


def test_solve_prints_packing_and_count(tmp_path):
    path = _write(tmp_path, "case.txt", "capacity: 3\nW 4\nB 3\nY 2\n")
    result = _invoke("solve", path)
    assert result.exit_code == 0
    assert "BYW / BWB / WYW" in result.output
    assert "bin_count: 3" in result.output


def test_solve_empty_instance(tmp_path):
    path = _write(tmp_path, "empty.txt", "capacity: 3\n")
    result = _invoke("solve", path)
    assert result.exit_code == 0
    assert "bin_count: 0" in result.output


def test_solve_structured(tmp_path):
    path = _write(tmp_path, "case.txt", "capacity: 6\nW 15\nB 4\nY 3\nG 3\n")
    result = _invoke("solve", path, "--format", "structured")
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["bin_count"] == 5
    assert document["valid"] is True


def test_solve_uses_config_format(tmp_path):
    config = _write(tmp_path, "colorpack.yaml", "format: structured\n")
    path = _write(tmp_path, "case.txt", "capacity: 0\nW 8\nB 2\nY 2\n")
    result = _invoke("--config", config, "solve", path)
    assert result.exit_code == 0
    assert json.loads(result.output)["bin_count"] == 4


def test_parse_error_exits_2(tmp_path):
    path = _write(tmp_path, "bad.txt", "capacity: -1\nW 2\n")
    result = _invoke("solve", path)
    assert result.exit_code == 2


def test_bad_config_exits_2(tmp_path):
    config = _write(tmp_path, "colorpack.yaml", "no_such_key: 1\n")
    path = _write(tmp_path, "case.txt", "capacity: 0\nW 1\n")
    result = _invoke("--config", config, "solve", path)
    assert result.exit_code == 2


def test_verify_valid_packing(tmp_path):
    instance = _write(tmp_path, "case.txt", "capacity: 0\nW 8\nB 2\nY 2\n")
    packing = _write(tmp_path, "packing.txt", "WBWBWYWYW / W / W / W\n")
    result = _invoke("verify", instance, packing)
    assert result.exit_code == 0
    assert "valid: 4 bins" in result.output


def test_verify_adjacency_violation(tmp_path):
    instance = _write(tmp_path, "case.txt", "capacity: 0\nW 8\nB 2\nY 2\n")
    packing = _write(tmp_path, "packing.txt", "WBWBWYWYW / WW / W\n")
    result = _invoke("verify", instance, packing)
    assert result.exit_code == 1
    assert "adjacency" in result.output
    assert "conservation" not in result.output


def test_verify_missing_item(tmp_path):
    instance = _write(tmp_path, "case.txt", "capacity: 0\nW 8\nB 2\nY 2\n")
    packing = _write(tmp_path, "packing.txt", "WBWBWYWYW / W / W\n")
    result = _invoke("verify", instance, packing)
    assert result.exit_code == 1
    assert "conservation" in result.output


def test_verify_round_trips_solve_output(tmp_path):
    instance = _write(tmp_path, "case.txt", "capacity: 5\nW 15\nB 3\nY 2\nG 2\n")
    solved = _invoke("solve", instance, "--format", "structured")
    packing = _write(tmp_path, "packing.json", solved.output)
    result = _invoke("verify", instance, packing)
    assert result.exit_code == 0
    assert "valid: 8 bins" in result.output


def test_verify_unknown_color_exits_2(tmp_path):
    instance = _write(tmp_path, "case.txt", "capacity: 0\nW 1\n")
    packing = _write(tmp_path, "packing.txt", "Q\n")
    assert _invoke("verify", instance, packing).exit_code == 2


def test_predict_even_breakdown(tmp_path):
    path = _write(tmp_path, "case.txt", "capacity: 6\nW 15\nB 4\nY 3\nG 3\n")
    result = _invoke("predict", path)
    assert result.exit_code == 0
    assert "even-combine" in result.output
    assert "RO" in result.output
    assert "would give 6 bins" in result.output


def test_predict_capacity_bound(tmp_path):
    path = _write(tmp_path, "case.txt", "capacity: 3\nW 4\nB 3\nY 2\n")
    result = _invoke("predict", path)
    assert result.exit_code == 0
    assert "capacity-bound" in result.output
    assert "RO" not in result.output


def test_predict_empty_instance(tmp_path):
    path = _write(tmp_path, "empty.txt", "capacity: 0\n")
    result = _invoke("predict", path)
    assert result.exit_code == 0
    assert "empty" in result.output


def test_oracle_matches_solver(tmp_path):
    path = _write(tmp_path, "case.txt", "capacity: 3\nW 4\nB 3\nY 2\n")
    result = _invoke("oracle", path)
    assert result.exit_code == 0
    assert "optimum: 3" in result.output
    assert "matches: yes" in result.output


def test_oracle_refuses_large_instances(tmp_path):
    path = _write(tmp_path, "case.txt", "capacity: 5\nW 15\nB 3\nY 2\nG 2\n")
    assert _invoke("oracle", path).exit_code == 4
    result = _invoke("oracle", path, "--max-items", "22")
    assert result.exit_code == 0
    assert "optimum: 8" in result.output


def test_gen_is_reproducible(tmp_path):
    args = ("gen", "--colors", "4", "--items", "30", "--capacity", "5", "--seed", "9")
    first = _invoke(*args)
    second = _invoke(*args)
    assert first.exit_code == 0
    assert first.output == second.output
    assert "prng=PCG64" in first.output

    path = _write(tmp_path, "gen.txt", first.output)
    solved = _invoke("solve", path)
    assert solved.exit_code == 0


def test_gen_notes_unpopulated_colors():
    result = _invoke("gen", "--colors", "5", "--items", "2")
    assert result.exit_code == 0
    assert "only 2 of 5 colors populated" in result.output


def test_gen_unsatisfiable_skew_exits_2():
    result = _invoke("gen", "--colors", "1", "--items", "4", "--skew", "balanced")
    assert result.exit_code == 2


def test_bench_with_no_trials():
    result = _invoke("bench", "--trials", "0")
    assert result.exit_code == 0
    assert "No trials run" in result.output


def test_bench_small_run():
    result = _invoke("bench", "--sizes", "40,80", "--trials", "1", "--max-ratio", "1000")
    assert result.exit_code == 0
    assert "odd-irreducible" in result.output


def test_bench_rejects_bad_sizes():
    result = _invoke("bench", "--sizes", "10,abc")
    assert result.exit_code == 2
