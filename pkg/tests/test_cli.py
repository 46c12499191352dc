"""Command-line interface: exit codes, witnesses, deterministic reports."""

import json

import pytest

from mcybe.cli import run


@pytest.fixture()
def sl2_files(tmp_path):
    assert run(["catalog", "sl", "--n", "2",
                "--algebra-out", str(tmp_path / "sl2.json"),
                "--map-out", str(tmp_path / "borel.json")]) == 0
    return tmp_path / "sl2.json", tmp_path / "borel.json"


def write_json(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


def test_check_mcybe_pass(sl2_files, capsys):
    algebra, borel = sl2_files
    assert run(["check", "mcybe", "--algebra", str(algebra), "--map", str(borel)]) == 0
    assert "pass" in capsys.readouterr().out


def test_check_mcybe_fail_names_witness(sl2_files, tmp_path, capsys):
    algebra, _ = sl2_files
    bad = write_json(tmp_path / "bad.json",
                     {"matrix": [[1, 0, 0], [0, 1, 0], [0, 0, -1]]})
    assert run(["check", "mcybe", "--algebra", str(algebra), "--map", bad]) == 1
    out = capsys.readouterr().out
    assert "(e, f)" in out


def test_check_lie_broken_algebra(tmp_path, capsys):
    broken = write_json(tmp_path / "broken.json", {
        "dim": 3, "basis": ["e", "f", "h"],
        "brackets": [{"i": 0, "j": 1, "value": [0, 0, 1]},
                     {"i": 0, "j": 2, "value": [-3, 0, 0]},
                     {"i": 1, "j": 2, "value": [0, 2, 0]}]})
    assert run(["check", "lie", "--algebra", broken]) == 1
    out = capsys.readouterr().out
    assert "(e, f, h)" in out


def test_cohomology_report(sl2_files, capsys):
    algebra, borel = sl2_files
    assert run(["cohomology", "--algebra", str(algebra), "--map", str(borel),
                "--max-degree", "2"]) == 0
    out = capsys.readouterr().out
    assert "H^1: dim 1" in out
    assert "H^2: dim 2" in out


def test_json_reports_are_byte_identical(sl2_files, capsys):
    algebra, borel = sl2_files
    args = ["cohomology", "--algebra", str(algebra), "--map", str(borel), "--json"]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert run(args) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["verdicts"]["dimensions"]["1"]["dim_cohomology"] == 1
    assert "conventions" in payload and "inputs" in payload


def test_malformed_json_exit_2(tmp_path, capsys):
    bad = tmp_path / "nope.json"
    bad.write_text("{not json")
    assert run(["check", "lie", "--algebra", str(bad)]) == 2
    assert "line" in capsys.readouterr().err


def test_dimension_mismatch_exit_2(sl2_files, tmp_path, capsys):
    algebra, _ = sl2_files
    small = write_json(tmp_path / "small.json", {"matrix": [[1, 0], [0, 1]]})
    assert run(["check", "mcybe", "--algebra", str(algebra), "--map", small]) == 2


def test_missing_file_exit_2(sl2_files):
    algebra, _ = sl2_files
    assert run(["check", "mcybe", "--algebra", str(algebra),
                "--map", "/nonexistent/r.json"]) == 2


def test_rota_baxter_subcommand(sl2_files, tmp_path):
    algebra, _ = sl2_files
    b = write_json(tmp_path / "b.json",
                   {"matrix": [[0, 0, 0], [0, -1, 0], [0, 0, 0]]})
    assert run(["check", "rota-baxter", "--algebra", str(algebra),
                "--map", b, "--weight", "1"]) == 0
    assert run(["check", "rota-baxter", "--algebra", str(algebra),
                "--map", b, "--weight", "0"]) == 1


def test_induced_subcommand(sl2_files, capsys):
    algebra, borel = sl2_files
    assert run(["induced", "--algebra", str(algebra), "--map", str(borel)]) == 0
    out = capsys.readouterr().out
    assert "[h, e]_R" not in out        # stored as (e, h) pair
    assert "[e, h]_R = (-4, 0, 0)" in out


def test_induced_requires_r_matrix(sl2_files, tmp_path, capsys):
    algebra, _ = sl2_files
    bad = write_json(tmp_path / "bad.json",
                     {"matrix": [[1, 0, 0], [0, 1, 0], [0, 0, -1]]})
    assert run(["induced", "--algebra", str(algebra), "--map", bad]) == 1
    assert run(["induced", "--algebra", str(algebra), "--map", bad, "--force"]) == 0


def test_graded_bracket_subcommand(sl2_files, tmp_path, capsys):
    algebra, borel = sl2_files
    assert run(["graded-bracket", "--algebra", str(algebra),
                "--left", str(borel), "--right", str(borel), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdicts"]["arity"] == 2
    # [[R, R]] = 2 pi: entries match twice the structure constants
    entries = {tuple(e["tuple"]): e["value"]
               for e in payload["verdicts"]["result"]["entries"]}
    assert entries[(0, 1)] == [0, 0, 2]


def test_mc_check_subcommand(sl2_files, tmp_path):
    algebra, borel = sl2_files
    zero = write_json(tmp_path / "zero.json", {"matrix": [[0] * 3 for _ in range(3)]})
    assert run(["mc-check", "--algebra", str(algebra), "--map", str(borel),
                "--prime", zero]) == 0
    assert run(["mc-check", "--algebra", str(algebra), "--map", str(borel),
                "--prime", str(borel)]) == 1


def test_kuranishi_subcommand(sl2_files, tmp_path):
    algebra, borel = sl2_files
    cocycle = write_json(tmp_path / "f.json", {
        "degree": 1, "entries": [{"tuple": [2], "value": [0, 0, 1]}]})
    assert run(["kuranishi", "--algebra", str(algebra), "--map", str(borel),
                "--cocycle", cocycle]) == 0


def test_deform_subcommands(sl2_files, tmp_path):
    algebra, borel = sl2_files
    # Rhat = d e: maps f to 2h
    rhat = write_json(tmp_path / "rhat.json",
                      {"matrix": [[0, 0, 0], [0, 0, 0], [0, 2, 0]]})
    zero = write_json(tmp_path / "zero.json", {"matrix": [[0] * 3 for _ in range(3)]})
    assert run(["deform", "check", "--algebra", str(algebra), "--map", str(borel),
                "--rhat", rhat]) == 0
    assert run(["deform", "equivalence", "--algebra", str(algebra),
                "--map", str(borel), "--rhat1", rhat, "--rhat2", zero,
                "--element", "[1, 0, 0]"]) == 1
    assert run(["deform", "trivial", "--algebra", str(algebra),
                "--map", str(borel), "--element", "[0, 0, 0]"]) == 0
    assert run(["deform", "trivial", "--algebra", str(algebra),
                "--map", str(borel), "--element", "[1, 0, 0]"]) == 1


def test_nijenhuis_subcommands(sl2_files, capsys):
    algebra, borel = sl2_files
    assert run(["nijenhuis", "check", "--algebra", str(algebra),
                "--map", str(borel), "--element", "[0, 0, 0]"]) == 0
    assert run(["nijenhuis", "check", "--algebra", str(algebra),
                "--map", str(borel), "--element", "[1, 0, 0]"]) == 1
    capsys.readouterr()
    assert run(["nijenhuis", "scan", "--algebra", str(algebra),
                "--map", str(borel)]) == 0
    assert "0 of 6" in capsys.readouterr().out


def test_double_subcommands(sl2_files, tmp_path):
    algebra, borel = sl2_files
    assert run(["double", "graph", "--algebra", str(algebra), "--map", str(borel)]) == 0
    assert run(["double", "complement", "--algebra", str(algebra),
                "--map", str(borel)]) == 0
    bad = write_json(tmp_path / "bad.json",
                     {"matrix": [[1, 0, 0], [0, 1, 0], [0, 0, -1]]})
    assert run(["double", "graph", "--algebra", str(algebra), "--map", bad]) == 1


def test_involutive_subcommand(sl2_files, tmp_path):
    algebra, borel = sl2_files
    assert run(["involutive", "analyze", "--algebra", str(algebra),
                "--map", str(borel)]) == 0
    swap = write_json(tmp_path / "swap.json",
                      {"matrix": [[0, 1, 0], [1, 0, 0], [0, 0, 1]]})
    assert run(["involutive", "analyze", "--algebra", str(algebra),
                "--map", swap]) == 1
    non_inv = write_json(tmp_path / "noninv.json",
                         {"matrix": [[2, 0, 0], [0, 1, 0], [0, 0, 1]]})
    assert run(["involutive", "analyze", "--algebra", str(algebra),
                "--map", non_inv]) == 2


def test_compatible_subcommand(sl2_files, tmp_path):
    algebra, borel = sl2_files
    rhat = write_json(tmp_path / "rhat.json",
                      {"matrix": [[0, 0, 0], [0, 0, 0], [0, 2, 0]]})
    assert run(["compatible", "--algebra", str(algebra), "--map", str(borel),
                "--rhat", rhat, "--t1", "1/2", "--t2", "-3"]) == 0


def test_catalog_stdout(capsys):
    assert run(["catalog", "sl", "--n", "3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdicts"]["dim"] == 8


def test_element_parse_errors(sl2_files, capsys):
    algebra, borel = sl2_files
    assert run(["nijenhuis", "check", "--algebra", str(algebra),
                "--map", str(borel), "--element", "[1, 0]"]) == 2
    assert run(["nijenhuis", "check", "--algebra", str(algebra),
                "--map", str(borel), "--element", "nope"]) == 2
