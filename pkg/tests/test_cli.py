"""Command line behaviour: subcommands, formats, exit codes, determinism, files."""

from __future__ import annotations

import json
import os

import pytest

from fcrystal.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------ gamma


def test_gamma_text(capsys):
    code, out, _ = run(capsys, "gamma", "--r", "2", "--perm", "(1 2)", "--slopes", "0,1", "--m-max", "3")
    assert code == 0
    assert "gamma: 0 1 1 1" in out
    assert "stabilization: 1" in out
    assert "orbit 2:" in out


def test_gamma_json_fields(capsys):
    code, out, _ = run(
        capsys, "gamma", "--r", "2", "--perm", "(1 2)", "--slopes", "0 4", "--m-max", "6", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "fcrystal/1"
    assert payload["command"] == "gamma"
    assert payload["gamma"] == [0, 1, 2, 3, 4, 4, 4]
    assert payload["delta"] == [1, 1, 1, 1, 0, 0]
    assert payload["b"] == [2, 4, 6, 8, 12, 16]
    assert payload["stabilization"] == 4
    assert payload["stabilization_is_isomorphism_number"] is False
    assert payload["ordinary"] is None
    assert payload["orbits"][0]["normalized"] == {"kind": "all-zero", "length": 2}
    assert payload["orbits"][1]["census"] == {"1": 1, "2": 1, "3": 1, "4": 1}


def test_gamma_ordinary_crystal(capsys):
    code, out, _ = run(capsys, "gamma", "--r", "3", "--perm", "1 2 3", "--slopes", "0,0,0", "--m-max", "2")
    assert code == 0
    assert "gamma: 0 0 0" in out
    assert "ordinary=yes" in out


def test_gamma_csv(capsys):
    code, out, _ = run(
        capsys, "gamma", "--r", "2", "--perm", "(1 2)", "--slopes", "0,1", "--m-max", "2", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines() == ["m,gamma,delta,b", "0,0,,", "1,1,1,2", "2,1,0,6"]


def test_gamma_deterministic_output(capsys):
    args = ("gamma", "--r", "3", "--perm", "(1 2 3)", "--slopes", "0,1,1", "--m-max", "5", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


# ------------------------------------------------------------ endo


def test_endo_single_level(capsys):
    code, out, _ = run(capsys, "endo", "--r", "2", "--perm", "(1 2)", "--slopes", "0,1", "--m", "3")
    assert code == 0
    assert out == "b(3) = 10\n"


def test_endo_with_prime(capsys):
    code, out, _ = run(
        capsys, "endo", "--r", "2", "--perm", "(1 2)", "--slopes", "0,1", "--m", "3", "--prime", "2"
    )
    assert code == 0
    assert "components(3) = 2^10 = 1024" in out


def test_endo_table_json(capsys):
    code, out, _ = run(
        capsys, "endo", "--r", "1", "--perm", "1", "--slopes", "0", "--m-max", "4", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["b"] == [1, 2, 3, 4]


def test_endo_identity_crystal(capsys):
    code, out, _ = run(capsys, "endo", "--r", "2", "--perm", "1 2", "--slopes", "0,0", "--m", "3")
    assert code == 0
    assert out == "b(3) = 12\n"


def test_endo_supersingular_components(capsys):
    code, out, _ = run(
        capsys, "endo", "--r", "2", "--perm", "(1 2)", "--slopes", "0,1", "--m", "1", "--prime", "2"
    )
    assert code == 0
    assert "b(1) = 2" in out
    assert "components(1) = 2^2 = 4" in out


def test_endo_requires_level(capsys):
    code, _, err = run(capsys, "endo", "--r", "2", "--perm", "(1 2)", "--slopes", "0,1")
    assert code == 2
    assert "invalid input" in err


def test_endo_large_prime_power_is_exact(capsys):
    code, out, _ = run(
        capsys, "endo", "--r", "2", "--perm", "1 2", "--slopes", "0,0", "--m", "16", "--prime", "7"
    )
    assert code == 0
    assert f"= {7 ** 64}" in out


# ------------------------------------------------------------ verify


def test_verify_sequence_match(capsys):
    code, out, _ = run(capsys, "verify", "--seq", "3,0,-1,-2", "--m", "5")
    assert code == 0
    assert "formula: linear=3 circular=2" in out
    assert "match: yes" in out


def test_verify_all_zero_sequence(capsys):
    code, out, _ = run(capsys, "verify", "--seq", "0,0", "--m", "4")
    assert code == 0
    assert "formula: linear=0 circular=4" in out
    assert "match: yes" in out


def test_verify_sequence_json(capsys):
    code, out, _ = run(capsys, "verify", "--seq", "3,-3", "--m", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["formula"] == {"linear": 3, "circular": 2}
    assert payload["oracle"]["circular_edges"] == 4
    assert payload["match"] is True


def test_verify_dump_digraph(capsys):
    code, out, _ = run(capsys, "verify", "--seq", "0,0", "--m", "2", "--dump-digraph")
    assert code == 0
    assert "digraph level {" in out
    assert '"0:1" -> "0:2" [weight="0"];' in out


def test_verify_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--r-max", "2", "--slope-max", "2", "--m-max", "3", "--random", "50")
    assert code == 0
    assert "mismatches: 0" in out
    assert out.rstrip().endswith("ok")


def test_verify_budget_exceeded(capsys):
    code, _, err = run(capsys, "verify", "--seq", "1,1,1,1", "--m", "9", "--vertex-budget", "10")
    assert code == 3
    assert "resource limit" in err


# ------------------------------------------------------------ scan


def test_scan_csv_and_summary(capsys):
    code, out, err = run(
        capsys, "scan", "--family", "circular-dieudonne", "--r", "3", "--m-max", "3", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("r,perm,slopes,m_max,gamma,")
    assert len(lines) == 1 + 2 * 8  # two 3-cycles, eight slope vectors
    assert "violations[nonincreasing]=0" in err


def test_scan_json_fields(capsys):
    code, out, _ = run(
        capsys, "scan", "--family", "all-dieudonne", "--r", "2", "--m-max", "4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["records"] == 8
    assert all(rec["nonincreasing"] for rec in payload["records"])


def test_scan_flags_constant_delta_family(capsys):
    code, out, _ = run(
        capsys,
        "scan", "--family", "circular-fcrystal", "--r", "2", "--slope-max", "4", "--m-max", "6",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    flagged = [
        tuple(rec["slopes"])
        for rec in payload["records"]
        if rec["stabilization"] >= 2 and rec["delta"][: rec["stabilization"]] == [1] * rec["stabilization"]
    ]
    # the shifted rank-two family shows up with its constant unit increments
    for e in (2, 3, 4):
        assert (0, e) in flagged and (e, 0) in flagged


def test_scan_workers_agree_with_serial(capsys):
    # large enough that --workers 2 really goes through the process pool
    args = ("scan", "--family", "circular-fcrystal", "--r", "4", "--m-max", "3", "--format", "csv")
    _, serial, _ = run(capsys, *args, "--workers", "1")
    _, parallel, _ = run(capsys, *args, "--workers", "2")
    assert serial == parallel


def test_scan_text_summary(capsys):
    code, out, _ = run(capsys, "scan", "--family", "circular-dieudonne", "--r", "2", "--m-max", "2")
    assert code == 0
    assert "all checks passed" in out


# ------------------------------------------------------------ minimal


def test_minimal_yes(capsys):
    code, out, _ = run(capsys, "minimal", "--r", "2", "--perm", "(1 2)", "--slopes", "0,1")
    assert code == 0
    assert "minimal: yes" in out
    assert "newton slopes: 1/2 1/2" in out


def test_minimal_no(capsys):
    code, out, _ = run(capsys, "minimal", "--r", "4", "--perm", "(1 2 3 4)", "--slopes", "0,0,1,1")
    assert code == 0
    assert "minimal: no" in out
    assert "consistent=yes" in out


def test_minimal_json(capsys):
    code, out, _ = run(
        capsys, "minimal", "--r", "4", "--perm", "(1 2 3 4)", "--slopes", "0,1,0,1", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["minimal"] is True
    assert payload["newton_slopes"] == ["1/2", "1/2", "1/2", "1/2"]
    assert payload["consistent"] is True


def test_minimal_rejects_non_dieudonne(capsys):
    code, _, err = run(capsys, "minimal", "--r", "2", "--perm", "(1 2)", "--slopes", "0,2")
    assert code == 2
    assert "invalid input" in err


# ------------------------------------------------------------ errors and limits


def test_bad_permutation_is_invalid_input(capsys):
    code, _, err = run(capsys, "gamma", "--r", "2", "--perm", "(1 3)", "--slopes", "0,1", "--m-max", "2")
    assert code == 2
    assert "invalid input" in err


def test_wrong_slope_count(capsys):
    code, _, err = run(capsys, "gamma", "--r", "2", "--perm", "(1 2)", "--slopes", "0,1,1", "--m-max", "2")
    assert code == 2


def test_rank_cap(capsys):
    perm = " ".join(str(i) for i in range(1, 10))
    slopes = ",".join("0" for _ in range(9))
    code, _, err = run(capsys, "gamma", "--r", "9", "--perm", perm, "--slopes", slopes, "--m-max", "2")
    assert code == 3
    assert "override-limits" in err


def test_rank_cap_override(capsys):
    perm = " ".join(str(i) for i in range(1, 10))
    slopes = ",".join("0" for _ in range(9))
    code, out, _ = run(
        capsys, "gamma", "--r", "9", "--perm", perm, "--slopes", slopes, "--m-max", "2", "--override-limits"
    )
    assert code == 0
    assert "gamma: 0 0 0" in out


def test_level_cap(capsys):
    code, _, _ = run(capsys, "gamma", "--r", "2", "--perm", "(1 2)", "--slopes", "0,1", "--m-max", "17")
    assert code == 3


# ------------------------------------------------------------ file output


def test_out_writes_atomically(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        "gamma", "--r", "2", "--perm", "(1 2)", "--slopes", "0,1", "--m-max", "3",
        "--format", "json", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["gamma"] == [0, 1, 1, 1]
    leftovers = [name for name in os.listdir(tmp_path) if name.startswith(".fcrystal-")]
    assert leftovers == []


def test_out_overwrites_existing_file(tmp_path, capsys):
    target = tmp_path / "b.txt"
    target.write_text("old")
    code, _, _ = run(capsys, "endo", "--r", "2", "--perm", "(1 2)", "--slopes", "0,1", "--m", "1", "--out", str(target))
    assert code == 0
    assert target.read_text() == "b(1) = 2\n"


def test_scan_csv_to_file_prints_summary(tmp_path, capsys):
    target = tmp_path / "scan.csv"
    code, out, _ = run(
        capsys,
        "scan", "--family", "all-dieudonne", "--r", "2", "--m-max", "3",
        "--format", "csv", "--out", str(target),
    )
    assert code == 0
    assert "records=8" in out
    assert target.read_text().startswith("r,perm,slopes")
