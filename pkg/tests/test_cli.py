import csv
import io
import json

import pytest

from dihedral_branching import __version__
from dihedral_branching.cli import UsageError, main, parse_range
from dihedral_branching.partitions import partition_number


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("11..30") == (11, 30)
    assert parse_range("13") == (13, 13)
    for bad in ("2..5", "9..7", "a..b", "11..41"):
        with pytest.raises(UsageError):
            parse_range(bad, cap=40)


def test_branch_json(capsys):
    code, out, _ = run(capsys, "branch", "--n", "13", "--shape", "12,1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["header"] == {
        "tool": "dihedral-branching",
        "version": __version__,
        "command": "branch",
        "seed": None,
    }
    entries = doc["result"]["entries"]
    assert all(entries[f"psi{j}"] == "1" for j in range(1, 7))
    assert entries["1++"] == "0"


def test_json_round_trip_is_byte_identical(capsys):
    for argv in (
        ("branch", "--n", "12", "--shape", "6,4,2", "--format", "json"),
        ("verify", "theorem-sn", "--n-range", "11..12", "--format", "json"),
        ("lemma", "5m", "--m", "5", "--sample-size", "5", "--format", "json"),
    ):
        _, out, _ = run(capsys, *argv)
        again = json.dumps(json.loads(out), sort_keys=True, indent=2, ensure_ascii=True) + "\n"
        assert again == out
        assert "." not in "".join(_leaves(json.loads(out)["result"]))


def _leaves(node):
    # every numeric leaf is an integer string, so no decimal points appear
    if isinstance(node, dict):
        for v in node.values():
            yield from _leaves(v)
    elif isinstance(node, list):
        for v in node:
            yield from _leaves(v)
    elif isinstance(node, str) and node.lstrip("-").replace(".", "").isdigit():
        yield node


def test_branch_text_and_usage_errors(capsys):
    code, out, _ = run(capsys, "branch", "--n", "5", "--shape", "5")
    assert code == 0 and "1++    1" in out
    code, _, err = run(capsys, "branch", "--n", "12", "--shape", "13")
    assert code == 2 and "size" in err
    code, _, _ = run(capsys, "branch", "--n", "5", "--shape", "2,3")
    assert code == 2
    code, _, _ = run(capsys, "branch", "--n", "61", "--shape", "61")
    assert code == 2
    code, _, err = run(capsys, "nonsense")
    assert code == 2 and "invalid choice" in err


def test_branch_csv_columns(capsys):
    code, out, _ = run(capsys, "branch", "--n", "6", "--shape", "3,2,1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "shape", "irrep-label", "multiplicity"]
    assert [r[2] for r in rows[1:]] == ["1++", "1+-", "1-+", "1--", "psi1", "psi2"]


def test_verify_commands_exit_zero(capsys):
    for argv in (
        ("verify", "theorem-sn", "--n-range", "11..14"),
        ("verify", "corollary-cn", "--n-range", "11..13"),
        ("verify", "theorem-an", "--n-range", "11..13"),
        ("verify", "embeddings", "--max", "5"),
        ("verify", "induction-step", "--n", "15", "--min-instances", "5"),
        ("verify", "two-row", "--p", "11"),
    ):
        code, out, _ = run(capsys, *argv)
        assert code == 0, (argv, out)


def test_verify_range_caps(capsys):
    code, _, _ = run(capsys, "verify", "theorem-sn", "--n-range", "11..41")
    assert code == 2
    code, _, _ = run(capsys, "verify", "theorem-an", "--n-range", "12..12")
    assert code == 2


def test_parallel_output_is_identical(capsys):
    argv = ["verify", "theorem-sn", "--n-range", "11..15", "--format", "json"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--jobs", "3")
    assert serial == parallel


def test_seeded_runs_are_reproducible(capsys):
    argv = ["lemma", "5m", "--m", "5", "--sample-size", "8", "--seed", "4", "--format", "json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert json.loads(first)["header"]["seed"] == "4"


def test_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "table", "maj", "--shape", "3,2", "--format", "json", "--output", str(target)
    )
    assert code == 0 and out == ""
    doc = json.loads(target.read_text())
    assert doc["result"]["counts"] == ["1", "1", "1", "1", "1"]


def test_table_maj_text(capsys):
    code, out, _ = run(capsys, "table", "maj", "--shape", "3,2")
    assert code == 0 and "[1,1,1,1,1]" in out


def test_table_branch_has_a_row_per_partition(capsys):
    code, out, _ = run(capsys, "table", "branch", "--n", "15", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 1 + partition_number(15) == 177
    code, out, _ = run(capsys, "table", "branch", "--n", "15", "--format", "csv", "--long")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "shape", "irrep-label", "multiplicity"]
    assert len(rows) == 1 + partition_number(15) * 9


def test_table_hecke(capsys):
    # k = 6 for the sign-on-reflections character when n = 1 mod 4, so the run reports failure
    code, out, _ = run(capsys, "table", "hecke", "--n", "13", "--format", "csv")
    rows = {r[1]: r for r in csv.reader(io.StringIO(out))}
    assert all(rows[f"psi{j}"][2] == str(partition_number(13) - 2) for j in range(1, 7))
    assert rows["1+-"][3] == "6"
    assert code == 1
    code, _, _ = run(capsys, "table", "hecke", "--n", "12")
    assert code == 0


def test_lemma_commands(capsys):
    code, out, _ = run(capsys, "lemma", "base", "--m", "5")
    assert code == 0 and "OBSERVATION MODE" in out
    code, _, _ = run(capsys, "lemma", "base", "--m", "14")
    assert code == 2
    code, out, _ = run(capsys, "lemma", "base", "--m", "11")
    assert code == 1 and "2,2,2,2,2,2,2,2,2,2,2" in out
    code, _, _ = run(capsys, "lemma", "pp", "--m", "11")
    assert code == 0
    code, out, _ = run(capsys, "lemma", "hook-containment", "--m", "11", "--p", "3")
    assert code == 1 and "9,2" in out
