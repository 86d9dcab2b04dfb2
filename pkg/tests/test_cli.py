import json

import jsonschema
import pytest

from branchkit.cli import SCHEMA_PATH, main


@pytest.fixture(scope="module")
def schema():
    with open(SCHEMA_PATH) as fh:
        return json.load(fh)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_forms(capsys, schema):
    code, out, _ = run_cli(capsys, "list-forms")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert "g2_2" in payload["quaternionic"]
    assert len(payload["quaternionic"]) == 7


def test_branch_deterministic_and_valid(capsys, schema):
    argv = ["branch", "quat", "--form", "g2_2", "--lambda=-1,-2,3", "--cutoff", "3"]
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2  # byte identical
    payload = json.loads(out1)
    jsonschema.validate(payload, schema)
    assert payload["oracleChecked"] is False
    assert payload["entries"]


def test_branch_with_oracle(capsys, schema):
    code, out, _ = run_cli(
        capsys,
        "branch", "quat", "--form", "g2_2", "--lambda=-1,-2,3",
        "--cutoff", "2", "--check-oracle", "--step-bound", "6",
    )
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert payload["oracleChecked"] is True
    assert payload["oracle"]["agree"] is True


def test_branch_simple_basis(capsys):
    # g2 parameter fw1 + beta equals 5 a1 + 3 a2 over the simple roots
    code, out, _ = run_cli(
        capsys, "branch", "quat", "--form", "g2_2",
        "--lambda", "5,3", "--basis", "simple", "--cutoff", "2",
    )
    assert code == 0
    assert json.loads(out)["lambda"] == "-1,-2,3"


def test_branch_rejects_non_dominant(capsys):
    code, _, err = run_cli(
        capsys, "branch", "quat", "--form", "g2_2", "--lambda=1,-2,1", "--cutoff", "2"
    )
    assert code == 2
    assert "not admissible" in err or "dominant" in err


def test_branch_sp1q(capsys, schema):
    code, out, _ = run_cli(
        capsys,
        "branch", "sp1q", "--form", "sp1_q:2", "--lambda", "4,2,1",
        "--cutoff", "3", "--check-oracle", "--step-bound", "6",
    )
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert payload["entries"][0] == {"mu": "5,1,0", "mult": "1"}


def test_admissible_hermitian(capsys, schema):
    code, out, _ = run_cli(
        capsys, "admissible", "hermitian", "--form", "su_pq:2,2",
        "--lambda", "3,1,0,-2",
    )
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert payload["admissible"] is False


def test_admissible_so3(capsys, schema):
    code, out, _ = run_cli(capsys, "admissible", "so3", "--n", "8")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert payload["admissible"] is False
    code2, _, err = run_cli(capsys, "admissible", "so3", "--n", "9")
    assert code2 == 2
    assert "discrete series" in err


def test_weights_json_and_tsv(capsys, schema):
    code, out, _ = run_cli(
        capsys, "weights", "--form", "g2_2", "--lambda=-1,-3,4"
    )
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert len(payload["entries"]) == 2  # two-dimensional compact factor rep
    code, out, _ = run_cli(
        capsys, "weights", "--form", "g2_2", "--lambda=-1,-3,4", "--output", "text"
    )
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert all("\t" in l for l in lines)


def test_oracle_check_command(capsys, schema):
    code, out, _ = run_cli(
        capsys,
        "oracle-check", "quat", "--form", "su2_n:2", "--lambda", "3,1,0,-2",
        "--step-bound", "6",
    )
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert payload["agree"] is True
    assert payload["comparedWeights"] > 0
    assert payload["mismatches"] == []


def test_bad_form_label_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "branch", "quat", "--form", "so4_n:2", "--lambda", "1,2,3"
    )
    assert code == 2
    assert "so4_n" in err


def test_resource_error_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("BRANCHKIT_GROUP_ORDER_BOUND", "4")
    code, _, err = run_cli(
        capsys,
        "oracle-check", "quat", "--form", "so4_n:4", "--lambda", "4,3,2,1",
        "--step-bound", "4",
    )
    assert code == 3
    assert "bound" in err


def test_selftest_single_criterion(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--only", "AC-7", "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["criteria"][0]["id"] == "AC-7"
