"""Smoke tests for the python package wrapping the compiled core."""

import json

import pytest

import qforma


def test_version():
    assert qforma.__version__ == "0.1.0"


def test_root_system_record():
    rec = qforma.root_system("B3")
    assert rec["rank"] == 3
    assert rec["num_positive"] == 9
    assert rec["cartan"][0][0] == 2
    assert rec["fundamental_group_order"] == 2


def test_chevalley_verify():
    rep = qforma.chevalley_verify("G2", exhaustive=True)
    assert rep["jacobi"] == "ok"
    assert rep["n_pattern"] == "ok"
    assert rep["pairs_checked"] > 0


def test_structure_constants_tsv():
    tsv = qforma.structure_constants_tsv("A2")
    lines = tsv.strip().splitlines()
    assert lines[0] == "alpha\tbeta\tN"
    assert len(lines) > 1


def test_weight_report():
    rep = qforma.weight_report("A3", [0, 1, 0])
    assert rep["self_dual"] is True
    assert rep["coefficient_sum"] == "2/1"
    assert rep["sum_is_integer"] is True
    assert rep["in_root_lattice"] is False
    assert rep["fs_indicator"] == "+1"


def test_rep_build_dimensions():
    rep = qforma.rep_build("A3", [0, 1, 0])
    assert rep["dim"] == 6
    rep = qforma.rep_build("G2", [0, 1])
    assert rep["dim"] == 14


def test_rep_build_cap():
    with pytest.raises(qforma.CapExceeded):
        qforma.rep_build("E8", [1, 0, 0, 0, 0, 0, 0, 0])


def test_rationality_standard_has_form():
    doc = qforma.rationality_check("A3", [0, 1, 0], form="standard")
    assert doc["verdict"] == "HAS_Q_FORM"
    assert doc["witness"]["rank"] == 6
    assert doc["report"] == {
        "invariant": True,
        "spans": True,
        "independent": True,
    }


def test_rationality_twisted_obstructed():
    doc = qforma.rationality_check("A3", [0, 1, 0], form="twisted:2")
    assert doc["verdict"] == "NO_Q_FORM"
    cert = doc["certificate"]
    assert cert["exponent"] % 2 == 1
    assert cert["sigma_prime_squared"] == "3/1"
    assert cert["involution_attainable"] is False


def test_rationality_rejects_non_self_dual():
    with pytest.raises(qforma.HypothesisError):
        qforma.rationality_check("A3", [1, 0, 0], form="standard")


def test_classification_table():
    doc = qforma.classification_table(max_rank=8, jobs=2)
    obstructed = {
        row["type"] for row in doc["table"] if row["verdict"] == "OBSTRUCTED"
    }
    assert "A3" in obstructed
    assert "B3" in obstructed
    assert "D4" in obstructed
    assert "G2" not in obstructed
    assert "C3" not in obstructed
    so_rows = {row["n"]: row for row in doc["so"]}
    assert all(row["matches_closed_form"] for row in doc["so"])
    assert so_rows[11]["verdict"] == "CLEAN"
    assert so_rows[7]["verdict"] == "OBSTRUCTED"


def test_direct_sum_example():
    doc = qforma.direct_sum_example()
    assert doc["all_pass"] is True
    assert doc["factor_first"]["verdict"] == "CLEAN"
    assert doc["factor_second"]["verdict"] == "CLEAN"
    assert doc["pair_report"]["sum_is_integer"] is True


def test_quaternion_ramification():
    doc = qforma.quaternion_ramification("-1", "-1")
    assert doc["ramified"] == [2, "inf"]
    doc = qforma.quaternion_ramification("3", "3")
    assert doc["ramified"] == [2, 3]
    doc = qforma.quaternion_ramification("1", "5")
    assert doc["split_everywhere"] is True


def test_run_cli_roundtrip():
    code, out, err = qforma.run_cli(
        ["rationality", "check", "--type", "A", "--rank", "3",
         "--weight", "0,1,0", "--form", "twisted:2"]
    )
    assert code == 0
    assert err == ""
    doc = json.loads(out)
    assert doc["verdict"] == "NO_Q_FORM"
