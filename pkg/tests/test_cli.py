import json

import pytest

from sphmoduli import cli


def run_cli(capsys, *argv):
    status = cli.main(list(argv))
    out = capsys.readouterr()
    return status, out.out


def test_crossed_lines_json_report(capsys):
    status, out = run_cli(
        capsys, "analyze", "--group", "A1xA1",
        "--weights", "[[2,0],[4,2]]", "--json",
    )
    assert status == 0
    report = json.loads(out)
    assert report["schema_version"] == 1
    assert report["tangent"]["dimension"] == 2
    assert set(report["tangent"]["weights"]) == {"a1", "2*a2"}
    assert report["sp_gamma"] == []
    assert report["e_gamma"] == [["1", "0"], ["0", "1"]]


def test_crossed_lines_subsets_and_oracle(capsys):
    status, out = run_cli(
        capsys, "analyze", "--group", "A1xA1",
        "--weights", "[[2,0],[4,2]]", "--json", "--oracle", "--enumerate-subsets",
    )
    assert status == 0
    report = json.loads(out)
    assert report["oracle"]["agrees"] is True
    maximal = [s for s in report["subsets"] if s["maximal"]]
    assert len(maximal) == 2
    assert all(s["size"] == 1 for s in maximal)


def test_sl2_oracle(capsys):
    status, out = run_cli(
        capsys, "analyze", "--group", "A1", "--weights", "[[2]]",
        "--json", "--oracle",
    )
    assert status == 0
    report = json.loads(out)
    assert report["tangent"]["weights"] == ["2*a1"]
    assert report["oracle"]["agrees"] is True


def test_empty_weights(capsys):
    status, out = run_cli(capsys, "analyze", "--group", "B3", "--weights", "[]")
    assert status == 0
    assert "tangent dimension 0" in out


def test_json_roundtrip_and_determinism(capsys):
    args = ["analyze", "--group", "B2", "--weights", "[[2,0],[0,2]]", "--json"]
    status1, out1 = run_cli(capsys, *args)
    status2, out2 = run_cli(capsys, *args)
    assert status1 == status2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert json.loads(json.dumps(report)) == report


def test_text_and_json_verdicts_agree(capsys):
    base = ["analyze", "--group", "G2", "--weights", "[[0,2]]"]
    _, text_out = run_cli(capsys, *base)
    _, json_out = run_cli(capsys, *base, "--json")
    report = json.loads(json_out)
    for entry in report["catalog"]:
        expected_n = "yes" if entry["n_adapted"] else f"no({entry['n_adapted_failed']})"
        line = next(l for l in text_out.splitlines() if l.strip().startswith(entry["name"] + " "))
        assert f"n_adapted={expected_n}" in line
    dim_line = next(l for l in text_out.splitlines() if l.startswith("tangent dimension"))
    assert dim_line.startswith(f"tangent dimension {report['tangent']['dimension']}")


@pytest.mark.parametrize("group,weights,fragment", [
    ("D3", "[[1,1,1]]", "bad group"),
    ("A2", "[[1,0],", "bad weights JSON"),
    ("A2", "[[1,0],[0,-1]]", "not dominant"),
    ("A2", "[[1,0],[2,0]]", "dependent"),
    ("A2", "[[1,0,0]]", "length"),
])
def test_validation_errors(capsys, group, weights, fragment):
    status = cli.main(["analyze", "--group", group, "--weights", weights])
    captured = capsys.readouterr()
    assert status == 2
    assert fragment in captured.out + captured.err


def test_oracle_disagreement_exits_nonzero(capsys, monkeypatch):
    from sphmoduli import oracle
    from sphmoduli.oracle import OracleReport

    monkeypatch.setattr(
        cli.oracle, "oracle_tangent_weights",
        lambda model, quotient=None: OracleReport(weights={}, flagged=[]),
    )
    status, out = run_cli(
        capsys, "analyze", "--group", "A1", "--weights", "[[2]]",
        "--json", "--oracle",
    )
    assert status == 1
    report = json.loads(out)
    assert report["oracle"]["agrees"] is False
    # both weight sets are in the report for comparison
    assert report["tangent"]["weights"] == ["2*a1"]
    assert report["oracle"]["weights"] == []
