import json

import pytest

from qhodge import cli
from qhodge.scalar import parse_scalar


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_spectra(capsys):
    code, out = run(capsys, "spectra", "--k", "2", "--sign", "+")
    rep = json.loads(out)
    assert code == 0 and rep["schema_version"] == cli.SCHEMA_VERSION
    got = {parse_scalar(e["value"]): e["multiplicity"] for e in rep["eigenvalues"]}
    assert got == {parse_scalar("0"): 10, parse_scalar("1+q^2"): 3, parse_scalar("1+q^-2"): 3}


def test_global_flags_before_subcommand(capsys):
    code, out = run(capsys, "--q", "1/2", "--format", "csv", "spectra", "--k", "2")
    assert code == 0 and out.splitlines()[0].endswith("at_q,decimal")


def test_verify_braiding(capsys):
    code, out = run(capsys, "verify", "--suites", "braiding")
    rep = json.loads(out)
    assert code == 0
    assert any(c["identity"] == "braid equation" and c["pass"] for c in rep["suites"]["braiding"])


def test_verify_fault_injection(capsys):
    code, out = run(capsys, "verify", "--suites", "braiding", "--debug-corrupt-sigma")
    assert code == 1
    assert "braid equation" in json.loads(out)["failed_identities"]


def test_usage_errors(capsys):
    assert cli.main(["verify", "--suites", "nonsense"]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["spectra", "--k", "9"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["--q", "2", "spectra", "--k", "2"])
    assert exc.value.code == 2
    assert cli.main(["classify", "--input", "/nonexistent.json"]) == 2
    assert cli.main(["hodge-table", "--alpha", "1+"]) == 2


def test_laplacian_example(capsys):
    code, out = run(capsys, "laplacian", "--branch", "sigma", "--q", "1/2", "--alpha", "1",
                    "--nmax", "0", "--jmax", "1")
    rows = {(r["n"], r["J"]): r for r in json.loads(out)["entries"]}
    assert code == 0 and rows[(0, "1")]["value"] == "5/2"


def test_hodge_table_family_a(capsys):
    code, out = run(capsys, "hodge-table", "--family", "a", "--alpha", "1", "--sign", "+")
    deg2 = json.loads(out)["degrees"]["2"]
    assert code == 0
    assert all(list(v) == [k] for k, v in deg2.items())
    assert parse_scalar(deg2["phi+"]["phi+"]) == parse_scalar("-i*q^2*m*(q^2-1)")


def test_classify(tmp_path, capsys):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"alpha": "1", "beta": "q^2", "nu": "0", "epsilon": "q^2-1",
                             "xi": "q^2-1", "gamma": "-q^2-1", "m": "auto"}))
    code, out = run(capsys, "classify", "--input", str(p))
    rep = json.loads(out)
    assert code == 0
    assert rep["family"] == "a" and rep["real"] and rep["hermitian"]
    assert rep["maximally_hermitian"] == {"+": True, "-": True}
    assert rep["sign"] == -1


def test_classify_metric(tmp_path, capsys):
    p = tmp_path / "m.json"
    p.write_text(json.dumps([["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]))
    code, out = run(capsys, "classify-metric", "--input", str(p))
    assert code == 0 and json.loads(out)["classification"] == "not in G"


def test_oracle(capsys):
    code, out = run(capsys, "oracle", "--check", "casimir", "--check", "differential", "--jmax", "1")
    assert code == 0 and json.loads(out)["failed"] == 0


def test_export_round_trip(tmp_path, capsys):
    from qhodge import calculus
    out_file = tmp_path / "sigma.json"
    assert cli.main(["export", "braiding", "--sign", "-", "--out", str(out_file)]) == 0
    rows = cli.load_matrix(json.loads(out_file.read_text()))
    assert rows == calculus.braiding_matrix("-")


def test_deterministic(capsys):
    _, first = run(capsys, "export", "antisymmetrizer", "--k", "2", "--format", "csv")
    _, second = run(capsys, "export", "antisymmetrizer", "--k", "2", "--format", "csv")
    assert first == second


def test_csv_unavailable_for_classify(tmp_path, capsys):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"alpha": "1", "beta": "1"}))
    assert cli.main(["classify", "--input", str(p), "--format", "csv"]) == 2
