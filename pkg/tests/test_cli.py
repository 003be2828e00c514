import json

import pytest

from hkcalc import cli, groebner, lengths
from hkcalc.checks import CheckReport

QUADRIC = """\
char 5
vars x y z
mod x*y - z^2
ideal m = x, y, z
ideal J = y, z
ideal I2 = x^2, y, z
prime P = y, z height 2
param f = x
"""

ONEVAR = "char 5\nvars x\nideal I = x^2 - x^3\n"


@pytest.fixture(autouse=True)
def _restore_runtime_knobs():
    yield
    groebner.SPAIR_CAP = groebner.DEFAULT_SPAIR_CAP
    lengths.LOCAL_N_CAP = lengths.DEFAULT_LOCAL_N_CAP


@pytest.fixture()
def session_file(tmp_path):
    path = tmp_path / "quadric.hk"
    path.write_text(QUADRIC)
    return str(path)


def _run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hk_csv_header_contract(capsys, session_file):
    code, out, _ = _run(
        capsys, ["hk", "--in", session_file, "--ideal", "m", "--emax", "2", "--format", "csv"]
    )
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "e,q,colength,ratio_num,ratio_den"
    assert lines[1] == "1,5,37,37,25"
    assert lines[2] == "2,25,937,937,625"


def test_hk_json(capsys, session_file):
    code, out, _ = _run(capsys, ["hk", "--in", session_file, "--ideal", "m", "--emax", "1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["d"] == 2
    assert payload["rows"][0]["colength"] == 37
    assert payload["rows"][0]["ratio"] == {"num": "37", "den": "25"}
    assert payload["estimate"] == "ABSENT"


def test_dim_colength_mult(capsys, session_file):
    code, out, _ = _run(capsys, ["dim", "--in", session_file, "--ideal", "J"])
    assert code == 0 and json.loads(out)["dimension"] == 1
    code, out, _ = _run(capsys, ["colength", "--in", session_file, "--ideal", "m"])
    assert code == 0 and json.loads(out)["colength"] == 1
    code, out, _ = _run(
        capsys, ["mult", "--in", session_file, "--ideal", "J", "--param", "f"]
    )
    payload = json.loads(out)
    assert code == 0 and payload["multiplicity"] == 1 and payload["certified"] is True


def test_local_colength_infinite(capsys, session_file):
    code, out, _ = _run(capsys, ["local-colength", "--in", session_file, "--ideal", "J"])
    assert code == 0
    assert json.loads(out)["local_colength"] == "INFINITE"


def test_gb_and_order_override(capsys, session_file):
    code, out, _ = _run(capsys, ["gb", "--in", session_file, "--ideal", "J"])
    assert code == 0
    grevlex_basis = json.loads(out)["basis"]
    code, out, _ = _run(
        capsys, ["gb", "--in", session_file, "--ideal", "J", "--order", "lex"]
    )
    assert code == 0
    assert json.loads(out)["basis"]  # same ideal, possibly different basis
    assert "z" in " ".join(grevlex_basis)


def test_ehk_csv(capsys, session_file):
    code, out, _ = _run(
        capsys, ["ehk", "--in", session_file, "--ideal", "m", "--emax", "2", "--format", "csv"]
    )
    assert code == 0
    header, row = out.strip().split("\n")
    assert header.startswith("estimate_num,estimate_den")
    assert row.split(",")[-1] == "two-point-fit"


def test_check_verbs(capsys, session_file):
    code, out, _ = _run(capsys, ["check", "kunz", "--in", session_file, "--q", "5,25"])
    assert code == 0 and json.loads(out)["verdict"] == "PASS"
    code, out, _ = _run(
        capsys,
        ["check", "thm33", "--in", session_file, "--prime", "P", "--param", "f", "--q", "5,25"],
    )
    payload = json.loads(out)
    assert code == 0 and payload["quantities"]["lhs_q25"] == 625
    code, out, _ = _run(
        capsys,
        ["check", "lemma21", "--in", session_file, "--ideal", "I2", "--ideal-j", "m", "--q", "5"],
    )
    assert code == 0 and json.loads(out)["verdict"] == "PASS"
    code, out, _ = _run(capsys, ["check", "rescaling", "--in", session_file, "--e", "1"])
    assert code == 0


def test_check_csv_format(capsys, session_file):
    code, out, _ = _run(
        capsys, ["check", "kunz", "--in", session_file, "--q", "5", "--format", "csv"]
    )
    assert code == 0
    assert out.splitlines()[0] == "check,verdict,key,value"


def test_exit_code_input_errors(capsys, tmp_path, session_file):
    code, _, err = _run(capsys, ["dim", "--in", str(tmp_path / "missing.hk"), "--ideal", "m"])
    assert code == 2 and "cannot read" in err
    bad = tmp_path / "bad.hk"
    bad.write_text("char 4\nvars x\n")
    code, _, err = _run(capsys, ["dim", "--in", str(bad), "--ideal", "m"])
    assert code == 2 and "prime" in err
    code, _, err = _run(capsys, ["dim", "--in", session_file, "--ideal", "missing"])
    assert code == 2 and "unknown ideal" in err
    code, _, _ = _run(capsys, ["dim", "--in", session_file, "--ideal", "m", "--jobs", "0"])
    assert code == 2
    code, _, _ = _run(capsys, ["no-such-verb"])
    assert code == 2


def test_exit_code_inapplicable(capsys, session_file):
    code, out, err = _run(
        capsys, ["check", "flatness", "--in", session_file, "--ideal", "m", "--q", "5"]
    )
    assert code == 2
    assert json.loads(out)["verdict"] == "INAPPLICABLE"
    assert "inapplicable" in err


def test_exit_code_check_failed(capsys, session_file, monkeypatch):
    failing = CheckReport("kunz", {}, {}, "FAIL", "synthetic failure")
    monkeypatch.setattr(cli, "check_kunz", lambda ring, qs: failing)
    code, out, _ = _run(capsys, ["check", "kunz", "--in", session_file, "--q", "5"])
    assert code == 1
    assert json.loads(out)["verdict"] == "FAIL"


def test_exit_code_resource_limit(capsys, tmp_path):
    path = tmp_path / "hard.hk"
    path.write_text("char 5\nvars x y z\nideal I = x^2 + y*z, y^3 - z^3, x*z + 2*y^2\n")
    code, _, err = _run(
        capsys, ["gb", "--in", str(path), "--ideal", "I", "--spair-cap", "2"]
    )
    assert code == 3 and "resource limit" in err


def test_exit_code_certification(capsys, tmp_path):
    path = tmp_path / "onevar.hk"
    path.write_text(ONEVAR)
    code, _, err = _run(
        capsys, ["local-colength", "--in", str(path), "--ideal", "I", "--n-cap", "2"]
    )
    assert code == 4 and "certification failure" in err
    lengths.LOCAL_N_CAP = lengths.DEFAULT_LOCAL_N_CAP
    code, out, _ = _run(capsys, ["local-colength", "--in", str(path), "--ideal", "I"])
    assert code == 0 and json.loads(out)["local_colength"] == 2


def test_corpus_list_and_determinism(capsys):
    code, out, _ = _run(capsys, ["corpus", "list"])
    assert code == 0
    names = [f["fixture"] for f in json.loads(out)["fixtures"]]
    assert "quadric-cone-p5" in names and len(names) == 15
    argv = ["corpus", "run", "--id", "regular-1d-p2", "--seed", "42"]
    code1, out1, _ = _run(capsys, argv)
    code2, out2, _ = _run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2  # byte-for-byte deterministic
    assert json.loads(out1)["failed"] == 0
    code, _, err = _run(capsys, ["corpus", "run", "--id", "nope"])
    assert code == 2
    code, _, err = _run(capsys, ["corpus", "run"])
    assert code == 2
