"""CLI contracts: exit codes, JSON determinism, morphism file I/O."""

import json

import numpy as np
import pytest

from daggerlab.cli import main
from daggerlab.matcat import Morphism


def test_verify_axioms_exit_codes(tmp_path):
    out = tmp_path / "r.json"
    code = main(["verify-axioms", "--field", "C", "--dims", "0,1,2", "--seed", "1",
                 "--trials", "10", "--format", "json", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["passed"] is True
    assert [r["axiom"] for r in payload["reports"]] == ["H1", "H2", "H3", "H4", "H5"]

    code = main(["verify-axioms", "--field", "R", "--dims", "0,1,2", "--seed", "1",
                 "--trials", "10", "--format", "json", "--out", str(out)])
    assert code == 1
    payload = json.loads(out.read_text())
    h5 = [r for r in payload["reports"] if r["axiom"] == "H5"][0]
    assert h5["status"] == "infeasible"
    assert h5["details"]["expected_failure"] is True

    code = main(["verify-axioms", "--field", "H", "--dims", "0,1,2", "--seed", "1",
                 "--trials", "10", "--format", "json", "--out", str(out)])
    assert code == 1


def test_bad_field_is_input_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify-axioms", "--field", "Q"])
    assert exc.value.code == 2


def test_lemmas_deterministic_bytes(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["lemmas", "--field", "C", "--seed", "42", "--trials", "5",
            "--format", "json"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_reconstruct_command(tmp_path):
    out = tmp_path / "rec.json"
    code = main(["reconstruct", "--field", "H", "--seed", "3", "--trials", "10",
                 "--format", "json", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["command"] == "reconstruct"
    assert all(r["status"] == "pass" for r in payload["reports"])


def test_span_command(tmp_path):
    out = tmp_path / "span.json"
    code = main(["span", "--dims", "1,2", "--seed", "0", "--format", "json",
                 "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    by_dim = {r["dim"]: r for r in payload["reports"]}
    assert by_dim[2]["rank"] == 8 and by_dim[2]["status"] == "pass"
    assert by_dim[1]["rank"] == 1


def test_sqrt_command(tmp_path, capsys):
    u = Morphism.from_complex(np.diag([1.0 + 0j, -1.0 + 0j]))
    src = tmp_path / "u.json"
    src.write_text(json.dumps(u.to_json()))
    out = tmp_path / "cert.json"
    assert main(["sqrt", "--input", str(src), "--out", str(out)]) == 0
    cert = json.loads(out.read_text())
    root = Morphism.from_json(cert["root"])
    assert np.allclose(root.complex_view(), np.diag([1, 1j]), atol=1e-12)
    assert cert["residual"] <= 1e-12
    assert len(cert["interpolation_data"]) == 2


def test_sqrt_malformed_json(tmp_path, capsys):
    src = tmp_path / "bad.json"
    src.write_text("{ not json")
    assert main(["sqrt", "--input", str(src)]) == 2
    assert "line" in capsys.readouterr().err


def test_sqrt_non_unitary_input(tmp_path, capsys):
    m = Morphism.from_complex([[2.0 + 0j]])
    src = tmp_path / "m.json"
    src.write_text(json.dumps(m.to_json()))
    assert main(["sqrt", "--input", str(src)]) == 2


def test_seed_env_fallback(tmp_path, monkeypatch):
    monkeypatch.setenv("DAGGERLAB_SEED", "42")
    a = tmp_path / "env.json"
    assert main(["lemmas", "--field", "C", "--trials", "5", "--format", "json",
                 "--out", str(a)]) == 0
    b = tmp_path / "explicit.json"
    assert main(["lemmas", "--field", "C", "--seed", "42", "--trials", "5",
                 "--format", "json", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_text_format_streams_lines(capsys):
    code = main(["span", "--dims", "2", "--seed", "0"])
    assert code == 0
    out = capsys.readouterr().out
    assert "rank=8/8" in out
