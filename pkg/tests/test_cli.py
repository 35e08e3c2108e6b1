import json

import pytest

from mzvkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_ztrunc_text(capsys):
    code, out = run(capsys, "compute", "ztrunc", "--N", "4", "--index", "1,1", "--format", "text")
    assert code == 0 and out.out.strip() == "35/24"


def test_zstar_json(capsys):
    code, out = run(capsys, "compute", "zstar", "--N", "2", "--index", "2,1")
    assert code == 0 and json.loads(out.out)["value"] == "11/8"


def test_series_r2_one(capsys):
    code, out = run(capsys, "compute", "series", "--l1", "0", "--l2", "1", "--r1", "2", "--r2", "1",
                    "--digits", "12")
    doc = json.loads(out.out)["value"]
    assert code == 0 and abs(float(doc["value"]) - 0.25) < 1e-12 and float(doc["radius"]) < 1e-10


def test_xi_value(capsys):
    code, out = run(capsys, "compute", "xi", "--index", "1", "--s", "1", "--digits", "12")
    assert code == 0 and json.loads(out.out)["value"]["value"].startswith("1.644934066848")


def test_interp_with_t(capsys):
    code, out = run(capsys, "compute", "interp", "--N", "2", "--k", "2", "--t", "1")
    assert code == 0 and json.loads(out.out)["value"] == "7/4"


def test_closed_and_reduce(capsys):
    code, out = run(capsys, "compute", "closed", "--l1", "1", "--l2", "0", "--r1", "1", "--r2", "2")
    doc = json.loads(out.out)
    assert code == 0 and set(doc) >= {"poly", "numeric", "reduced"}
    code, out = run(capsys, "compute", "reduce", "--index", "3,1", "--star", "--format", "text")
    assert code == 0 and "5/4*zeta(4)" in out.out


def test_missing_flag_is_usage_error(capsys):
    code, out = run(capsys, "compute", "ztrunc", "--N", "3")
    assert code == 2 and "--index" in out.err


def test_bad_subcommand_is_usage_error(capsys):
    assert run(capsys, "compute", "nope")[0] == 2


def test_verify_exit_codes(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, _ = run(capsys, "verify", "lem10-duality", "--grid", "N<=15,r<=2,a<=3,b<=3", "--out", str(path))
    assert code == 0 and json.loads(path.read_text())["cases_failed"] == 0
    assert run(capsys, "verify", "no-such-id")[0] == 2
    assert run(capsys, "verify", "stuffle", "--grid", "bogus")[0] == 2


def test_verify_failure_exit_one(capsys, monkeypatch):
    from mzvkit.identity_suite import CATALOGUE
    monkeypatch.setattr(CATALOGUE["lem7-findiff"], "check", lambda c: (False, 0, 1))
    assert run(capsys, "verify", "lem7-findiff")[0] == 1


def test_precision_failure_exit_three(capsys, monkeypatch):
    import mzvkit.cli as cli
    from mzvkit.numeric import PrecisionError

    def boom(*a, **k):
        raise PrecisionError("budget exhausted")
    monkeypatch.setattr(cli, "series_S_direct", boom)
    code, out = run(capsys, "compute", "series", "--l1", "0", "--l2", "0", "--r1", "1", "--r2", "2")
    assert code == 3 and "precision" in out.err


def test_list(capsys):
    code, out = run(capsys, "list")
    assert code == 0 and "thm2-trunc" in out.out and "hoffman-ihara-half" in out.out
    code, out = run(capsys, "list", "--format", "json")
    assert len(json.loads(out.out)) >= 13
