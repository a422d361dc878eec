import json

import pytest

from taumt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_tau_stream(capsys):
    code, out = run(capsys, "tau", "--n", "5")
    assert code == 0
    assert out.splitlines() == ["1", "-24", "252", "-1472", "4830"]


def test_tau_with_modulus(capsys):
    code, out = run(capsys, "tau", "--n", "3", "--mod", "7")
    assert code == 0
    assert out.splitlines() == ["1", "4", "0"]


def test_tau_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["tau", "--n", "0"])
    assert err.value.code == 2


def test_unknown_subcommand_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_mt_eis_level1(capsys):
    code, out = run(capsys, "mt", "--source", "eis", "--p", "5", "--n", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["lambda"] == 4
    assert payload["mu"] == 0
    assert payload["coeffs_group_basis"] == [3, 3, 3, 3, 3]
    assert payload["precision_ok"] is True
    assert payload["unit"] is None


def test_mt_phi9(capsys):
    code, out = run(capsys, "mt", "--source", "phi9", "--p", "3", "--n", "1", "--m", "2")
    assert code == 0
    payload = json.loads(out)
    assert all(c % 3 == 0 for c in payload["coeffs_group_basis"])
    assert payload["mu"] == 1 and payload["lambda"] == 1


def test_verify_rejects_unsupported_prime():
    for argv in (["verify", "B", "--p", "11"],
                 ["verify", "congmodsymb", "--p", "3"],
                 ["verify", "A", "--bound", "1"]):
        with pytest.raises(SystemExit) as err:
            main(argv)
        assert err.value.code == 2


def test_mt_rejects_unsupported_prime():
    with pytest.raises(SystemExit) as err:
        main(["mt", "--source", "delta", "--p", "2", "--n", "1"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["mt", "--source", "phi9", "--p", "5", "--n", "1"])
    assert err.value.code == 2


def test_mt_csv_format(capsys):
    code, out = run(capsys, "mt", "--source", "eis", "--p", "5", "--n", "1", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,group_basis,T_basis"
    assert lines[1] == "0,3,0"
    assert lines[-1] == "lambda,4,"


def test_verify_serre_small(capsys):
    code, out = run(capsys, "verify", "serre", "--bound", "200")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 3
    assert all(r["pass"] for r in records)


def test_verify_B_reports_lambda(capsys):
    code, out = run(capsys, "verify", "B", "--p", "7", "--nmax", "3")
    assert code == 0
    records = json.loads(out)
    assert [r["computed"][1] for r in records] == [6, 48, 342]


def test_verify_congmodsymb_deterministic(capsys):
    _, first = run(capsys, "verify", "congmodsymb", "--samples", "50", "--seed", "3")
    _, second = run(capsys, "verify", "congmodsymb", "--samples", "50", "--seed", "3")
    assert first == second
    assert all(r["pass"] for r in json.loads(first))


def test_verify_appendix_csv_mirrors_the_table(capsys):
    import csv as csvmod
    import io as iomod
    from taumt import fixtures

    code, out = run(capsys, "verify", "appendix", "--format", "csv")
    assert code == 0
    rows = list(csvmod.reader(iomod.StringIO(out)))
    assert rows[0] == ["divisor", "alpha", "phi9"]
    fixture_rows = fixtures.load_table1()
    assert len(rows) - 1 == len(fixture_rows) == 55
    for (div, a, ph), (r, s, fa, fp) in zip(rows[1:], fixture_rows):
        assert div == f"{{{r}}} - {{{s}}}"
        assert int(a) == fa and int(ph) == fp


def test_verify_is_deterministic(capsys):
    _, first = run(capsys, "verify", "serre", "--bound", "100", "--format", "csv")
    _, second = run(capsys, "verify", "serre", "--bound", "100", "--format", "csv")
    assert first == second


def test_verify_failure_exits_1(capsys, tmp_path, monkeypatch):
    # a corrupted fixture table must drive the appendix check to exit 1
    import shutil
    from taumt import fixtures as fixmod
    from importlib import resources

    src = resources.files("taumt").joinpath("fixtures")
    for name in ("appendix_table1.csv", "phi9_orbits.csv"):
        shutil.copy(str(src.joinpath(name)), tmp_path / name)
    rows = (tmp_path / "appendix_table1.csv").read_text().splitlines()
    rows[-1] = rows[-1].rsplit(",", 1)[0] + ",4"  # phi9 column of the last row
    (tmp_path / "appendix_table1.csv").write_text("\n".join(rows) + "\n")
    monkeypatch.setenv(fixmod.ENV_VAR, str(tmp_path))
    code = main(["verify", "appendix"])
    assert code == 1


def test_out_file(capsys, tmp_path):
    target = tmp_path / "tau.txt"
    code, out = run(capsys, "tau", "--n", "2", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "1\n-24\n"
