import json

from sumsetlab import cli, tables


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_sumset_command(capsys):
    code, out = run_cli(capsys, "--format", "json", "sumset",
                        "--group", "Z13", "--set", "2,3",
                        "--lambda", "signed", "--terms", "exact:2")
    assert code == 0
    payload = json.loads(out)
    assert payload["sumset"] == [1, 4, 5, 6, 7, 8, 9, 12]
    assert payload["size"] == 8


def test_side_command(capsys):
    code, out = run_cli(capsys, "--format", "json", "side", "v",
                        "--n", "18", "--h", "4", "--g", "2", "--check")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 6
    code, out = run_cli(capsys, "--format", "json", "side", "uhat",
                        "--n", "15", "--m", "6", "--h", "3")
    assert json.loads(out)["value"] == 8


def test_quantity_command(capsys):
    code, out = run_cli(capsys, "--format", "json", "quantity",
                        "--family", "tau", "--variant", "restricted",
                        "--group", "Z3^2", "--terms", "exact:3")
    assert code == 0
    assert json.loads(out)["value"] == 4
    code, out = run_cli(capsys, "--format", "json", "quantity",
                        "--family", "rho", "--variant", "plain",
                        "--group", "Z15", "--m", "7", "--terms", "exact:2",
                        "--witnesses")
    payload = json.loads(out)
    assert payload["value"] == 13
    assert [0, 1, 2, 3, 4, 5, 6] in payload["witnesses"]


def test_construct_command(capsys):
    code, out = run_cli(capsys, "--format", "json", "construct",
                        "--kind", "Bd",
                        "--params", "n=12,m=7,d=3,k1=2,k2=2,g=1,j0=1",
                        "--verify")
    assert code == 0
    payload = json.loads(out)
    assert payload["set"] == [0, 1, 4, 5, 6, 9, 10]


def test_group_parsing_errors(capsys):
    code, _ = run_cli(capsys, "sumset", "--group", "K9", "--set", "1",
                      "--terms", "exact:2")
    assert code == 1
    code, _ = run_cli(capsys, "sumset", "--group", "Z9", "--set", "1",
                      "--terms", "exactly:2")
    assert code == 1


def test_budget_exit_code(capsys):
    code, _ = run_cli(capsys, "--budget", "10", "quantity",
                      "--family", "nu", "--variant", "plain",
                      "--group", "Z20", "--m", "8", "--terms", "exact:2")
    assert code == 2


def test_verify_command(capsys):
    code, out = run_cli(capsys, "verify", "--theorem", "diananda-yap",
                        "--max-n", "8")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[-1]["failures"] == 0
    assert lines[-1]["checked"] >= 7


def test_conjecture_command(capsys):
    code, out = run_cli(capsys, "conjecture", "--id", "mu-upto-2",
                        "--n", "3..10")
    assert code == 0
    summary = json.loads(out.splitlines()[-1])
    assert summary["refuted"] == 0


def test_table_roundtrip(capsys):
    code, out = run_cli(capsys, "table", "--name", "u15")
    assert code == 0
    header, fixture = tables.fixture_rows("u15")
    lines = out.strip().splitlines()
    assert lines[0].split(",") == header
    assert len(lines) == 1 + len(fixture)


def test_table_output_matches_fixture_bytes():
    # the emitted CSV equals the committed fixture byte for byte
    from importlib import resources
    for name in ("v-table", "u15", "uhat15", "sidon-f2"):
        header, rows = tables.compute_table(name)
        text = tables.rows_to_csv(header, rows)
        want = resources.files("sumsetlab").joinpath(
            f"fixtures/{tables.FIXTURE_FILES[name]}.csv").read_text()
        assert text == want, name


def test_fixtures_command(capsys):
    code, out = run_cli(capsys, "fixtures", "--name", "u15", "uhat15")
    assert code == 0
    assert out.count("ok") == 2


def test_verify_table_reports_first_mismatch(monkeypatch):
    # corrupt one computed cell and check the diff localizes it
    original = tables.TABLES["u15"]

    def broken():
        header, rows = original()
        rows = [list(r) for r in rows]
        rows[1][3] = 99
        return header, [tuple(r) for r in rows]

    monkeypatch.setitem(tables.TABLES, "u15", broken)
    diff = tables.verify_table("u15")
    assert diff is not None and diff.row == 2 and diff.column == "m3"
    assert diff.computed == "99"
