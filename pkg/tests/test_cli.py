import json

from contactloci import cli
from contactloci.cli import main
from contactloci.groups import GradedGroup
from contactloci.oracle import JetCountReport
from contactloci.resolution import ResolutionChain


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_resolve_text(capsys):
    code, out, _ = run(capsys, "resolve", "--n", "3", "--d", "2", "--m", "4")
    assert code == 0
    assert "first_exceptional" in out and "strict_transform" in out
    assert out.count("intermediate") == 2


def test_resolve_json_round_trips(capsys):
    code, out, _ = run(capsys, "resolve", "--n", "3", "--d", "2", "--m", "4",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    chain = ResolutionChain.from_doc(doc)
    assert len(chain) == 4
    assert [row["i"] for row in doc["m_divisors"]] == [-2, -1, 0]


def test_validation_exit_code(capsys):
    code, _, err = run(capsys, "resolve", "--n", "1", "--d", "2", "--m", "4")
    assert code == 2
    assert "n must be >= 2" in err


def test_unknown_flags_exit_code(capsys):
    assert main(["resolve", "--bogus"]) == 2


def test_cohomology_text(capsys):
    code, out, _ = run(capsys, "cohomology", "--n", "3", "--d", "5", "--m", "5")
    assert code == 0
    assert "degree 26: Z^64" in out
    assert "degree 28: Z" in out


def test_cohomology_empty_locus_note(capsys):
    code, out, _ = run(capsys, "cohomology", "--n", "3", "--d", "5", "--m", "4")
    assert code == 0
    assert "m < d" in out


def test_cohomology_rejects_degree_one(capsys):
    code, _, err = run(capsys, "cohomology", "--n", "3", "--d", "1", "--m", "3")
    assert code == 2
    assert "d >= 2" in err


def test_cohomology_json_total_parses(capsys):
    code, out, _ = run(capsys, "cohomology", "--n", "3", "--d", "2", "--m", "4",
                       "--format", "json")
    doc = json.loads(out)
    total = GradedGroup.from_doc(doc["total"])
    assert total.at(14).rank == 1
    assert doc["euler"] == 2


def test_floer_determined(capsys):
    code, out, _ = run(capsys, "floer", "--n", "3", "--d", "5", "--m", "5")
    assert code == 0
    assert "degree 4: Z^64" in out


def test_floer_not_determined(capsys):
    code, out, _ = run(capsys, "floer", "--n", "3", "--d", "3", "--m", "9")
    assert code == 0
    assert "not determined" in out


def test_nash_text(capsys):
    code, out, _ = run(capsys, "nash", "--n", "3", "--d", "2", "--m", "4")
    assert code == 0
    assert "counts: dlt=0, contact=1, essential=2" in out


def test_euler_match(capsys):
    code, out, _ = run(capsys, "euler", "--n", "4", "--d", "3", "--m", "6")
    assert code == 0
    assert "-15" in out and "match: yes" in out


def test_scatter_csv(capsys):
    code, out, _ = run(capsys, "scatter", "--nmax", "10", "--dmax", "10",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,d,class"
    assert len(lines) == 1 + 8 * 9
    rows = {tuple(line.split(",")[:2]): line.split(",")[2] for line in lines[1:]}
    assert rows[("3", "3")] == "pink"
    assert rows[("3", "5")] == "blue"
    for (n, d), color in rows.items():
        if int(d) > 2 * int(n) - 2:
            assert color == "blue"


def test_scatter_svg(capsys):
    code, out, _ = run(capsys, "scatter", "--nmax", "6", "--dmax", "6",
                       "--format", "svg")
    assert code == 0
    assert out.startswith("<svg")
    assert out.count("<rect") >= 4 * 5
    assert cli.SCATTER_COLORS["pink"] in out


def test_scatter_bounds(capsys):
    code, _, err = run(capsys, "scatter", "--nmax", "300", "--dmax", "10")
    assert code == 2
    assert "nmax" in err


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--f", "x0^2+x1^2+x2^2", "--m", "3",
                       "--primes", "3,5")
    assert code == 0
    assert "all counts match" in out


def test_verify_accepts_json_polynomial(capsys):
    doc = json.dumps({"n": 3, "terms": [
        {"exps": [2, 0, 0], "coeff": 1},
        {"exps": [0, 2, 0], "coeff": 1},
        {"exps": [0, 0, 2], "coeff": 1},
    ]})
    code, out, _ = run(capsys, "verify", "--f", doc, "--m", "2", "--primes", "3")
    assert code == 0
    assert "all counts match" in out


def test_verify_budget_exit_code(capsys):
    code, _, err = run(capsys, "verify", "--f", "x0^2+x1^2+x2^2", "--m", "4",
                       "--primes", "7", "--budget", "10")
    assert code == 3
    assert "budget" in err


def test_verify_bad_poly_exit_code(capsys):
    code, _, err = run(capsys, "verify", "--f", "x0 + nonsense", "--m", "2",
                       "--primes", "3")
    assert code == 2


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    # force a count mismatch to exercise the failure path
    def fake_count(poly, m, p, budget=None):
        return JetCountReport(prime=p, m=m, total_count=1,
                              by_order=((1, 1),), cone_count=0, milnor_count=0,
                              predicted_by_order=((1, 2),))

    monkeypatch.setattr(cli, "count_contact_jets", fake_count)
    code, out, _ = run(capsys, "verify", "--f", "x0^2+x1^2+x2^2", "--m", "2",
                       "--primes", "3")
    assert code == 1
    assert "MISMATCH" in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "chain.json"
    code, out, _ = run(capsys, "resolve", "--n", "3", "--d", "2", "--m", "4",
                       "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["m"] == 4


def test_deterministic_output(capsys):
    first = run(capsys, "cohomology", "--n", "3", "--d", "4", "--m", "8",
                "--format", "json")
    second = run(capsys, "cohomology", "--n", "3", "--d", "4", "--m", "8",
                 "--format", "json")
    assert first == second
    a = run(capsys, "scatter", "--nmax", "12", "--dmax", "12", "--format", "csv")
    b = run(capsys, "scatter", "--nmax", "12", "--dmax", "12", "--format", "csv")
    assert a == b
