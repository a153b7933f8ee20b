import json

import pytest

from shufflemzv import identities as ids
from shufflemzv.algebra import DEFAULT_CAP, get_cap
from shufflemzv.cli import UsageError, main, parse_ranges


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_ranges():
    assert parse_ranges(["m=1..4", "n=3"]) == {"m": range(1, 5), "n": range(3, 4)}
    for bad in (["m"], ["m=4..1"], ["m=a..b"], ["M=1"]):
        with pytest.raises(UsageError):
            parse_ranges(bad)


@pytest.mark.parametrize("engine", ["brute", "pivot", "blocks"])
def test_shuffle_golden(capsys, engine):
    code, out, _ = run(capsys, "shuffle", "01", "01", "--engine", engine)
    assert code == 0
    assert out == "4\t0011\n2\t0101\n"


def test_shuffle_json(capsys):
    code, out, _ = run(capsys, "shuffle", "0", "01", "--json")
    assert code == 0
    assert json.loads(out) == [["001", 2], ["010", 1]]


def test_shuffle_empty_word(capsys):
    code, out, _ = run(capsys, "shuffle", "", "10")
    assert (code, out) == (0, "1\t10\n")


def test_table_golden(capsys):
    code, out, _ = run(capsys, "table", "euler", "1", "1")
    assert (code, out) == (0, "2\t2,2\n4\t3,1\n")
    code, out, _ = run(capsys, "table", "thm11", "1", "1", "1", "1", "--json")
    assert json.loads(out) == [["2,2", 2], ["3,1", 4]]


def test_table_trace_sums_to_table(capsys):
    _, plain, _ = run(capsys, "table", "thm13", "1", "1", "1", "1", "1", "1")
    _, traced, _ = run(capsys, "table", "thm13", "1", "1", "1", "1", "1", "1", "--trace")
    totals: dict = {}
    for line in traced.splitlines():
        coeff, key, branch, _ = line.split("\t")
        totals[key] = totals.get(key, 0) + int(coeff)
        assert branch
    expected = {key: int(c) for c, key in (l.split("\t") for l in plain.splitlines())}
    assert {k: v for k, v in totals.items() if v} == expected


def test_table_wrong_arity(capsys):
    code, _, err = run(capsys, "table", "euler", "1")
    assert code == 2 and "takes 2 parameters" in err


def test_verify_json_lines(capsys):
    code, out, _ = run(capsys, "verify", "thm11", "m=1..2", "n=1", "j=1", "k=1..2")
    assert code == 0
    reports = [json.loads(l) for l in out.splitlines()]
    assert [r["params"] for r in reports] == [
        {"m": 1, "n": 1, "j": 1, "k": 1}, {"m": 1, "n": 1, "j": 1, "k": 2},
        {"m": 2, "n": 1, "j": 1, "k": 1}, {"m": 2, "n": 1, "j": 1, "k": 2},
    ]
    assert all(r["status"] == "pass" and "elapsed" not in r for r in reports)


def test_verify_is_deterministic(capsys):
    argv = ["verify", "thm13", "m=1..2", "n=1", "j=1..2", "k=1", "s=1", "t=1..2"]
    first = run(capsys, *argv)
    assert first == run(capsys, *argv)


def test_verify_timing(capsys):
    _, out, _ = run(capsys, "verify", "e9", "m=1", "n=1", "--timing")
    assert json.loads(out)["elapsed"] >= 0


def test_verify_tsv(capsys):
    code, out, _ = run(capsys, "verify", "e24", "m=1..2", "k=0", "n=0", "--tsv")
    assert (code, out) == (0, "e24\tm=1,k=0,n=0\tpass\ne24\tm=2,k=0,n=0\tpass\n")


@pytest.mark.parametrize("identity, ranges", [
    ("lemma21", ["la=1..2", "lb=0..2"]),
    ("thm22", ["la=0..2", "lb=1..2"]),
    ("e23", ["m=1..2", "n=1", "j=1", "k=1..2"]),
    ("euler", ["m=1..3", "n=1..3"]),
    ("e22", ["m=1", "n=1..2", "k=1", "s=1", "t=1"]),
])
def test_verify_identities_pass(capsys, identity, ranges):
    code, out, _ = run(capsys, "verify", identity, *ranges)
    assert code == 0
    assert {json.loads(l)["status"] for l in out.splitlines()} == {"pass"}


def test_verify_reports_failures(capsys, monkeypatch):
    real = ids.theorem_1_1_words

    def broken(m, n, j, k):
        out = real(m, n, j, k)
        return out + out if (m, n) == (2, 1) else out

    monkeypatch.setattr(ids, "theorem_1_1_words", broken)
    code, out, _ = run(capsys, "verify", "e23", "m=1..2", "n=1", "j=1", "k=1")
    assert code == 1
    first, second = (json.loads(l) for l in out.splitlines())
    assert first["status"] == "pass"
    assert second["status"] == "fail"
    assert all(exp * 2 == act for _, exp, act in second["diff"])


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "nope", "m=1")[0] == 2
    assert run(capsys, "verify", "euler", "m=1")[0] == 2
    assert run(capsys, "verify", "euler", "m=0..1", "n=1")[0] == 2
    assert run(capsys, "verify", "euler", "m=1", "n=1", "q=1")[0] == 2


def test_cap_refusal(capsys):
    code, out, err = run(capsys, "shuffle", "0" * 10, "1" * 10, "--cap", "1000")
    assert code == 3 and out == "" and "cap" in err.lower()
    assert get_cap() == DEFAULT_CAP
    code, out, _ = run(capsys, "verify", "euler", "m=1..8", "n=8", "--cap", "1000")
    statuses = [json.loads(l)["status"] for l in out.splitlines()]
    assert code == 3 and "skipped-too-large" in statuses and "pass" in statuses


def test_parse_errors(capsys):
    assert run(capsys, "shuffle", "012", "01")[0] == 2
    assert run(capsys, "zeta", "2,x")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["shuffle", "01"])
    assert exc.value.code == 2


def test_zeta(capsys):
    code, out, _ = run(capsys, "zeta", "2", "--tol", "1e-8")
    fields = dict(l.split("\t") for l in out.splitlines())
    assert code == 0
    assert abs(float(fields["value"]) - 1.6449340668482264) <= float(fields["error_bound"]) <= 1e-8
    code, out, _ = run(capsys, "zeta", "3,1", "--json")
    assert json.loads(out)["composition"] == "3,1"


def test_zeta_refusals(capsys):
    code, _, err = run(capsys, "zeta", "1,2")
    assert code == 2 and "non-admissible" in err
    assert run(capsys, "zeta", "2", "--tol", "1e-15")[0] == 2


def test_check_hom(capsys):
    code, out, _ = run(capsys, "check-hom", "01", "001", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"
    assert rep["discrepancy"] <= rep["bound"] + 1e-4
    assert run(capsys, "check-hom", "11", "01")[0] == 2
