import io
import json

import pytest

from mahonian.cli import main
from mahonian.checks import run_check


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_enumerate_text_and_csv():
    code, text = run("enumerate", "--n", "2", "--k", "0")
    assert code == 0 and text == "1 2\n2 1\n"
    code, text = run("--format", "csv", "enumerate", "--n", "1", "--k", "1")
    assert text == "index,word\n0,*\n"


def test_enumerate_digraph_formats():
    code, text = run("enumerate", "--n", "2", "--k", "1", "--as", "digraph", "--format", "json")
    rows = [json.loads(line) for line in text.splitlines()]
    assert code == 0 and len(rows) == 4 and all(r["n"] == 2 for r in rows)
    code, text = run("enumerate", "--n", "1", "--k", "0", "--as", "digraph", "--format", "dot")
    assert '1 [label="1:fp"];' in text
    assert run("enumerate", "--n", "1", "--k", "0", "--format", "dot")[0] == 2


def test_stats_word():
    code, text = run("stats", "--word", "3 2 5 * 1 8 6 *", "--format", "json")
    data = json.loads(text)
    assert code == 0
    assert (data["inv"], data["maj"], data["des_set"]) == (12, 15, [1, 4, 6])
    assert (data["pk"], data["cyc"], data["paths"]) == (4, 2, 2)


def test_stats_digraph_and_multiset():
    code, text = run("stats", "--digraph", '{"n":1,"succ":{"1":1}}')
    assert code == 0 and "fp=1" in text
    code, text = run("stats", "--multiset", "2 1 2 6 5 4 4 3", "--format", "json")
    assert json.loads(text)["psi"] == "2 6 5 4 4 1 2 3"


@pytest.mark.parametrize("argv", [
    ["stats", "--word", "1 1"],
    ["stats", "--word", "1 x"],
    ["stats", "--digraph", "{bad"],
    ["stats"],
    ["poly", "distribution", "--n", "3"],
    ["poly", "distribution", "--n", "2", "--k", "3"],
    ["poly", "mu", "--N", "3", "--preset", "nope"],
    ["verify", "bogus"],
    ["verify"],
    ["--jobs", "0", "verify", "table1"],
    [],
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_ceiling(monkeypatch):
    monkeypatch.setenv("MAHONIAN_MAX_N", "4")
    assert run("enumerate", "--n", "5", "--k", "0")[0] == 2
    assert run("verify", "thm2.1", "--n-max", "5")[0] == 2
    assert run("enumerate", "--n", "4", "--k", "4")[0] == 0


def test_poly_outputs():
    code, text = run("poly", "distribution", "--n", "3", "--k", "1", "--stat", "tilde_inv_filled",
                     "--holes", "2")
    assert code == 0 and text == "b^2+2bq+q^2+bq^2+q^3\n"
    code, text = run("poly", "hrw", "--n", "3", "--k", "0")
    assert "equal: True" in text
    code, text = run("poly", "mu", "--preset", "euler", "--N", "2", "--format", "json")
    assert json.loads(text)["entries"][2] == ["2", "4", "1"]
    code, text = run("poly", "ld", "--n", "2", "--k", "1", "--format", "csv")
    assert text.splitlines()[0] == "coef,a,b,u3,u4"
    assert run("poly", "wilson", "--alphabet", "1,1")[1] == "lhs: 1+q+z\nrhs: 1+q+z\nequal: True\n"


def test_verify_pass_and_json():
    code, text = run("verify", "table1", "thm2.1", "--n-max", "3")
    assert code == 0 and text.endswith("2/2 passed\n")
    code, text = run("--format", "json", "verify", "table1")
    data = json.loads(text)
    assert data["status"] == "pass" and "seconds" not in data
    code, text = run("verify", "table1", "--timing", "--format", "json")
    assert "seconds" in json.loads(text)


def test_verify_failure_exit_1(monkeypatch):
    from mahonian import verify

    def broken(N, jobs):
        return run_check("table1", lambda expect: expect(1, 2, n=N))

    monkeypatch.setitem(verify.TASKS, "table1", verify.Task("table1", 3, "x", broken))
    code, text = run("verify", "table1")
    assert code == 1 and "FAIL" in text and "counterexample" in text


def test_determinism_across_jobs():
    a = run("--format", "json", "verify", "thm2.1", "thm2.2", "--n-max", "4")
    b = run("--format", "json", "--jobs", "3", "verify", "thm2.1", "thm2.2", "--n-max", "4")
    c = run("verify", "thm2.1", "thm2.2", "--n-max", "4", "--format", "json", "--jobs", "2")
    assert a == b == c
    assert run("poly", "ld", "--n", "4", "--k", "1") == run("--jobs", "2", "poly", "ld", "--n", "4", "--k", "1")


def test_seed_accepted_and_ignored():
    assert run("--seed", "7", "enumerate", "--n", "2", "--k", "0") == run("enumerate", "--n", "2", "--k", "0")
