"""Command line behaviour: output formats, exit codes, determinism."""

from __future__ import annotations

import json

import pytest

from vermaops.cli import main
from vermaops.polynomial import parse_polynomial


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_singular_symbolic_w2(capsys):
    code, out, _ = run(capsys, "singular", "--p", "2", "--q", "3",
                       "--lambda", "symbolic", "--K", "2")
    assert code == 0
    assert out.strip() == "1*xi2^2 - 1*xi1^2 - 2*L*xi3^2"


def test_singular_spinor(capsys):
    code, out, _ = run(capsys, "singular", "--p", "2", "--q", "3",
                       "--lambda", "1/5", "--K", "1")
    assert code == 0 and out.strip() == "1*xi3"


def test_gegenbauer_json_round_trip(capsys):
    code, out, _ = run(capsys, "gegenbauer", "--l", "3", "--variant", "Ctilde",
                       "--emit", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["l"] == 3 and doc["variant"] == "Ctilde"
    for text in doc["coefficients"].values():
        parse_polynomial(text)  # canonical form parses back


def test_solve_json_schema(capsys):
    code, out, _ = run(capsys, "solve", "--p", "2", "--q", "3",
                       "--lambda", "0", "--degree", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 3
    assert set(doc["kinds"]) == {"gegenbauer", "harmonic"}
    for text in doc["basis"]:
        parse_polynomial(text)


def test_solve_spinor_json(capsys):
    code, out, _ = run(capsys, "solve", "--p", "2", "--q", "3",
                       "--lambda", "1/5", "--degree", "0", "--spinor")
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 8
    assert doc["even_block_dim"] == 4 and doc["odd_block_dim"] == 4


def test_branch_partner_pair(capsys):
    # lam = 0 at n = 3 is the first even exceptional parameter
    code, out, _ = run(capsys, "branch", "--p", "2", "--q", "3",
                       "--lambda", "0", "--bmax", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "even_exceptional_with_extensions"
    partner = {s["b"]: s["partner"] for s in doc["summands"]}
    assert partner[0] == 2 and partner[2] == 0 and partner[1] is None


def test_branch_negative_lambda_parses(capsys):
    code, out, _ = run(capsys, "branch", "--p", "2", "--q", "3",
                       "--lambda", "-1/2", "--bmax", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "odd_exceptional_direct_sum"


def test_juhl_csv(capsys):
    code, out, _ = run(capsys, "juhl", "--p", "2", "--q", "3", "--K", "2",
                       "--lambda", "symbolic", "--emit", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "j,boxprime_power,dn_power,clifford_factor,coefficient"
    assert len(lines) == 3


def test_juhl_latex_and_json(capsys):
    code, out, _ = run(capsys, "juhl", "--p", "2", "--q", "3", "--K", "1",
                       "--lambda", "1/3", "--spinor", "--emit", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "spinor_odd"
    code, out, _ = run(capsys, "juhl", "--p", "2", "--q", "3", "--K", "2",
                       "--lambda", "1/3", "--emit", "latex")
    assert code == 0 and "\\Box'" in out


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "branch-structure")
    assert code == 0
    assert "PASS" in out


def test_verify_unknown_suite_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--suite", "no-such-suite")
    assert code == 2
    assert "unknown suite" in err


def test_bad_rational_usage_error(capsys):
    code, _, err = run(capsys, "singular", "--p", "2", "--q", "3",
                       "--lambda", "bogus", "--K", "2")
    assert code == 2


def test_small_n_rejected(capsys):
    code, _, err = run(capsys, "singular", "--p", "1", "--q", "3",
                       "--lambda", "0", "--K", "1")
    assert code == 2


def test_suites_listing(capsys):
    code, out, _ = run(capsys, "suites")
    names = out.split()
    assert "gegenbauer-identities" in names
    assert "spinor-annihilation" in names
    assert "intertwining" in names


def test_output_determinism(capsys):
    args = ["branch", "--p", "2", "--q", "4", "--lambda", "1/2", "--bmax", "8"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
