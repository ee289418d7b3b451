from __future__ import annotations

import json

import pytest

from unimodcat.cli import main
from unimodcat.exactmath import Matrix
from unimodcat.hopf import HopfData
from unimodcat.serialize import dumps

from .conftest import a0_c, a1_c, group_c, taft_c, trivial_c


def run(capsys, *argv) -> tuple[int, str, str]:
    rc = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str):
        p = tmp_path / name
        p.write_text(text)
        return p

    return _write


def test_verify_ok(capsys, write):
    p = write("taft3.json", dumps(taft_c(3)))
    rc, out, _ = run(capsys, "verify", p)
    assert rc == 0 and "all axioms hold" in out


def test_verify_broken_antipode_exits_3(capsys, write):
    H = taft_c(3)
    flip = Matrix.diag([-1 if i == 3 else 1 for i in range(9)], 3)
    bad = HopfData(H.algebra, H.comult, H.counit, H.antipode @ flip, validate=False)
    p = write("bad.json", dumps(bad))
    rc, out, err = run(capsys, "verify", p)
    assert rc == 3
    assert "[FAIL]" in out + err and "antipode" in out + err


def test_truncated_file_exits_2(capsys, write):
    text = dumps(taft_c(2))
    p = write("cut.json", text[: len(text) // 3])
    for cmd in ("verify", "invariants", "decide"):
        rc, _, err = run(capsys, cmd, p)
        assert rc == 2 and "line" in err


def test_missing_file_exits_2(capsys, tmp_path):
    rc, _, _ = run(capsys, "verify", tmp_path / "nope.json")
    assert rc == 2


def test_bad_arguments_exit_2(capsys):
    rc, _, _ = run(capsys, "frobnicate")
    assert rc == 2
    rc, _, _ = run(capsys, "selftest", "--seed", "-4")
    assert rc == 2


def test_invariants(capsys, write):
    rc, out, _ = run(capsys, "invariants", write("t2.json", dumps(taft_c(2))))
    assert rc == 0
    assert "distinguished character: g -> -1, x -> 0" in out
    assert "distinguished grouplike: g\n" in out and "unimodular(H): false" in out
    rc, out, _ = run(capsys, "invariants", write("z3.json", dumps(group_c("Z3"))))
    assert "unimodular(H): true" in out and "unimodular(H*): true" in out
    rc, out, _ = run(capsys, "invariants", write("t4.json", dumps(taft_c(4))), "--json")
    doc = json.loads(out)
    assert doc["dim"] == 16 and doc["s4_identity"] is True
    assert "distinguished character: g -> z, x -> 0" in run(capsys, "invariants", write("t4b.json", dumps(taft_c(4))))[1]


def test_decide_examples(capsys, write):
    rc, out, _ = run(capsys, "decide", write("z2.json", dumps(group_c("Z2"), trivial_c("group", "Z2"))))
    assert rc == 0 and "verdict: yes" in out and "witness: 1" in out
    rc, out, _ = run(capsys, "decide", write("a1.json", dumps(taft_c(2), a1_c(2, 1, 0))))
    assert rc == 0 and "verdict: no" in out and "dim W: 0" in out
    rc, out, _ = run(capsys, "decide", write("a0.json", dumps(taft_c(3), a0_c(3, 3))), "--json")
    doc = json.loads(out)
    assert doc["verdict"] == "no" and doc["witness"] is None


def test_decide_form_options(capsys, write):
    p = write("a1.json", dumps(taft_c(2), a1_c(2, 2, 1)))
    rc, out, _ = run(capsys, "decide", p, "--form", "standard", "--json")
    doc = json.loads(out)
    assert rc == 0 and doc["frobenius_form"]["name"] == "standard" and doc["verdict"] == "no"
    rc, out, _ = run(capsys, "decide", p, "--form", "grouplike-cointegral", "--json")
    doc = json.loads(out)
    assert rc == 0 and doc["path"] == "grouplike" and doc["verdict"] == "no"
    rc, _, _ = run(capsys, "decide", p, "--form", "nonexistent")
    assert rc == 2


def test_decide_without_comodule_block(capsys, write):
    rc, _, err = run(capsys, "decide", write("h.json", dumps(taft_c(2))))
    assert rc == 2 and "comodule" in err


@pytest.mark.parametrize("N,xis,rows", [(2, "0,1", 6), (3, "0,1,z", 8), (4, "0,1", 9)])
def test_survey(capsys, N, xis, rows):
    rc, out, _ = run(capsys, "survey-taft", "--n", N, "--xi", xis)
    assert rc == 0
    lines = [ln for ln in out.splitlines() if ln.startswith("A")]
    assert len(lines) == rows and all(" no " in ln for ln in lines)
    assert out.rstrip().endswith("all negative")
    rc, out, _ = run(capsys, "survey-taft", "--n", N, "--xi", xis, "--json")
    doc = json.loads(out)
    assert doc["all_negative"] and len(doc["rows"]) == rows


def test_survey_out_of_range(capsys):
    for N in (1, 7):
        rc, _, _ = run(capsys, "survey-taft", "--n", N)
        assert rc == 2
    rc, _, _ = run(capsys, "survey-taft", "--n", 2, "--xi", "0,q")
    assert rc == 2


def test_family_round_trip(capsys, tmp_path):
    p = tmp_path / "a1.json"
    rc, _, _ = run(capsys, "family", "a1", "--n", 4, "--d", 2, "--xi", "1-z", "--emit", p)
    assert rc == 0
    rc, out, _ = run(capsys, "verify", p)
    assert rc == 0
    rc, out, _ = run(capsys, "family", "taft", "--n", 3)
    assert rc == 0 and out == dumps(taft_c(3))
    rc, _, _ = run(capsys, "family", "a0", "--n", 4, "--d", 3)
    assert rc == 2


def test_selftest_passes_and_is_deterministic(capsys):
    rc, first, _ = run(capsys, "selftest")
    assert rc == 0
    lines = first.splitlines()
    assert len([ln for ln in lines if ln.startswith("[PASS]")]) >= 40
    assert not any(ln.startswith("[FAIL]") for ln in lines)
    rc, second, _ = run(capsys, "selftest")
    assert second == first


def test_selftest_detects_corrupted_im(capsys):
    rc, out, _ = run(capsys, "selftest", "--corrupt-im", "--json")
    doc = json.loads(out)
    assert rc == 1 and doc["failed"] > 0
    assert all("Im" in c["name"] or "unimodular" in c["name"] or c["passed"] for c in doc["checks"])


def test_decide_json_is_deterministic(capsys, write):
    p = write("klein.json", dumps(group_c("klein"), trivial_c("group", "klein")))
    outs = {run(capsys, "decide", p, "--json", "--seed", 7)[1] for _ in range(2)}
    assert len(outs) == 1
