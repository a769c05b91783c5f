from __future__ import annotations

import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from leibniz.cli import main
from leibniz.exactlin import GF, QQ
from leibniz.fileformat import (
    AlgebraFileError,
    LeibnizIdentityError,
    format_algebra,
    parse_algebra,
    parse_field,
)
from leibniz.cyclic import build_cyclic
from leibniz.leibcore import LeibnizAlgebra

from conftest import FIXTURES, census, fixture_files


@pytest.mark.parametrize("path", fixture_files(), ids=lambda p: p.name)
def test_fixture_roundtrip(path):
    A = parse_algebra(path.read_text())
    text = format_algebra(A)
    assert parse_algebra(text) == A
    assert format_algebra(parse_algebra(text)) == text


@pytest.mark.parametrize("A", list(census(3, 2)))
def test_census_roundtrip(A):
    assert parse_algebra(format_algebra(A)) == A


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=5), max_size=4))
def test_rational_cyclic_roundtrip(alphas):
    A, _ = build_cyclic(QQ, alphas)
    assert parse_algebra(format_algebra(A)) == A


def test_format_canonical():
    A, _ = build_cyclic(QQ, [Fraction(-1, 2)])
    assert format_algebra(A) == "field Q\ndim 2\ne1 e1 = 1*e2\ne1 e2 = -1/2*e2\n"
    B = LeibnizAlgebra.from_products(GF(3), 2, {(0, 0): {1: -1}})
    assert format_algebra(B) == "field GF 3\ndim 2\ne1 e1 = 2*e2\n"


def test_parse_variants():
    assert parse_field("GF(5)") == GF(5) and parse_field("gf 3") == GF(3) and parse_field("Q") == QQ
    A = parse_algebra("# note\nfield Q\ndim 3\n")
    assert A.is_abelian() and A.dim == 3
    B = parse_algebra("field Q\ndim 2\ne1 e1 = 2*e2 - 1*e2 # same as 1*e2\n")
    assert B.sc[0][0] == (0, 1)


@pytest.mark.parametrize("text,line,column", [
    ("field GF 4\ndim 1\n", 1, 7),
    ("dim 2\n", 1, 1),
    ("field Q\ndimension 2\n", 2, 1),
    ("field Q\ndim 2\ne1 e3 = 1*e1\n", 3, 4),
    ("field Q\ndim 2\ne1 e1 = x*e2\n", 3, 9),
    ("field Q\ndim 2\ne1 e1 = 1*e2\ne1 e1 = 1*e2\n", 4, 1),
    ("field Q\ndim 2\n  e1 e1 = 1*e9\n", 3, 11),
])
def test_parse_errors_have_positions(text, line, column):
    with pytest.raises(AlgebraFileError) as err:
        parse_algebra(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_identity_violation_and_unchecked():
    text = "field GF 3\ndim 2\ne1 e1 = 1*e1\ne1 e2 = 1*e1\n"
    with pytest.raises(LeibnizIdentityError) as err:
        parse_algebra(text)
    assert len(err.value.witness) == 3
    assert parse_algebra(text, unchecked=True).dim == 2


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_reports(capsys):
    code, out, _ = _run(capsys, "analyze", str(FIXTURES / "cyclic_nilpotent_gf2.alg"), "--lattice")
    assert code == 0 and out.startswith("== analyze ==\n")
    assert "nilpotency_class: 2" in out and "frattini: dim 1 span{(0, 1)}" in out
    code, out, _ = _run(capsys, "analyze", str(FIXTURES / "cyclic_idempotent_gf2.alg"), "--lattice")
    assert "nilpotency_class: non-nilpotent" in out and "frattini: dim 0 0" in out
    code, out, _ = _run(capsys, "analyze", str(FIXTURES / "abelian1_q.alg"))
    assert "nilpotency_class: 1" in out and "center: dim 1" in out and "left_center: dim 1" in out


def test_analyze_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("field GF 3\ndim 2\ne1 e1 = 1*e1\ne1 e2 = 1*e1\n")
    code, _, err = _run(capsys, "analyze", str(bad))
    assert code == 2 and "Leibniz identity fails" in err
    code, out, _ = _run(capsys, "analyze", str(bad), "--unchecked")
    assert code == 2 and "leibniz: no" in out
    code, _, err = _run(capsys, "analyze", str(FIXTURES / "abelian3_q.alg"), "--lattice")
    assert code == 2 and "finite field" in err
    code, _, _ = _run(capsys, "analyze", str(tmp_path / "missing.alg"))
    assert code == 2


def test_cyclic_command(capsys):
    code, out, _ = _run(capsys, "cyclic", "--field", "Q", "--alphas", "1")
    assert code == 0 and out.startswith("== cyclic ==\n")
    assert "p(x): x^2 - x" in out and "frattini: dim 0 0" in out
    _, out, _ = _run(capsys, "cyclic", "--field", "Q", "--alphas", "0")
    assert "p(x): x^2\n" in out and "frattini: dim 1 span{(0, 1)}" in out
    _, out, _ = _run(capsys, "cyclic", "--field", "GF3", "--alphas", "1,0")
    assert "factorization: (x) * (x + 1) * (x + 2)" in out and "maximal_subalgebras: 3" in out
    code, _, _ = _run(capsys, "cyclic", "--field", "GF4", "--alphas", "1")
    assert code == 2
    code, _, _ = _run(capsys, "cyclic", "--field", "Q", "--alphas", "1,z")
    assert code == 2


def test_sweep_command(capsys):
    code, out, err = _run(capsys, "sweep", "--field", "GF2", "--dim", "2",
                          "--checks", "sstar,conditionk,frattini,equivalences,thm31")
    assert code == 0 and out.startswith("== sweep ==\n")
    assert out.count("counterexamples: 0") == 5
    assert "sstar:" in err  # timings go to stderr
    code, out, _ = _run(capsys, "sweep", "--field", "GF3", "--dim", "2", "--checks", "frattini")
    assert code == 0 and "counterexamples: 0" in out
    code, _, _ = _run(capsys, "sweep", "--field", "GF2", "--dim", "4")
    assert code == 3
    code, _, _ = _run(capsys, "sweep", "--field", "GF2", "--dim", "2", "--checks", "bogus")
    assert code == 2


def test_sweep_reports_counterexample(capsys):
    # the stated class bound fails on some dim-2 algebras (see the acceptance suite)
    code, out, _ = _run(capsys, "sweep", "--field", "GF2", "--dim", "2", "--checks", "classbound")
    assert code == 1 and "-- counterexample 1 --" in out and "field GF 2" in out


def test_sweep_output_is_deterministic(capsys):
    a = _run(capsys, "sweep", "--field", "GF2", "--dim", "2", "--sample", "500", "--seed", "4")[1]
    b = _run(capsys, "sweep", "--field", "GF2", "--dim", "2", "--sample", "500", "--seed", "4")[1]
    assert a == b and "sampled" in a


def test_isocheck_command(capsys):
    code, out, _ = _run(capsys, "isocheck", str(FIXTURES / "heisenberg_gf2.alg"),
                        str(FIXTURES / "heisenberg_swapped_gf2.alg"))
    assert code == 0 and out.startswith("== isocheck ==\nisomorphic\n")
    code, out, _ = _run(capsys, "isocheck", str(FIXTURES / "cyclic_idempotent_gf2.alg"),
                        str(FIXTURES / "cyclic_nilpotent_gf2.alg"))
    assert code == 0 and "not isomorphic" in out
    code, _, _ = _run(capsys, "isocheck", str(FIXTURES / "cyclic_idempotent_gf2.alg"),
                      str(FIXTURES / "heisenberg_gf2.alg"))
    assert code == 2
    code, _, _ = _run(capsys, "isocheck", str(FIXTURES / "heisenberg_gf2.alg"),
                      str(FIXTURES / "heisenberg_gf2.alg"), "--budget", "10")
    assert code == 3


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "leibniz.cli", "cyclic", "--field", "GF2", "--alphas", "1"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("== cyclic ==")
