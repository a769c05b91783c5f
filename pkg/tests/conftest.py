from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

from leibniz.exactlin import GF, QQ, Field, Matrix

FIXTURES = Path(__file__).parent / "fixtures"
FIELDS = [QQ, GF(2), GF(3), GF(5)]


def fixture_files():
    return sorted(FIXTURES.glob("*.alg"))


def scalars(field: Field, bound: int = 5):
    if field.is_finite:
        return st.integers(0, field.p - 1)
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, 3))


@st.composite
def matrices(draw, field: Field, max_rows: int = 4, max_cols: int = 4, rows=None, cols=None):
    r = rows if rows is not None else draw(st.integers(1, max_rows))
    c = cols if cols is not None else draw(st.integers(1, max_cols))
    entries = draw(st.lists(st.lists(scalars(field), min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix(field, tuple(tuple(field(x) for x in row) for row in entries), c)


@st.composite
def vector_lists(draw, field: Field, n: int, max_vectors: int = 4):
    k = draw(st.integers(0, max_vectors))
    return draw(st.lists(st.lists(scalars(field), min_size=n, max_size=n), min_size=k, max_size=k))


_CENSUS = {}


def census(p: int, n: int):
    """Exhaustive census over GF(p), cached for the whole session."""
    from leibniz.verify import enumerate_leibniz

    if (p, n) not in _CENSUS:
        _CENSUS[(p, n)] = enumerate_leibniz(GF(p), n)
    return _CENSUS[(p, n)]


# one PASS/FAIL line per acceptance criterion at the end of the run
_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _ACCEPTANCE[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        number, _, label = name[len("test_criterion_"):].partition("_")
        verdict = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {int(number):>2}: {verdict}  {label.replace('_', ' ')}")
