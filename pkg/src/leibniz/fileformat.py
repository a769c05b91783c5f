"""Plain-text algebra files.

::

    # comments start with '#'
    field GF 3
    dim 2
    e1 e1 = 1*e2
    e1 e2 = 2*e2

Indices are 1-based, omitted products are zero, coefficients are integers or
``num/den``.  :func:`format_algebra` writes the canonical form, which
:func:`parse_algebra` reads back to an equal algebra.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exactlin import Field
from .leibcore import LeibnizAlgebra, is_leibniz

__all__ = ["AlgebraFileError", "LeibnizIdentityError", "parse_algebra", "format_algebra", "parse_field"]


class AlgebraFileError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class LeibnizIdentityError(ValueError):
    def __init__(self, witness):
        self.witness = witness
        i, j, k = witness
        super().__init__(f"Leibniz identity fails on (e{i + 1}, e{j + 1}, e{k + 1})")


_FIELD_RE = re.compile(r"^(?:Q|QQ|GF\s*\(?\s*(\d+)\s*\)?)$", re.IGNORECASE)
_PRODUCT_RE = re.compile(r"^e(\d+)\s+e(\d+)\s*=\s*(.+)$")
_TERM_RE = re.compile(r"^([+-]?\s*\d+(?:\s*/\s*\d+)?)\s*\*\s*e(\d+)$")


def parse_field(text: str) -> Field:
    """``Q``, ``GF 3``, ``GF3`` or ``GF(3)``."""
    m = _FIELD_RE.match(text.strip())
    if not m:
        raise ValueError(f"unknown field {text!r}")
    return Field(int(m.group(1))) if m.group(1) else Field(0)


def _split_terms(rhs: str) -> list[str]:
    # '+' separates terms; a '-' after a complete term starts a negative one
    terms = []
    buf = ""
    for ch in rhs:
        if ch == "+" and buf.strip():
            terms.append(buf)
            buf = ""
        elif ch == "-" and buf.strip() and re.search(r"e\d+\s*$", buf):
            terms.append(buf)
            buf = "-"
        else:
            buf += ch
    terms.append(buf)
    return [t.strip() for t in terms]


def parse_algebra(text: str, unchecked: bool = False) -> LeibnizAlgebra:
    field = None
    dim = None
    products: dict[tuple[int, int], dict[int, Fraction]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        body = line.strip()
        if field is None:
            if not body.startswith("field"):
                raise AlgebraFileError("expected 'field Q' or 'field GF <p>'", lineno, col)
            try:
                field = parse_field(body[len("field"):])
            except ValueError as exc:
                raise AlgebraFileError(str(exc), lineno, col + len("field ")) from None
            continue
        if dim is None:
            m = re.match(r"^dim\s+(\d+)$", body)
            if not m:
                raise AlgebraFileError("expected 'dim <n>'", lineno, col)
            dim = int(m.group(1))
            continue
        m = _PRODUCT_RE.match(body)
        if not m:
            raise AlgebraFileError("expected 'e<i> e<j> = <coeff>*e<k> [+ ...]'", lineno, col)
        i, j = int(m.group(1)) - 1, int(m.group(2)) - 1
        for idx, grp in ((i, 1), (j, 2)):
            if not 0 <= idx < dim:
                raise AlgebraFileError(f"basis index e{idx + 1} out of range 1..{dim}", lineno, col + m.start(grp) - 1)
        if (i, j) in products:
            raise AlgebraFileError(f"product e{i + 1} e{j + 1} given twice", lineno, col)
        terms: dict[int, Fraction] = {}
        rhs_col = col + m.start(3)
        for term in _split_terms(m.group(3)):
            tm = _TERM_RE.match(term)
            if not tm:
                raise AlgebraFileError(f"bad term {term!r}", lineno, rhs_col)
            k = int(tm.group(2)) - 1
            if not 0 <= k < dim:
                raise AlgebraFileError(f"basis index e{k + 1} out of range 1..{dim}", lineno, rhs_col)
            coeff = Fraction(tm.group(1).replace(" ", ""))
            terms[k] = terms.get(k, Fraction(0)) + coeff
        products[(i, j)] = terms
    if field is None:
        raise AlgebraFileError("missing field line")
    if dim is None:
        raise AlgebraFileError("missing dim line")
    try:
        sc = [[[field(products.get((i, j), {}).get(k, 0)) for k in range(dim)] for j in range(dim)]
              for i in range(dim)]
    except ZeroDivisionError as exc:
        raise AlgebraFileError(str(exc)) from None
    A = LeibnizAlgebra(field, dim, sc, check=False)
    if not unchecked:
        ok, witness = is_leibniz(A)
        if not ok:
            raise LeibnizIdentityError(witness)
    return A


def format_algebra(A: LeibnizAlgebra) -> str:
    f = A.field
    lines = [f"field GF {f.p}" if f.p else "field Q", f"dim {A.dim}"]
    for i in range(A.dim):
        for j in range(A.dim):
            v = A.sc[i][j]
            terms = [f"{f.format(c)}*e{k + 1}" for k, c in enumerate(v) if c]
            if terms:
                lines.append(f"e{i + 1} e{j + 1} = " + " + ".join(terms))
    return "\n".join(lines) + "\n"
