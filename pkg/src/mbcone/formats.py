"""Plain-text formats for systems and cones.

System file::

    # comments start with '#'
    n m
    a11 a12 ... a1n
    ...

Entries are optionally signed integers or ``p/q`` with ``q > 0``. Cone
file::

    U k
    <k rows>
    V s
    <s rows>
"""
import re
from fractions import Fraction

from .exact_arith import InequalitySystem, LinearForm
from .mb_core import ConeDescription

_RATIONAL = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?\Z")


class ParseError(ValueError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _content_lines(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, stripped.split()


def _rational(token, lineno):
    if not _RATIONAL.match(token):
        raise ParseError(lineno, f"malformed rational {token!r}")
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ParseError(lineno, f"zero denominator in {token!r}")
    return Fraction(int(num), int(den) if den else 1)


def _count(token, lineno, what):
    if not token.isdigit():
        raise ParseError(lineno, f"{what} must be a non-negative integer, got {token!r}")
    return int(token)


def _read_rows(lines, count, n, last_lineno):
    rows = []
    for _ in range(count):
        try:
            lineno, tokens = next(lines)
        except StopIteration:
            raise ParseError(last_lineno + 1, f"expected {count} rows, got {len(rows)}") from None
        if len(tokens) != n:
            raise ParseError(lineno, f"expected {n} entries, got {len(tokens)}")
        rows.append(tuple(_rational(t, lineno) for t in tokens))
        last_lineno = lineno
    return rows, last_lineno


def _read_header(lines, what):
    try:
        return next(lines)
    except StopIteration:
        raise ParseError(1, f"missing {what} header") from None


def parse_system(text: str) -> InequalitySystem:
    lines = _content_lines(text)
    lineno, header = _read_header(lines, "'n m'")
    if len(header) != 2:
        raise ParseError(lineno, "header must be 'n m'")
    n = _count(header[0], lineno, "n")
    m = _count(header[1], lineno, "m")
    rows, last = _read_rows(lines, m, n, lineno)
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(extra[0], f"unexpected content after {m} rows")
    return InequalitySystem(n, tuple(LinearForm(r) for r in rows))


def _format_row(row):
    return " ".join(str(x) for x in row)


def format_system(system: InequalitySystem) -> str:
    out = [f"{system.dimension} {system.m}"]
    out.extend(_format_row(f.coefficients) for f in system.forms)
    return "\n".join(out) + "\n"


def write_cone(cone: ConeDescription) -> str:
    out = [f"U {len(cone.lineality)}"]
    out.extend(_format_row(u) for u in sorted(cone.lineality))
    out.append(f"V {len(cone.rays)}")
    out.extend(_format_row(v) for v in sorted(cone.rays))
    return "\n".join(out) + "\n"


def _read_block(lines, tag):
    lineno, header = _read_header(lines, f"'{tag} k'")
    if len(header) != 2 or header[0] != tag:
        raise ParseError(lineno, f"expected '{tag} <count>'")
    count = _count(header[1], lineno, "count")
    return count, lineno


def parse_cone(text: str, dimension: int) -> ConeDescription:
    """Inverse of :func:`write_cone`; the dimension is not stored in the file."""
    lines = _content_lines(text)
    k, lineno = _read_block(lines, "U")
    lin, lineno = _read_rows(lines, k, dimension, lineno)
    s, lineno = _read_block(lines, "V")
    rays, lineno = _read_rows(lines, s, dimension, lineno)
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(extra[0], "unexpected content after V block")
    return ConeDescription(dimension, _integral(lin), _integral(rays))


def _integral(rows):
    return tuple(tuple(int(x) if x.denominator == 1 else x for x in r) for r in rows)


def parse_vectors(text: str, dimension: int) -> list:
    """Candidate vectors, either in system layout (``n k`` + rows) or cone layout."""
    first = next(_content_lines(text), None)
    if first is not None and first[1][0] == "U":
        cone = parse_cone(text, dimension)
        return list(cone.lineality) + list(cone.rays)
    vecs = parse_system(text)
    if vecs.dimension != dimension:
        raise ParseError(first[0], f"vectors have length {vecs.dimension}, system has {dimension}")
    return [f.coefficients for f in vecs.forms]


def format_check_report(report) -> str:
    out = [f"valid {len(report.valid)}"]
    out.extend(_format_row(x) for x in report.valid)
    out.append(f"invalid {len(report.invalid)}")
    out.extend(f"{_format_row(x)} violates {j}" for x, j in report.invalid)
    return "\n".join(out) + "\n"
