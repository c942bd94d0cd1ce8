"""Plain-text matrix and vector files.

Matrix file: a header line ``n n`` followed by n rows of n numbers.
Vector file: a header line ``n`` followed by n numbers, one per line or
whitespace separated.  Numbers are written with 17 significant digits so
binary64 values round-trip exactly.
"""
from pathlib import Path

import numpy as np


class ParseError(ValueError):
    def __init__(self, path, line, message):
        self.path = str(path)
        self.line = line
        super().__init__(f"{path}:{line}: {message}")


def _lines(path):
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            yield lineno, line.split()


def _float(path, lineno, token):
    try:
        value = float(token)
    except ValueError:
        raise ParseError(path, lineno, f"not a number: {token!r}") from None
    if not np.isfinite(value):
        raise ParseError(path, lineno, f"non-finite value: {token!r}")
    return value


def _int(path, lineno, token):
    try:
        value = int(token)
    except ValueError:
        raise ParseError(path, lineno, f"expected a positive integer, got {token!r}") from None
    if value < 1:
        raise ParseError(path, lineno, f"expected a positive integer, got {value}")
    return value


def read_matrix(path):
    lines = list(_lines(path))
    if not lines:
        raise ParseError(path, 1, "empty file")
    lineno, head = lines[0]
    if len(head) != 2:
        raise ParseError(path, lineno, "header must be 'n n'")
    n, m = _int(path, lineno, head[0]), _int(path, lineno, head[1])
    if n != m:
        raise ParseError(path, lineno, f"matrix must be square, header says {n} x {m}")
    rows = lines[1:]
    if len(rows) != n:
        last = rows[-1][0] if rows else lineno
        raise ParseError(path, last, f"expected {n} rows, found {len(rows)}")
    A = np.empty((n, n))
    for i, (lineno, toks) in enumerate(rows):
        if len(toks) != n:
            raise ParseError(path, lineno, f"expected {n} entries, found {len(toks)}")
        A[i] = [_float(path, lineno, t) for t in toks]
    return A


def read_vector(path):
    lines = list(_lines(path))
    if not lines:
        raise ParseError(path, 1, "empty file")
    lineno, head = lines[0]
    if len(head) != 1:
        raise ParseError(path, lineno, "header must be a single integer 'n'")
    n = _int(path, lineno, head[0])
    values = []
    for lineno, toks in lines[1:]:
        values.extend(_float(path, lineno, t) for t in toks)
        if len(values) > n:
            raise ParseError(path, lineno, f"more than {n} entries")
    if len(values) != n:
        last = lines[-1][0]
        raise ParseError(path, last, f"expected {n} entries, found {len(values)}")
    return np.array(values)


def format_number(x):
    return format(float(x), ".17g")


def write_matrix(path, A):
    A = np.asarray(A, dtype=np.float64)
    n, m = A.shape
    rows = [f"{n} {m}"] + [" ".join(format_number(t) for t in row) for row in A]
    Path(path).write_text("\n".join(rows) + "\n", encoding="utf-8")


def write_vector(path, x):
    x = np.asarray(x, dtype=np.float64)
    rows = [str(x.size)] + [format_number(t) for t in x]
    Path(path).write_text("\n".join(rows) + "\n", encoding="utf-8")
