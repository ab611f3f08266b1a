"""Exact rational scalars and dense linear algebra.

Every array in the package is a numpy ``object`` array whose entries are
GMP rationals (``gmpy2.mpq``).  numpy only supplies the indexing and
``einsum`` plumbing; no floating point is ever involved.
"""

from __future__ import annotations

import re
from numbers import Rational

import numpy as np
from gmpy2 import mpq

from .errors import DimensionMismatch, ParseError, Singular

Q = type(mpq(0))

__all__ = [
    "Q", "scalar", "parse_scalar", "format_scalar", "qarray", "zeros", "identity",
    "is_zero", "is_clean", "freeze", "einsum", "rank", "invert", "solve", "rref",
]

_SCALAR_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def scalar(x) -> Q:
    """Coerce ``x`` to an exact rational.  Floats are rejected."""
    if isinstance(x, Q):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return mpq(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"not an exact rational: {x!r}")


def parse_scalar(s: str) -> Q:
    s = s.strip()
    if not _SCALAR_RE.match(s):
        raise ParseError(f"malformed rational {s!r}; expected 'p' or 'p/q'")
    try:
        return mpq(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {s!r}") from None


def format_scalar(x) -> str:
    # str(mpq) is already "p" or "p/q" in lowest terms.
    return str(scalar(x))


def freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def qarray(data, shape=None) -> np.ndarray:
    """Read-only object array of rationals built from nested data."""
    arr = np.array(data, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = scalar(arr[idx])
    return freeze(out)


def zeros(*shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(mpq(0))
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = mpq(1)
    return out


def einsum(spec: str, *operands) -> np.ndarray:
    """``np.einsum`` on object arrays with rational-typed output.

    Empty contractions make numpy return plain ``int`` zeros, so the
    result is normalised entrywise.
    """
    res = np.einsum(spec, *operands, optimize=len(operands) > 2)
    if not isinstance(res, np.ndarray):
        return scalar(res)
    out = np.empty(res.shape, dtype=object)
    for idx in np.ndindex(res.shape):
        out[idx] = scalar(res[idx])
    return out


def is_zero(arr) -> bool:
    arr = np.asarray(arr, dtype=object)
    return all(x == 0 for x in arr.flat)


def is_clean(report) -> bool:
    """True when every defect list in a (possibly nested) report is empty.

    Non-list entries such as ranks or flags are ignored.
    """
    if isinstance(report, dict):
        return all(is_clean(v) for v in report.values() if isinstance(v, (dict, list)))
    return not report


def _check_matrix(M) -> np.ndarray:
    M = np.asarray(M, dtype=object)
    if M.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {M.shape}")
    return M


def rref(M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    The pivot in each column is the first row (from the current one down)
    with a nonzero entry, so the output is deterministic.
    """
    M = _check_matrix(M)
    rows, cols = M.shape
    A = qarray(M).copy()
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if A[i, c] != 0), None)
        if p is None:
            continue
        if p != r:
            A[[p, r]] = A[[r, p]]
        piv = A[r, c]
        A[r] = [x / piv for x in A[r]]
        for i in range(rows):
            if i != r and A[i, c] != 0:
                f = A[i, c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M) -> int:
    return len(rref(M)[1])


def invert(M) -> np.ndarray:
    M = _check_matrix(M)
    n, m = M.shape
    if n != m:
        raise DimensionMismatch(f"cannot invert a {n}x{m} matrix")
    R, pivots = rref(np.hstack([M, identity(n)]) if n else M)
    if n and pivots[:n] != list(range(n)):
        raise Singular(f"matrix has rank {sum(p < n for p in pivots)} < {n}")
    return freeze(R[:, n:].copy()) if n else freeze(zeros(0, 0))


def solve(M, b) -> np.ndarray:
    """Exact solution of ``M x = b`` for square invertible ``M``."""
    M = _check_matrix(M)
    b = np.asarray(b, dtype=object)
    n, m = M.shape
    if n != m or b.shape != (n,):
        raise DimensionMismatch(f"solve: matrix {M.shape}, rhs {b.shape}")
    if n == 0:
        return freeze(zeros(0))
    R, pivots = rref(np.hstack([M, b.reshape(n, 1)]))
    if pivots[:n] != list(range(n)):
        raise Singular("matrix is singular")
    return freeze(R[:, n].copy())
