"""JSON file formats for every object the CLI reads or writes.

All scalars are strings ``"p"`` or ``"p/q"``.  Tables are sparse entry
lists sorted by index; operators are dense lists of columns.  Output is
canonical (fixed key order, sorted entries, two-space indent, trailing
newline), so export -> import -> export is byte-identical.

=============  ==========================================================
kind           fields
=============  ==========================================================
algebra        dim, labels, entries [{i, j, k, c}]  (e_i e_j has c at e_k)
coalgebra      dim, labels, entries [{k, i, j, c}]  (Delta e_k has c at e_i (x) e_j)
bialgebra      algebra, coalgebra
tensor         dim, entries [{i, j, c}]             (c e_i (x) e_j)
form           dim, entries [{i, j, c}]             (B(e_i, e_j) = c)
operator       dim, columns [[c, ...], ...]         (column j = image of e_j)
representation algebra, vdim, left, right           (per-basis operators, as columns)
apermalgebra   representation, vmult [{i, j, k, c}]
quadratic      algebra, form
quadratic-rb   algebra, form, operator, weight
=============  ==========================================================
"""

from __future__ import annotations

import json

import numpy as np

from .algebra import PermAlgebra, PermCoalgebra
from .bialgebra import PermBialgebra
from .errors import ParseError
from .linalg import format_scalar, parse_scalar, zeros
from .representations import APermAlgebra, Representation
from .rotabaxter import QuadraticRBData
from .tensors import TwoTensor

__all__ = ["to_doc", "from_doc", "dumps", "loads", "KINDS",
           "form_doc", "operator_doc", "parse_form", "parse_operator"]

KINDS = ("algebra", "coalgebra", "bialgebra", "tensor", "form", "operator",
         "representation", "apermalgebra", "quadratic", "quadratic-rb")


def _sparse(arr, keys) -> list[dict]:
    out = []
    for idx, v in np.ndenumerate(arr):
        if v != 0:
            entry = {k: int(i) for k, i in zip(keys, idx)}
            entry["c"] = format_scalar(v)
            out.append(entry)
    return out


def _columns(M) -> list[list[str]]:
    return [[format_scalar(x) for x in M[:, j]] for j in range(M.shape[1])]


def algebra_doc(A: PermAlgebra) -> dict:
    return {"kind": "algebra", "dim": A.dim, "labels": list(A.labels),
            "entries": _sparse(A.c, "ijk")}


def coalgebra_doc(C: PermCoalgebra) -> dict:
    return {"kind": "coalgebra", "dim": C.dim, "labels": list(C.labels),
            "entries": _sparse(C.d, "kij")}


def tensor_doc(r: TwoTensor) -> dict:
    return {"kind": "tensor", "dim": r.dim, "entries": _sparse(r.t, "ij")}


def form_doc(B) -> dict:
    B = np.asarray(B, dtype=object)
    return {"kind": "form", "dim": B.shape[0], "entries": _sparse(B, "ij")}


def operator_doc(M) -> dict:
    M = np.asarray(M, dtype=object)
    return {"kind": "operator", "dim": M.shape[0], "columns": _columns(M)}


def representation_doc(rho: Representation) -> dict:
    return {"kind": "representation", "algebra": algebra_doc(rho.base), "vdim": rho.vdim,
            "left": [_columns(m) for m in rho.l], "right": [_columns(m) for m in rho.r]}


def to_doc(obj) -> dict:
    """Serialisable dict for a kernel object."""
    if isinstance(obj, PermAlgebra):
        return algebra_doc(obj)
    if isinstance(obj, PermCoalgebra):
        return coalgebra_doc(obj)
    if isinstance(obj, PermBialgebra):
        return {"kind": "bialgebra", "algebra": algebra_doc(obj.algebra),
                "coalgebra": coalgebra_doc(obj.coproduct)}
    if isinstance(obj, TwoTensor):
        return tensor_doc(obj)
    if isinstance(obj, Representation):
        return representation_doc(obj)
    if isinstance(obj, APermAlgebra):
        return {"kind": "apermalgebra", "representation": representation_doc(obj.rep),
                "vmult": _sparse(obj.vmult, "ijk")}
    if isinstance(obj, QuadraticRBData):
        return {"kind": "quadratic-rb", "algebra": algebra_doc(obj.algebra),
                "form": form_doc(obj.form), "operator": operator_doc(obj.operator),
                "weight": format_scalar(obj.weight)}
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    doc = obj if isinstance(obj, dict) else to_doc(obj)
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# -- parsing ---------------------------------------------------------------

def _field(doc, key, typ=None):
    if not isinstance(doc, dict):
        raise ParseError(f"expected an object, got {type(doc).__name__}")
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    v = doc[key]
    if typ is not None and (not isinstance(v, typ) or isinstance(v, bool)):
        raise ParseError(f"field {key!r} must be {typ.__name__}")
    return v


def _expect_kind(doc, kind):
    got = _field(doc, "kind", str)
    if got != kind:
        raise ParseError(f"expected kind {kind!r}, got {got!r}")


def _dim(doc) -> int:
    n = _field(doc, "dim", int)
    if n < 0:
        raise ParseError("dim must be nonnegative")
    return n


def _scalar(v):
    if not isinstance(v, str):
        raise ParseError(f"scalars must be strings 'p' or 'p/q', got {v!r}")
    return parse_scalar(v)


def _table(entries, keys, n: int) -> np.ndarray:
    if not isinstance(entries, list):
        raise ParseError("entries must be a list")
    out = zeros(*([n] * len(keys)))
    seen = set()
    for e in entries:
        idx = tuple(_field(e, k, int) for k in keys)
        if any(not 0 <= i < n for i in idx):
            raise ParseError(f"index {idx} out of range for dim {n}")
        if idx in seen:
            raise ParseError(f"duplicate entry at {idx}")
        seen.add(idx)
        out[idx] = _scalar(_field(e, "c"))
    return out


def _dense_columns(cols, rows: int, ncols: int) -> np.ndarray:
    if not isinstance(cols, list) or len(cols) != ncols:
        raise ParseError(f"expected {ncols} columns")
    M = zeros(rows, ncols)
    for j, col in enumerate(cols):
        if not isinstance(col, list) or len(col) != rows:
            raise ParseError(f"column {j} must have {rows} entries")
        for i, v in enumerate(col):
            M[i, j] = _scalar(v)
    return M


def _labels(doc, n):
    labels = doc.get("labels", [])
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise ParseError("labels must be a list of strings")
    if labels and len(labels) != n:
        raise ParseError(f"{len(labels)} labels for dim {n}")
    if len(set(labels)) != len(labels):
        raise ParseError("labels must be distinct")
    return tuple(labels)


def parse_algebra(doc) -> PermAlgebra:
    _expect_kind(doc, "algebra")
    n = _dim(doc)
    return PermAlgebra(_table(_field(doc, "entries"), "ijk", n), _labels(doc, n))


def parse_coalgebra(doc) -> PermCoalgebra:
    _expect_kind(doc, "coalgebra")
    n = _dim(doc)
    return PermCoalgebra(_table(_field(doc, "entries"), "kij", n), _labels(doc, n))


def parse_tensor(doc) -> TwoTensor:
    _expect_kind(doc, "tensor")
    return TwoTensor(_table(_field(doc, "entries"), "ij", _dim(doc)))


def parse_form(doc) -> np.ndarray:
    _expect_kind(doc, "form")
    return _table(_field(doc, "entries"), "ij", _dim(doc))


def parse_operator(doc) -> np.ndarray:
    _expect_kind(doc, "operator")
    n = _dim(doc)
    return _dense_columns(_field(doc, "columns"), n, n)


def parse_representation(doc) -> Representation:
    _expect_kind(doc, "representation")
    A = parse_algebra(_field(doc, "algebra"))
    m = _field(doc, "vdim", int)
    if m < 0:
        raise ParseError("vdim must be nonnegative")
    mats = {}
    for side in ("left", "right"):
        ops = _field(doc, side, list)
        if len(ops) != A.dim:
            raise ParseError(f"{side} needs one operator per basis element ({A.dim})")
        mats[side] = np.array([_dense_columns(c, m, m) for c in ops], dtype=object).reshape(A.dim, m, m)
    return Representation(A, mats["left"], mats["right"])


def _bialgebra(doc):
    _expect_kind(doc, "bialgebra")
    A = parse_algebra(_field(doc, "algebra"))
    C = parse_coalgebra(_field(doc, "coalgebra"))
    if A.dim != C.dim:
        raise ParseError(f"algebra dim {A.dim} != coalgebra dim {C.dim}")
    return PermBialgebra(A, C)


def _apermalgebra(doc):
    _expect_kind(doc, "apermalgebra")
    rho = parse_representation(_field(doc, "representation"))
    return APermAlgebra(rho, _table(_field(doc, "vmult"), "ijk", rho.vdim))


def _quadratic(doc):
    _expect_kind(doc, "quadratic")
    A = parse_algebra(_field(doc, "algebra"))
    B = parse_form(_field(doc, "form"))
    if B.shape[0] != A.dim:
        raise ParseError(f"form dim {B.shape[0]} != algebra dim {A.dim}")
    return A, B


def _quadratic_rb(doc):
    _expect_kind(doc, "quadratic-rb")
    A = parse_algebra(_field(doc, "algebra"))
    B = parse_form(_field(doc, "form"))
    P = parse_operator(_field(doc, "operator"))
    if B.shape[0] != A.dim or P.shape[0] != A.dim:
        raise ParseError("form, operator and algebra dims differ")
    return QuadraticRBData(A, B, P, _scalar(_field(doc, "weight")))


_PARSERS = {
    "algebra": parse_algebra,
    "coalgebra": parse_coalgebra,
    "bialgebra": _bialgebra,
    "tensor": parse_tensor,
    "form": parse_form,
    "operator": parse_operator,
    "representation": parse_representation,
    "apermalgebra": _apermalgebra,
    "quadratic": _quadratic,
    "quadratic-rb": _quadratic_rb,
}


def from_doc(doc, kind: str | None = None):
    """Parse a document; with ``kind`` the document must be of that kind."""
    k = _field(doc, "kind", str)
    if kind is not None and k != kind:
        raise ParseError(f"expected kind {kind!r}, got {k!r}")
    if k not in _PARSERS:
        raise ParseError(f"unknown kind {k!r}")
    try:
        return _PARSERS[k](doc)
    except ParseError:
        raise
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from exc


def loads(text: str, kind: str | None = None):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_doc(doc, kind)
