"""Perm algebras and coalgebras given by structure constants.

Index convention: ``c[i, j, k]`` is the coefficient of ``e_k`` in
``e_i . e_j`` and ``d[k, i, j]`` is the coefficient of ``e_i (x) e_j`` in
``Delta(e_k)``.  Indices are 0-based throughout.  Operator matrices act
on column vectors, so column ``j`` of ``L(x)`` holds ``x . e_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch
from .linalg import einsum, freeze, is_zero, qarray, zeros

__all__ = [
    "PermAlgebra", "PermCoalgebra", "zero_algebra", "multiply",
    "perm_axiom_defects", "left_mult", "right_mult", "ad",
    "is_homomorphism", "direct_sum", "dual_algebra_from_coproduct",
    "coproduct_from_dual_algebra", "default_labels",
]


def default_labels(n: int, stem: str = "e") -> tuple[str, ...]:
    return tuple(f"{stem}{i + 1}" for i in range(n))


def _cube(arr, what: str) -> np.ndarray:
    arr = qarray(arr)
    if arr.ndim != 3 or len(set(arr.shape)) != 1:
        raise DimensionMismatch(f"{what} table must be n x n x n, got {arr.shape}")
    return arr


def _labels(labels, n: int) -> tuple[str, ...]:
    labels = tuple(labels) if labels else default_labels(n)
    if len(labels) != n:
        raise DimensionMismatch(f"{len(labels)} labels for dimension {n}")
    if len(set(labels)) != n:
        raise ValueError(f"labels are not distinct: {labels}")
    return labels


@dataclass(frozen=True, eq=False)
class PermAlgebra:
    """Finite-dimensional algebra; perm axioms are checked, not enforced."""

    c: np.ndarray
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        c = _cube(self.c, "structure constant")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "labels", _labels(self.labels, c.shape[0]))

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    @classmethod
    def from_products(cls, dim: int, products: dict, labels=()) -> "PermAlgebra":
        """Build from ``{(i, j): {k: coeff}}`` (0-based, sparse)."""
        c = zeros(dim, dim, dim)
        for (i, j), out in products.items():
            for k, v in out.items():
                c[i, j, k] = v
        return cls(c, labels)

    def __eq__(self, other):
        if not isinstance(other, PermAlgebra):
            return NotImplemented
        return self.c.shape == other.c.shape and bool((self.c == other.c).all())

    __hash__ = None

    def __repr__(self):
        nz = {(i, j, k): str(v) for (i, j, k), v in np.ndenumerate(self.c) if v}
        return f"PermAlgebra(dim={self.dim}, nonzero={nz})"


@dataclass(frozen=True, eq=False)
class PermCoalgebra:
    d: np.ndarray
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        d = _cube(self.d, "coproduct")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "labels", _labels(self.labels, d.shape[0]))

    @property
    def dim(self) -> int:
        return self.d.shape[0]

    def __eq__(self, other):
        if not isinstance(other, PermCoalgebra):
            return NotImplemented
        return self.d.shape == other.d.shape and bool((self.d == other.d).all())

    __hash__ = None

    def __repr__(self):
        nz = {(k, i, j): str(v) for (k, i, j), v in np.ndenumerate(self.d) if v}
        return f"PermCoalgebra(dim={self.dim}, nonzero={nz})"


def zero_algebra(n: int) -> PermAlgebra:
    return PermAlgebra(zeros(n, n, n))


def _vec(A: PermAlgebra, x) -> np.ndarray:
    x = qarray(x)
    if x.shape != (A.dim,):
        raise DimensionMismatch(f"vector of shape {x.shape} in dimension {A.dim}")
    return x


def multiply(A: PermAlgebra, x, y) -> np.ndarray:
    return freeze(einsum("i,j,ijk->k", _vec(A, x), _vec(A, y), A.c))


def perm_axiom_defects(A: PermAlgebra) -> list[tuple]:
    """Basis triples where ``a(bc) = (ab)c = (ba)c`` fails.

    Each entry is ``(i, j, k, assoc_defect, leftcomm_defect)`` with
    ``assoc_defect = e_i(e_j e_k) - (e_i e_j)e_k`` and
    ``leftcomm_defect = (e_i e_j)e_k - (e_j e_i)e_k``.
    """
    c = A.c
    right_first = einsum("jkm,imp->ijkp", c, c)   # e_i (e_j e_k)
    left_first = einsum("ijm,mkp->ijkp", c, c)    # (e_i e_j) e_k
    assoc = right_first - left_first
    leftcomm = left_first - left_first.transpose(1, 0, 2, 3)
    out = []
    for i, j, k in np.ndindex(c.shape):
        a, l = assoc[i, j, k], leftcomm[i, j, k]
        if not (is_zero(a) and is_zero(l)):
            out.append((i, j, k, freeze(a.copy()), freeze(l.copy())))
    return out


def left_mult(A: PermAlgebra, x) -> np.ndarray:
    # L(x)[k, j] = coefficient of e_k in x . e_j
    return freeze(einsum("i,ijk->kj", _vec(A, x), A.c))


def right_mult(A: PermAlgebra, x) -> np.ndarray:
    return freeze(einsum("j,ijk->ki", _vec(A, x), A.c))


def ad(A: PermAlgebra, x) -> np.ndarray:
    return freeze(left_mult(A, x) - right_mult(A, x))


def is_homomorphism(A: PermAlgebra, B: PermAlgebra, F) -> list[tuple]:
    """Pairs ``(i, j, F(e_i e_j) - F(e_i)F(e_j))`` with nonzero defect."""
    F = qarray(F)
    if F.shape != (B.dim, A.dim):
        raise DimensionMismatch(
            f"map of shape {F.shape} cannot send dim {A.dim} to dim {B.dim}")
    image_of_product = einsum("pk,ijk->ijp", F, A.c)
    product_of_images = einsum("ai,bj,abp->ijp", F, F, B.c)
    defect = image_of_product - product_of_images
    return [(i, j, freeze(defect[i, j].copy()))
            for i in range(A.dim) for j in range(A.dim) if not is_zero(defect[i, j])]


def direct_sum(A: PermAlgebra, B: PermAlgebra) -> PermAlgebra:
    n, m = A.dim, B.dim
    c = zeros(n + m, n + m, n + m)
    c[:n, :n, :n] = A.c
    c[n:, n:, n:] = B.c
    labels = A.labels + B.labels
    if len(set(labels)) != n + m:
        labels = tuple(f"{s}_1" for s in A.labels) + tuple(f"{s}_2" for s in B.labels)
    return PermAlgebra(c, labels)


def dual_algebra_from_coproduct(C: PermCoalgebra) -> PermAlgebra:
    """Multiplication on the dual space: ``e_i* e_j* = sum_k d[k,i,j] e_k*``."""
    return PermAlgebra(C.d.transpose(1, 2, 0), tuple(f"{s}*" for s in C.labels))


def coproduct_from_dual_algebra(A: PermAlgebra, labels=()) -> PermCoalgebra:
    """Inverse of :func:`dual_algebra_from_coproduct`."""
    return PermCoalgebra(A.c.transpose(2, 0, 1), labels)
