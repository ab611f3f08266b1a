"""Perm coalgebras, bialgebras and coboundary (``Delta_r``) structures."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .algebra import (PermAlgebra, PermCoalgebra, ad,
                      direct_sum, is_homomorphism, left_mult, right_mult)
from .errors import DimensionMismatch, NotFactorizable, NotQuasiTriangular
from .linalg import einsum, freeze, identity, invert, is_zero, qarray, rank, zeros
from .tensors import (TwoTensor, apply2, pybe_defect, rad_invariance_defect,
                      rad_invariance_tensor, t_map, twist)

__all__ = [
    "PermCoalgebra", "PermBialgebra", "Classification", "coalgebra_defects",
    "bialgebra_defects", "coboundary_coproduct", "dual_mult_r", "classify",
    "factorize", "image_subalgebra_report", "trivial_bialgebra",
]


@dataclass(frozen=True, eq=False)
class PermBialgebra:
    """An algebra/coproduct pair.  Never validated on construction."""

    algebra: PermAlgebra
    coproduct: PermCoalgebra

    def __post_init__(self):
        if self.algebra.dim != self.coproduct.dim:
            raise DimensionMismatch(
                f"algebra dim {self.algebra.dim} != coproduct dim {self.coproduct.dim}")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def __eq__(self, other):
        if not isinstance(other, PermBialgebra):
            return NotImplemented
        return self.algebra == other.algebra and self.coproduct == other.coproduct

    __hash__ = None


def trivial_bialgebra(A: PermAlgebra) -> PermBialgebra:
    """``A`` with the zero coproduct."""
    n = A.dim
    return PermBialgebra(A, PermCoalgebra(zeros(n, n, n), A.labels))


class Classification(enum.Enum):
    NotCoboundarySolution = "NotCoboundarySolution"
    QuasiTriangular = "QuasiTriangular"
    Triangular = "Triangular"
    Factorizable = "Factorizable"

    @property
    def is_quasi_triangular(self) -> bool:
        return self is not Classification.NotCoboundarySolution


def coalgebra_defects(C: PermCoalgebra) -> list[tuple]:
    """Basis indices ``k`` where the perm coalgebra identities fail at ``e_k``.

    Entries are ``(k, first, second)`` with
    ``first = (D(x)id)D - (id(x)D)D`` and ``second = (id(x)D)D - (s(x)id)(D(x)id)D``.
    """
    d = C.d
    left = einsum("kij,ipq->kpqj", d, d)     # (Delta (x) id) Delta
    right = einsum("kij,jpq->kipq", d, d)    # (id (x) Delta) Delta
    twisted = left.transpose(0, 2, 1, 3)     # (sigma (x) id)(Delta (x) id) Delta
    out = []
    for k in range(C.dim):
        first = left[k] - right[k]
        second = right[k] - twisted[k]
        if not (is_zero(first) and is_zero(second)):
            out.append((k, freeze(first), freeze(second)))
    return out


def bialgebra_defects(B: PermBialgebra) -> dict[str, list]:
    """The three compatibility laws evaluated at every basis pair ``(e_i, e_j)``.

    Families::

        "delta_product":  D(ab) - (ad(a) (x) id)D(b) - (id (x) R(b))D(a)
        "twisted_right":  s(R(b) (x) id)D(a) - (R(a) (x) id)D(b)
        "delta_left":     D(ab) - (id (x) L(a))D(b) - (ad(b) (x) id)(D(a) - sD(a))

    Only nonzero defects are listed, as ``(i, j, tensor)``.
    """
    A, d = B.algebra, B.coproduct.d
    n = A.dim
    basis = identity(n)
    L = [left_mult(A, basis[i]) for i in range(n)]
    R = [right_mult(A, basis[i]) for i in range(n)]
    AD = [ad(A, basis[i]) for i in range(n)]
    delta_of_product = einsum("ijk,kpq->ijpq", A.c, d)
    out = {"delta_product": [], "twisted_right": [], "delta_left": []}
    for i in range(n):
        for j in range(n):
            dab = delta_of_product[i, j]
            f1 = dab - apply2(AD[i], None, d[j]) - apply2(None, R[j], d[i])
            f2 = apply2(R[j], None, d[i]).T - apply2(R[i], None, d[j])
            f3 = dab - apply2(None, L[i], d[j]) - apply2(AD[j], None, d[i] - d[i].T)
            for name, f in (("delta_product", f1), ("twisted_right", f2), ("delta_left", f3)):
                if not is_zero(f):
                    out[name].append((i, j, freeze(f)))
    return out


def coboundary_coproduct(A: PermAlgebra, r: TwoTensor) -> PermCoalgebra:
    """``Delta_r(a) = (id (x) R(a) - ad(a) (x) id)(r)`` on the basis."""
    if r.dim != A.dim:
        raise DimensionMismatch(f"tensor of dim {r.dim} over algebra of dim {A.dim}")
    basis = identity(A.dim)
    d = np.array([rad_invariance_tensor(A, r, basis[k]) for k in range(A.dim)],
                 dtype=object).reshape(A.dim, A.dim, A.dim)
    return PermCoalgebra(d, A.labels)


def dual_mult_r(A: PermAlgebra, r: TwoTensor) -> PermAlgebra:
    """``a* ._r b* = L*(T_r a*) b* + ad*(T_sigma(r) b*) a*`` on ``A*``.

    Computed directly from the operator formula; it must agree with the
    dual of :func:`coboundary_coproduct`.
    """
    if r.dim != A.dim:
        raise DimensionMismatch(f"tensor of dim {r.dim} over algebra of dim {A.dim}")
    n = A.dim
    T, Ts = t_map(r), t_map(twist(r))
    c = zeros(n, n, n)
    for p in range(n):
        for q in range(n):
            # L*(x) has matrix L(x)^T on the dual basis
            first = left_mult(A, T[:, p]).T[:, q]
            second = ad(A, Ts[:, q]).T[:, p]
            c[p, q] = first + second
    return PermAlgebra(c, tuple(f"{s}*" for s in A.labels))


def classify(A: PermAlgebra, r: TwoTensor) -> Classification:
    if r.dim != A.dim:
        raise DimensionMismatch(f"tensor of dim {r.dim} over algebra of dim {A.dim}")
    skew = r - twist(r)
    if not is_zero(pybe_defect(A, r)) or rad_invariance_defect(A, skew):
        return Classification.NotCoboundarySolution
    # rank first so the dimension-0 case is (vacuously) factorizable
    if rank(t_map(skew)) == A.dim:
        return Classification.Factorizable
    if skew.is_zero():
        return Classification.Triangular
    return Classification.QuasiTriangular


def factorize(A: PermAlgebra, r: TwoTensor, x) -> tuple[np.ndarray, np.ndarray]:
    """Split ``x = x1 - x2`` with ``(x1, x2)`` in the image of ``T_r (+) T_sigma(r)``."""
    if classify(A, r) is not Classification.Factorizable:
        raise NotFactorizable("r does not give a factorizable perm bialgebra")
    x = qarray(x)
    if x.shape != (A.dim,):
        raise DimensionMismatch(f"vector of shape {x.shape} in dimension {A.dim}")
    pre = invert(t_map(r - twist(r))).dot(x)
    return freeze(qarray(t_map(r).dot(pre))), freeze(qarray(t_map(twist(r)).dot(pre)))


def image_subalgebra_report(A: PermAlgebra, r: TwoTensor) -> dict:
    """Check ``a* -> (T_r a*, T_sigma(r) a*)`` against ``(A*, ._r) -> A (+) A``.

    Returns ``{"classification", "homomorphism_defects", "injective"}``;
    ``injective`` is reported as a rank check and is ``True`` whenever the
    classification is Factorizable.
    """
    cls = classify(A, r)
    if cls not in (Classification.QuasiTriangular, Classification.Factorizable,
                   Classification.Triangular):
        raise NotQuasiTriangular("r is not a quasi-triangular structure")
    phi = np.vstack([t_map(r), t_map(twist(r))])
    defects = is_homomorphism(dual_mult_r(A, r), direct_sum(A, A), phi)
    return {
        "classification": cls,
        "homomorphism_defects": defects,
        "injective": rank(phi) == A.dim,
    }
