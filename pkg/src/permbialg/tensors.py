"""2- and 3-tensors over a perm algebra.

A 2-tensor is stored as ``t[i, j]`` with ``r = sum t[i,j] e_i (x) e_j`` and a
3-tensor as a plain ``(n, n, n)`` rational array.  ``(X (x) Y)(r)`` is then
``X t Y^T``.

``T_r : A* -> A`` pairs the first tensor slot, ``T_r(e_i*) = sum_j t[i,j] e_j``,
so its matrix is ``t.T`` and the matrix of ``T_sigma(r)`` is ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np
from gmpy2 import mpq

from .algebra import PermAlgebra, ad, right_mult
from .errors import DimensionMismatch
from .linalg import Q, einsum, freeze, is_zero, qarray, scalar, zeros

__all__ = [
    "TwoTensor", "PLACEMENTS", "twist", "skew_part", "t_map", "from_t_map",
    "apply2", "apply3", "on_slot", "swap12", "placement_product", "pybe_defect",
    "rad_invariance_defect", "rad_invariance_tensor", "coboundary_conditions_defect",
]


@dataclass(frozen=True, eq=False)
class TwoTensor:
    t: np.ndarray

    def __post_init__(self):
        t = qarray(self.t)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise DimensionMismatch(f"2-tensor table must be square, got {t.shape}")
        object.__setattr__(self, "t", t)

    @property
    def dim(self) -> int:
        return self.t.shape[0]

    @classmethod
    def zero(cls, n: int) -> "TwoTensor":
        return cls(zeros(n, n))

    @classmethod
    def from_terms(cls, n: int, terms: dict) -> "TwoTensor":
        """Build from ``{(i, j): coeff}``."""
        t = zeros(n, n)
        for (i, j), v in terms.items():
            t[i, j] += scalar(v)
        return cls(t)

    def _other(self, other) -> np.ndarray:
        if not isinstance(other, TwoTensor):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatch(f"tensors of dims {self.dim} and {other.dim}")
        return other.t

    def __add__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else TwoTensor(self.t + o)

    def __sub__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else TwoTensor(self.t - o)

    def __neg__(self):
        return TwoTensor(-self.t)

    def __mul__(self, k):
        k = scalar(k)
        return TwoTensor(self.t * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TwoTensor):
            return NotImplemented
        return self.t.shape == other.t.shape and bool((self.t == other.t).all())

    __hash__ = None

    def is_zero(self) -> bool:
        return is_zero(self.t)

    def is_symmetric(self) -> bool:
        return bool((self.t == self.t.T).all())

    def is_skew(self) -> bool:
        return is_zero(self.t + self.t.T)

    def __repr__(self):
        nz = {(i, j): str(v) for (i, j), v in np.ndenumerate(self.t) if v}
        return f"TwoTensor(dim={self.dim}, nonzero={nz})"


def twist(r: TwoTensor) -> TwoTensor:
    return TwoTensor(r.t.T)


def skew_part(r: TwoTensor) -> TwoTensor:
    return (r - twist(r)) * mpq(1, 2)


def t_map(r: TwoTensor) -> np.ndarray:
    return freeze(r.t.T.copy())


def from_t_map(T) -> TwoTensor:
    """The 2-tensor whose associated map ``A* -> A`` is ``T``."""
    return TwoTensor(qarray(T).T)


def apply2(X, Y, t) -> np.ndarray:
    """``(X (x) Y)`` applied to a 2-tensor table; ``None`` means identity."""
    if X is not None:
        t = np.asarray(X, dtype=object).dot(t)
    if Y is not None:
        t = t.dot(np.asarray(Y, dtype=object).T)
    return _fracs(t)


def on_slot(M, u, slot: int) -> np.ndarray:
    """Apply the matrix ``M`` to one tensor leg of ``u``."""
    out = np.tensordot(np.asarray(M, dtype=object), u, axes=([1], [slot]))
    return _fracs(np.moveaxis(out, 0, slot))


def apply3(X, Y, Z, u) -> np.ndarray:
    """``(X (x) Y (x) Z)`` applied to a 3-tensor table; ``None`` means identity."""
    for slot, M in enumerate((X, Y, Z)):
        if M is not None:
            u = on_slot(M, u, slot)
    return u


def _fracs(arr) -> np.ndarray:
    # object dot products of rationals stay rational except for empty sums
    if all(isinstance(x, Q) for x in arr.flat):
        return arr
    return np.vectorize(scalar, otypes=[object])(arr)


def swap12(u) -> np.ndarray:
    """``(sigma (x) id)`` on a 3-tensor."""
    return u.transpose(1, 0, 2).copy()


# r = sum a_i (x) b_i with coefficients t, r' likewise with t'.  Each entry
# names where the product lands and how the legs are laid out.
_PLACEMENT_SPECS = {
    "12.23": "px,ys,xyq->pqs",   # a_i (x) b_i a'_j (x) b'_j
    "13.23": "px,qy,xys->pqs",   # a_i (x) a'_j (x) b_i b'_j
    "13.12": "xs,yq,xyp->pqs",   # a_i a'_j (x) b'_j (x) b_i
    "12.13": "xq,ys,xyp->pqs",   # a_i a'_j (x) b_i (x) b'_j
    "23.13": "qx,py,xys->pqs",   # a'_j (x) a_i (x) b_i b'_j
    "23.12": "xs,py,xyq->pqs",   # a'_j (x) a_i b'_j (x) b_i
}
PLACEMENTS = tuple(_PLACEMENT_SPECS)


def _same_dim(A: PermAlgebra, *tensors: TwoTensor):
    for r in tensors:
        if r.dim != A.dim:
            raise DimensionMismatch(f"tensor of dim {r.dim} over algebra of dim {A.dim}")


def placement_product(A: PermAlgebra, r: TwoTensor, r2: TwoTensor, placement: str) -> np.ndarray:
    """The 3-tensor ``r_{ab} . r2_{cd}`` for ``placement`` like ``"12.23"``."""
    _same_dim(A, r, r2)
    try:
        spec = _PLACEMENT_SPECS[placement]
    except KeyError:
        raise ValueError(f"unknown placement {placement!r}; choose from {PLACEMENTS}") from None
    return einsum(spec, r.t, r2.t, A.c)


def pybe_defect(A: PermAlgebra, r: TwoTensor) -> np.ndarray:
    """``[[r, r]] = r12.r23 - r13.r23 + r12.r13 - r13.r12``."""
    p = lambda pl: placement_product(A, r, r, pl)
    return freeze(p("12.23") - p("13.23") + p("12.13") - p("13.12"))


def rad_invariance_tensor(A: PermAlgebra, r: TwoTensor, x) -> np.ndarray:
    """``(id (x) R(x) - ad(x) (x) id)(r)``."""
    _same_dim(A, r)
    return apply2(None, right_mult(A, x), r.t) - apply2(ad(A, x), None, r.t)


def _basis(n: int, i: int) -> np.ndarray:
    e = zeros(n)
    e[i] = mpq(1)
    return e


def rad_invariance_defect(A: PermAlgebra, r: TwoTensor) -> list[tuple[int, TwoTensor]]:
    out = []
    for i in range(A.dim):
        d = rad_invariance_tensor(A, r, _basis(A.dim, i))
        if not is_zero(d):
            out.append((i, TwoTensor(d)))
    return out


def coboundary_conditions_defect(A: PermAlgebra, r: TwoTensor) -> dict[str, list]:
    """The four conditions for ``(A, Delta_r)`` to be a perm bialgebra.

    The first two are evaluated at basis pairs ``(a, b) = (e_i, e_j)``, the
    last two at basis elements ``a = e_i``, matching the way the conditions
    are usually displayed (the last two have only ``a`` free).  Only nonzero
    defects are listed.
    """
    _same_dim(A, r)
    n = A.dim
    s = r.t - r.t.T                         # r - sigma(r)
    skew = TwoTensor(s)
    neg = TwoTensor(-s)                     # sigma(r) - r
    R = [right_mult(A, _basis(n, i)) for i in range(n)]
    AD = [ad(A, _basis(n, i)) for i in range(n)]
    out = {"RR": [], "RR_ad_ad": [], "third": [], "fourth": []}

    for i in range(n):
        for j in range(n):
            d1 = apply2(R[i], R[j], s)
            if not is_zero(d1):
                out["RR"].append((i, j, freeze(d1)))
            # R(b.a) - R(a.b) with a = e_i, b = e_j
            rba = right_mult(A, A.c[j, i])
            rab = right_mult(A, A.c[i, j])
            d2 = apply2(rba - rab, None, s) - apply2(AD[j], AD[i], s)
            if not is_zero(d2):
                out["RR_ad_ad"].append((i, j, freeze(d2)))

    rr = pybe_defect(A, r)
    pp = lambda x, y, pl: placement_product(A, x, y, pl)
    bracket3 = pp(neg, r, "12.23") + pp(neg, r, "12.13") - pp(r, neg, "13.12")
    skew_12_23 = pp(skew, r, "12.23")
    skew_12_13 = pp(skew, r, "12.13")
    for i in range(n):
        d3 = (apply3(None, None, R[i], rr)
              - apply3(AD[i], None, None, swap12(rr + bracket3)))
        if not is_zero(d3):
            out["third"].append((i, freeze(d3)))
        d4 = (apply3(None, None, R[i], rr - swap12(rr))
              - apply3(None, AD[i], None, skew_12_23)
              - apply3(AD[i], None, None, skew_12_13))
        if not is_zero(d4):
            out["fourth"].append((i, freeze(d4)))
    return out
