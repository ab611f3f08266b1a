"""Representations, A-perm algebras and relative Rota-Baxter operators.

A representation stores one ``l`` and one ``r`` matrix per basis element of
the base algebra, as arrays of shape ``(n, m, m)``; values at a general
element are taken by linearity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import PermAlgebra, ad, left_mult, perm_axiom_defects, right_mult
from .errors import DimensionMismatch, NotARepresentation, NotInvariant, NotSkew
from .linalg import einsum, freeze, identity, is_zero, qarray, scalar, zeros
from .tensors import TwoTensor, rad_invariance_defect, t_map, twist

__all__ = [
    "Representation", "APermAlgebra", "regular_representation",
    "coadjoint_representation", "representation_defects", "dual_representation",
    "semidirect_product", "a_perm_algebra_defects", "diamond_from_skew",
    "relative_rb_defect", "operator_form_defects", "regular_a_perm_algebra",
]


@dataclass(frozen=True, eq=False)
class Representation:
    base: PermAlgebra
    l: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        l, r = qarray(self.l), qarray(self.r)
        n = self.base.dim
        if l.ndim != 3 or l.shape != r.shape or l.shape[0] != n or l.shape[1] != l.shape[2]:
            raise DimensionMismatch(
                f"expected l, r of shape ({n}, m, m); got {l.shape} and {r.shape}")
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "r", r)

    @property
    def vdim(self) -> int:
        return self.l.shape[1]

    def left(self, x) -> np.ndarray:
        return einsum("i,ipq->pq", qarray(x), self.l)

    def right(self, x) -> np.ndarray:
        return einsum("i,ipq->pq", qarray(x), self.r)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.base == other.base and self.l.shape == other.l.shape
                and bool((self.l == other.l).all()) and bool((self.r == other.r).all()))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class APermAlgebra:
    """A representation ``(V, l, r)`` with a multiplication table on ``V``."""

    rep: Representation
    vmult: np.ndarray

    def __post_init__(self):
        v = qarray(self.vmult)
        m = self.rep.vdim
        if v.shape != (m, m, m):
            raise DimensionMismatch(f"vmult must be {m}x{m}x{m}, got {v.shape}")
        object.__setattr__(self, "vmult", v)

    @property
    def space(self) -> PermAlgebra:
        return PermAlgebra(self.vmult)

    def __eq__(self, other):
        if not isinstance(other, APermAlgebra):
            return NotImplemented
        return self.rep == other.rep and bool((self.vmult == other.vmult).all())

    __hash__ = None


def _operators(A: PermAlgebra, op) -> np.ndarray:
    basis = identity(A.dim)
    out = zeros(A.dim, A.dim, A.dim)
    for i in range(A.dim):
        out[i] = op(A, basis[i])
    return out


def regular_representation(A: PermAlgebra) -> Representation:
    """``(A, L, R)``."""
    return Representation(A, _operators(A, left_mult), _operators(A, right_mult))


def coadjoint_representation(A: PermAlgebra) -> Representation:
    """``(A*, L*, ad*)``."""
    return Representation(A, _operators(A, left_mult).transpose(0, 2, 1),
                          _operators(A, ad).transpose(0, 2, 1))


def regular_a_perm_algebra(A: PermAlgebra) -> APermAlgebra:
    """``(A, L, R, .)``."""
    return APermAlgebra(regular_representation(A), A.c)


def representation_defects(rho: Representation) -> dict[str, list]:
    """Matrix defects of the two representation identity chains.

    ``l(ab) = l(a)l(b) = l(b)l(a)`` gives families ``l_product`` and
    ``l_commute``; ``r(ab) = r(b)r(a) = r(b)l(a) = l(a)r(b)`` gives
    ``r_product``, ``r_rr_rl`` and ``r_rl_lr``.  Entries are ``(i, j, matrix)``.
    """
    A, l, r = rho.base, rho.l, rho.r
    n = A.dim
    l_ab = einsum("ijk,kpq->ijpq", A.c, l)
    r_ab = einsum("ijk,kpq->ijpq", A.c, r)
    names = ("l_product", "l_commute", "r_product", "r_rr_rl", "r_rl_lr")
    out = {k: [] for k in names}
    for i in range(n):
        for j in range(n):
            a, b = i, j
            values = (
                l_ab[a, b] - l[a].dot(l[b]),
                l[a].dot(l[b]) - l[b].dot(l[a]),
                r_ab[a, b] - r[b].dot(r[a]),
                r[b].dot(r[a]) - r[b].dot(l[a]),
                r[b].dot(l[a]) - l[a].dot(r[b]),
            )
            for name, v in zip(names, values):
                if not is_zero(v):
                    out[name].append((i, j, freeze(qarray(v))))
    return out


def _clean(report: dict) -> bool:
    return not any(report.values())


def dual_representation(rho: Representation) -> Representation:
    """``(V*, l*, l* - r*)``."""
    if not _clean(representation_defects(rho)):
        raise NotARepresentation("input fails the representation identities")
    lt = rho.l.transpose(0, 2, 1)
    return Representation(rho.base, lt, lt - rho.r.transpose(0, 2, 1))


def _semidirect(rho: Representation, vmult) -> PermAlgebra:
    A = rho.base
    n, m = A.dim, rho.vdim
    c = zeros(n + m, n + m, n + m)
    c[:n, :n, :n] = A.c
    for i in range(n):
        for q in range(m):
            c[i, n + q, n:] = rho.l[i][:, q]     # e_i . v_q = l(e_i) v_q
            c[n + q, i, n:] = rho.r[i][:, q]     # v_q . e_i = r(e_i) v_q
    if vmult is not None:
        c[n:, n:, n:] = vmult
    labels = A.labels + tuple(f"v{q + 1}" for q in range(m))
    if len(set(labels)) != n + m:
        labels = ()
    return PermAlgebra(c, labels)


def semidirect_product(rho: Representation) -> PermAlgebra:
    """``A (+) V`` with ``(a+u)(b+v) = ab + l(a)v + r(b)u``; basis ``(e..., v...)``."""
    return _semidirect(rho, None)


def a_perm_algebra_defects(X: APermAlgebra) -> dict[str, list]:
    """Representation, ``V``-perm and both action-compatibility defect families.

    ``r(a)(uw) = r(a)(wu) = u(r(a)w)`` yields ``r_swap``, ``r_inner`` and
    ``(l(a)u)w = (r(a)u)w = l(a)(uw) = u(l(a)w)`` yields ``l_outer``,
    ``l_r_outer``, ``l_inner``; entries are ``(i, p, q, vector)``.
    """
    rho = X.rep
    out = dict(representation_defects(rho))
    out["v_perm"] = perm_axiom_defects(X.space)
    m = rho.vdim
    v = X.vmult
    # products u.w as vectors: uw[p, q] = v[p, q, :]
    names = ("r_swap", "r_inner", "l_outer", "l_r_outer", "l_inner")
    for name in names:
        out[name] = []
    for i in range(rho.base.dim):
        l, r = rho.l[i], rho.r[i]
        for p in range(m):
            for q in range(m):
                r_uw = r.dot(v[p, q])
                r_wu = r.dot(v[q, p])
                u_rw = einsum("y,yk->k", r[:, q], v[p])
                lu_w = einsum("x,xk->k", l[:, p], v[:, q])
                ru_w = einsum("x,xk->k", r[:, p], v[:, q])
                l_uw = l.dot(v[p, q])
                u_lw = einsum("y,yk->k", l[:, q], v[p])
                values = (r_uw - r_wu, r_wu - u_rw, lu_w - ru_w, ru_w - l_uw, l_uw - u_lw)
                for name, val in zip(names, values):
                    if not is_zero(val):
                        out[name].append((i, p, q, freeze(qarray(val))))
    return out


def diamond_from_skew(A: PermAlgebra, s: TwoTensor) -> APermAlgebra:
    """``(A*, L*, ad*, <>_s)`` with ``a* <> b* = L*(T_s a*) b*``."""
    if s.dim != A.dim:
        raise DimensionMismatch(f"tensor of dim {s.dim} over algebra of dim {A.dim}")
    if not s.is_skew():
        raise NotSkew("tensor is not skew-symmetric")
    if rad_invariance_defect(A, s):
        raise NotInvariant("tensor is not (R, ad)-invariant")
    return APermAlgebra(coadjoint_representation(A), _diamond_table(A, s))


def _diamond_table(A: PermAlgebra, s: TwoTensor) -> np.ndarray:
    n = A.dim
    T = t_map(s)
    v = zeros(n, n, n)
    for p in range(n):
        Lt = left_mult(A, T[:, p]).T
        for q in range(n):
            v[p, q] = Lt[:, q]
    return v


def relative_rb_defect(X: APermAlgebra, T, weight) -> list[tuple]:
    """Pairs ``(p, q, T(u)T(w) - T(l(Tu)w + r(Tw)u + weight u.w))`` that are nonzero."""
    A, rho = X.rep.base, X.rep
    T = qarray(T)
    lam = scalar(weight)
    if T.shape != (A.dim, rho.vdim):
        raise DimensionMismatch(f"T must map dim {rho.vdim} to dim {A.dim}, got {T.shape}")
    m = rho.vdim
    out = []
    for p in range(m):
        for q in range(m):
            Tu, Tw = T[:, p], T[:, q]
            lhs = einsum("i,j,ijk->k", Tu, Tw, A.c)
            inner = rho.left(Tu)[:, q] + rho.right(Tw)[:, p] + lam * X.vmult[p, q]
            d = lhs - T.dot(inner)
            if not is_zero(d):
                out.append((p, q, freeze(qarray(d))))
    return out


def operator_form_defects(A: PermAlgebra, r: TwoTensor) -> dict[str, list]:
    """Defects of the three operator identities at dual basis pairs.

    With ``M(a*, b*) = L*(T_r a*) b* + ad*(T_sr b*) a*``::

        "T_r":      T_r a* . T_r b*   - T_r M(a*, b*)
        "T_sigma":  T_sr a* . T_sr b* - T_sr M(a*, b*)
        "relative_rb":  T_r a* . T_r b*
                        - T_r(L*(T_r a*) b* + ad*(T_r b*) a* - a* <>_{r - sr} b*)

    The last is the weight ``-1`` relative Rota-Baxter condition against
    ``(A*, L*, ad*, <>_{r - sr})``, computed whether or not ``r - sr`` is
    invariant.
    """
    if r.dim != A.dim:
        raise DimensionMismatch(f"tensor of dim {r.dim} over algebra of dim {A.dim}")
    n = A.dim
    T, Ts = t_map(r), t_map(twist(r))
    rho = coadjoint_representation(A)
    diamond = _diamond_table(A, r - twist(r))
    out = {"T_r": [], "T_sigma": [], "relative_rb": []}
    for p in range(n):
        for q in range(n):
            M = rho.left(T[:, p])[:, q] + rho.right(Ts[:, q])[:, p]
            f1 = einsum("i,j,ijk->k", T[:, p], T[:, q], A.c) - T.dot(M)
            f2 = einsum("i,j,ijk->k", Ts[:, p], Ts[:, q], A.c) - Ts.dot(M)
            inner = rho.left(T[:, p])[:, q] + rho.right(T[:, q])[:, p] - diamond[p, q]
            f3 = einsum("i,j,ijk->k", T[:, p], T[:, q], A.c) - T.dot(inner)
            for name, f in (("T_r", f1), ("T_sigma", f2), ("relative_rb", f3)):
                if not is_zero(f):
                    out[name].append((p, q, freeze(qarray(f))))
    return out
