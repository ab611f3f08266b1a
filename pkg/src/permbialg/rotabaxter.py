"""Rota-Baxter operators, quadratic perm algebras and their bialgebra correspondence.

A bilinear form is a square matrix ``B[i, j] = B(e_i, e_j)``.  Its sharp map
``A -> A*`` is ``a -> B(a, -)``; with the column-vector convention used
everywhere else, its matrix is ``B.T``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .algebra import PermAlgebra, perm_axiom_defects
from .bialgebra import Classification, classify
from .errors import (Degenerate, DimensionMismatch, NotFactorizable, NotQuadratic,
                     NotQuadraticRB, NotRotaBaxter, ZeroWeight)
from .linalg import Q, einsum, is_clean, freeze, identity, invert, is_zero, qarray, rank, scalar, zeros
from .representations import coadjoint_representation, semidirect_product
from .tensors import TwoTensor, from_t_map, t_map, twist
from .double import standard_form_Bd

__all__ = [
    "QuadraticRBData", "rb_defect", "sharp", "phi_of_form", "quadratic_defects",
    "quadratic_rb_defects", "companion", "semidirect_quadratic_rb", "qrb_to_r",
    "r_to_qrb", "rb_to_double_r", "prbw_defect", "is_clean", "search_rb_operators",
]


@dataclass(frozen=True, eq=False)
class QuadraticRBData:
    algebra: PermAlgebra
    form: np.ndarray
    operator: np.ndarray
    weight: Q

    def __post_init__(self):
        n = self.algebra.dim
        form, op = qarray(self.form), qarray(self.operator)
        if form.shape != (n, n) or op.shape != (n, n):
            raise DimensionMismatch(
                f"form {form.shape} and operator {op.shape} over dim {n}")
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "operator", op)
        object.__setattr__(self, "weight", scalar(self.weight))

    def __eq__(self, other):
        if not isinstance(other, QuadraticRBData):
            return NotImplemented
        return (self.algebra == other.algebra and self.weight == other.weight
                and bool((self.form == other.form).all())
                and bool((self.operator == other.operator).all()))

    __hash__ = None


def _square(A: PermAlgebra, M, what="operator") -> np.ndarray:
    M = qarray(M)
    if M.shape != (A.dim, A.dim):
        raise DimensionMismatch(f"{what} of shape {M.shape} on dim {A.dim}")
    return M


def _mul(A, x, y):
    return einsum("i,j,ijk->k", x, y, A.c)


def rb_defect(A: PermAlgebra, P, weight) -> list[tuple]:
    """Pairs ``(i, j, P(a)P(b) - P(P(a)b + aP(b) + weight ab))`` that are nonzero."""
    P = _square(A, P)
    lam = scalar(weight)
    n = A.dim
    basis = identity(n)
    out = []
    for i in range(n):
        for j in range(n):
            a, b = basis[i], basis[j]
            lhs = _mul(A, P[:, i], P[:, j])
            inner = _mul(A, P[:, i], b) + _mul(A, a, P[:, j]) + lam * A.c[i, j]
            d = lhs - P.dot(inner)
            if not is_zero(d):
                out.append((i, j, freeze(qarray(d))))
    return out


def sharp(form) -> np.ndarray:
    """Matrix of ``a -> B(a, -)``; column ``i`` holds ``B(e_i, -)`` on the dual basis."""
    B = qarray(form)
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise DimensionMismatch(f"form must be square, got {B.shape}")
    if rank(B) != B.shape[0]:
        raise Degenerate("bilinear form is degenerate")
    return freeze(B.T.copy())


def phi_of_form(form) -> TwoTensor:
    """The 2-tensor whose map ``A* -> A`` is the inverse of the sharp map."""
    return from_t_map(invert(sharp(form)))


def quadratic_defects(A: PermAlgebra, form) -> dict:
    """Skew-symmetry, nondegeneracy and invariance ``B(ab, c) = B(a, bc - cb)``.

    Keys: ``skew`` (pairs ``(i, j, B_ij + B_ji)``), ``rank`` (an int, not a
    defect list), ``degenerate`` (``[rank]`` when not full rank),
    ``invariance`` (triples ``(i, j, k, defect)``).
    """
    B = _square(A, form, "form")
    n = A.dim
    skew = [(i, j, B[i, j] + B[j, i]) for i in range(n) for j in range(i, n)
            if B[i, j] + B[j, i] != 0]
    rk = rank(B)
    # B(e_i e_j, e_k) - B(e_i, e_j e_k - e_k e_j)
    lhs = einsum("ijm,mk->ijk", A.c, B)
    rhs = einsum("im,jkm->ijk", B, A.c) - einsum("im,kjm->ijk", B, A.c)
    diff = lhs - rhs
    inv = [(i, j, k, diff[i, j, k]) for i, j, k in np.ndindex(diff.shape) if diff[i, j, k] != 0]
    return {"skew": skew, "rank": rk, "degenerate": [] if rk == n else [rk],
            "invariance": inv}


def quadratic_rb_defects(D: QuadraticRBData) -> dict:
    """Everything needed for a quadratic Rota-Baxter perm algebra of weight ``D.weight``.

    Adds ``perm``, ``rota_baxter`` and ``compatibility`` (pairs with
    ``B(Pa, b) + B(a, Pb) + weight B(a, b) != 0``) to :func:`quadratic_defects`.
    """
    A, B, P, lam = D.algebra, D.form, D.operator, D.weight
    report = quadratic_defects(A, B)
    report["perm"] = perm_axiom_defects(A)
    report["rota_baxter"] = rb_defect(A, P, lam)
    compat = P.T.dot(B) + B.dot(P) + B * lam
    report["compatibility"] = [(i, j, scalar(compat[i, j])) for i, j in np.ndindex(compat.shape)
                               if compat[i, j] != 0]
    return report


def companion(D: QuadraticRBData) -> QuadraticRBData:
    """``(A, -B, -(weight id + P), weight)``."""
    n = D.algebra.dim
    return QuadraticRBData(D.algebra, -D.form, -(identity(n) * D.weight + D.operator), D.weight)


def semidirect_quadratic_rb(A: PermAlgebra, P, weight) -> QuadraticRBData:
    """``(A x| A*, B_d, P - (weight id + P)*)`` on the coadjoint semidirect product."""
    P = _square(A, P)
    lam = scalar(weight)
    if rb_defect(A, P, lam):
        raise NotRotaBaxter(f"P is not a Rota-Baxter operator of weight {lam}")
    n = A.dim
    op = zeros(2 * n, 2 * n)
    op[:n, :n] = P
    op[n:, n:] = -(identity(n) * lam + P).T
    algebra = semidirect_product(coadjoint_representation(A))
    return QuadraticRBData(algebra, standard_form_Bd(n), op, lam)


def qrb_to_r(D: QuadraticRBData) -> TwoTensor:
    """The 2-tensor with ``T_r = P o (B sharp)^-1``."""
    if not is_clean(quadratic_rb_defects(D)):
        raise NotQuadraticRB("input is not a quadratic Rota-Baxter perm algebra")
    return from_t_map(D.operator.dot(invert(sharp(D.form))))


def r_to_qrb(A: PermAlgebra, r: TwoTensor, weight) -> QuadraticRBData:
    """``B(a, b) = -weight <T_{r - sr}^-1 a, b>`` and ``P = T_r o B sharp``."""
    lam = scalar(weight)
    if lam == 0:
        raise ZeroWeight("the weight must be nonzero")
    if classify(A, r) is not Classification.Factorizable:
        raise NotFactorizable("r does not give a factorizable perm bialgebra")
    inv = invert(t_map(r - twist(r)))
    B = -lam * inv.T           # B[i, j] = -lam * (T^-1 e_i)_j
    P = t_map(r).dot(sharp(B))
    return QuadraticRBData(A, B, P, lam)


def rb_to_double_r(A: PermAlgebra, P, weight) -> TwoTensor:
    """``sum_i (P + weight id)(e_i) (x) e_i* + e_i* (x) P(e_i)`` on ``A x| A*``."""
    P = _square(A, P)
    lam = scalar(weight)
    if lam == 0:
        raise ZeroWeight("the weight must be nonzero")
    if rb_defect(A, P, lam):
        raise NotRotaBaxter(f"P is not a Rota-Baxter operator of weight {lam}")
    n = A.dim
    t = zeros(2 * n, 2 * n)
    t[:n, n:] = P + identity(n) * lam     # t[k, n+i] = (P + lam)[k, i]
    t[n:, :n] = P.T                       # t[n+i, k] = P[k, i]
    return TwoTensor(t)


def prbw_defect(A: PermAlgebra, form, r: TwoTensor) -> list[tuple]:
    """Defects of ``P(a)P(b) = P(P(a)b + aP(b) - a T_{r - sr} B#(b))`` with ``P = T_r B#``."""
    q = quadratic_defects(A, form)
    if not is_clean(q):
        raise NotQuadratic("form is not a nondegenerate skew-symmetric invariant form")
    if r.dim != A.dim:
        raise DimensionMismatch(f"tensor of dim {r.dim} over algebra of dim {A.dim}")
    S = sharp(form)
    P = t_map(r).dot(S)
    K = t_map(r - twist(r)).dot(S)
    n = A.dim
    basis = identity(n)
    out = []
    for i in range(n):
        for j in range(n):
            a = basis[i]
            lhs = _mul(A, P[:, i], P[:, j])
            inner = _mul(A, P[:, i], basis[j]) + _mul(A, a, P[:, j]) - _mul(A, a, K[:, j])
            d = lhs - P.dot(inner)
            if not is_zero(d):
                out.append((i, j, freeze(qarray(d))))
    return out


def search_rb_operators(A: PermAlgebra, weight, entries=range(-2, 3), nontrivial=True):
    """Every ``P`` with entries in ``entries`` that is Rota-Baxter of the given weight.

    With ``nontrivial`` the solutions ``0`` and ``-weight * id`` are skipped.
    """
    lam = scalar(weight)
    n = A.dim
    found = []
    for flat in itertools.product(entries, repeat=n * n):
        P = qarray(flat, (n, n))
        if nontrivial and (is_zero(P) or is_zero(P + identity(n) * lam)):
            continue
        if not rb_defect(A, P, lam):
            found.append(P)
    return found
