"""The double perm algebra ``A (+) A*`` of a perm bialgebra.

Basis order on the double is ``(e_1..e_n, e_1*..e_n*)``; every tensor and
form on the double uses it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (PermAlgebra, ad, direct_sum, dual_algebra_from_coproduct,
                      is_homomorphism, left_mult, perm_axiom_defects)
from .bialgebra import (Classification, PermBialgebra, bialgebra_defects, classify,
                        coalgebra_defects, coboundary_coproduct)
from .errors import NotABialgebra, NotFactorizable
from .linalg import freeze, identity, rank, zeros
from .tensors import TwoTensor, t_map, twist

__all__ = ["DoubleAlgebra", "build_double", "canonical_r", "double_iso", "standard_form_Bd"]


@dataclass(frozen=True, eq=False)
class DoubleAlgebra:
    base: PermBialgebra
    total: PermAlgebra

    @property
    def n(self) -> int:
        return self.base.dim


def bialgebra_report(B: PermBialgebra) -> dict[str, list]:
    """All defect families of a candidate bialgebra in one dict."""
    report = {"perm": perm_axiom_defects(B.algebra),
              "coalgebra": coalgebra_defects(B.coproduct)}
    report.update(bialgebra_defects(B))
    return report


def build_double(B: PermBialgebra) -> DoubleAlgebra:
    report = bialgebra_report(B)
    bad = [k for k, v in report.items() if v]
    if bad:
        raise NotABialgebra(f"input fails: {', '.join(bad)}")
    A = B.algebra
    D = dual_algebra_from_coproduct(B.coproduct)
    n = A.dim
    basis = identity(n)
    LA = [left_mult(A, basis[i]).T for i in range(n)]   # L*_A(e_i)
    adA = [ad(A, basis[i]).T for i in range(n)]         # ad*_A(e_i)
    LD = [left_mult(D, basis[i]).T for i in range(n)]   # L*_{A*}(e_i*)
    adD = [ad(D, basis[i]).T for i in range(n)]         # ad*_{A*}(e_i*)
    c = zeros(2 * n, 2 * n, 2 * n)
    c[:n, :n, :n] = A.c
    c[n:, n:, n:] = D.c
    for i in range(n):
        for j in range(n):
            # e_i . e_j* = ad*_{A*}(e_j*) e_i + L*_A(e_i) e_j*
            c[i, n + j, :n] = adD[j][:, i]
            c[i, n + j, n:] = LA[i][:, j]
            # e_i* . e_j = L*_{A*}(e_i*) e_j + ad*_A(e_j) e_i*
            c[n + i, j, :n] = LD[i][:, j]
            c[n + i, j, n:] = adA[j][:, i]
    labels = A.labels + tuple(f"{s}*" for s in A.labels)
    if len(set(labels)) != 2 * n:
        labels = ()
    return DoubleAlgebra(B, PermAlgebra(c, labels))


def canonical_r(n: int) -> TwoTensor:
    """``r = sum_i e_i (x) e_i*`` on the ``2n``-dimensional double."""
    t = zeros(2 * n, 2 * n)
    for i in range(n):
        t[i, n + i] = 1
    return TwoTensor(t)


def double_iso(A: PermAlgebra, r: TwoTensor) -> tuple[np.ndarray, dict]:
    """``phi(a) = (a, a)``, ``phi(a*) = (T_r a*, T_sr a*)`` from the double of ``(A, Delta_r)``.

    Returns the ``2n x 2n`` matrix of ``phi`` and a report with keys
    ``invertible`` and ``homomorphism_defects``.
    """
    if classify(A, r) is not Classification.Factorizable:
        raise NotFactorizable("r does not give a factorizable perm bialgebra")
    n = A.dim
    double = build_double(PermBialgebra(A, coboundary_coproduct(A, r)))
    phi = zeros(2 * n, 2 * n)
    phi[:n, :n] = identity(n)
    phi[n:, :n] = identity(n)
    phi[:n, n:] = t_map(r)
    phi[n:, n:] = t_map(twist(r))
    report = {
        "invertible": rank(phi) == 2 * n,
        "homomorphism_defects": is_homomorphism(double.total, direct_sum(A, A), phi),
    }
    return freeze(phi), report


def standard_form_Bd(n: int) -> np.ndarray:
    """``B_d(a + a*, b + b*) = <a, b*> - <a*, b>`` as ``[[0, I], [-I, 0]]``."""
    B = zeros(2 * n, 2 * n)
    B[:n, n:] = identity(n)
    B[n:, :n] = -identity(n)
    return freeze(B)
