"""Named desk-scale instances.

Every entry advertises properties (``perm``, ``bialgebra``, a
classification name, ``quadratic-rb``, or ``not-perm`` for the deliberately
broken algebra) that are re-verified when the catalog is built.  Searched
entries (Rota-Baxter operators, PYBE solutions) come from exhaustive
enumeration over entries in {-1, 0, 1}, taking the first hit in
``itertools.product`` order, so the catalog is deterministic.
"""

from __future__ import annotations

import copy
import functools
import itertools
from dataclasses import dataclass

from .algebra import PermAlgebra, direct_sum, perm_axiom_defects, zero_algebra
from .bialgebra import Classification, classify, trivial_bialgebra
from .double import bialgebra_report, build_double, canonical_r
from .errors import UnknownName
from .linalg import is_clean, qarray, zeros
from .rotabaxter import quadratic_rb_defects, r_to_qrb, search_rb_operators, semidirect_quadratic_rb
from .tensors import TwoTensor

__all__ = ["TensorInstance", "CatalogEntry", "get", "names", "entries", "verify", "self_test",
           "nilp2", "lperm2", "broken2", "SMALL"]

SMALL = (-1, 0, 1)


@dataclass(frozen=True, eq=False)
class TensorInstance:
    """A 2-tensor together with the algebra it lives over."""

    algebra: PermAlgebra
    tensor: TwoTensor


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str            # "algebra" | "bialgebra" | "tensor" | "quadratic-rb"
    payload: object
    properties: tuple[str, ...]
    provenance: str


def nilp2() -> PermAlgebra:
    return PermAlgebra.from_products(2, {(0, 0): {1: 1}})


def lperm2() -> PermAlgebra:
    return PermAlgebra.from_products(2, {(0, 0): {0: 1}, (0, 1): {1: 1}})


def broken2() -> PermAlgebra:
    """``e1 e2 = e1`` only: associative but not left-commutative."""
    return PermAlgebra.from_products(2, {(0, 1): {0: 1}})


def _first_tensor(A: PermAlgebra, want: Classification, pred=lambda t: True) -> TwoTensor:
    n = A.dim
    for flat in itertools.product(SMALL, repeat=n * n):
        r = TwoTensor(qarray(flat, (n, n)))
        if not r.is_zero() and pred(r) and classify(A, r) is want:
            return r
    raise LookupError(f"no {want.value} tensor with small entries")


def _embed_first(r: TwoTensor, total: int) -> TwoTensor:
    t = zeros(total, total)
    t[:r.dim, :r.dim] = r.t
    return TwoTensor(t)


def _build() -> dict[str, CatalogEntry]:
    out: dict[str, CatalogEntry] = {}

    def add(name, kind, payload, props, prov):
        out[name] = CatalogEntry(name, kind, payload, tuple(props), prov)

    algebras = {f"zero{n}": zero_algebra(n) for n in range(1, 5)}
    algebras["nilp2"] = nilp2()
    algebras["lperm2"] = lperm2()
    algebras["lperm2+lperm2"] = direct_sum(lperm2(), lperm2())
    for name, A in algebras.items():
        add(name, "algebra", A, ["perm"], "defined by structure constants")
    add("broken2", "algebra", broken2(), ["not-perm"],
        "e1 e2 = e1; left-commutativity fails at (e1, e2, e2)")

    for name, A in algebras.items():
        B = trivial_bialgebra(A)
        add(f"trivial-{name}", "bialgebra", B, ["bialgebra"], f"{name} with zero coproduct")
        D = build_double(B)
        add(f"double-{name}", "tensor", TensorInstance(D.total, canonical_r(A.dim)),
            ["Factorizable"], f"double of trivial-{name} with canonical r")

    lp = algebras["lperm2"]
    z2 = algebras["zero2"]
    add("zero2-skew", "tensor", TensorInstance(z2, TwoTensor.from_terms(2, {(0, 1): 1, (1, 0): -1})),
        ["Factorizable"], "e1(x)e2 - e2(x)e1 over zero2")
    add("lperm2-zero", "tensor", TensorInstance(lp, TwoTensor.zero(2)), ["Triangular"], "r = 0")
    add("lperm2-e11", "tensor", TensorInstance(lp, TwoTensor.from_terms(2, {(0, 0): 1})),
        ["Triangular"], "e1(x)e1 over lperm2; symmetric and solves the PYBE")
    fact = _first_tensor(lp, Classification.Factorizable)
    add("lperm2-fact", "tensor", TensorInstance(lp, fact), ["Factorizable"],
        "first factorizable tensor over lperm2 in small-entry search")
    add("lperm2-tri", "tensor", TensorInstance(lp, _first_tensor(lp, Classification.Triangular)),
        ["Triangular"], "first nonzero triangular tensor over lperm2 in small-entry search")
    add("lperm2-sym-nonsolution", "tensor",
        TensorInstance(lp, _first_tensor(lp, Classification.NotCoboundarySolution,
                                         TwoTensor.is_symmetric)),
        ["NotCoboundarySolution"], "first symmetric non-solution over lperm2 in small-entry search")
    add("lperm2+lperm2-quasi", "tensor",
        TensorInstance(algebras["lperm2+lperm2"], _embed_first(fact, 4)),
        ["QuasiTriangular"], "lperm2-fact placed on the first summand")

    for w in (0, 1, -1):
        P = search_rb_operators(lp, w, entries=SMALL)[0]
        add(f"semidirect-lperm2-w{w}", "quadratic-rb", semidirect_quadratic_rb(lp, P, w),
            ["quadratic-rb"], f"coadjoint semidirect product of lperm2 with the first searched "
                              f"Rota-Baxter operator of weight {w}")
    for src, w in (("double-nilp2", 1), ("zero2-skew", -1), ("lperm2-fact", 1)):
        inst = out[src].payload
        add(f"{src}-qrb-w{w}", "quadratic-rb", r_to_qrb(inst.algebra, inst.tensor, w),
            ["quadratic-rb"], f"induced from {src} with weight {w}")

    for e in out.values():
        bad = verify(e)
        if bad:
            raise AssertionError(f"catalog entry {e.name} fails: {bad}")
    return out


def verify(entry: CatalogEntry) -> list[str]:
    """Advertised properties of ``entry`` that do not hold."""
    failed = []
    p = entry.payload
    for prop in entry.properties:
        if prop == "perm":
            ok = not perm_axiom_defects(p)
        elif prop == "not-perm":
            ok = bool(perm_axiom_defects(p))
        elif prop == "bialgebra":
            ok = is_clean(bialgebra_report(p))
        elif prop == "quadratic-rb":
            ok = is_clean(quadratic_rb_defects(p))
        else:
            ok = classify(p.algebra, p.tensor) is Classification(prop)
        if not ok:
            failed.append(prop)
    return failed


@functools.lru_cache(maxsize=1)
def _catalog() -> dict[str, CatalogEntry]:
    return _build()


def names() -> list[str]:
    return list(_catalog())


def entries(kind: str | None = None) -> list[CatalogEntry]:
    """Deep copies of all entries, optionally filtered by kind."""
    return [copy.deepcopy(e) for e in _catalog().values() if kind is None or e.kind == kind]


def get(name: str) -> CatalogEntry:
    try:
        return copy.deepcopy(_catalog()[name])
    except KeyError:
        raise UnknownName(f"no catalog entry {name!r}") from None


def self_test() -> dict[str, list[str]]:
    """Re-verify every entry; maps names to failed properties (empty when all pass)."""
    return {e.name: bad for e in _catalog().values() if (bad := verify(e))}
