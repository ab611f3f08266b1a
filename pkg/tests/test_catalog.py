import pytest

from permbialg import catalog
from permbialg.algebra import multiply, perm_axiom_defects, zero_algebra
from permbialg.bialgebra import Classification, classify
from permbialg.errors import UnknownName
from permbialg.linalg import identity


def test_minimum_contents():
    names = set(catalog.names())
    base = ["zero1", "zero2", "zero3", "zero4", "nilp2", "lperm2", "lperm2+lperm2"]
    assert set(base) <= names
    for b in base:
        assert f"trivial-{b}" in names and f"double-{b}" in names
    assert "zero2-skew" in names
    weights = {catalog.get(n).payload.weight for n in names if n.startswith("semidirect-")}
    assert weights == {0, 1, -1}
    kinds = {e.properties[0] for e in catalog.entries("tensor")}
    assert kinds == {c.value for c in Classification}


def test_get_examples():
    z = catalog.get("zero2").payload
    assert z == zero_algebra(2)
    A = catalog.get("lperm2").payload
    e = identity(2)
    assert list(multiply(A, e[0], e[0])) == [1, 0]
    assert list(multiply(A, e[0], e[1])) == [0, 1]
    assert list(multiply(A, e[1], e[0])) == [0, 0] and list(multiply(A, e[1], e[1])) == [0, 0]
    assert perm_axiom_defects(A) == []
    d = catalog.get("double-nilp2").payload
    assert d.algebra.dim == 4 and classify(d.algebra, d.tensor) is Classification.Factorizable


def test_get_returns_copies():
    a = catalog.get("lperm2")
    b = catalog.get("lperm2")
    assert a.payload is not b.payload and a.payload == b.payload
    assert catalog.get("lperm2").payload.c is not catalog.entries("algebra")[5].payload.c


def test_unknown_name():
    with pytest.raises(UnknownName):
        catalog.get("no-such-thing")
    with pytest.raises(KeyError):
        catalog.get("no-such-thing")


def test_self_test_clean():
    assert catalog.self_test() == {}


@pytest.mark.parametrize("e", catalog.entries(), ids=lambda e: e.name)
def test_each_entry_verifies(e):
    assert catalog.verify(e) == []
    assert e.provenance


def test_broken_entry_is_flagged():
    e = catalog.get("broken2")
    assert e.properties == ("not-perm",)
    e2 = catalog.CatalogEntry("x", "algebra", e.payload, ("perm",), "")
    assert catalog.verify(e2) == ["perm"]
