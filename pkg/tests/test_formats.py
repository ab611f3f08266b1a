import json

import pytest
from gmpy2 import mpq
from hypothesis import given

from permbialg import catalog, formats
from permbialg.errors import ParseError
from permbialg.linalg import qarray
from permbialg.representations import (coadjoint_representation, diamond_from_skew,
                                       regular_a_perm_algebra)
from permbialg.tensors import TwoTensor, twist
from strategies import matrices, rationals


def objects():
    out = []
    for e in catalog.entries():
        p = e.payload
        if e.kind == "tensor":
            out += [p.algebra, p.tensor]
        else:
            out.append(p)
    A = catalog.lperm2()
    out.append(coadjoint_representation(A))
    out.append(regular_a_perm_algebra(A))
    r = catalog.get("double-nilp2").payload
    out.append(diamond_from_skew(r.algebra, r.tensor - twist(r.tensor)))
    return out


@pytest.mark.parametrize("obj", objects(), ids=lambda o: type(o).__name__)
def test_round_trip_bit_exact(obj):
    text = formats.dumps(obj)
    back = formats.loads(text)
    assert back == obj
    assert formats.dumps(back) == text


def test_form_and_operator_round_trip():
    B = qarray([[0, mpq(-1, 2)], [mpq(1, 2), 0]])
    assert (formats.loads(formats.dumps(formats.form_doc(B))) == B).all()
    P = qarray([[1, 2], [3, mpq(4, 7)]])
    doc = formats.operator_doc(P)
    assert doc["columns"] == [["1", "3"], ["2", "4/7"]]
    assert (formats.loads(json.dumps(doc)) == P).all()


def test_quadratic_kind():
    doc = {"kind": "quadratic", "algebra": formats.to_doc(catalog.lperm2()),
           "form": formats.form_doc(qarray([[0, 1], [-1, 0]]))}
    A, B = formats.from_doc(doc)
    assert A == catalog.lperm2() and B[0, 1] == 1


def test_sparse_layout():
    doc = formats.to_doc(catalog.lperm2())
    assert doc == {"kind": "algebra", "dim": 2, "labels": ["e1", "e2"],
                   "entries": [{"i": 0, "j": 0, "k": 0, "c": "1"}, {"i": 0, "j": 1, "k": 1, "c": "1"}]}
    t = formats.to_doc(TwoTensor.from_terms(3, {(0, 2): mpq(-1, 2)}))
    assert t["entries"] == [{"i": 0, "j": 2, "c": "-1/2"}]


@given(matrices(3, elements=rationals(10**12, 10**12)))
def test_tensor_round_trip_large_rationals(M):
    r = TwoTensor(M)
    assert formats.loads(formats.dumps(r)) == r


BAD = [
    "not json",
    "[]",
    '{"dim": 2}',
    '{"kind": "widget"}',
    '{"kind": "algebra", "dim": 2, "entries": [{"i": 0, "j": 0, "k": 5, "c": "1"}]}',
    '{"kind": "algebra", "dim": 2, "entries": [{"i": 0, "j": 0, "k": 0, "c": 1.5}]}',
    '{"kind": "algebra", "dim": 2, "entries": [{"i": 0, "j": 0, "k": 0, "c": "1.5"}]}',
    '{"kind": "algebra", "dim": 2, "entries": [{"i": 0, "j": 0, "k": 0, "c": "1/0"}]}',
    '{"kind": "algebra", "dim": 2, "entries": [{"i": 0, "j": 0, "k": 0, "c": "1"}, {"i": 0, "j": 0, "k": 0, "c": "2"}]}',
    '{"kind": "algebra", "dim": -1, "entries": []}',
    '{"kind": "algebra", "dim": true, "entries": []}',
    '{"kind": "algebra", "dim": 2, "labels": ["a"], "entries": []}',
    '{"kind": "algebra", "dim": 2, "labels": ["a", "a"], "entries": []}',
    '{"kind": "operator", "dim": 2, "columns": [["1", "0"]]}',
    '{"kind": "operator", "dim": 2, "columns": [["1", "0"], ["1"]]}',
    '{"kind": "tensor", "dim": 2, "entries": {}}',
    '{"kind": "bialgebra", "algebra": {"kind": "algebra", "dim": 1, "entries": []},'
    ' "coalgebra": {"kind": "coalgebra", "dim": 2, "entries": []}}',
]


@pytest.mark.parametrize("text", BAD)
def test_malformed_inputs(text):
    with pytest.raises(ParseError):
        formats.loads(text)


def test_kind_mismatch():
    with pytest.raises(ParseError):
        formats.loads(formats.dumps(catalog.lperm2()), "tensor")


def test_unserialisable():
    with pytest.raises(TypeError):
        formats.to_doc(object())
