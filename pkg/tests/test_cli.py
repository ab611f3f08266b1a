import hashlib
import json
import subprocess
import sys

import pytest

from permbialg import catalog, formats
from permbialg.algebra import PermCoalgebra
from permbialg.bialgebra import PermBialgebra
from permbialg.cli import main
from permbialg.linalg import qarray, zeros
from permbialg.representations import coadjoint_representation, regular_a_perm_algebra


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def export(capsys, tmp_path, name):
    code, rep = run(capsys, "catalog", "export", name, "--out", tmp_path)
    assert code == 0
    return rep["outputs"]


def test_catalog_list(capsys):
    code, rep = run(capsys, "catalog", "list")
    assert code == 0
    assert {e["name"] for e in rep["entries"]} == set(catalog.names())


def test_check_perm_clean(capsys, tmp_path):
    (path,) = export(capsys, tmp_path, "lperm2")
    code, rep = run(capsys, "check", "perm", path)
    assert code == 0 and rep["verdict"] == "clean" and rep["defect_count"] == 0
    digest = hashlib.sha256(open(path, "rb").read()).hexdigest()
    assert rep["input_sha256"] == {path: digest}
    assert rep["timing_s"] >= 0


def test_check_perm_broken(capsys, tmp_path):
    (path,) = export(capsys, tmp_path, "broken2")
    code, rep = run(capsys, "check", "perm", path)
    assert code == 1 and rep["verdict"] == "defects"
    assert [0, 1, 1] in [d[:3] for d in rep["defects"]["perm"]]
    code, rep = run(capsys, "check", "perm", path, "--quiet")
    assert code == 1 and rep["defects"]["perm"] == rep["defect_count"]


@pytest.mark.parametrize("text", ["{", '{"kind": "algebra", "dim": 2}', '{"kind": "tensor", "dim": 1, "entries": []}'])
def test_check_malformed(capsys, tmp_path, text):
    p = tmp_path / "bad.json"
    p.write_text(text)
    code, rep = run(capsys, "check", "perm", p)
    assert code == 2 and rep["verdict"] == "error"


def test_input_errors(capsys, tmp_path):
    code, rep = run(capsys, "check", "perm", tmp_path / "missing.json")
    assert code == 2
    code, rep = run(capsys, "catalog", "export", "nope", "--out", tmp_path)
    assert code == 2 and rep["error"] == "UnknownName"
    code, rep = run(capsys, "catalog", "export", "--out", tmp_path)
    assert code == 2
    assert main(["check", "perm", "x.json", "--weight", "0.5"]) == 2
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_check_other_kinds(capsys, tmp_path):
    A = catalog.lperm2()
    d = zeros(2, 2, 2)
    d[0, 0, 0] = 1
    cases = {
        "coalgebra": (PermCoalgebra(d), 0),
        "bialgebra": (catalog.get("trivial-nilp2").payload, 0),
        "representation": (coadjoint_representation(A), 0),
        "apermalgebra": (regular_a_perm_algebra(A), 0),
        "quadratic-rb": (catalog.get("semidirect-lperm2-w1").payload, 0),
    }
    bad = zeros(2, 2, 2)
    bad[0, 0, 1] = 1
    cases["coalgebra-bad"] = (PermCoalgebra(bad), 1)
    for kind, (obj, expect) in cases.items():
        p = tmp_path / f"{kind}.json"
        p.write_text(formats.dumps(obj))
        code, rep = run(capsys, "check", kind.split("-bad")[0], p)
        assert code == expect, kind
    q = tmp_path / "q.json"
    for B, expect in ((qarray([[0, 1], [-1, 0]]), 0), (qarray([[1, 0], [0, 1]]), 1)):
        q.write_text(json.dumps({"kind": "quadratic", "algebra": formats.to_doc(A),
                                 "form": formats.form_doc(B)}))
        code, rep = run(capsys, "check", "quadratic", q)
        assert code == expect and rep["rank"] == 2
    code, rep = run(capsys, "check", "bialgebra", tmp_path / "representation.json")
    assert code == 2


def _classify(capsys, tmp_path, name):
    alg, ten = export(capsys, tmp_path, name)
    return run(capsys, "classify", alg, ten)


def test_classify(capsys, tmp_path):
    code, rep = _classify(capsys, tmp_path, "zero2-skew")
    assert code == 0 and rep["classification"] == "Factorizable"
    code, rep = _classify(capsys, tmp_path, "lperm2-zero")
    assert code == 0 and rep["classification"] == "Triangular"
    code, rep = _classify(capsys, tmp_path, "lperm2-e11")
    assert code == 0 and rep["classification"] == "Triangular"
    code, rep = _classify(capsys, tmp_path, "lperm2-sym-nonsolution")
    assert code == 1 and rep["classification"] == "NotCoboundarySolution"
    assert rep["defects"]["pybe"]


def test_classify_dim_mismatch(capsys, tmp_path):
    (alg,) = export(capsys, tmp_path, "zero3")
    _, ten = export(capsys, tmp_path, "zero2-skew")
    code, rep = run(capsys, "classify", alg, ten)
    assert code == 2 and rep["error"] == "DimensionMismatch"


def test_double(capsys, tmp_path):
    (path,) = export(capsys, tmp_path, "trivial-nilp2")
    code, rep = run(capsys, "double", path, "--out", tmp_path / "d")
    assert code == 0 and rep["dim"] == 4 and rep["classification"] == "Factorizable"
    alg, ten = rep["outputs"]
    code, rep = run(capsys, "classify", alg, ten)
    assert code == 0 and rep["classification"] == "Factorizable"

    (path,) = export(capsys, tmp_path, "trivial-zero1")
    code, rep = run(capsys, "double", path, "--out", tmp_path / "z")
    alg, ten = rep["outputs"]
    A = formats.loads(open(alg).read())
    r = formats.loads(open(ten).read())
    assert A == catalog.get("zero2").payload
    assert json.loads(open(ten).read())["entries"] == [{"i": 0, "j": 1, "c": "1"}]
    assert r.dim == 2

    broken = tmp_path / "broken.json"
    B = PermBialgebra(catalog.broken2(), PermCoalgebra(zeros(2, 2, 2)))
    broken.write_text(formats.dumps(B))
    code, rep = run(capsys, "double", broken, "--out", tmp_path / "b")
    assert code == 1 and rep["defects"]["perm"] and "outputs" not in rep


@pytest.mark.parametrize("name", ["semidirect-lperm2-w1", "semidirect-lperm2-w-1",
                                  "double-nilp2-qrb-w1", "lperm2-fact-qrb-w1", "zero2-skew-qrb-w-1"])
def test_rb_round_trip(capsys, tmp_path, name):
    files = export(capsys, tmp_path, name)
    _, alg, form, op = files
    w = catalog.get(name).payload.weight
    code, rep = run(capsys, "rb-to-bialg", alg, form, op, "--weight", w, "--out", tmp_path / "rt")
    assert code == 0 and rep["classification"] == "Factorizable"
    (ten,) = rep["outputs"]
    code, rep = run(capsys, "bialg-to-rb", alg, ten, "--weight", w, "--out", tmp_path / "back")
    assert code == 0
    f2, o2 = rep["outputs"]
    assert open(f2, "rb").read() == open(form, "rb").read()
    assert open(o2, "rb").read() == open(op, "rb").read()


def test_rb_weight_zero(capsys, tmp_path):
    _, alg, form, op = export(capsys, tmp_path, "semidirect-lperm2-w0")
    code, rep = run(capsys, "rb-to-bialg", alg, form, op, "--weight", "0", "--out", tmp_path)
    assert code == 0 and rep["classification"] == "Triangular"
    (ten,) = rep["outputs"]
    code, rep = run(capsys, "bialg-to-rb", alg, ten, "--weight", "0", "--out", tmp_path)
    assert code == 2 and rep["error"] == "ZeroWeight"


def test_rb_preconditions(capsys, tmp_path):
    _, alg, form, op = export(capsys, tmp_path, "semidirect-lperm2-w1")
    code, rep = run(capsys, "rb-to-bialg", alg, form, op, "--weight", "-1", "--out", tmp_path / "x")
    assert code == 1 and rep["defects"]["compatibility"] and "outputs" not in rep
    alg, ten = export(capsys, tmp_path, "lperm2+lperm2-quasi")
    code, rep = run(capsys, "bialg-to-rb", alg, ten, "--out", tmp_path / "y")
    assert code == 1 and rep["classification"] == "QuasiTriangular"


def test_factorize(capsys, tmp_path):
    alg, ten = export(capsys, tmp_path, "double-nilp2")
    code, rep = run(capsys, "factorize", alg, ten)
    assert code == 0 and len(rep["factorizations"]) == 4
    code, rep = run(capsys, "factorize", alg, ten, "--vector", "1,-1/2,0,3")
    (f,) = rep["factorizations"]
    from gmpy2 import mpq
    assert [mpq(a) - mpq(b) for a, b in zip(f["x1"], f["x2"])] == [mpq(x) for x in f["x"]]
    code, rep = run(capsys, "factorize", alg, ten, "--vector", "1,2")
    assert code == 2
    alg, ten = export(capsys, tmp_path, "lperm2-tri")
    code, rep = run(capsys, "factorize", alg, ten)
    assert code == 1


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "permbialg", "catalog", "export", "lperm2",
                          "--out", str(tmp_path), "--quiet"], capture_output=True, text=True)
    assert res.returncode == 0
    res = subprocess.run([sys.executable, "-m", "permbialg", "check", "perm",
                          str(tmp_path / "lperm2.json")], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["verdict"] == "clean"
