import io
import json
from pathlib import Path

import pytest

from cyclic_metric.catalog import make
from cyclic_metric.cli import run
from cyclic_metric.serialize import FormatError, Workspace, algebra_from_json, algebra_to_json

DOCS = Path(__file__).resolve().parents[1] / "docs"
EXAMPLE3 = str(DOCS / "example3.json")


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, doc, name="in.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return str(p)


def test_spec_examples():
    code, out, _ = cli("cyclic-space", "catalog:sl2")
    assert code == 0 and "dimension: 5" in out.splitlines()
    code, out, _ = cli("cyclic-space", "catalog:sl3")
    assert code == 0 and "dimension: 0" in out.splitlines()
    code, out, _ = cli("index", "catalog:remark_lorentz")
    assert code == 0 and out.strip() == "index: 1"


def test_output_is_deterministic():
    runs = [cli("cyclic-space", "catalog:so3_semidirect_F3", "--json")[1] for _ in range(2)]
    assert runs[0] == runs[1]
    assert json.loads(runs[0])["dimension"] == 10


def test_meta_goes_to_stderr():
    code, out, err = cli("index", "catalog:remark_lorentz", "--meta")
    assert code == 0 and out.strip() == "index: 1"
    assert json.loads(err)["tool"] == "cyclic-metric"


def test_example3_document():
    code, out, _ = cli("validate", "so3F3", "--form", "M", "-i", EXAMPLE3)
    assert code == 0 and "cyclic: yes" in out
    code, out, _ = cli("validate", "so3F3", "--form", "bad", "-i", EXAMPLE3)
    assert code == 1 and "residual 1 at (i, j, k)" in out
    code, out, _ = cli("cyclic-space", "so3F3", "-i", EXAMPLE3)
    assert "dimension: 10" in out
    code, out, _ = cli("check-abc", "so3F3", "M", "--h", "levi", "--i", "F3", "-i", EXAMPLE3)
    assert code == 0 and out.count("True") == 3
    code, out, _ = cli("signature", "M", "-i", EXAMPLE3)
    assert out.strip() == "signature: (3, 3, 0)"


def test_example3_matches_catalog():
    doc = json.loads(Path(EXAMPLE3).read_text())
    g = algebra_from_json(doc["algebras"]["so3F3"], "so3F3")
    assert g == make("so3_semidirect_F3").algebra


def test_certificate_round_trip(tmp_path):
    forms = {"forms": {"B": {"on": "catalog:sl2", "matrix": [["-4", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]}}}
    src = write(tmp_path, forms)
    code, out, _ = cli("quad-extend", "--algebra", "catalog:sl2", "--adjoint", "B", "--json", "-i", src)
    assert code == 0
    cert = json.loads(out)
    assert cert["certificate"]["cyclic"] and cert["certificate"]["signature"] == [3, 3, 0]
    back = write(tmp_path, out, "cert.json")
    code, out, _ = cli("validate", "result", "-i", back)
    assert code == 0 and "cyclic: yes" in out


def test_central_extension_and_reduction(tmp_path):
    doc = {
        "forms": {"I": {"on": "catalog:abelian2", "matrix": [["1", "0"], ["0", "1"]]}},
        "cocycles": {"t": {"source_basis": ["a1", "a2"], "target_basis": ["z"], "values": [["a1", "a2", [["z", "1"]]]]}},
    }
    src = write(tmp_path, doc)
    code, out, _ = cli("central-extend-1d", "--h", "catalog:abelian2", "--bh", "I", "--theta", "t", "--json", "-i", src)
    assert code == 0
    ext = write(tmp_path, out, "ext.json")
    code, out, _ = cli("reduce-central", "result", "result", "--z", "0,0,0,1", "-i", ext)
    assert code == 0 and "h dimension: 2" in out
    code, out, _ = cli("reduce-central", "result", "result", "--z", "0,1,0,0", "-i", ext)
    assert code == 1


def test_semidirect_and_double_extend(tmp_path):
    doc = {
        "forms": {
            "Bs": {"on": "catalog:sl2", "matrix": [["-4", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]},
            "Bh": {"on": "catalog:abelian3", "matrix": [["-4", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]},
            "Z": {"on": "catalog:abelian3", "matrix": [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]]},
        }
    }
    src = write(tmp_path, doc)
    code, out, _ = cli("double-extend", "--h", "catalog:abelian3", "--bh", "Bh", "--s", "catalog:sl2", "--bs", "Bs",
                       "--pi", "catalog:ad:sl2", "-i", src)
    assert code == 0 and "dimension: 9" in out and "cyclic: yes" in out
    code, out, _ = cli("semidirect", "--g1", "catalog:sl2", "--b1", "Bs", "--g2", "catalog:abelian3", "--b2", "Z",
                       "--pi", "catalog:V2", "-i", src)
    assert code == 0 and "dimension: 6" in out
    code, _, err = cli("semidirect", "--g1", "catalog:sl2", "--b1", "Bs", "--g2", "catalog:abelian3", "--b2", "Bh",
                       "--pi", "catalog:V2", "-i", src)
    assert code == 1 and "not symmetric" in err


def test_other_commands():
    assert cli("series", "catalog:heisenberg3")[1].splitlines()[1] == "lower central series dims: [3, 1, 0]"
    assert cli("center", "catalog:heisenberg3")[1].startswith("center dimension: 1")
    assert "dimension: 1" in cli("invariant-space", "catalog:sl2")[1]
    assert "dimension: 0" in cli("quadruple-space", "catalog:V2xV2")[1]
    assert "dimension: 5" in cli("quadruple-space", "catalog:V2")[1]
    code, out, _ = cli("split", "catalog:remark_lorentz", "catalog:remark_lorentz", "catalog:remark_lorentz:ideal_y")
    assert code == 2
    code, out, _ = cli("catalog", "sl2_semidirect_F2")
    assert code == 0 and "sl2_semidirect_F2" in json.loads(out)["algebras"]


def test_split_command(tmp_path):
    doc = {"subspaces": {"Y": {"on": "catalog:remark_lorentz", "basis": [["0", "1", "0", "0"], ["0", "0", "0", "1"]]}}}
    src = write(tmp_path, doc)
    code, out, _ = cli("split", "catalog:remark_lorentz", "catalog:remark_lorentz", "Y", "-i", src)
    assert code == 0 and out.startswith("complement dimension: 2") and "pi is zero: False" in out


def test_parse_errors_cite_location(tmp_path):
    bad_json = write(tmp_path, '{"algebras": {\n  "g": [}\n}')
    code, _, err = cli("validate", "g", "-i", bad_json)
    assert code == 2 and "line 2" in err
    bad_rational = write(tmp_path, {"algebras": {"g": {"basis": ["a", "b"], "brackets": [["a", "b", [["a", 0.5]]]]}}})
    code, _, err = cli("validate", "g", "-i", bad_rational)
    assert code == 2 and "algebras.g.brackets[0][0]" in err
    unknown = write(tmp_path, {"algebras": {"g": {"basis": ["a"], "brackets": [["a", "q", []]]}}})
    code, _, err = cli("validate", "g", "-i", unknown)
    assert code == 2 and "unknown basis element 'q'" in err
    assert cli("cyclic-space", "catalog:nope")[0] == 2
    assert cli("frobnicate")[0] == 2


def test_invalid_algebra_reports_witness(tmp_path):
    doc = {"algebras": {"g": {"basis": ["H", "X", "Y"], "brackets": [
        ["H", "X", [["X", "2"]]], ["H", "Y", [["Y", "-2"]]], ["X", "Y", [["X", "1"]]]]}}}
    src = write(tmp_path, doc)
    code, out, _ = cli("validate", "g", "-i", src, "--json")
    assert code == 1
    body = json.loads(out)
    assert body["ok"] is False and body["witness"] == ["jacobi", 0, 1, 2]


def test_algebra_json_round_trip():
    for name in ("sl2", "gl2_semidirect_F2", "heisenberg5"):
        g = make(name).algebra
        assert algebra_from_json(algebra_to_json(g), name) == g


def test_workspace_rejects_asymmetric_form():
    with pytest.raises(FormatError):
        Workspace.from_json({"forms": {"b": {"on": "catalog:abelian2", "matrix": [["0", "1"], ["0", "0"]]}}})
