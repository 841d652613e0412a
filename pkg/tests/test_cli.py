import json
import shutil
import subprocess
import sys

import pytest

from dct import circle as cb
from dct import corpus, io
from dct.cli import run
from dct.diffcochain import DiffCochain
from dct.simplicial import Cochain, Lattice


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out), out


@pytest.fixture
def files(tmp_path):
    K = corpus.circle3()
    paths = {}

    def put(name, obj):
        p = tmp_path / f"{name}.json"
        p.write_text(io.dumps(obj))
        paths[name] = str(p)

    put("flat", io.diffcochain_to_json(cb.example("flat-third")))
    put("sphere", io.diffcochain_to_json(cb.example("sphere-generator")))
    one = Cochain.from_dict(K, 1, {(0, 1): 1})
    put("gauge", io.diffcochain_to_json(DiffCochain(1, 1, one.retag("L"), Cochain.zero(K, 0), one, Lattice(1))))
    put("bad", io.diffcochain_to_json(DiffCochain(1, 1, one.retag("L"), Cochain.zero(K, 0), None, Lattice(1))))
    put("morphism", io.diffcochain_to_json(DiffCochain(2, 1, one.retag("L"), Cochain.zero(K, 0), None, Lattice(1))))
    put("cochain", io.cochain_to_json(Cochain.from_dict(K, 1, {(0, 1): 1})))
    put("tri", {"name": "tri", "simplices": [[0, 1, 2]]})
    (tmp_path / "broken.json").write_text("{")
    paths["broken"] = str(tmp_path / "broken.json")
    paths["dir"] = str(tmp_path)
    return paths


def test_trivialize_flat_third(capsys, files):
    code, rep, _ = call(capsys, "trivialize", "--complex", "S1_3", "--cocycle", files["flat"])
    assert code == 0
    s = rep["result"]["trivialization"]
    assert s["b"]["values"] == {} and s["khat"]["values"] == {}
    assert s["eta"]["values"] == {"[0,1]": "1/3"}
    assert rep["result"]["projections"]["lift_periods"] == ["1/3"]


def test_trivialize_sphere_generator(capsys, files):
    code, rep, _ = call(capsys, "trivialize", "--complex", "dDelta3", "--cocycle", files["sphere"])
    assert code == 1
    assert rep["result"]["obstruction"]["coordinates"] == [1]


def test_verify_d2(capsys):
    code, rep, _ = call(capsys, "verify", "--suite", "d2", "--trials", "100", "--seed", "7")
    assert code == 0
    assert rep["result"]["passed"] and rep["result"]["failure_count"] == 0
    assert rep["result"]["trials"] == 100 and rep["seed"] == 7


def test_output_is_deterministic(capsys, files):
    argv = ("invariants", "--complex", "S1_3", "--cocycle", files["flat"])
    assert call(capsys, *argv)[2] == call(capsys, *argv)[2]


def test_homology(capsys):
    code, rep, _ = call(capsys, "homology", "--complex", "RP2_6")
    assert code == 0
    rows = rep["result"]["groups"]
    assert [r["homology"]["group"] for r in rows] == ["Z", "Z/2", "0"]
    assert [r["cohomology_L"]["group"] for r in rows] == ["Z", "0", "Z/2"]
    code, rep, _ = call(capsys, "homology", "--complex", "S1_3", "--degree", "1", "--lattice", "1/3")
    assert rep["result"]["lattice"] == "1/3" and len(rep["result"]["groups"]) == 1


def test_check_and_invariants(capsys, files):
    code, rep, _ = call(capsys, "check", "--complex", "S1_3", "--cocycle", files["flat"])
    assert code == 0 and rep["result"]["is_cocycle"]
    hol = rep["result"]["invariants"]["holonomy"]
    assert [h["value"] for h in hol] == ["1/3"]
    code, rep, _ = call(capsys, "check", "--complex", "S1_3", "--cocycle", files["bad"])
    assert code == 1 and not rep["result"]["is_cocycle"]
    code, rep, _ = call(capsys, "invariants", "--complex", "S1_3", "--cocycle", files["bad"])
    assert code == 2


def test_act(capsys, files):
    code, rep, _ = call(capsys, "act", "--complex", "S1_3", "--cocycle", files["flat"], "--by", files["gauge"])
    assert code == 0
    after = rep["result"]["after"]
    assert after["b"]["values"] == {"[0,1]": "1"}
    assert after["eta"]["values"] == {"[0,1]": "4/3"}
    assert rep["result"]["projections_after"]["lift_periods"] == ["4/3"]


def test_transport(capsys, files):
    code, rep, _ = call(capsys, "transport", "--complex", "S1_3", "--cocycle", files["flat"],
                        "--morphism", files["morphism"])
    assert code == 0
    assert rep["result"]["target"]["h"]["values"] == {"[0,1]": "-2/3"}


def test_hodge(capsys, files):
    code, rep, _ = call(capsys, "hodge", "--complex", "S1_3", "--cochain", files["cochain"])
    assert code == 0
    assert rep["result"]["harmonic"]["values"] == {"[0,1]": "1/3", "[0,2]": "-1/3", "[1,2]": "1/3"}
    code, rep, _ = call(capsys, "hodge", "--complex", "S1_3", "--cocycle", files["flat"])
    assert rep["result"]["harmonic_eta"]["values"] == {"[0,1]": "1/9", "[0,2]": "-1/9", "[1,2]": "1/9"}
    assert rep["result"]["input_is_harmonic"] is False


def test_product(capsys, files):
    code, rep, _ = call(capsys, "product", "--complex", "S1_3", "--cocycle", files["gauge"], "--with", files["gauge"])
    assert code == 0 and rep["result"]["is_cocycle"] and rep["result"]["leibniz_residual_zero"]


def test_integrate(capsys, files):
    code, rep, _ = call(capsys, "integrate", "--base", "pt", "--fiber", "S1_3", "--from", "fiber",
                        "--cocycle", files["flat"])
    assert code == 0 and rep["result"]["stokes"]
    assert rep["result"]["integral"]["h"]["values"] == {"[0]": "1/3"}


def test_integrate_requires_closed_fiber(capsys, files):
    code, rep, _ = call(capsys, "integrate", "--base", "pt", "--fiber", files["tri"], "--cocycle", files["flat"])
    assert code == 2


@pytest.mark.parametrize("name", sorted(cb.EXAMPLES))
def test_demo(capsys, name):
    code, rep, _ = call(capsys, "demo", "circle", "--example", name)
    assert code == 0
    assert rep["result"]["bundle"]["trivializable"] == (rep["result"]["section"] is not None)


def test_demo_flat_third_values(capsys):
    _, rep, _ = call(capsys, "demo", "circle", "--example", "flat-third")
    assert rep["result"]["bundle"]["holonomy"] == ["1/3"]
    assert rep["result"]["section"]["lift"] == ["1/3"]


@pytest.mark.parametrize("argv", [
    ("bogus",),
    ("trivialize",),
    ("trivialize", "--complex", "S1_3"),
    ("homology", "--complex", "nope"),
    ("homology", "--complex", "S1_3", "--lattice", "0.5"),
    ("verify", "--suite", "d2", "--trials", "0"),
    ("verify", "--suite", "nope"),
    ("demo", "circle", "--example", "nope"),
])
def test_usage_errors(capsys, argv):
    code, rep, _ = call(capsys, *argv)
    assert code == 2 and "error" in rep


def test_input_errors(capsys, files):
    for path in (files["broken"], files["dir"] + "/missing.json"):
        code, rep, _ = call(capsys, "check", "--complex", "S1_3", "--cocycle", path)
        assert code == 2 and rep["error"]["kind"] == "input"
    # the cocycle names edges the point does not have
    code, rep, _ = call(capsys, "check", "--complex", "pt", "--cocycle", files["flat"])
    assert code == 2 and rep["error"]["type"] == "SchemaError"


def test_out_file(capsys, tmp_path):
    out = tmp_path / "report.json"
    assert run(["demo", "circle", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["result"]["example"] == "flat-third"


def test_color_only_touches_stderr(capsys, monkeypatch):
    monkeypatch.setenv("DCT_COLOR", "1")
    run(["demo", "circle"])
    captured = capsys.readouterr()
    assert "\x1b[" in captured.err and "\x1b[" not in captured.out


def test_console_script(files):
    exe = shutil.which("dct")
    cmd = [exe] if exe else [sys.executable, "-m", "dct.cli"]
    proc = subprocess.run(cmd + ["trivialize", "--complex", "dDelta3", "--cocycle", files["sphere"]],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["result"]["obstruction"]["coordinates"] == [1]
