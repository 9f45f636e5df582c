import io
import json
import os
import subprocess
import sys

import pytest

from strongdim.cli import main
from strongdim.io import read_edge_list
from strongdim.frame import solve


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_sdim_text(data_dir):
    code, text = run("sdim", os.path.join(data_dir, "fig1.txt"))
    assert code == 0
    assert "dimension: 3" in text and "set: a b g" in text


def test_sdim_json_schema(data_dir):
    code, text = run("sdim", "--json", os.path.join(data_dir, "bowtie.txt"))
    report = json.loads(text)
    assert code == 0 and report["dimension"] == 3 and len(report["set"]) == 3
    assert len(report["components"]) == 2
    for c in report["components"]:
        assert set(c) == {"class", "mvc", "chosen_j", "vertices"}
        assert c["class"] == "cycle"


@pytest.mark.parametrize("name", ["fig1.txt", "bowtie.txt", "c4.txt", "c6.txt", "c7.txt", "k5.txt",
                                  "grid3x4.txt", "p3.txt"])
def test_sdim_agrees_with_oracle(data_dir, name):
    path = os.path.join(data_dir, name)
    a = json.loads(run("sdim", "--json", path)[1])
    b = json.loads(run("oracle", "--json", path)[1])
    assert a["dimension"] == b["dimension"]
    assert run("verify", path, *a["set"])[0] == 0


def test_verify(data_dir):
    path = os.path.join(data_dir, "fig1.txt")
    assert run("verify", path, "a,b,g") == (0, "OK\n")
    assert run("verify", path, "a", "b", "g") == (0, "OK\n")
    code, text = run("verify", path, "a", "b")
    assert code == 1 and text.startswith("FAIL ")


@pytest.mark.parametrize("argv, code", [
    (["sdim", "empty.txt"], 2),
    (["sdim", "missing.txt"], 2),
    (["verify", "p3.txt", "zz"], 2),
    (["sdim", "disconnected.txt"], 3),
    (["oracle", "disconnected.txt"], 3),
    (["oracle", "--budget", "1", "k5.txt"], 4),
])
def test_exit_codes(data_dir, argv, code, capsys):
    argv = [a if not a.endswith(".txt") else os.path.join(data_dir, a) for a in argv]
    assert run(*argv)[0] == code
    assert capsys.readouterr().err.startswith("error:")


def test_srgraph_dot(data_dir):
    code, text = run("srgraph", os.path.join(data_dir, "c4.txt"))
    assert code == 0 and text.startswith("graph SR {") and text.count(" -- ") == 2


def test_decompose_dot(data_dir):
    code, text = run("decompose", os.path.join(data_dir, "bowtie.txt"))
    assert code == 0 and text.count("shape=box") == 2 and '"m"' in text


def test_generate_is_byte_identical(tmp_path):
    args = ["generate", "--components", "cycle:3-9,grid:2x2-3x3,cograph:2-8,random:2-7",
            "--count", "5", "--seed", "0x2a", "--max-components", "6", "--max-vertices", "40"]
    assert run(*args, "--out", str(tmp_path / "a"))[0] == 0
    assert run(*args, "--out", str(tmp_path / "b"))[0] == 0
    names = sorted(os.listdir(tmp_path / "a"))
    assert names == sorted(os.listdir(tmp_path / "b")) and len(names) == 10
    for name in names:
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    meta = json.loads((tmp_path / "a" / "instance_0000.json").read_text())
    g = read_edge_list(str(tmp_path / "a" / "instance_0000.txt"))
    assert meta["vertices"] == g.n and meta["edges"] == g.edge_count
    solve(g)


def test_generate_to_stdout():
    code, text = run("generate", "--components", "cycle:5,clique:3", "--seed", "7")
    assert code == 0 and text.startswith("# {")
    header = json.loads(text.splitlines()[0][2:])
    assert header["seed"] != 7 and header["vertices"] == 7


def test_generate_bad_spec(capsys):
    assert run("generate", "--components", "nope:3")[0] == 2
    assert run("generate", "--components", "cycle:5", "--count", "2")[0] == 2


def test_module_entry_point(data_dir):
    proc = subprocess.run([sys.executable, "-m", "strongdim", "sdim", os.path.join(data_dir, "c7.txt")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "dimension: 4" in proc.stdout
