import json
import logging
import shutil
import subprocess
import sys

import pytest

from toricrep import reference as ref
from toricrep.cache import ComplexCache, cache_key
from toricrep.cli import main
from toricrep.coxeter import RootSystem, build_coxeter_complex
from toricrep.errors import CacheCorrupt


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def payload(text):
    data = json.loads(text)
    data.pop("wall_time")
    return data


@pytest.fixture
def square(tmp_path):
    (tmp_path / "k.json").write_text(json.dumps(ref.TORUS_COMPLEX))
    (tmp_path / "lam1.txt").write_text("\n".join(ref.TORUS_LAMBDA_1) + "\n")
    (tmp_path / "lam2.txt").write_text("\n".join(ref.TORUS_LAMBDA_2) + "\n")
    (tmp_path / "g.json").write_text(json.dumps(ref.TORUS_GROUP))
    return tmp_path


def test_betti_g2(capsys, tmp_path):
    code, out, _ = run(capsys, "betti", "--root-system", "G2", "--cache-dir", str(tmp_path))
    data = json.loads(out)
    assert code == 0
    assert data["schema"] == 1 and data["version"]
    assert data["result"]["betti"] == [1, 9, 0]
    assert data["checks"] == {"equivariant": True, "euler_identity": True}


def test_hvector_e8(capsys):
    code, out, _ = run(capsys, "hvector", "--root-system", "E8")
    assert json.loads(out)["result"]["h"][-2:] == [881752, 1]


def test_euler(capsys):
    _, out, _ = run(capsys, "euler", "--root-system", "E6")
    assert json.loads(out)["result"]["euler_characteristic"] == -3104


def test_orbits_table(capsys):
    _, out, _ = run(capsys, "orbits", "--root-system", "F4", "--format", "table")
    assert out.splitlines()[0].split() == ["rows", "size"]


def test_decompose_b(capsys):
    code, out, _ = run(capsys, "decompose", "--family", "B", "--n", "3", "--degree", "2")
    res = json.loads(out)["result"]
    assert code == 0 and len(res["summands"]) == 4 and res["dimension"] == 11


def test_decompose_csv(capsys):
    _, out, _ = run(capsys, "decompose", "--family", "A", "--n", "5", "--degree", "3", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "shape,multiplicity,dimension"
    assert len(lines) == 6


def test_betti_csv_one_row_per_degree(capsys):
    _, out, _ = run(capsys, "betti", "--root-system", "F4", "--no-cache", "--format", "csv")
    assert out.strip().splitlines() == ["degree,betti", "0,1", "1,57", "2,264", "3,0", "4,0"]


def test_custom_square(capsys, square):
    code, out, _ = run(
        capsys, "custom", "--complex", str(square / "k.json"), "--lambda", str(square / "lam2.txt"),
        "--group", str(square / "g.json"),
    )
    res = json.loads(out)["result"]
    assert code == 0 and res["betti"] == [1, 2, 1] and res["nonsingular"]


def test_custom_rejects_non_equivariant_group(capsys, square):
    code, _, err = run(
        capsys, "custom", "--complex", str(square / "k.json"), "--lambda", str(square / "lam1.txt"),
        "--group", str(square / "g.json"),
    )
    assert code == 2 and "does not preserve" in err


def test_orbits_from_files(capsys, square):
    _, out, _ = run(
        capsys, "orbits", "--complex", str(square / "k.json"), "--lambda", str(square / "lam2.txt"),
        "--group", str(square / "g.json"),
    )
    assert json.loads(out)["result"]["orbits"] == [
        {"representative": "0101", "size": 2}, {"representative": "1111", "size": 1}
    ]


def test_spec_errors(capsys, tmp_path):
    assert run(capsys, "betti", "--root-system", "Q7")[0] == 2
    assert run(capsys, "betti", "--complex", str(tmp_path / "missing.json"), "--lambda", "x")[0] == 2
    assert run(capsys, "nestohedron", "--n", "4", "--k", "1", "--top-check")[0] == 2
    assert run(capsys, "decompose", "--family", "A", "--n", "3")[0] == 2
    with pytest.raises(SystemExit) as err:
        main(["nosuchcommand"])
    assert err.value.code == 2


def test_computation_error(capsys):
    code, _, err = run(capsys, "betti", "--root-system", "E8", "--no-cache")
    assert code == 1 and "exceeds" in err


def test_nestohedron(capsys):
    code, out, _ = run(capsys, "nestohedron", "--n", "5", "--k", "2", "--top-check")
    res = json.loads(out)["result"]
    assert code == 0 and res["top_degree"] == 4 and res["top_dim"] == res["expected_top_dim"] == 14


def test_nestohedron_from_file(capsys, tmp_path):
    path = tmp_path / "b.json"
    path.write_text(json.dumps({"ground": 3, "members": [[0], [1], [2], [0, 1, 2]]}))
    code, out, _ = run(capsys, "nestohedron", "--building-set", str(path))
    # A triangle with columns e0, e1, e0 + e1: the real projective plane.
    assert code == 0 and json.loads(out)["result"]["betti"] == [1, 0, 0]
    path.write_text(json.dumps({"ground": 3, "members": [[0], [1], [0, 1, 2]]}))
    assert run(capsys, "nestohedron", "--building-set", str(path))[0] == 2


def test_verify_quick(capsys):
    code, out, _ = run(capsys, "verify", "--quick", "--format", "table")
    assert code == 0
    assert "False" not in out


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(ref.EULER, "G2", -7)
    code, out, _ = run(capsys, "verify", "--quick")
    assert code == 3
    assert json.loads(out)["result"]["items"]["euler characteristic G2"] is False


def test_repeat_runs_identical(capsys, tmp_path):
    args = ["betti", "--root-system", "F4", "--cache-dir", str(tmp_path)]
    first = payload(run(capsys, *args)[1])
    second = payload(run(capsys, *args)[1])
    uncached = payload(run(capsys, "betti", "--root-system", "F4", "--no-cache")[1])
    assert first == second == uncached


def test_thread_count_independence(capsys):
    one = payload(run(capsys, "betti", "--root-system", "F4", "--no-cache", "--threads", "1")[1])
    two = payload(run(capsys, "betti", "--root-system", "F4", "--no-cache", "--threads", "2")[1])
    assert one == two


def test_cache_roundtrip(tmp_path):
    cache = ComplexCache(tmp_path)
    r = RootSystem.of("F4")
    built = build_coxeter_complex(r)
    key = cache_key("coxeter", "F4")
    assert cache.load(key) is None
    cache.store(key, built)
    assert cache.load(key) == built
    assert cache.coxeter_complex(r, 10**6) == built


def test_corrupt_cache_recomputes(tmp_path, caplog):
    cache = ComplexCache(tmp_path)
    r = RootSystem.of("G2")
    first = cache.coxeter_complex(r, 10**6)
    path = cache.path(cache_key("coxeter", "G2"))
    record = json.loads(path.read_text())
    record["payload"] = record["payload"].replace("[0,1]", "[0,2]", 1)
    path.write_text(json.dumps(record))
    with pytest.raises(CacheCorrupt):
        cache.load(cache_key("coxeter", "G2"))
    with caplog.at_level(logging.WARNING):
        again = cache.coxeter_complex(r, 10**6)
    assert again == first
    assert "corrupt" in caplog.text
    path.write_text("not json")
    with pytest.raises(CacheCorrupt):
        cache.load(cache_key("coxeter", "G2"))


def test_cache_env_var(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("TORICREP_CACHE", str(tmp_path / "env"))
    run(capsys, "betti", "--root-system", "G2")
    assert list((tmp_path / "env").glob("*.json"))


@pytest.mark.skipif(shutil.which("toricrep") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["toricrep", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and "toricrep" in proc.stdout


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "toricrep.cli", "hvector", "--root-system", "G2", "--format", "csv"],
        capture_output=True, text=True,
    )
    assert proc.stdout.split() == ["index,h", "0,1", "1,10", "2,1"]
