import json
import subprocess
import sys

import pytest

from ipdreams.cli import main, render_dream
from ipdreams.dreams import Mode, enumerate_dreams

PERM = '{"n":4,"dots":[[1,2],[3,4]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_k(capsys):
    code, out, _ = run(capsys, "expand", "--perm", PERM, "--mode", "K")
    assert code == 0
    terms = {tuple(t["partition"]): t["coeff"] for t in json.loads(out)["terms"]}
    assert terms == {(2,): 1, (1, 1): 1, (1,): -1}


def test_expand_kt_schema(capsys):
    code, out, _ = run(capsys, "expand", "--perm", PERM, "--mode", "KT")
    data = json.loads(out)
    assert code == 0 and data["mode"] == "KT" and (data["k"], data["n"]) == (2, 4)
    assert all("laurent" in t["coeff"] for t in data["terms"])
    assert data["terms"][0]["coeff"]["text"] == "-E1*E4^-1 + 1"


def test_dreams_ascii(capsys):
    code, out, _ = run(capsys, "dreams", "--perm", PERM, "--mode", "HT", "--render", "ascii")
    assert code == 0
    assert out.count("lambda=") == 4 and out.rstrip().endswith("4 dreams")
    assert "weight=y2 - y4" in out and "weight=y1 - y2" in out


def test_dreams_json(capsys):
    code, out, _ = run(capsys, "dreams", "--perm", PERM, "--mode", "KT", "--render", "json")
    data = json.loads(out)
    assert code == 0 and len(data) == 6
    assert sorted(d["sign"] for d in data) == [-1, -1, 1, 1, 1, 1]


def test_render_shape(two_dots):
    P = enumerate_dreams(two_dots, Mode.HT)[0]
    lines = render_dream(P)
    assert len(lines) == 3 * 4
    assert " e " in "\n".join(lines)


def test_puzzles(capsys):
    code, out, _ = run(capsys, "puzzles", "--nw", "0101", "--ne", "0101", "--s", "1001")
    assert code == 0 and out.startswith("count: 1")
    code, out, _ = run(capsys, "puzzles", "--nw", "10", "--ne", "10", "--s", "10",
                       "--equivariant", "--render", "json")
    data = json.loads(out)
    assert data["count"] == 1 and data["weights"][0]["text"] == "y1 - y2"


def test_shift(capsys):
    code, out, _ = run(capsys, "shift", "--perm", PERM, "--i", "2", "--j", "4")
    data = json.loads(out)
    assert code == 0
    assert data["sweep"]["window"] == [2, 4, 5, 7]
    assert [c["window"] for c in data["components"]] == [[4, 2, 5, 7], [2, 3, 5, 8]]


def test_matroid(capsys):
    code, out, _ = run(capsys, "matroid", "--perm", PERM)
    assert code == 0 and json.loads(out)["bases"] == [[1, 3], [1, 4], [2, 3], [2, 4]]


def test_monk(capsys):
    code, out, _ = run(capsys, "monk", "--pattern", '{"n":4,"window":[2,5,4,7]}', "--row", "3")
    data = json.loads(out)
    assert code == 0 and data["components"] == [{"n": 4, "window": [2, 5, 3, 8]}]


def test_json_from_file(capsys, tmp_path):
    p = tmp_path / "f.json"
    p.write_text(PERM)
    code, out, _ = run(capsys, "matroid", "--perm", f"@{p}")
    assert code == 0 and len(json.loads(out)["bases"]) == 4


def test_verify_running_example_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "figures")
    assert code == 0 and out.startswith("figures: PASS")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fusing", "--max-n", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["checked"] == 2 + 5 + 15


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["expand"],
    ["expand", "--perm", "{bad"],
    ["expand", "--perm", '{"n":2,"dots":[[2,1]]}'],
    ["expand", "--perm", PERM, "--mode", "Q"],
    ["shift", "--perm", PERM, "--i", "1", "--j", "3"],
    ["shift", "--perm", PERM, "--i", "9", "--j", "3"],
    ["monk", "--pattern", PERM, "--row", "0"],
    ["puzzles", "--nw", "01", "--ne", "11", "--s", "01"],
    ["verify", "--max-n", "0"],
])
def test_flag_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_output_is_stable(capsys):
    first = run(capsys, "dreams", "--perm", PERM, "--mode", "KT", "--render", "json")
    second = run(capsys, "dreams", "--perm", PERM, "--mode", "KT", "--render", "json")
    assert first == second


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ipdreams", "expand", "--perm", PERM],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["mode"] == "H"
