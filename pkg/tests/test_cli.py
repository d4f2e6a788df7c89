import json
import os
import subprocess
import sys

import pytest

from finpres import cli, relcore as rc
from finpres.relcore import cycle, graph


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(p)


def doc(G):
    return cli.structure_document(G)


def test_document_round_trip():
    text = json.dumps({"signature": [2], "vertices": ["a", "b"], "relations": {"0": [["a", "b"]]}})
    A, X = cli.parse_document(text)
    assert X is None
    assert A.relations[0] == {("a", "b")}
    B, _ = cli.parse_document(cli.emit_structure(A))
    assert B == A


def test_document_with_lift_round_trips():
    text = json.dumps({"signature": [2], "vertices": ["a", "b"], "relations": {"0": [["a", "b"]]},
                       "lift": {"arities": [1], "relations": {"0": [["a"]]}}})
    A, X = cli.parse_document(text)
    assert X.extended == (frozenset({("a",)}),)
    B, Y = cli.parse_document(cli.emit_structure(A, X))
    assert (B, Y.extended) == (A, X.extended)


@pytest.mark.parametrize("text, fragment", [
    ('{"signature": [2], "vertices": ["a"], "relations": {"0": [["a", "z"]]}}', "z"),
    ('{"signature": [2], "vertices": ["a"]', "line 1"),
    ('{"signature": [0], "vertices": [], "relations": {}}', "signature"),
])
def test_document_errors(text, fragment):
    with pytest.raises(cli.InputError) as err:
        cli.parse_document(text)
    assert fragment in err.value.message


def test_dot_export_for_c5():
    lines = [ln.strip() for ln in cli.export_dot(cycle(5)).splitlines()[1:-1]]
    assert sum("--" not in ln for ln in lines) == 5
    assert sum("--" in ln for ln in lines) == 5


def test_hom_exit_codes(tmp_path, capsys):
    tri = write(tmp_path, "tri.json", doc(rc.complete(3)))
    edge = write(tmp_path, "edge.json", doc(rc.path(1)))
    code, out, _ = run(capsys, "hom", tri, edge)
    assert code == 1 and "no homomorphism" in out
    code, out, _ = run(capsys, "hom", edge, tri)
    assert code == 0
    assert json.loads(out)


def test_input_errors_exit_2(tmp_path, capsys):
    bad = write(tmp_path, "bad.json", '{"signature": [2], "vertices": ["a"], "relations": {"0": [["a", "q"]]}}')
    assert run(capsys, "hom", bad, bad)[0] == 2
    broken = write(tmp_path, "broken.json", "{")
    assert run(capsys, "hom", broken, broken)[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "hom", str(tmp_path / "missing.json"), broken)[0] == 2


def test_embed_poset_chain(tmp_path, capsys):
    chain = write(tmp_path, "chain3.json", doc(graph([1, 2, 3], [(1, 2), (2, 3)], directed=True)))
    for rep in cli.REPS:
        code, out, _ = run(capsys, "embed-poset", chain, "--rep", rep)
        assert code == 0, rep
        assert len(json.loads(out)["images"]) == 3


def test_present_and_extend(tmp_path, capsys):
    code, out, _ = run(capsys, "present", "rado", "--bound", "5")
    assert code == 0
    assert len(json.loads(out)["vertices"]) == 5
    req = write(tmp_path, "req.json", {"J": [[]], "D": [[[]]]})
    code, out, _ = run(capsys, "extend", "rado", req)
    assert code == 0
    clique = write(tmp_path, "clique.json", {"J": [[], [[]]]})
    code, out, _ = run(capsys, "extend", "kkfree", clique, "--k", "3")
    assert code == 1


def test_pieces_lift_and_duals(tmp_path, capsys):
    c5 = write(tmp_path, "c5.json", doc(cycle(5)))
    code, out, _ = run(capsys, "pieces", c5)
    assert code == 0 and len(json.loads(out)["pieces"]) == 2
    code, out, _ = run(capsys, "lift", write(tmp_path, "p2.json", doc(rc.path(2))), c5)
    assert code == 0
    p3 = write(tmp_path, "p3.json", doc(rc.path(3, directed=True)))
    code, out, _ = run(capsys, "dual", p3)
    assert code == 0
    D = write(tmp_path, "d.json", out)
    assert run(capsys, "duality-check", D, p3, "--bound", "3")[0] == 0


def test_urysohn_commands(tmp_path, capsys):
    space = write(tmp_path, "space.json", {"points": ["x", "y"], "distances": [["x", "y", "3/2"]]})
    code, out, _ = run(capsys, "urysohn", "embed", space)
    assert code == 0
    images = json.loads(out)["images"]
    a = write(tmp_path, "a.json", images["x"])
    b = write(tmp_path, "b.json", images["y"])
    code, out, _ = run(capsys, "urysohn", "distance", a, b)
    assert json.loads(out)["distance"] == "3/2"
    bad = write(tmp_path, "ext.json", {"points": [images["x"], images["y"]], "distances": [1, 5]})
    assert run(capsys, "urysohn", "extend", bad)[0] == 1
    good = write(tmp_path, "ext2.json", {"points": [images["x"], images["y"]], "distances": [1, 1]})
    assert run(capsys, "urysohn", "extend", good)[0] == 0


def test_check_is_byte_identical(capsys):
    first = run(capsys, "check", "--suite", "zigzag", "--seed", "7")
    second = run(capsys, "check", "--suite", "zigzag", "--seed", "7")
    assert first[0] == 0 and first == second
    report = json.loads(first[1])
    assert report["passed"] and report["seed"] == 7
    assert run(capsys, "check", "--suite", "nope")[0] == 2


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "finpres.cli", "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "embed-poset" in out.stdout


def test_check_output_ignores_hash_seed():
    outs = []
    for hs in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=hs)
        res = subprocess.run([sys.executable, "-m", "finpres.cli", "check", "--suite", "gaps", "--seed", "3"],
                             env=env, capture_output=True, text=True)
        assert res.returncode == 0
        outs.append(res.stdout)
    assert outs[0] == outs[1]
