import json

import pytest

from immtools.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_gen_pk_emits_graph(capsys):
    code, out, _ = run(capsys, "gen", "pk", "3")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["vertices"]) == 4
    assert len(obj["edges"]) == 9


def test_gen_is_byte_stable(capsys):
    _, a, _ = run(capsys, "gen", "random", "5", "8", "2", "--seed", "3")
    _, b, _ = run(capsys, "gen", "random", "5", "8", "2", "--seed", "3")
    assert a == b


def test_find_immersion_absent(tmp_path, capsys):
    _, host, _ = run(capsys, "gen", "pk", "2")
    _, pat, _ = run(capsys, "gen", "complete", "3")
    h = write(tmp_path, "h.json", json.loads(host))
    p = write(tmp_path, "p.json", json.loads(pat))
    code, out, _ = run(capsys, "find-immersion", "--host", h, "--pattern", p, "--strong")
    assert code == 0
    assert json.loads(out) == "absent"


def test_find_immersion_certificate_verifies(tmp_path, capsys):
    _, host, _ = run(capsys, "gen", "pk", "2")
    _, pat, _ = run(capsys, "gen", "complete", "3")
    h = write(tmp_path, "h.json", json.loads(host))
    p = write(tmp_path, "p.json", json.loads(pat))
    code, out, _ = run(capsys, "find-immersion", "--host", h, "--pattern", p)
    assert code == 0
    c = write(tmp_path, "c.json", json.loads(out))
    code, _, _ = run(
        capsys, "verify", "immersion", "--host", h, "--pattern", p, "--cert", c
    )
    assert code == 0


def test_find_immersion_budget_exit_code(tmp_path, capsys):
    _, host, _ = run(capsys, "gen", "pk", "4")
    _, pat, _ = run(capsys, "gen", "complete", "3")
    h = write(tmp_path, "h.json", json.loads(host))
    p = write(tmp_path, "p.json", json.loads(pat))
    code, out, _ = run(
        capsys, "find-immersion", "--host", h, "--pattern", p, "--strong",
        "--budget", "5",
    )
    assert code == 3
    assert json.loads(out) == "budget"


def test_decompose_linear_pipeline(tmp_path, capsys):
    _, host, _ = run(capsys, "gen", "pk", "3")
    g = write(tmp_path, "g.json", json.loads(host))
    code, out, _ = run(
        capsys, "decompose", "linear", "--graph", g, "--W", "all", "--m", "3",
        "--w-limit", "3",
    )
    assert code == 0
    cert = json.loads(out)
    assert cert["achieved"]["w"] == 1  # width 0
    c = write(tmp_path, "c.json", cert)
    code, _, _ = run(
        capsys, "verify", "linear", "--graph", g, "--W", "all", "--cert", c,
        "--a", "0", "--w", "1", "--p", "1",
    )
    assert code == 0


def test_verify_linear_rejects_tampering(tmp_path, capsys):
    _, host, _ = run(capsys, "gen", "pk", "3")
    g = write(tmp_path, "g.json", json.loads(host))
    _, out, _ = run(
        capsys, "decompose", "linear", "--graph", g, "--W", "all", "--m", "3",
        "--w-limit", "3",
    )
    cert = json.loads(out)
    cert["ordering"] = list(reversed(cert["ordering"]))[:-1]  # drop a vertex
    c = write(tmp_path, "c.json", cert)
    code, _, err = run(
        capsys, "verify", "linear", "--graph", g, "--W", "all", "--cert", c,
        "--a", "0", "--w", "1", "--p", "1",
    )
    assert code == 2
    assert err


def test_decompose_structure_and_verify(tmp_path, capsys):
    _, host, _ = run(capsys, "gen", "pk", "3")
    g = write(tmp_path, "g.json", json.loads(host))
    code, out, _ = run(capsys, "decompose", "structure", "--graph", g, "--alpha", "4")
    assert code == 0
    s = write(tmp_path, "s.json", json.loads(out))
    code, _, _ = run(
        capsys, "verify", "structure", "--graph", g, "--structure", s, "--alpha", "4"
    )
    assert code == 0


def test_decompose_structure_failure_exit_code(tmp_path, capsys):
    _, host, _ = run(capsys, "gen", "complete", "7")
    g = write(tmp_path, "g.json", json.loads(host))
    code, out, _ = run(capsys, "decompose", "structure", "--graph", g, "--alpha", "3")
    assert code == 2
    assert "kind" in json.loads(out)


def test_edge_sum_and_torso(tmp_path, capsys):
    g1 = write(
        tmp_path,
        "g1.json",
        {
            "vertices": ["a1", "a2", "a3"],
            "edges": [
                {"id": "t1", "ends": ["a1", "a2"]},
                {"id": "t2", "ends": ["a2", "a3"]},
                {"id": "t3", "ends": ["a1", "a3"]},
            ],
        },
    )
    g2 = write(
        tmp_path,
        "g2.json",
        {
            "vertices": ["b1", "b2", "b3"],
            "edges": [
                {"id": "u1", "ends": ["b1", "b2"]},
                {"id": "u2", "ends": ["b2", "b3"]},
                {"id": "u3", "ends": ["b1", "b3"]},
            ],
        },
    )
    pi = write(tmp_path, "pi.json", {"t2": "u2", "t3": "u3"})
    code, out, _ = run(
        capsys, "edge-sum", "--g1", g1, "--v1", "a3", "--g2", g2, "--v2", "b3",
        "--pi", pi,
    )
    assert code == 0
    summed = json.loads(out)
    assert len(summed["vertices"]) == 4
    g = write(tmp_path, "g.json", summed)
    decomp = write(
        tmp_path,
        "d.json",
        {
            "tree": {"nodes": ["p", "q"], "edges": [["p", "q"]]},
            "bags": {"p": ["a1", "a2"], "q": ["b1", "b2"]},
        },
    )
    code, out, _ = run(capsys, "torso", "--graph", g, "--decomp", decomp, "--node", "p")
    assert code == 0
    torso = json.loads(out)
    assert sorted(torso["core"]) == ["a1", "a2"]
    assert len(torso["peripheral"]) == 1


def test_bounds_subcommands(tmp_path, capsys):
    code, out, _ = run(capsys, "bounds", "d-of-k", "1")
    assert code == 0 and out.strip() == "1062882"
    code, out, _ = run(capsys, "bounds", "converse", "1", "0", "1", "1")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "bounds", "converse-alpha", "3")
    assert code == 0 and out.strip() == "25"
    f = write(
        tmp_path,
        "f.json",
        {
            "vertices": ["a", "b", "c"],
            "edges": [
                {"id": "1", "ends": ["a", "b"]},
                {"id": "2", "ends": ["b", "c"]},
                {"id": "3", "ends": ["a", "c"]},
            ],
        },
    )
    code, out, _ = run(capsys, "bounds", "theorem31", f)
    assert code == 0
    obj = json.loads(out)
    assert obj["m"] == 6 and obj["a"] == 12 and obj["k"] == 3


def test_malformed_input_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "decompose", "structure", "--graph", str(bad), "--alpha", "3")
    assert code == 1
    assert "error" in err


def test_unknown_w_vertices_exit_code(tmp_path, capsys):
    _, host, _ = run(capsys, "gen", "pk", "2")
    g = write(tmp_path, "g.json", json.loads(host))
    code, _, err = run(
        capsys, "decompose", "linear", "--graph", g, "--W", "zz", "--m", "1",
        "--w-limit", "2",
    )
    assert code == 1
    assert err
