import json
import subprocess
import sys

CLI = [sys.executable, "-m", "cqsym.cli"]


def run(*args, inp=None):
    proc = subprocess.run(
        CLI + list(args), capture_output=True, text=True, input=inp, timeout=300
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_family_cycle():
    rc, out, _ = run("family", "cycle", "4")
    assert rc == 0
    assert json.loads(out) == {"n": 4, "edges": [[1, 2], [2, 3], [3, 4], [4, 1]]}


def test_family_gc():
    rc, out, _ = run("family", "gc", "4", "3")
    assert rc == 0
    data = json.loads(out)
    assert data["n"] == 4 and len(data["edges"]) == 8


def test_family_intervals_inline():
    payload = json.dumps({"n": 5, "intervals": [[1, 3], [2, 4], [4, 5], [5, 1]]})
    rc, out, _ = run("family", "intervals", "--inline", payload)
    assert rc == 0
    edges = {tuple(e) for e in json.loads(out)["edges"]}
    assert edges == {(1, 2), (2, 3), (1, 3), (3, 4), (2, 4), (4, 5), (5, 1)}


def test_family_arcs_round_trip():
    payload = json.dumps({"n": 4, "intervals": [[1, 2], [2, 3], [3, 4]]})
    rc, arcs_json, _ = run("family", "arcs-from-intervals", "--inline", payload)
    assert rc == 0
    rc, via_arcs, _ = run("family", "arcs", "--inline", arcs_json.strip())
    assert rc == 0
    rc, direct, _ = run("family", "intervals", "--inline", payload)
    assert rc == 0
    assert json.loads(via_arcs) == json.loads(direct)


def test_family_unknown():
    rc, _, err = run("family", "moebius", "3")
    assert rc == 1
    assert "unknown family" in err


def test_compute_cycle_e_basis():
    rc, graph, _ = run("family", "cycle", "3")
    rc, out, _ = run("compute", "--inline", graph.strip(), "--basis", "e")
    assert rc == 0
    assert out.strip() == "(3*t + 3*t^2)*e[3]"


def test_compute_single_vertex():
    rc, out, _ = run("compute", "--inline", '{"n":1,"edges":[]}', "--basis", "M")
    assert rc == 0
    assert out.strip() == "(1)*M[1]"


def test_compute_non_symmetric_exits_2():
    rc, _, err = run(
        "compute", "--inline", '{"n":3,"edges":[[2,1],[2,3]]}', "--basis", "e"
    )
    assert rc == 2
    assert "witness" in err


def test_compute_bound_exceeded_exits_3():
    graph = json.dumps({"n": 9, "edges": []})
    rc, _, err = run("compute", "--inline", graph, "--basis", "M")
    assert rc == 3


def test_compute_parse_error_exits_1():
    rc, _, err = run("compute", "--inline", "{bad json", "--basis", "M")
    assert rc == 1


def test_compute_json_format_round_trips():
    rc, out, _ = run(
        "compute",
        "--inline",
        '{"n":2,"edges":[[1,2]]}',
        "--basis",
        "M",
        "--format",
        "json",
    )
    assert rc == 0
    data = json.loads(out)
    assert data == {
        "n": 2,
        "basis": "M",
        "terms": [{"key": [1, 1], "poly": ["1", "1"]}],
    }


def test_compute_latex():
    rc, out, _ = run(
        "compute", "--inline", '{"n":2,"edges":[[1,2]]}', "--basis", "M",
        "--format", "latex",
    )
    assert rc == 0
    assert "M_{(1,1)}" in out


def test_chromatic():
    rc, out, _ = run("chromatic", "--inline", '{"n":2,"edges":[[1,2]]}', "-m", "2")
    assert rc == 0
    assert out.strip() == "1 + t"


def test_verify_unknown_suite_exits_1():
    rc, _, err = run("verify", "nonsense")
    assert rc == 1
    assert "unknown suite" in err


def test_verify_small_suite():
    rc, out, _ = run("verify", "eulerian", "--max-k", "4")
    assert rc == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_json_format():
    rc, out, _ = run("verify", "refinements", "--max-n", "4", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert all(r["passed"] for r in data["results"])


def test_determinism():
    args = ("compute", "--inline", '{"n":3,"edges":[[1,2],[2,3],[3,1]]}', "--basis", "p")
    first = run(*args)
    second = run(*args)
    assert first == second
    rc, out, _ = first
    assert rc == 0


def test_stdin_input():
    rc, out, _ = run(
        "chromatic", "--input", "-", "-m", "2", inp='{"n":2,"edges":[[1,2],[2,1]]}'
    )
    assert rc == 0
    assert out.strip() == "2*t"


def test_verify_parallel_jobs():
    rc, out, _ = run("verify", "refinements", "--max-n", "4", "--jobs", "2")
    assert rc == 0
    assert out.count("PASS") == 2


def test_job_spec_caps():
    from cqsym.cli import JobSpec

    assert JobSpec().cap(8) == 8
    assert JobSpec(max_n=5).cap(8) == 5
    assert JobSpec(max_n=12).cap(8) == 8
    assert JobSpec(max_n=12, unsafe=True).cap(8) == 12
