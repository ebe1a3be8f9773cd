import json
import subprocess
import sys

import pytest

from multiwitt.cli import main

F2_RING = '{"p":2,"e":1,"modulus":[0,1],"nil":1}'
R22_RING = '{"p":2,"e":1,"modulus":[0,1],"nil":2}'


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def series_doc(n, d, terms, exact=False):
    return {
        "n": n,
        "d": d,
        "exact": exact,
        "terms": [{"exp": list(e), "c": c} for e, c in terms],
    }


def test_pi1_command(capsys):
    code, doc = run_cli(capsys, ["pi1", "--n", "1", "--q", "2", "--d", "3"])
    assert code == 0
    assert doc == {"factors": [4], "order": 4}


def test_pi1_oracle_agrees(capsys):
    code, doc = run_cli(capsys, ["pi1", "--n", "1", "--q", "3", "--d", "3", "--oracle"])
    assert code == 0
    assert doc["agree"] and doc["oracle_factors"] == [3, 3]


def test_mul_identity_echoes_input(capsys):
    one = series_doc(1, 4, [((0,), [[1]]), ((1,), [[1]])])
    lam = series_doc(1, 4, [((0,), [[1]]), ((2,), [[1]])])
    payload = json.dumps({"a": lam, "b": one})
    code, doc = run_cli(
        capsys, ["mul", "--ring", F2_RING, "--payload", payload]
    )
    assert code == 0
    assert doc["result"]["terms"] == lam["terms"]


def test_add_and_neg_roundtrip(capsys):
    lam = series_doc(1, 4, [((0,), [[1]]), ((1,), [[1]]), ((3,), [[1]])])
    code, doc = run_cli(
        capsys, ["neg", "--ring", F2_RING, "--payload", json.dumps({"a": lam})]
    )
    assert code == 0
    payload = json.dumps({"a": lam, "b": doc["result"]})
    code, doc = run_cli(capsys, ["add", "--ring", F2_RING, "--payload", payload])
    assert code == 0
    assert doc["result"]["terms"] == [{"exp": [0], "c": [[1]]}]


def test_coords_from_coords_roundtrip(capsys):
    lam = series_doc(1, 4, [((0,), [[1]]), ((1,), [[1]]), ((2,), [[1]]), ((3,), [[1]])])
    code, doc = run_cli(
        capsys, ["coords", "--ring", F2_RING, "--payload", json.dumps({"a": lam})]
    )
    assert code == 0
    assert doc["result"]["coords"] == [
        {"exp": [1], "r": [[1]]},
        {"exp": [2], "r": [[1]]},
    ]
    code, doc = run_cli(
        capsys,
        [
            "from-coords",
            "--ring",
            F2_RING,
            "--n",
            "1",
            "--d",
            "4",
            "--payload",
            json.dumps(doc["result"]),
        ],
    )
    assert code == 0
    assert doc["result"]["terms"] == lam["terms"]


def test_decompose_command(capsys):
    lam = series_doc(2, 5, [((0, 0), [[1]]), ((2, 2), [[1]])])
    code, doc = run_cli(
        capsys, ["decompose", "--ring", F2_RING, "--payload", json.dumps({"a": lam})]
    )
    assert code == 0
    comps = {tuple(c["nu"]): c["series"]["terms"] for c in doc["components"]}
    assert comps[(1, 1)] == [{"exp": [0], "c": [[1]]}, {"exp": [2], "c": [[1]]}]


def test_ah_exp_command(capsys):
    code, doc = run_cli(
        capsys,
        ["ah-exp", "--ring", F2_RING, "--d", "3", "--payload", '{"x": [[1]], "j": 1}'],
    )
    assert code == 0
    assert doc["result"]["terms"] == [
        {"exp": [0], "c": [[1]]},
        {"exp": [1], "c": [[1]]},
        {"exp": [2], "c": [[1]]},
    ]


def test_pair_both_agree(capsys):
    f = series_doc(1, 2, [((0,), [[1], [0]]), ((1,), [[0], [1]])], exact=True)
    g = series_doc(1, 5, [((0,), [[1]]), ((1,), [[1]])])
    payload = json.dumps({"f": f, "g": g})
    code, doc = run_cli(capsys, ["pair", "--both", "--ring", R22_RING, "--payload", payload])
    assert code == 0
    assert doc["agree"] is True
    assert doc["algebraic"] == [[1], [1]]  # 1 + eps
    assert doc["algebraic"] == doc["geometric"]


def test_pair_single_routes(capsys):
    f = series_doc(1, 3, [((0,), [[1], [0]]), ((2,), [[0], [1]])], exact=True)
    g = series_doc(1, 5, [((0,), [[1]]), ((1,), [[1]])])
    payload = json.dumps({"f": f, "g": g})
    code, doc = run_cli(
        capsys, ["pair", "--algebraic", "--ring", R22_RING, "--payload", payload]
    )
    assert code == 0 and "geometric" not in doc
    code, doc2 = run_cli(
        capsys, ["pair", "--geometric", "--ring", R22_RING, "--payload", payload]
    )
    assert code == 0 and doc2["geometric"] == doc["algebraic"]


def test_lang_census_command(capsys):
    code, doc = run_cli(
        capsys, ["lang-census", "--n", "1", "--q", "2", "--s", "2", "--d", "3"]
    )
    assert code == 0
    assert doc["total"] == 16 and doc["kernel"] == 4 and doc["matches"]


def test_selftest_command(capsys):
    code, doc = run_cli(capsys, ["selftest", "--suite", "ring", "--seed", "7"])
    assert code == 0
    assert doc["failed"] == 0 and doc["passed"] >= 4


def test_input_error_exit_code(capsys):
    code, doc = run_cli(capsys, ["mul", "--ring", F2_RING, "--payload", '{"a": 1}'])
    assert code == 1
    assert "error" in doc


def test_bad_json_payload(capsys):
    code, doc = run_cli(capsys, ["mul", "--ring", F2_RING, "--payload", "{oops"])
    assert code == 1
    assert doc["error"]["kind"] == "JSONDecodeError"


def test_bad_ring_error(capsys):
    code, doc = run_cli(
        capsys,
        ["coords", "--ring", '{"p":4,"e":1,"modulus":[0,1]}', "--payload", '{"a": {}}'],
    )
    assert code == 1


def test_deterministic_output():
    cmd = [sys.executable, "-m", "multiwitt.cli", "pi1", "--n", "2", "--q", "2", "--d", "3"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout
    assert a.stdout.endswith("\n")


def test_stdin_payload():
    lam = series_doc(1, 3, [((0,), [[1]]), ((1,), [[1]])])
    payload = json.dumps({"a": lam})
    cmd = [
        sys.executable,
        "-m",
        "multiwitt.cli",
        "coords",
        "--ring",
        F2_RING,
        "--payload",
        "-",
    ]
    proc = subprocess.run(cmd, input=payload, capture_output=True, text=True)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["result"]["coords"] == [{"exp": [1], "r": [[1]]}]


def test_version_flag():
    cmd = [sys.executable, "-m", "multiwitt.cli", "--version"]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 0
    assert "schema 1" in proc.stdout
