import json
import os
import subprocess

import pytest

CLI = os.environ.get("HOOKZETA_CLI", "hookzeta")


def run(*args):
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, timeout=600)


def test_zeta_latex():
    r = run("zeta", "--n", 3, "--d", 4, "--format", "latex")
    assert r.returncode == 0
    assert r.stdout.strip() == "\\zeta_{\\mathbf{Q}}(3s)\\,(1+2^{-s}+4^{-s})"


def test_zeta_json():
    r = run("zeta", "--n", 2, "--d", 1, "--format", "json")
    assert r.returncode == 0
    z = json.loads(r.stdout)
    assert z["local_factors"] == [{"p": 3, "coeffs": [1, 1]}]
    assert z["riemann_exponent"] == 2


def test_zeta_rejects_non_divisor():
    r = run("zeta", "--n", 3, "--d", 3)
    assert r.returncode == 2
    assert "not-a-lattice" in r.stderr


def test_coeffs():
    r = run("coeffs", "--n", 2, "--d", 1, "--limit", 12, "--format", "json")
    assert r.returncode == 0
    rows = json.loads(r.stdout)
    assert [m for m, a in rows if a] == [1, 3, 4, 9, 12]
    assert all(a in (0, 1) for _, a in rows)
    r = run("coeffs", "--n", 2, "--d", 1, "--limit", 2, "--format", "json")
    assert json.loads(r.stdout) == [[1, 1], [2, 0]]


def test_coeffs_with_oracle():
    r = run("coeffs", "--n", 3, "--d", 2, "--limit", 30, "--oracle", "--format", "json")
    assert r.returncode == 0


def test_coeffs_rejects_bad_limit():
    assert run("coeffs", "--n", 2, "--d", 1, "--limit", 0).returncode == 2


@pytest.mark.parametrize(
    "n,p,e,counts",
    [(2, 3, 4, [1, 1, 1, 1, 1]), (3, 2, 6, [1, 0, 1, 1, 1, 1, 1]), (4, 2, 4, [1, 0, 0, 0, 1])],
)
def test_enumerate(n, p, e, counts):
    r = run("enumerate", "--n", n, "--d", 1, "--prime", p, "--max-exp", e, "--oracle", "--format", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["counts"] == counts
    assert out["oracle_agrees"]


def test_enumerate_scale_limit():
    r = run("enumerate", "--n", 3, "--prime", 2, "--max-exp", 12, "--oracle", "--max-index", 100)
    assert r.returncode == 2
    assert "scale" in r.stderr


def test_enumerate_invalid_prime():
    assert run("enumerate", "--n", 3, "--prime", 4).returncode == 2


def write(tmp_path, obj):
    f = tmp_path / "basis.json"
    f.write_text(json.dumps(obj))
    return f


def test_identify_scaled_lattice(tmp_path):
    # 7 L(3) for n = 2
    f = write(tmp_path, {"rows": 2, "cols": 2, "entries": [[21, 7], [0, 7]]})
    r = run("identify", "--file", f, "--n", 2)
    assert r.returncode == 0
    assert r.stdout.strip() == "3"


def test_identify_identity(tmp_path):
    ident = [[int(i == j) for j in range(5)] for i in range(5)]
    f = write(tmp_path, {"rows": 5, "cols": 5, "entries": ident})
    r = run("identify", "--file", f, "--n", 5)
    assert r.returncode == 0
    assert r.stdout.strip() == "1"


def test_identify_specht_output(tmp_path):
    r = run("specht", "--n", 3, "--format", "json")
    assert r.returncode == 0
    f = write(tmp_path, json.loads(r.stdout))
    r = run("identify", "--file", f)
    assert r.returncode == 0
    assert r.stdout.strip() == "4"


def test_identify_unstable(tmp_path):
    f = write(tmp_path, {"rows": 2, "cols": 2, "entries": [[2, 0], [0, 1]]})
    assert run("identify", "--file", f).returncode == 1


def test_identify_bad_input(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text("{not json")
    assert run("identify", "--file", f).returncode == 2
    f = write(tmp_path, {"rows": 2, "cols": 2, "entries": [[1, 2], [2, 4]]})
    assert run("identify", "--file", f).returncode == 2


@pytest.mark.parametrize("n,d", [(2, 3), (3, 4), (6, 7)])
def test_specht(n, d):
    r = run("specht", "--n", n, "--format", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["d"] == d
    if n == 2:
        mats = [[[int(x) for x in row] for row in g["entries"]] for g in out["generators"]]
        assert mats == [[[1, 0], [-1, -1]], [[0, 1], [1, 0]]]


def test_verify_passes():
    r = run("verify", "--n", 3, "--max-exp", 6, "--limit", 20, "--format", "json")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["passed"]
    assert report["erratum"]["sum_0_to_v_consistent"]
    assert not report["erratum"]["sum_0_to_v_minus_1_consistent"]


def test_verify_mutation_names_coxeter():
    r = run("verify", "--n", 3, "--max-exp", 4, "--limit", 10, "--inject-sign-error", "--format", "json")
    assert r.returncode == 1
    assert "Coxeter relations" in json.loads(r.stdout)["failed"]
    assert "[Coxeter relations]" in r.stderr


def test_verify_rejects_small_n():
    assert run("verify", "--n", 1).returncode == 2


def test_unknown_flag():
    assert run("zeta", "--n", 2, "--d", 1, "--bogus").returncode == 2
    assert run("zeta", "--n", 2, "--d", 1, "--format", "xml").returncode == 2


@pytest.mark.parametrize(
    "args",
    [
        ("zeta", "--n", 5, "--d", 2, "--format", "json"),
        ("coeffs", "--n", 3, "--d", 1, "--limit", 50, "--format", "json"),
        ("enumerate", "--n", 3, "--prime", 2, "--max-exp", 5, "--lattices", "--format", "json"),
        ("specht", "--n", 4, "--format", "json"),
        ("verify", "--n", 2, "--max-exp", 4, "--limit", 8, "--seed", 5, "--format", "json"),
    ],
)
def test_deterministic(args):
    a, b = run(*args), run(*args)
    assert a.returncode == 0
    assert a.stdout == b.stdout
