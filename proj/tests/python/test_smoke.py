"""Smoke tests for the Python bindings and the command-line tool."""

import json
import os
import subprocess

import pytest

try:
    import cstarinv as core
except ImportError:  # build-tree layout: the extension sits on PYTHONPATH
    import _core as core


def test_algebra_roundtrip():
    shape = core.AlgebraShape([1, 2])
    a = core.AlgebraElement(shape, [[[2.0]], [[1.0, 0.0], [0.0, 3.0]]])
    assert core.norm(a) == pytest.approx(3.0)
    assert core.norm(core.star(a) - a) == pytest.approx(0.0)
    assert core.is_positive(a)


def test_operator_moore_penrose():
    shape = core.AlgebraShape([1])
    grid = [[[[2.0]], [[0.0]]], [[[0.0]], [[0.0]]]]
    elems = [[core.AlgebraElement(shape, e) for e in row] for row in grid]
    T = core.Operator.from_grid(shape, elems)
    G = core.moore_penrose(T)
    assert core.operator_norm(core.compose(core.compose(T, G), T) - T) < 1e-12


def test_invariance_and_sts_solution():
    shape = core.AlgebraShape([1])
    e = lambda v: core.AlgebraElement(shape, [[v]])
    T = core.Operator.from_grid(shape, [[e(1.0), e(1.0)], [e(0.0), e(1.0)]])
    W = core.submodule_from_generators([core.ModuleVector.basis(shape, 2, 0)])
    assert core.is_invariant(T, W)
    assert not core.is_reducing(T, W)
    S = core.sts_solution(T, W, core.Operator.zero(shape, 2))
    rep = core.verify_sts(S, T)
    assert rep["passes"]


def test_hyperinvariant_and_spectrum():
    shape = core.AlgebraShape([1])
    e = lambda v: core.AlgebraElement(shape, [[v]])
    K = core.Operator.from_grid(shape, [[e(2.0), e(0.0)], [e(0.0), e(5.0)]])
    spec = core.spectrum(K)
    assert sorted(round(z.real) for z, _ in spec["eigenvalues"]) == [2, 5]
    res = core.find_hyperinvariant(K)
    assert res["kind"] == "eigenspace"
    with pytest.raises(core.ScalarOperatorError):
        core.find_hyperinvariant(core.Operator.identity(shape, 2))


def test_property_suites_small():
    report = core.check_properties(seed=7, cases=10)
    assert all(c["residual"] <= c["threshold"] for c in report["checks"])


@pytest.mark.skipif("CSTAR_INV_BIN" not in os.environ, reason="CLI binary not provided")
def test_cli_machine_report_is_deterministic(tmp_path):
    binary = os.environ["CSTAR_INV_BIN"]
    problem = {
        "algebra": [1],
        "rank": 2,
        "operators": {
            "T": [
                [[[[1.0]]], [[[1.0]]]],
                [[[[0.0]]], [[[1.0]]]],
            ]
        },
        "submodules": {"W": {"generators": [[[[[1.0]]], [[[0.0]]]]]}},
    }
    path = tmp_path / "problem.json"
    path.write_text(json.dumps(problem))

    def run(*args):
        return subprocess.run(
            [binary, *args, str(path), "--seed", "7", "--format", "machine"],
            capture_output=True,
            text=True,
        )

    a = run("analyze", "T", "W")
    b = run("analyze", "T", "W")
    assert a.returncode == 0, a.stderr
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert doc["seed"] == 7

    bad = subprocess.run(
        [binary, "analyze", "missing", "W", str(path)],
        capture_output=True,
        text=True,
    )
    assert bad.returncode == 3

    garbled = tmp_path / "bad.json"
    garbled.write_text("{")
    broken = subprocess.run(
        [binary, "analyze", "T", "W", str(garbled)],
        capture_output=True,
        text=True,
    )
    assert broken.returncode == 2
