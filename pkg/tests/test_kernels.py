import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lensfib import _kernels_py

letters_on = st.integers(2, 9).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n - 1) | st.integers(-(n - 1), -1),
                                              max_size=60)))


def _components(n, images):
    comp = [-1] * n
    k = 0
    for s in range(n):
        if comp[s] < 0:
            t = s
            while comp[t] < 0:
                comp[t] = k
                t = images[t] - 1
            k += 1
    return comp, k


def test_free_reduce_cancels_nested_pairs(kernels):
    assert list(kernels.free_reduce([1, 2, -2, -1, 3])) == [3]
    assert list(kernels.free_reduce([])) == []
    assert list(kernels.free_reduce([1, 1, -1])) == [1]


def test_permutation_of_single_crossing(kernels):
    assert list(kernels.permutation(3, [2])) == [1, 3, 2]
    assert list(kernels.permutation(1, [])) == [1]


def test_tally_hopf(kernels):
    assert [list(r) for r in kernels.crossing_tally(2, [1, 1], [0, 1], 2)] == [[0, 2], [2, 0]]
    assert [list(r) for r in kernels.crossing_tally(2, [-1], [0, 0], 1)] == [[-1]]


@settings(max_examples=200)
@given(letters_on)
def test_backends_agree(case):
    n, letters = case
    mods = [_kernels_py]
    try:
        mods.append(importlib.import_module("lensfib._kernels"))
    except ImportError:
        pass
    ref_red = _kernels_py.free_reduce(letters)
    ref_perm = _kernels_py.permutation(n, letters)
    comp, k = _components(n, ref_perm)
    ref_tally = _kernels_py.crossing_tally(n, letters, comp, k)
    for m in mods[1:]:
        assert list(m.free_reduce(letters)) == ref_red
        assert list(m.permutation(n, letters)) == ref_perm
        assert [list(r) for r in m.crossing_tally(n, letters, comp, k)] == ref_tally


def test_pure_backend_selected_by_environment():
    code = "from lensfib import _backend; print(_backend.BACKEND)"
    env = dict(os.environ, LENSFIB_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_default_backend_is_compiled_when_built():
    pytest.importorskip("lensfib._kernels")
    env = {k: v for k, v in os.environ.items() if k != "LENSFIB_PURE"}
    code = "from lensfib import _backend; print(_backend.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "cython"


def test_benchmark_script_runs():
    from pathlib import Path
    script = Path(__file__).parent.parent / "benchmarks" / "bench_kernels.py"
    out = subprocess.run([sys.executable, str(script), "--length", "500", "--repeat", "1"],
                         capture_output=True, text=True, check=True)
    assert "free_reduce" in out.stdout
