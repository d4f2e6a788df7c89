import json
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from finpres import _kernel, relcore as rc
from finpres.relcore import graph

needs_compiled = pytest.mark.skipif(_kernel._compiled is None, reason="compiled backend not built")


@st.composite
def digraphs(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    arcs = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    return graph(range(n), arcs, directed=True)


def _key(maps):
    return sorted(tuple(sorted(f.items(), key=repr)) for f in maps)


@needs_compiled
@given(digraphs(), digraphs(), st.booleans())
def test_backends_agree(A, B, injective):
    a = rc.all_homomorphisms(A, B, injective=injective, backend="compiled")
    b = rc.all_homomorphisms(A, B, injective=injective, backend="python")
    assert _key(a) == _key(b)


@needs_compiled
def test_backends_agree_with_limit():
    P = rc.petersen()
    a = rc.all_homomorphisms(P, P, limit=5, backend="compiled")
    b = rc.all_homomorphisms(P, P, limit=5, backend="python")
    assert len(a) == len(b) == 5


def test_pure_flag_forces_fallback():
    env = dict(os.environ, FINPRES_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from finpres import _kernel; print(_kernel.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_petersen_automorphisms_both_backends():
    P = rc.petersen()
    assert len(rc.all_homomorphisms(P, P, injective=True, backend="python")) == 120
    assert len(rc.all_homomorphisms(P, P, injective=True)) == 120


def test_benchmark_script_runs():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    out = subprocess.run([sys.executable, os.path.join(root, "benchmarks", "bench_homsearch.py"), "--repeat", "1", "--json"],
                         capture_output=True, text=True, check=True)
    rows = json.loads(out.stdout)
    assert len(rows) == 5 and all(r["python"] > 0 for r in rows)
