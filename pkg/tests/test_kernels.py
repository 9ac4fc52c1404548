import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crprod import _kernels as K
from crprod.words import canonical_rotation, crp, cyc_core, reduce
from strategies import words

BACKENDS = ["numpy"] + (["numba"] if K.USE_NUMBA else [])
batches = st.lists(words(12), min_size=1, max_size=40)


@pytest.mark.parametrize("backend", BACKENDS)
class TestAgainstReference:
    @settings(max_examples=60, deadline=None)
    @given(ws=batches)
    def test_reduce(self, backend, ws):
        assert K.decode(*K.batch_reduce(*K.encode(ws), backend)) == [reduce(w) for w in ws]

    @settings(max_examples=60, deadline=None)
    @given(ws=batches)
    def test_cyc_core(self, backend, ws):
        assert K.decode(*K.batch_cyc_core(*K.encode(ws), backend)) == [cyc_core(w) for w in ws]

    @settings(max_examples=60, deadline=None)
    @given(ws=batches)
    def test_canonical(self, backend, ws):
        got = K.decode(*K.batch_canonical(*K.encode(ws), backend))
        assert got == [canonical_rotation(w) for w in ws]

    @settings(max_examples=60, deadline=None)
    @given(ws=batches, data=st.data())
    def test_crp(self, backend, ws, data):
        vs = data.draw(st.lists(words(12), min_size=len(ws), max_size=len(ws)))
        got = K.decode(*K.batch_crp(K.encode(ws), K.encode(vs), backend))
        assert got == [crp(u, v) for u, v in zip(ws, vs)]


def test_empty_rows():
    arr, lens = K.encode([(), ()])
    assert arr.shape == (2, 0)
    for b in BACKENDS:
        assert K.decode(*K.batch_cyc_core(arr, lens, b)) == [(), ()]
        assert list(K.batch_least_rotation(arr, lens, b)) == [0, 0]


def test_padding_is_zero():
    arr, lens = K.encode([(1, -1, 2), (2,)])
    out, out_len = K.batch_reduce(arr, lens)
    assert list(out_len) == [1, 1] and np.all(out[:, 1:] == 0)


def test_unknown_backend():
    with pytest.raises(ValueError):
        K.batch_reduce(*K.encode([(1,)]), backend="cuda")


def test_env_flag_selects_numpy():
    env = dict(os.environ, CRPROD_DISABLE_NUMBA="1")
    code = "from crprod import _kernels as K; print(K.backend_name(), K.USE_NUMBA)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    assert out == ["numpy", "False"]
