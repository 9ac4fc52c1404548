"""Batch kernels over padded letter arrays.

A batch is an ``(n, L)`` int64 array plus an ``(n,)`` length vector; entries
past a row's length are zero.  Each kernel has a compiled loop version
(numba) and a vectorized numpy version that runs column by column over the
whole batch.  Set ``CRPROD_DISABLE_NUMBA=1`` to force the numpy path.
"""
from __future__ import annotations

import os
from typing import Sequence, Tuple

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_DISABLED = os.environ.get("CRPROD_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")
USE_NUMBA = numba is not None and not _DISABLED

Batch = Tuple[np.ndarray, np.ndarray]


def encode(words: Sequence[Sequence[int]], width: int = 0) -> Batch:
    n = len(words)
    lens = np.fromiter((len(w) for w in words), dtype=np.int64, count=n)
    L = max(width, int(lens.max()) if n else 0)
    arr = np.zeros((n, L), dtype=np.int64)
    for i, w in enumerate(words):
        arr[i, :len(w)] = w
    return arr, lens


def decode(arr: np.ndarray, lens: np.ndarray) -> list:
    return [tuple(int(x) for x in arr[i, :lens[i]]) for i in range(len(lens))]


def concat_batches(a: Batch, b: Batch) -> Batch:
    (x, xl), (y, yl) = a, b
    n = len(xl)
    out = np.zeros((n, x.shape[1] + y.shape[1]), dtype=np.int64)
    out[:, :x.shape[1]] = x
    cols = np.arange(y.shape[1])
    rows = np.repeat(np.arange(n), y.shape[1]).reshape(n, -1)
    dest = xl[:, None] + cols[None, :]
    mask = cols[None, :] < yl[:, None]
    out[rows[mask], dest[mask]] = y[mask]
    return out, xl + yl


# ---------------------------------------------------------------------------
# numpy versions
# ---------------------------------------------------------------------------

def _reduce_np(arr, lens):
    n, L = arr.shape
    stack = np.zeros_like(arr)
    sp = np.zeros(n, dtype=np.int64)
    rows = np.arange(n)
    for j in range(L):
        x = arr[:, j]
        active = j < lens
        top = stack[rows, np.maximum(sp - 1, 0)]
        cancel = active & (sp > 0) & (top == -x)
        push = active & ~cancel
        sp[cancel] -= 1
        stack[rows[cancel], sp[cancel]] = 0
        stack[rows[push], sp[push]] = x[push]
        sp[push] += 1
    return stack, sp


def _cyc_core_np(arr, lens):
    red, rl = _reduce_np(arr, lens)
    n, L = red.shape
    rows = np.arange(n)
    peel = np.zeros(n, dtype=np.int64)
    live = rl > 1
    while live.any():
        i = peel
        j = np.maximum(rl - 1 - i, 0)
        ok = live & (2 * i + 1 < rl) & (red[rows, np.minimum(i, L - 1)] == -red[rows, j])
        peel = peel + ok
        live = ok
    out_len = rl - 2 * peel
    cols = np.arange(L)
    src = np.minimum(peel[:, None] + cols[None, :], max(L - 1, 0))
    out = np.where(cols[None, :] < out_len[:, None], red[rows[:, None], src], 0) if L else red
    return out, out_len


def _keys_np(arr):
    return np.where(arr > 0, 2 * arr - 2, -2 * arr - 1)


def _least_rotation_np(arr, lens):
    n, L = arr.shape
    if L == 0:
        return np.zeros(n, dtype=np.int64)
    keys = _keys_np(arr)
    rows = np.arange(n)[:, None]
    ks = np.arange(L)[None, :]
    safe = np.maximum(lens, 1)[:, None]
    cand = ks < lens[:, None]
    big = np.iinfo(np.int64).max
    for p in range(L):
        vals = np.where(cand, keys[rows, (ks + p) % safe], big)
        best = vals.min(axis=1, keepdims=True)
        cand &= vals == best
    off = np.argmax(cand, axis=1)
    return np.where(lens > 0, off, 0).astype(np.int64)


# ---------------------------------------------------------------------------
# loop versions (compiled by numba when enabled)
# ---------------------------------------------------------------------------

def _reduce_loop(arr, lens):
    n, L = arr.shape
    out = np.zeros_like(arr)
    out_len = np.zeros(n, dtype=np.int64)
    for r in range(n):
        sp = 0
        for j in range(lens[r]):
            x = arr[r, j]
            if sp > 0 and out[r, sp - 1] == -x:
                sp -= 1
                out[r, sp] = 0
            else:
                out[r, sp] = x
                sp += 1
        out_len[r] = sp
    return out, out_len


def _peel_loop(red, rl):
    n, L = red.shape
    out = np.zeros_like(red)
    out_len = np.zeros(n, dtype=np.int64)
    for r in range(n):
        m = rl[r]
        i = 0
        while 2 * i + 1 < m and red[r, i] == -red[r, m - 1 - i]:
            i += 1
        k = m - 2 * i
        for j in range(k):
            out[r, j] = red[r, i + j]
        out_len[r] = k
    return out, out_len


def _least_rotation_loop(arr, lens):
    n, L = arr.shape
    res = np.zeros(n, dtype=np.int64)
    s = np.zeros(2 * L, dtype=np.int64)
    f = np.zeros(2 * L, dtype=np.int64)
    for r in range(n):
        m = lens[r]
        if m == 0:
            continue
        for j in range(m):
            x = arr[r, j]
            key = 2 * x - 2 if x > 0 else -2 * x - 1
            s[j] = key
            s[j + m] = key
        for j in range(2 * m):
            f[j] = -1
        k = 0
        for j in range(1, 2 * m):
            sj = s[j]
            i = f[j - k - 1]
            while i != -1 and sj != s[k + i + 1]:
                if sj < s[k + i + 1]:
                    k = j - i - 1
                i = f[i]
            if sj != s[k + i + 1]:
                if sj < s[k]:
                    k = j
                f[j - k] = -1
            else:
                f[j - k] = i + 1
        res[r] = k
    return res


if USE_NUMBA:
    _reduce_fast = numba.njit(cache=False)(_reduce_loop)
    _peel_fast = numba.njit(cache=False)(_peel_loop)

    def _cyc_core_fast(arr, lens):
        return _peel_fast(*_reduce_fast(arr, lens))

    _least_rotation_fast = numba.njit(cache=False)(_least_rotation_loop)
else:
    _reduce_fast = _reduce_np
    _cyc_core_fast = _cyc_core_np
    _least_rotation_fast = _least_rotation_np


def _impl(numpy_fn, fast_fn, backend):
    if backend is None:
        return fast_fn
    if backend == "numpy":
        return numpy_fn
    if backend == "numba":
        if not USE_NUMBA:
            raise RuntimeError("numba backend is disabled or unavailable")
        return fast_fn
    raise ValueError(f"unknown backend {backend!r}")


# ---------------------------------------------------------------------------
# public kernels
# ---------------------------------------------------------------------------

def batch_reduce(arr, lens, backend=None) -> Batch:
    return _impl(_reduce_np, _reduce_fast, backend)(np.asarray(arr, np.int64),
                                                    np.asarray(lens, np.int64))


def batch_cyc_core(arr, lens, backend=None) -> Batch:
    return _impl(_cyc_core_np, _cyc_core_fast, backend)(np.asarray(arr, np.int64),
                                                        np.asarray(lens, np.int64))


def batch_least_rotation(arr, lens, backend=None) -> np.ndarray:
    return _impl(_least_rotation_np, _least_rotation_fast, backend)(
        np.asarray(arr, np.int64), np.asarray(lens, np.int64))


def batch_canonical(arr, lens, backend=None) -> Batch:
    """Canonical rotation of each row (rows are assumed cyclically reduced
    or at least taken as given)."""
    off = batch_least_rotation(arr, lens, backend)
    n, L = arr.shape
    if L == 0:
        return arr.copy(), lens.copy()
    cols = np.arange(L)[None, :]
    safe = np.maximum(lens, 1)[:, None]
    src = (off[:, None] + cols) % safe
    out = np.where(cols < lens[:, None], arr[np.arange(n)[:, None], src], 0)
    return out, lens.copy()


def batch_crp(a: Batch, b: Batch, backend=None) -> Batch:
    """Row-wise ``u * v``."""
    arr, lens = concat_batches(a, b)
    return batch_cyc_core(arr, lens, backend)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
