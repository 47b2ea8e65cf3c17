"""Numba-compiled word kernels; same contracts as ``_kernels_py``."""

import numpy as np
from numba import njit

INT = np.int64


@njit(cache=True)
def free_reduce(raw):
    out = np.empty(raw.shape[0], dtype=INT)
    top = 0
    for i in range(raw.shape[0]):
        k = raw[i]
        if top > 0 and out[top - 1] == k ^ 1:
            top -= 1
        else:
            out[top] = k
            top += 1
    return out[:top].copy()


@njit(cache=True)
def concat_reduce(a, b):
    i = a.shape[0] - 1
    j = 0
    nb = b.shape[0]
    while i >= 0 and j < nb and a[i] == b[j] ^ 1:
        i -= 1
        j += 1
    n = (i + 1) + (nb - j)
    out = np.empty(n, dtype=INT)
    out[: i + 1] = a[: i + 1]
    out[i + 1:] = b[j:]
    return out


@njit(cache=True)
def cyclic_bounds(w):
    lo = 0
    hi = w.shape[0]
    while hi - lo >= 2 and w[lo] == w[hi - 1] ^ 1:
        lo += 1
        hi -= 1
    return lo, hi


@njit(cache=True)
def lex_less(a, b):
    for i in range(a.shape[0]):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


@njit(cache=True)
def substitute(word, flat, off):
    total = 0
    for i in range(word.shape[0]):
        g = (word[i] >> 1) - 1
        total += off[g + 1] - off[g]
    raw = np.empty(total, dtype=INT)
    p = 0
    for i in range(word.shape[0]):
        k = word[i]
        g = (k >> 1) - 1
        s = off[g]
        e = off[g + 1]
        if k & 1 == 0:
            for j in range(s, e):
                raw[p] = flat[j]
                p += 1
        else:
            for j in range(e - 1, s - 1, -1):
                raw[p] = flat[j] ^ 1
                p += 1
    return free_reduce(raw)
