"""Pure numpy/Python word kernels.

Reference implementation of the hot inner loops; semantics must match
``_kernels_numba`` exactly.  Letters are int64 keys ``2*index + (sign < 0)``,
so the inverse of a key is ``key ^ 1`` and integer order on keys is the
letter order (index ascending, positive before inverse).
"""

import numpy as np

INT = np.int64


def free_reduce(raw):
    """Cancel adjacent inverse pairs until none remain (stack pass)."""
    out = np.empty(raw.shape[0], dtype=INT)
    top = 0
    for k in raw:
        if top > 0 and out[top - 1] == k ^ 1:
            top -= 1
        else:
            out[top] = k
            top += 1
    return out[:top].copy()


def concat_reduce(a, b):
    """Reduce the concatenation of two already-reduced words.

    Only the junction can cancel, so the result is reduced.
    """
    i = a.shape[0] - 1
    j = 0
    nb = b.shape[0]
    while i >= 0 and j < nb and a[i] == b[j] ^ 1:
        i -= 1
        j += 1
    return np.concatenate((a[: i + 1], b[j:]))


def cyclic_bounds(w):
    """Indices (lo, hi) such that w[lo:hi] is the cyclic reduction of w."""
    lo = 0
    hi = w.shape[0]
    while hi - lo >= 2 and w[lo] == w[hi - 1] ^ 1:
        lo += 1
        hi -= 1
    return lo, hi


def lex_less(a, b):
    """Lexicographic strict order on same-length key arrays."""
    diff = np.flatnonzero(a != b)
    if diff.shape[0] == 0:
        return False
    i = diff[0]
    return bool(a[i] < b[i])


def substitute(word, flat, off):
    """Apply a generator-image table and reduce.

    ``flat``/``off`` hold the images of the positive generators back to back;
    generator i (key 2*i) lives in ``flat[off[i-1]:off[i]]``.  Inverse letters
    use the reversed, inverted image.
    """
    parts = []
    for k in word:
        g = int(k >> 1) - 1
        seg = flat[off[g]: off[g + 1]]
        parts.append(seg if (k & 1) == 0 else seg[::-1] ^ 1)
    if not parts:
        return np.empty(0, dtype=INT)
    return free_reduce(np.concatenate(parts))
