"""Integer-array kernels for the Garside normal form.

Permutations are 0-based int64 arrays where ``perm[j]`` is the final position
of the strand starting at position ``j``. Set ``PARABOLICA_NUMBA=0`` to run the
plain numpy path instead of the numba-compiled one.
"""
import os

import numpy as np

_FLAG = os.environ.get("PARABOLICA_NUMBA", "1").strip().lower()
USE_NUMBA = _FLAG not in ("0", "false", "no", "off")

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None
    USE_NUMBA = False


def _compile(fn):
    if USE_NUMBA:
        return njit(cache=True, nogil=True)(fn)
    return fn


def python_impl(fn):
    """Return the uncompiled function behind a kernel."""
    return getattr(fn, "py_func", fn)


@_compile
def _left_weight(a, ainv, b, binv, n):
    # Move crossings from b into a until every starting crossing of b is a
    # finishing crossing of a.
    changed = False
    i = 0
    while i < n - 1:
        if b[i] > b[i + 1] and ainv[i] < ainv[i + 1]:
            s = ainv[i]
            t = ainv[i + 1]
            a[s] = i + 1
            a[t] = i
            ainv[i] = t
            ainv[i + 1] = s
            x = b[i]
            b[i] = b[i + 1]
            b[i + 1] = x
            binv[b[i]] = i
            binv[b[i + 1]] = i + 1
            changed = True
            i = 0
        else:
            i += 1
    return changed


@_compile
def _is_identity(p, n):
    for j in range(n):
        if p[j] != j:
            return False
    return True


@_compile
def _is_delta(p, n):
    for j in range(n):
        if p[j] != n - 1 - j:
            return False
    return True


@_compile
def normal_form_kernel(letters, n):
    """Left-greedy normal form of a word on ``n`` strands.

    Returns ``(delta_power, factors)`` with one factor permutation per row.
    """
    length = letters.shape[0]
    # Each negative letter is Δ^{-1}·(Δσ^{-1}); the Δ^{-1} is pushed to the
    # front, flipping every factor it passes.
    neg_after = np.zeros(length + 1, np.int64)
    for idx in range(length - 1, -1, -1):
        neg_after[idx] = neg_after[idx + 1] + (1 if letters[idx] < 0 else 0)
    power = -neg_after[0]

    rows = max(length, 1)
    fac = np.empty((rows, n), np.int64)
    inv = np.empty((rows, n), np.int64)
    s = np.empty(n, np.int64)
    start = 0
    count = 0
    for idx in range(length):
        letter = letters[idx]
        i = abs(letter) - 1
        if letter > 0:
            for j in range(n):
                s[j] = j
            s[i] = i + 1
            s[i + 1] = i
        else:
            for j in range(n):
                v = n - 1 - j
                if v == i:
                    v = i + 1
                elif v == i + 1:
                    v = i
                s[j] = v
        if neg_after[idx + 1] % 2 == 1:
            for j in range(n):
                fac[count, j] = n - 1 - s[n - 1 - j]
        else:
            for j in range(n):
                fac[count, j] = s[j]
        for j in range(n):
            inv[count, fac[count, j]] = j
        count += 1
        k = count - 2
        while k >= start:
            if not _left_weight(fac[k], inv[k], fac[k + 1], inv[k + 1], n):
                break
            k -= 1
        while count > start and _is_identity(fac[count - 1], n):
            count -= 1
        while start < count and _is_delta(fac[start], n):
            start += 1
            power += 1
    return power, fac[start:count].copy()


@_compile
def permutation_kernel(letters, n):
    """Final position of each strand after reading the word left to right."""
    pos = np.arange(n)
    at = np.arange(n)  # at[p] = strand currently at position p
    for idx in range(letters.shape[0]):
        i = abs(letters[idx]) - 1
        a = at[i]
        b = at[i + 1]
        at[i] = b
        at[i + 1] = a
        pos[a] = i + 1
        pos[b] = i
    return pos
