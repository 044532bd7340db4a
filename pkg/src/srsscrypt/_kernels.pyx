# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the functions in ``_fallback``; identical contracts."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def logistic_orbit(double mu, double x0, Py_ssize_t discard, Py_ssize_t count):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(count, dtype=np.float64)
    cdef double[::1] view = out
    cdef double x = x0
    cdef Py_ssize_t step, total = discard + count, bad = -1
    with nogil:
        for step in range(1, total + 1):
            # built with -ffp-contract=off: no FMA, same rounding as CPython floats
            x = mu * x * (1.0 - x)
            if not (0.0 < x < 1.0):
                bad = step
                break
            if step > discard:
                view[step - discard - 1] = x
    if bad >= 0:
        return out, bad, x
    return out, -1, 0.0


def srss_forward(const cnp.uint8_t[:, ::1] pixels, const cnp.uint8_t[::1] sbox,
                 const cnp.uint8_t[::1] modifiers, const cnp.int64_t[::1] ops):
    cdef Py_ssize_t rows = pixels.shape[0], cols = pixels.shape[1], r, c, k = 0
    out = np.empty((rows, cols), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] dst = out
    with nogil:
        for r in range(rows):
            for c in range(cols):
                dst[r, c] = sbox[pixels[r, c]] ^ modifiers[ops[k]]
                k += 1
    return out


def srss_inverse(const cnp.uint8_t[:, ::1] pixels, const cnp.uint8_t[::1] inverse,
                 const cnp.uint8_t[::1] modifiers, const cnp.int64_t[::1] ops):
    cdef Py_ssize_t rows = pixels.shape[0], cols = pixels.shape[1], r, c, k = 0
    out = np.empty((rows, cols), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] dst = out
    with nogil:
        for r in range(rows):
            for c in range(cols):
                dst[r, c] = inverse[pixels[r, c] ^ modifiers[ops[k]]]
                k += 1
    return out


def glcm_counts(const cnp.uint8_t[:, ::1] binned, Py_ssize_t levels, Py_ssize_t dr, Py_ssize_t dc):
    cdef Py_ssize_t rows = binned.shape[0], cols = binned.shape[1], r, c
    cdef Py_ssize_t r0 = max(0, -dr), r1 = min(rows, rows - dr)
    cdef Py_ssize_t c0 = max(0, -dc), c1 = min(cols, cols - dc)
    counts = np.zeros((levels, levels), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] view = counts
    with nogil:
        for r in range(r0, r1):
            for c in range(c0, c1):
                view[binned[r, c], binned[r + dr, c + dc]] += 1
    return counts
