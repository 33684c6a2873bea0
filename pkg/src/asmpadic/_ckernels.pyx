# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see ``_pykernels`` for the
numpy fallback with the same interface."""

from libc.math cimport cos, exp, log, sin

import numpy as np


def digit_sum_table(int p, Py_ssize_t limit):
    """Base-p digit sums S_p(n) for 0 <= n < limit, as an int64 array."""
    out = np.zeros(limit, dtype=np.int64)
    cdef long long[::1] s = out
    cdef Py_ssize_t n
    for n in range(1, limit):
        s[n] = s[n // p] + n % p
    return out


def valuation_table(int p, Py_ssize_t limit):
    """p-adic valuations v_p(n) for 0 <= n < limit (entry 0 is 0 by convention)."""
    out = np.zeros(limit, dtype=np.int64)
    cdef long long[::1] v = out
    cdef Py_ssize_t n
    for n in range(p, limit, p):
        v[n] = v[n // p] + 1
    return out


def power_sum(double alpha, double complex s, Py_ssize_t count):
    """sum_{n=0}^{count-1} (n + alpha)^(-s) for alpha > 0."""
    cdef double sre = s.real
    cdef double sim = s.imag
    cdef double acc_re = 0.0
    cdef double acc_im = 0.0
    cdef double lr, mag, ang
    cdef Py_ssize_t n
    for n in range(count):
        lr = log(n + alpha)
        mag = exp(-sre * lr)
        ang = -sim * lr
        acc_re += mag * cos(ang)
        acc_im += mag * sin(ang)
    return complex(acc_re, acc_im)


def progression_valuation_series(int p, int j, double complex s, Py_ssize_t terms):
    """Partial Dirichlet series sum_n v_p(3n + j) / (n + j/3)^s.

    Sums the first `terms` indices n, starting at n = 0 for j > 0 and
    n = 1 otherwise (so that 3n + j >= 1 and n + j/3 > 0 throughout).
    """
    cdef Py_ssize_t n0 = 0 if j > 0 else 1
    cdef double sre = s.real
    cdef double sim = s.imag
    cdef double third = j / 3.0
    cdef double acc_re = 0.0
    cdef double acc_im = 0.0
    cdef long long q
    cdef long long v
    cdef double lr, mag, ang
    cdef Py_ssize_t n
    for n in range(n0, n0 + terms):
        q = 3 * n + j
        v = 0
        while q % p == 0:
            v += 1
            q //= p
        if v:
            lr = log(n + third)
            mag = v * exp(-sre * lr)
            ang = -sim * lr
            acc_re += mag * cos(ang)
            acc_im += mag * sin(ang)
    return complex(acc_re, acc_im)
