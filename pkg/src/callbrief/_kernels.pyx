# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled divergence kernels: same semantics as _kernels_py, walking the
merged term ids in ascending order so both backends agree bitwise."""

from libc.math cimport log

import numpy as np

BACKEND_NAME = "compiled"


cdef double _js_sparse_raw(const int[:] ids_a, const double[:] probs_a, double n_a,
                           const int[:] ids_b, const double[:] probs_b, double n_b,
                           double gamma, double beta_factor) noexcept nogil:
    cdef Py_ssize_t la = ids_a.shape[0]
    cdef Py_ssize_t lb = ids_b.shape[0]
    cdef Py_ssize_t i = 0, j = 0
    cdef long union_size = 0
    cdef long cnt_absent_a = 0, cnt_absent_b = 0
    cdef double sum_absent_a = 0.0, sum_absent_b = 0.0

    while i < la or j < lb:
        if j >= lb or (i < la and ids_a[i] < ids_b[j]):
            sum_absent_b += probs_a[i]
            cnt_absent_b += 1
            i += 1
        elif i >= la or ids_b[j] < ids_a[i]:
            sum_absent_a += probs_b[j]
            cnt_absent_a += 1
            j += 1
        else:
            i += 1
            j += 1
        union_size += 1

    cdef double beta = beta_factor * union_size
    cdef double denom_a = n_a + gamma * beta
    cdef double denom_b = n_b + gamma * beta
    cdef double scale_a = 1.0 - (sum_absent_a + gamma * cnt_absent_a) / denom_a
    cdef double scale_b = 1.0 - (sum_absent_b + gamma * cnt_absent_b) / denom_b

    cdef double acc = 0.0
    cdef double pa, pb, m
    i = 0
    j = 0
    while i < la or j < lb:
        if j >= lb or (i < la and ids_a[i] < ids_b[j]):
            pa = probs_a[i] * scale_a
            pb = (probs_a[i] + gamma) / denom_b
            i += 1
        elif i >= la or ids_b[j] < ids_a[i]:
            pa = (probs_b[j] + gamma) / denom_a
            pb = probs_b[j] * scale_b
            j += 1
        else:
            pa = probs_a[i] * scale_a
            pb = probs_b[j] * scale_b
            i += 1
            j += 1
        m = pa + pb
        acc += pa * log(2.0 * pa / m) + pb * log(2.0 * pb / m)
    return 0.5 * acc


def js_sparse(ids_a, probs_a, n_a, ids_b, probs_b, n_b, gamma, beta_factor):
    """Smoothed Jensen-Shannon divergence between two sparse distributions."""
    cdef const int[:] va = np.ascontiguousarray(ids_a, dtype=np.int32)
    cdef const int[:] vb = np.ascontiguousarray(ids_b, dtype=np.int32)
    cdef const double[:] pa = np.ascontiguousarray(probs_a, dtype=np.float64)
    cdef const double[:] pb = np.ascontiguousarray(probs_b, dtype=np.float64)
    return _js_sparse_raw(va, pa, <double> n_a, vb, pb, <double> n_b,
                          <double> gamma, <double> beta_factor)


def js_pairs(ids, probs, offsets, totals, pairs_i, pairs_j, gamma, beta_factor):
    """Divergence for many row pairs over a concatenated sparse layout."""
    cdef const int[:] vids = np.ascontiguousarray(ids, dtype=np.int32)
    cdef const double[:] vprobs = np.ascontiguousarray(probs, dtype=np.float64)
    cdef const long[:] voff = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef const double[:] vtot = np.ascontiguousarray(totals, dtype=np.float64)
    cdef const long[:] vpi = np.ascontiguousarray(pairs_i, dtype=np.int64)
    cdef const long[:] vpj = np.ascontiguousarray(pairs_j, dtype=np.int64)
    cdef double g = gamma, bf = beta_factor

    out_arr = np.empty(vpi.shape[0], dtype=np.float64)
    cdef double[:] out = out_arr
    cdef Py_ssize_t k, a, b
    with nogil:
        for k in range(vpi.shape[0]):
            a = vpi[k]
            b = vpj[k]
            out[k] = _js_sparse_raw(
                vids[voff[a]:voff[a + 1]], vprobs[voff[a]:voff[a + 1]], vtot[a],
                vids[voff[b]:voff[b + 1]], vprobs[voff[b]:voff[b + 1]], vtot[b],
                g, bf)
    return out_arr
