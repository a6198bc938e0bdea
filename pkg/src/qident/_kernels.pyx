# cython: language_level=3
# cython: boundscheck=False
"""Compiled convolution kernels for exact-integer truncated series.

Coefficients are arbitrary-precision Python ints; the speedup comes from
typed loop indices and list indexing, not from native arithmetic.
"""

BACKEND = "cython"


def conv_trunc(list c1, list c2, Py_ssize_t order):
    """Cauchy product of two coefficient lists, truncated at `order`."""
    cdef Py_ssize_t i, j, top, n2
    cdef object a, b
    cdef list out = [0] * (order + 1)
    n2 = len(c2)
    for i in range(len(c1)):
        if i > order:
            break
        a = c1[i]
        if a == 0:
            continue
        top = n2
        if top > order - i + 1:
            top = order - i + 1
        for j in range(top):
            b = c2[j]
            if b != 0:
                out[i + j] = out[i + j] + a * b
    return out


def bivar_mul(list rows1, list rows2, Py_ssize_t a_order, Py_ssize_t q_order):
    """Product of two (a, q) coefficient matrices, truncated at both orders."""
    cdef Py_ssize_t r1 = len(rows1), r2 = len(rows2)
    cdef Py_ssize_t m, i, j, p, s, top, imax, rowlen
    cdef list out = [], acc, row_i, row_j
    cdef object a, b
    for m in range(a_order + 1):
        acc = [0] * (q_order + 1)
        imax = m if m < r1 - 1 else r1 - 1
        for i in range(imax + 1):
            j = m - i
            if j >= r2:
                continue
            row_i = rows1[i]
            row_j = rows2[j]
            rowlen = len(row_j)
            for p in range(len(row_i)):
                if p > q_order:
                    break
                a = row_i[p]
                if a == 0:
                    continue
                top = rowlen
                if top > q_order - p + 1:
                    top = q_order - p + 1
                for s in range(top):
                    b = row_j[s]
                    if b != 0:
                        acc[p + s] = acc[p + s] + a * b
        out.append(acc)
    return out
