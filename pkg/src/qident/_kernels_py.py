"""Pure-Python convolution kernels.

Fallback implementation used when the compiled extension is unavailable
(or when QIDENT_BACKEND=python).  Semantics must match _kernels.pyx
exactly; the benchmark suite compares the two.
"""

BACKEND = "python"


def conv_trunc(c1, c2, order):
    """Cauchy product of two coefficient lists, truncated at `order`."""
    out = [0] * (order + 1)
    n2 = len(c2)
    for i, a in enumerate(c1):
        if a == 0 or i > order:
            continue
        top = min(n2, order - i + 1)
        for j in range(top):
            b = c2[j]
            if b:
                out[i + j] += a * b
    return out


def bivar_mul(rows1, rows2, a_order, q_order):
    """Product of two (a, q) coefficient matrices, truncated at both orders.

    rows*[m][n] is the coefficient of a^m q^n; input row counts may be
    smaller than a_order + 1.
    """
    r1 = len(rows1)
    r2 = len(rows2)
    out = []
    for m in range(a_order + 1):
        acc = [0] * (q_order + 1)
        for i in range(min(m, r1 - 1) + 1):
            j = m - i
            if j >= r2:
                continue
            row_i = rows1[i]
            row_j = rows2[j]
            for p, a in enumerate(row_i):
                if a == 0 or p > q_order:
                    continue
                top = min(len(row_j), q_order - p + 1)
                for s in range(top):
                    b = row_j[s]
                    if b:
                        acc[p + s] += a * b
        out.append(acc)
    return out
