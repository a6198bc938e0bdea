"""The compiled kernels and the pure-Python fallback must agree exactly."""

import random

import pytest

from qident import _kernels_py

try:
    from qident import _kernels
except ImportError:
    _kernels = None

needs_ext = pytest.mark.skipif(_kernels is None, reason="compiled extension not built")


def random_coeffs(rng, length, bits=80):
    # large values exercise the arbitrary-precision path
    return [rng.randint(-(1 << bits), 1 << bits) for _ in range(length)]


@needs_ext
def test_conv_trunc_agreement():
    rng = random.Random(7)
    for _ in range(25):
        n1 = rng.randint(1, 30)
        n2 = rng.randint(1, 30)
        order = rng.randint(0, 40)
        c1 = random_coeffs(rng, n1)
        c2 = random_coeffs(rng, n2)
        assert _kernels.conv_trunc(c1, c2, order) == _kernels_py.conv_trunc(c1, c2, order)


@needs_ext
def test_bivar_mul_agreement():
    rng = random.Random(11)
    for _ in range(15):
        r1 = rng.randint(1, 6)
        r2 = rng.randint(1, 6)
        width = rng.randint(1, 20)
        a_order = rng.randint(0, 8)
        q_order = rng.randint(0, 25)
        m1 = [random_coeffs(rng, width, 40) for _ in range(r1)]
        m2 = [random_coeffs(rng, width, 40) for _ in range(r2)]
        assert _kernels.bivar_mul(m1, m2, a_order, q_order) == _kernels_py.bivar_mul(
            m1, m2, a_order, q_order
        )


def test_python_fallback_convolution():
    assert _kernels_py.conv_trunc([1, -1], [1, 1, 1, 1], 3) == [1, 0, 0, 0]
    assert _kernels_py.bivar_mul([[1, 1]], [[1, 1]], 1, 2) == [[1, 2, 1], [0, 0, 0]]
