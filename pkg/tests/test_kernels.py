"""The quaternion product kernel against a scalar-level oracle, and the
compiled backend against the numpy fallback."""

import numpy as np
import pytest

from daggerlab import kernels
from daggerlab._quatmul_py import quat_matmul as quat_matmul_py
from daggerlab.scalars import Field, Scalar, mul


def naive_quat_matmul(a, b):
    """Entry-by-entry Hamilton products, the independent oracle."""
    m, k, n = a.shape[0], a.shape[1], b.shape[1]
    out = np.zeros((m, n, 4))
    for i in range(m):
        for j in range(n):
            acc = Scalar(Field.QUATERNION, 0)
            for l in range(k):
                p = mul(
                    Scalar(Field.QUATERNION, *a[i, l]),
                    Scalar(Field.QUATERNION, *b[l, j]),
                )
                acc = Scalar(
                    Field.QUATERNION,
                    acc.w + p.w, acc.x + p.x, acc.y + p.y, acc.z + p.z,
                )
            out[i, j] = acc.components()
    return out


@pytest.mark.parametrize("shape", [(1, 1, 1), (2, 3, 4), (5, 5, 5), (3, 0, 2)])
def test_fallback_matches_oracle(shape):
    m, k, n = shape
    rng = np.random.default_rng(5)
    a = rng.normal(size=(m, k, 4))
    b = rng.normal(size=(k, n, 4))
    np.testing.assert_allclose(quat_matmul_py(a, b), naive_quat_matmul(a, b), atol=1e-12)


def test_backends_agree():
    if kernels.BACKEND != "compiled":
        pytest.skip("compiled kernel not built")
    rng = np.random.default_rng(6)
    for m, k, n in [(1, 1, 1), (4, 4, 4), (8, 3, 5), (2, 0, 3)]:
        a = np.ascontiguousarray(rng.normal(size=(m, k, 4)))
        b = np.ascontiguousarray(rng.normal(size=(k, n, 4)))
        np.testing.assert_allclose(kernels.quat_matmul(a, b), quat_matmul_py(a, b), atol=1e-12)


def test_inner_dimension_mismatch():
    a = np.zeros((2, 3, 4))
    b = np.zeros((2, 2, 4))
    with pytest.raises(ValueError):
        quat_matmul_py(a, b)
    with pytest.raises(ValueError):
        kernels.quat_matmul(a, b)
