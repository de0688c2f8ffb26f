"""Pure numpy quaternion matrix product, used when the compiled kernel
is unavailable (and as the reference implementation in tests)."""

import numpy as np


def quat_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton-product matrix multiply: (m,k,4) x (k,n,4) -> (m,n,4)."""
    if a.shape[1] != b.shape[0]:
        raise ValueError("inner dimensions do not match")
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    bw, bx, by, bz = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        [
            aw @ bw - ax @ bx - ay @ by - az @ bz,
            aw @ bx + ax @ bw + ay @ bz - az @ by,
            aw @ by - ax @ bz + ay @ bw + az @ bx,
            aw @ bz + ax @ by - ay @ bx + az @ bw,
        ],
        axis=-1,
    )
