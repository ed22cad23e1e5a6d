"""Fast Walsh-Hadamard transform and its brute-force references."""

from contextlib import contextmanager
from typing import Iterator

import numpy as np

from ..boolean.bits import BitsLike, bits_to_index, parity, arity_of_length
from ..config.constants import SCALING_NONE, SCALING_CLASSICAL, SCALING_UNITARY, SCALINGS
from ..config.logging_config import get_logger
from ..errors import InputShapeError, ParameterError

logger = get_logger(__name__)

# Test-only fault: flips the sign of every butterfly difference
_sign_fault = False


@contextmanager
def sign_fault() -> Iterator[None]:
    """Run the block with a deliberately broken transform kernel."""
    global _sign_fault
    previous = _sign_fault
    _sign_fault = True
    logger.warning("Walsh kernel sign fault injected")
    try:
        yield
    finally:
        _sign_fault = previous


def chi(a: BitsLike, x: BitsLike) -> int:
    """Parity basis function chi_a(x) = (-1)^(a.x)."""
    if len(a) != len(x):
        raise InputShapeError(f"chi needs equal lengths, got {len(a)} and {len(x)}")
    n = len(a)
    a_index = bits_to_index(a, n)
    x_index = bits_to_index(x, n)
    return 1 - 2 * int(parity(a_index & x_index))


def fwht(v: np.ndarray, scaling: str = SCALING_NONE) -> np.ndarray:
    """Walsh-Hadamard transform of a length-2^n vector.

    Computes B.v, where B[a, x] = chi_a(x), with the iterative radix-2
    butterfly in O(n 2^n), then applies the requested scaling:
    SCALING_NONE, SCALING_CLASSICAL (1/2^n) or SCALING_UNITARY (1/sqrt(2^n)).
    Returns a new float64 array; the input is not modified.
    """
    if scaling not in SCALINGS:
        raise ParameterError(f"unknown scaling {scaling!r}, expected one of {SCALINGS}")
    out = np.array(v, dtype=np.float64, copy=True)
    if out.ndim != 1:
        raise InputShapeError("fwht expects a one-dimensional vector")
    n = arity_of_length(len(out))
    size = len(out)

    h = 1
    while h < size:
        blocks = out.reshape(-1, 2, h)
        top = blocks[:, 0, :].copy()
        bottom = blocks[:, 1, :]
        blocks[:, 0, :] += bottom
        if _sign_fault:
            blocks[:, 1, :] = bottom - top
        else:
            blocks[:, 1, :] = top - bottom
        h *= 2

    if scaling == SCALING_CLASSICAL:
        out /= size
    elif scaling == SCALING_UNITARY:
        out /= np.sqrt(float(size))
    logger.debug("fwht n=%d scaling=%s", n, scaling)
    return out


def walsh_matrix(n: int) -> np.ndarray:
    """Explicit 2^n x 2^n matrix B with the chi_a as rows. O(4^n) memory."""
    indices = np.arange(1 << n, dtype=np.uint64)
    overlap = indices[:, None] & indices[None, :]
    return (1 - 2 * parity(overlap)).astype(np.float64)


_HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)


def hadamard_tensor(n: int) -> np.ndarray:
    """The unitary operator H (x) ... (x) H built by Kronecker products."""
    operator = np.ones((1, 1))
    for _ in range(n):
        operator = np.kron(operator, _HADAMARD)
    return operator
