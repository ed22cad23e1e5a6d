"""Bitstring/index conversion and parity helpers.

Bitstrings are read big-endian: the leftmost character is the most
significant bit, so "10" is index 2 and variable 0 is the leftmost bit.
"""

from typing import Sequence

import numpy as np

from ..errors import InputShapeError

BitsLike = str | Sequence[int]


def bits_to_index(bits: BitsLike, n: int | None = None) -> int:
    """Convert a bitstring (or sequence of 0/1) to its integer index."""
    if isinstance(bits, str):
        text = bits.strip()
    else:
        try:
            text = "".join(str(int(b)) for b in bits)
        except (TypeError, ValueError) as e:
            raise InputShapeError(f"not a bit sequence: {bits!r}") from e

    if any(ch not in "01" for ch in text):
        raise InputShapeError(f"bitstring may only contain 0 and 1: {bits!r}")
    if n is not None and len(text) != n:
        raise InputShapeError(f"expected {n} bits, got {len(text)} in {text!r}")
    return int(text, 2) if text else 0


def index_to_bits(index: int, n: int) -> str:
    """Convert an index in [0, 2^n) to its n-character bitstring."""
    index = int(index)
    if not 0 <= index < (1 << n):
        raise InputShapeError(f"index {index} out of range for n={n}")
    return format(index, f"0{n}b")


def parity(values: np.ndarray | int) -> np.ndarray:
    """Popcount parity (0 even, 1 odd) of each non-negative integer."""
    v = np.array(values, dtype=np.uint64, copy=True)
    for shift in (32, 16, 8, 4, 2, 1):
        v ^= v >> np.uint64(shift)
    return (v & np.uint64(1)).astype(np.int8)


def chi_values(a: int, indices: np.ndarray) -> np.ndarray:
    """Parity basis function chi_a evaluated at many indices, as +1/-1."""
    masked = np.asarray(indices, dtype=np.uint64) & np.uint64(a)
    return (1 - 2 * parity(masked)).astype(np.int8)


def variable_bit(indices: np.ndarray, var: int, n: int) -> np.ndarray:
    """Value (0/1) of variable `var` in each index under the big-endian convention."""
    return (np.asarray(indices, dtype=np.int64) >> (n - 1 - var)) & 1


def is_power_of_two(length: int) -> bool:
    return length >= 1 and (length & (length - 1)) == 0


def arity_of_length(length: int) -> int:
    """n such that 2^n == length."""
    if not is_power_of_two(length):
        raise InputShapeError(f"length {length} is not a power of two")
    return length.bit_length() - 1
