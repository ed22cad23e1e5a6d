"""Deduplicated training sets of labeled examples."""

from typing import Iterable, Iterator, Mapping

import numpy as np

from .bits import BitsLike, bits_to_index, index_to_bits
from ..errors import FormatError, InputShapeError, ParameterError, PreconditionError


class TrainingSet:
    """A set of distinct inputs with +1/-1 labels.

    Entries are kept sorted by index; m is the number of distinct inputs.
    """

    def __init__(self, n: int, entries: Mapping[int, int]):
        if n < 1:
            raise ParameterError(f"arity must be >= 1, got {n}")
        if not entries:
            raise PreconditionError("training set must contain at least one example")

        size = 1 << n
        indices = np.fromiter((int(x) for x in entries.keys()), dtype=np.int64, count=len(entries))
        labels = np.fromiter((int(y) for y in entries.values()), dtype=np.int64, count=len(entries))
        if np.any((indices < 0) | (indices >= size)):
            raise InputShapeError(f"training input out of range for n={n}")
        if not np.all(np.isin(labels, (-1, 1))):
            raise FormatError("training labels must be -1 or +1")

        order = np.argsort(indices)
        self._n = n
        self._indices = indices[order]
        self._labels = labels[order].astype(np.int8)
        self._indices.flags.writeable = False
        self._labels.flags.writeable = False
        self._lookup = {int(x): int(y) for x, y in zip(self._indices, self._labels)}

    @classmethod
    def from_examples(cls, n: int, examples: Iterable[tuple[BitsLike | int, int]]) -> "TrainingSet":
        """Build from (x, y) pairs; repeated inputs must agree on their label."""
        entries: dict[int, int] = {}
        for x, y in examples:
            index = int(x) if isinstance(x, (int, np.integer)) else bits_to_index(x, n)
            y = int(y)
            if index in entries and entries[index] != y:
                raise FormatError(
                    f"contradictory labels for input {index_to_bits(index, n)}: "
                    f"{entries[index]} and {y}"
                )
            entries[index] = y
        return cls(n, entries)

    @classmethod
    def from_arrays(cls, n: int, xs: np.ndarray, ys: np.ndarray) -> "TrainingSet":
        """Build from parallel arrays of draws, deduplicating repeated inputs."""
        xs = np.asarray(xs, dtype=np.int64)
        ys = np.asarray(ys, dtype=np.int64)
        if xs.shape != ys.shape:
            raise InputShapeError("inputs and labels must have the same length")
        if len(xs) == 0:
            raise PreconditionError("training set must contain at least one example")

        unique_x, first = np.unique(xs, return_index=True)
        unique_pairs = np.unique(np.stack([xs, ys], axis=1), axis=0)
        if len(unique_pairs) != len(unique_x):
            raise FormatError("contradictory labels among the draws")
        return cls(n, dict(zip(unique_x.tolist(), ys[first].tolist())))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._indices)

    @property
    def indices(self) -> np.ndarray:
        """Sorted distinct input indices."""
        return self._indices

    @property
    def labels(self) -> np.ndarray:
        """Labels aligned with `indices`."""
        return self._labels

    def label(self, x: BitsLike | int) -> int | None:
        """Label of x, or None if x is not in the set."""
        return self._lookup.get(self._to_index(x))

    def _to_index(self, x: BitsLike | int) -> int:
        if isinstance(x, (int, np.integer)):
            return int(x)
        return bits_to_index(x, self._n)

    def __contains__(self, x) -> bool:
        return self._to_index(x) in self._lookup

    def __len__(self) -> int:
        return self.m

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._lookup.items())

    def items_bits(self) -> list[tuple[str, int]]:
        """Entries as (bitstring, label) pairs in index order."""
        return [(index_to_bits(x, self._n), y) for x, y in self._lookup.items()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrainingSet):
            return NotImplemented
        return self._n == other._n and self._lookup == other._lookup

    def __repr__(self) -> str:
        return f"TrainingSet(n={self._n}, m={self.m})"
