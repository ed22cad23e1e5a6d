"""Tallies of measurement outcomes."""

from typing import Iterable, Mapping

import numpy as np

from ..boolean.bits import index_to_bits
from ..errors import InputShapeError, PreconditionError
from ..walsh.spectrum import CoefficientIndex


class SampleHistogram:
    """Observation counts per basis index; only observed indices are stored."""

    def __init__(self, n: int, counts: Mapping[int, int] | None = None):
        self._n = n
        self._counts: dict[int, int] = {}
        self._total = 0
        for index, count in (counts or {}).items():
            self._bump(int(index), int(count))

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "SampleHistogram":
        histogram = cls(n)
        histogram.add(np.fromiter(indices, dtype=np.int64))
        return histogram

    def _bump(self, index: int, count: int) -> None:
        if not 0 <= index < (1 << self._n):
            raise InputShapeError(f"index {index} out of range for n={self._n}")
        if count < 1:
            return
        self._counts[index] = self._counts.get(index, 0) + count
        self._total += count

    def add(self, indices: np.ndarray) -> None:
        """Record a batch of observed indices."""
        values, counts = np.unique(np.asarray(indices, dtype=np.int64), return_counts=True)
        for index, count in zip(values.tolist(), counts.tolist()):
            self._bump(index, count)

    @property
    def n(self) -> int:
        return self._n

    @property
    def total(self) -> int:
        return self._total

    @property
    def counts(self) -> dict[int, int]:
        return dict(self._counts)

    def count(self, index: int) -> int:
        return self._counts.get(int(index), 0)

    def __len__(self) -> int:
        return len(self._counts)

    def ranked(self, exclude: Iterable[int] = ()) -> list[tuple[int, int]]:
        """(index, count) by decreasing count, smaller index first among ties."""
        excluded = set(exclude)
        items = [(i, c) for i, c in self._counts.items() if i not in excluded]
        return sorted(items, key=lambda item: (-item[1], item[0]))

    def leader(self, exclude: Iterable[int] = ()) -> tuple[int, int]:
        ranked = self.ranked(exclude)
        if not ranked:
            raise PreconditionError("histogram has no observations")
        return ranked[0]

    def runner_up(self, exclude: Iterable[int] = ()) -> tuple[int, int] | None:
        """Second-ranked entry, or None if fewer than two indices were observed."""
        ranked = self.ranked(exclude)
        return ranked[1] if len(ranked) > 1 else None

    def top(self, k: int) -> list[dict]:
        """The k most frequent entries in the JSON shape of LearnerResult."""
        return [
            {"index": index_to_bits(index, self._n), "count": count}
            for index, count in self.ranked()[:k]
        ]

    def __repr__(self) -> str:
        return f"SampleHistogram(n={self._n}, total={self._total}, distinct={len(self._counts)})"


def identify_large(histogram: SampleHistogram, exclude: Iterable[int] = ()) -> CoefficientIndex:
    """Most frequently observed index; ties go to the smallest index."""
    if histogram.total < 1:
        raise PreconditionError("cannot identify a coefficient from an empty histogram")
    index, _ = histogram.leader(exclude)
    return CoefficientIndex(histogram.n, index)
