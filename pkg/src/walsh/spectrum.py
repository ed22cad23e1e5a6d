"""Fourier spectra of bipolar functions and training sets."""

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .transform import fwht
from ..boolean.bits import BitsLike, bits_to_index, chi_values, index_to_bits, arity_of_length
from ..boolean.functions import BipolarFunction
from ..boolean.training_set import TrainingSet
from ..config.constants import SCALING_CLASSICAL, SCALING_NONE
from ..config.limits import check_arity
from ..config.logging_config import get_logger
from ..errors import InputShapeError

logger = get_logger(__name__)


@dataclass(frozen=True)
class CoefficientIndex:
    """Index a of a parity basis function chi_a."""

    n: int
    value: int

    def __post_init__(self):
        if not 0 <= self.value < (1 << self.n):
            raise InputShapeError(f"coefficient index {self.value} out of range for n={self.n}")

    @classmethod
    def from_bits(cls, bits: BitsLike) -> "CoefficientIndex":
        return cls(len(bits), bits_to_index(bits))

    @property
    def bits(self) -> str:
        return index_to_bits(self.value, self.n)

    def __str__(self) -> str:
        return self.bits


class FourierSpectrum:
    """Length-2^n vector of Walsh coefficients indexed by a."""

    def __init__(self, coeffs: np.ndarray):
        coeffs = np.array(coeffs, dtype=np.float64, copy=True)
        if coeffs.ndim != 1:
            raise InputShapeError("spectrum must be one-dimensional")
        self._n = arity_of_length(len(coeffs))
        coeffs.flags.writeable = False
        self._coeffs = coeffs

    @property
    def n(self) -> int:
        return self._n

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, a: BitsLike | int | CoefficientIndex) -> float:
        return float(self._coeffs[self._index(a)])

    def _index(self, a) -> int:
        if isinstance(a, CoefficientIndex):
            if a.n != self._n:
                raise InputShapeError(f"index arity {a.n} does not match spectrum arity {self._n}")
            return a.value
        if isinstance(a, (int, np.integer)):
            if not 0 <= int(a) < len(self._coeffs):
                raise InputShapeError(f"index {a} out of range for n={self._n}")
            return int(a)
        return bits_to_index(a, self._n)

    def parseval(self) -> float:
        """Sum of squared coefficients (1 for the exact spectrum of a bipolar f)."""
        return float(np.dot(self._coeffs, self._coeffs))

    def argmax(self, exclude_zero: bool = False) -> CoefficientIndex:
        """Index of the largest |coefficient|; ties go to the smallest index."""
        magnitudes = np.abs(self._coeffs)
        if exclude_zero:
            magnitudes = magnitudes.copy()
            magnitudes[0] = -1.0
        return CoefficientIndex(self._n, int(np.argmax(magnitudes)))

    def largest(self, k: int) -> list[tuple[CoefficientIndex, float]]:
        """The k largest coefficients by magnitude, index order among ties."""
        order = np.argsort(-np.abs(self._coeffs), kind="stable")[:k]
        return [(CoefficientIndex(self._n, int(a)), float(self._coeffs[a])) for a in order]

    def __repr__(self) -> str:
        return f"FourierSpectrum(n={self._n})"


def exact_spectrum(f: BipolarFunction, cap: int | None = None) -> FourierSpectrum:
    """All coefficients f^(a) = (1/2^n) sum_x f(x) chi_a(x)."""
    check_arity(f.n, cap)
    spectrum = FourierSpectrum(fwht(f.truth_table(cap), SCALING_CLASSICAL))
    logger.debug("Exact spectrum n=%d parseval=%.12f", f.n, spectrum.parseval())
    return spectrum


def _as_index(a: BitsLike | int | CoefficientIndex, n: int) -> int:
    if isinstance(a, CoefficientIndex):
        if a.n != n:
            raise InputShapeError(f"index arity {a.n} does not match n={n}")
        return a.value
    if isinstance(a, (int, np.integer)):
        if not 0 <= int(a) < (1 << n):
            raise InputShapeError(f"index {a} out of range for n={n}")
        return int(a)
    return bits_to_index(a, n)


def approx_coefficient(training_set: TrainingSet, a: BitsLike | int | CoefficientIndex) -> float:
    """Training-set estimate (1/m) sum_{x in T} f(x) chi_a(x).

    Summed directly over the entries, independent of the transform kernel.
    """
    index = _as_index(a, training_set.n)
    total = int(np.dot(training_set.labels.astype(np.int64),
                       chi_values(index, training_set.indices).astype(np.int64)))
    return total / training_set.m


def approx_spectrum(training_set: TrainingSet, cap: int | None = None) -> FourierSpectrum:
    """All training-set estimates at once: B f~ / m with f~ zero off T."""
    check_arity(training_set.n, cap)
    partial = np.zeros(1 << training_set.n)
    partial[training_set.indices] = training_set.labels
    return FourierSpectrum(fwht(partial, SCALING_NONE) / training_set.m)


def evaluate_expansion(
    spectrum: FourierSpectrum,
    support: Iterable[BitsLike | int | CoefficientIndex] | None,
    x: BitsLike,
) -> float:
    """Sum over a in support of spectrum[a] chi_a(x); support None means every index."""
    x_index = bits_to_index(x, spectrum.n)
    if support is None:
        indices = np.arange(len(spectrum), dtype=np.int64)
    else:
        indices = np.unique(np.fromiter(
            (_as_index(a, spectrum.n) for a in support), dtype=np.int64,
        ))
    if len(indices) == 0:
        return 0.0
    return float(np.dot(spectrum.coeffs[indices], chi_values(x_index, indices)))


def reconstruct(spectrum: FourierSpectrum) -> np.ndarray:
    """Function values from the full expansion: f = B^T f^ (B is symmetric)."""
    return fwht(spectrum.coeffs, SCALING_NONE)


def memorization_value(training_set: TrainingSet, x: BitsLike) -> float:
    """Closed form of the full-support expansion of a training-set spectrum.

    (2^n / m) * label(x) on the training set and 0 off it: the expansion
    memorizes the labels and generalizes nowhere.
    """
    label = training_set.label(bits_to_index(x, training_set.n))
    if label is None:
        return 0.0
    return (1 << training_set.n) / training_set.m * label
