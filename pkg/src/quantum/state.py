"""Real-amplitude state vectors, the Walsh operator and Born-rule measurement.

States are immutable: every operation returns a new StateVector. Measuring
does not collapse the stored state; each sample stands for a fresh
prepare-transform-observe cycle of the same state.
"""

from dataclasses import dataclass

import numpy as np

from ..boolean.bits import BitsLike, bits_to_index, index_to_bits, arity_of_length
from ..boolean.functions import BipolarFunction
from ..boolean.training_set import TrainingSet
from ..config.constants import MEASURE_NORM_TOLERANCE, NORM_TOLERANCE, SCALING_UNITARY
from ..config.limits import check_arity
from ..config.logging_config import get_logger
from ..errors import CorruptStateError, InputShapeError, ParameterError, PreconditionError
from ..walsh.transform import fwht

logger = get_logger(__name__)

# Amplitudes below this magnitude count as zero in diagnostics
ZERO_AMPLITUDE = 1e-12


class StateVector:
    """Length-2^n vector of real amplitudes c_x."""

    def __init__(self, amps: np.ndarray):
        amps = np.array(amps, dtype=np.float64, copy=True)
        if amps.ndim != 1:
            raise InputShapeError("state vector must be one-dimensional")
        self._n = arity_of_length(len(amps))
        amps.flags.writeable = False
        self._amps = amps

    @classmethod
    def basis(cls, n: int, x: BitsLike | int) -> "StateVector":
        """The computational basis state |x>."""
        index = int(x) if isinstance(x, (int, np.integer)) else bits_to_index(x, n)
        if not 0 <= index < (1 << n):
            raise InputShapeError(f"basis index {index} out of range for n={n}")
        amps = np.zeros(1 << n)
        amps[index] = 1.0
        return cls(amps)

    @property
    def n(self) -> int:
        return self._n

    @property
    def amps(self) -> np.ndarray:
        return self._amps

    def norm(self) -> float:
        return float(np.linalg.norm(self._amps))

    def probabilities(self) -> np.ndarray:
        """Born probabilities amps[x]^2."""
        return self._amps * self._amps

    def __len__(self) -> int:
        return len(self._amps)

    def __repr__(self) -> str:
        return f"StateVector(n={self._n}, norm={self.norm():.12f})"


@dataclass(frozen=True)
class MeasurementOutcome:
    """Basis state a measurement collapsed to."""

    n: int
    index: int

    @property
    def bits(self) -> str:
        return index_to_bits(self.index, self.n)


def basis_state(n: int, x: BitsLike | int) -> StateVector:
    return StateVector.basis(n, x)


def encode_function(f: BipolarFunction, cap: int | None = None) -> StateVector:
    """|f> with amplitude f(x)/sqrt(2^n) on every basis state."""
    check_arity(f.n, cap)
    table = f.truth_table(cap).astype(np.float64)
    return StateVector(table / np.sqrt(float(len(table))))


def encode_training_set(training_set: TrainingSet, cap: int | None = None) -> StateVector:
    """|f~> with amplitude label(x)/sqrt(m) on each training input, 0 elsewhere."""
    if training_set is None or training_set.m < 1:
        raise PreconditionError("cannot encode an empty training set")
    check_arity(training_set.n, cap)
    amps = np.zeros(1 << training_set.n)
    amps[training_set.indices] = training_set.labels / np.sqrt(float(training_set.m))
    return StateVector(amps)


def apply_walsh(state: StateVector) -> StateVector:
    """Apply the unitary Walsh operator H (x) ... (x) H.

    Raises CorruptStateError if the result's norm differs from the input's
    by more than NORM_TOLERANCE relative.
    """
    transformed = StateVector(fwht(state.amps, SCALING_UNITARY))
    before, after = state.norm(), transformed.norm()
    if abs(after - before) > NORM_TOLERANCE * max(before, 1.0):
        raise CorruptStateError(f"Walsh operator changed the norm from {before:.12f} to {after:.12f}")
    return transformed


def _check_norm(state: StateVector) -> None:
    norm = state.norm()
    if abs(norm - 1.0) > MEASURE_NORM_TOLERANCE:
        raise CorruptStateError(f"state norm {norm:.9f} is not 1; refusing to measure")


class BornSampler:
    """Repeated Born-rule sampling of one state through its cumulative distribution."""

    def __init__(self, state: StateVector):
        _check_norm(state)
        self._n = state.n
        self._cdf = np.cumsum(state.probabilities())

    @property
    def n(self) -> int:
        return self._n

    def draw(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """`count` independent outcomes as an array of basis indices."""
        if count < 1:
            raise ParameterError(f"sample count must be >= 1, got {count}")
        draws = rng.random(count) * self._cdf[-1]
        indices = np.searchsorted(self._cdf, draws, side="right")
        return np.minimum(indices, len(self._cdf) - 1).astype(np.int64)


def sample(state: StateVector, count: int, rng: np.random.Generator) -> np.ndarray:
    """`count` independent Born-rule outcomes as an array of basis indices."""
    return BornSampler(state).draw(count, rng)


def measure(state: StateVector, rng: np.random.Generator) -> MeasurementOutcome:
    """One Born-rule measurement; the state itself is left unchanged."""
    return MeasurementOutcome(state.n, int(sample(state, 1, rng)[0]))


def amplitude(state: StateVector, a: BitsLike | int) -> float:
    """Amplitude of basis state a (simulation-side introspection)."""
    index = int(a) if isinstance(a, (int, np.integer)) else bits_to_index(a, state.n)
    if not 0 <= index < len(state):
        raise InputShapeError(f"index {index} out of range for n={state.n}")
    return float(state.amps[index])


def inner_product(left: StateVector, right: StateVector) -> float:
    """<left|right> for real states."""
    if left.n != right.n:
        raise InputShapeError(f"inner product of n={left.n} and n={right.n} states")
    return float(np.dot(left.amps, right.amps))


def function_value(state: StateVector, x: BitsLike) -> float:
    """sqrt(2^n) <Bx|Bs>, from amplitude dot products of the transformed states.

    Gives f(x) when `state` encodes the whole function and the
    training-set approximation of f(x) when it encodes a training set.
    Not a physically realizable readout; verification only.
    """
    transformed_x = apply_walsh(basis_state(state.n, x))
    transformed = apply_walsh(state)
    return float(np.sqrt(float(len(state)))) * inner_product(transformed_x, transformed)


@dataclass(frozen=True)
class StateDiagnostics:
    """Shape of the amplitude distribution of a state."""

    nonzero_count: int
    max_amplitude: float
    min_nonzero_amplitude: float
    max_probability: float
    min_nonzero_probability: float

    @property
    def probability_ratio(self) -> float:
        """Largest over smallest nonzero outcome probability."""
        return self.max_probability / self.min_nonzero_probability


def diagnose(state: StateVector) -> StateDiagnostics:
    magnitudes = np.abs(state.amps)
    nonzero = magnitudes[magnitudes > ZERO_AMPLITUDE]
    if len(nonzero) == 0:
        raise CorruptStateError("state has no nonzero amplitude")
    return StateDiagnostics(
        nonzero_count=int(len(nonzero)),
        max_amplitude=float(nonzero.max()),
        min_nonzero_amplitude=float(nonzero.min()),
        max_probability=float(nonzero.max() ** 2),
        min_nonzero_probability=float(nonzero.min() ** 2),
    )
