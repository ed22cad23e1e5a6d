"""Example and membership oracles.

The learner only ever receives an ExampleOracle. MembershipOracle exists
for verification code, which may query chosen inputs.
"""

import numpy as np

from .bits import BitsLike, index_to_bits
from .functions import BipolarFunction
from .training_set import TrainingSet
from ..config.logging_config import get_logger
from ..errors import ParameterError

logger = get_logger(__name__)


class ExampleOracle:
    """Uniformly random labeled examples (x, f(x)) of a hidden function."""

    def __init__(self, function: BipolarFunction, rng: np.random.Generator):
        self.__function = function
        self._rng = rng
        self._draws = 0

    @property
    def n(self) -> int:
        return self.__function.n

    @property
    def draws(self) -> int:
        """Total examples handed out so far."""
        return self._draws

    def draw(self) -> tuple[str, int]:
        """One example as (bitstring, label)."""
        xs, ys = self.draw_many(1)
        return index_to_bits(int(xs[0]), self.n), int(ys[0])

    def draw_many(self, count: int) -> tuple[np.ndarray, np.ndarray]:
        """`count` independent examples as (indices, labels) arrays."""
        if count < 1:
            raise ParameterError(f"draw count must be >= 1, got {count}")
        xs = self._rng.integers(0, 1 << self.n, size=count, dtype=np.int64)
        ys = self.__function.values_at(xs)
        self._draws += count
        return xs, ys


class MembershipOracle:
    """Answers f(x) for chosen x. Verification use only."""

    def __init__(self, function: BipolarFunction):
        self._function = function
        self.queries = 0

    @property
    def n(self) -> int:
        return self._function.n

    def query(self, x: BitsLike) -> int:
        self.queries += 1
        return self._function.eval(x)


def draw_example(f: BipolarFunction, rng: np.random.Generator) -> tuple[str, int]:
    """Draw one uniform example of f."""
    return ExampleOracle(f, rng).draw()


def sample_training_set(oracle: ExampleOracle, target: int) -> TrainingSet:
    """Draw `target` examples with replacement and keep the distinct ones."""
    if target < 1:
        raise ParameterError(f"draw count must be >= 1, got {target}")
    xs, ys = oracle.draw_many(target)
    training_set = TrainingSet.from_arrays(oracle.n, xs, ys)
    logger.debug("Drew %d examples, %d distinct (n=%d)", target, training_set.m, oracle.n)
    return training_set


def build_training_set(f: BipolarFunction, target: int, rng: np.random.Generator) -> TrainingSet:
    """Training set of f from `target` uniform draws."""
    return sample_training_set(ExampleOracle(f, rng), target)
