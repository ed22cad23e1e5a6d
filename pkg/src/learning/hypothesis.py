"""Signed-parity weak hypotheses."""

from dataclasses import dataclass

import numpy as np

from .learner import LearnerResult
from ..boolean.bits import BitsLike, bits_to_index, chi_values
from ..errors import ParameterError, SignAmbiguousError
from ..walsh.spectrum import CoefficientIndex


@dataclass(frozen=True)
class WeakHypothesis:
    """Predicts sign * chi_a(x)."""

    index: CoefficientIndex
    sign: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ParameterError(f"hypothesis sign must be -1 or +1, got {self.sign}")

    def predict(self, x: BitsLike) -> int:
        return int(self.predict_all(np.array([bits_to_index(x, self.index.n)]))[0])

    def predict_all(self, indices: np.ndarray) -> np.ndarray:
        """Predictions at many integer inputs."""
        return (self.sign * chi_values(self.index.value, indices)).astype(np.int8)

    def flipped(self) -> "WeakHypothesis":
        return WeakHypothesis(self.index, -self.sign)


def build_hypothesis(result: LearnerResult) -> WeakHypothesis:
    """Signed parity on the identified index, signed by the estimate."""
    if result.estimate == 0:
        raise SignAmbiguousError(
            f"estimate for {result.identified.bits} is exactly 0; re-estimate with more examples"
        )
    return WeakHypothesis(result.identified, 1 if result.estimate > 0 else -1)


def predict(hypothesis: WeakHypothesis, x: BitsLike) -> int:
    return hypothesis.predict(x)
