"""The learner: find a large Fourier coefficient from examples only."""

import json
import math
from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np

from .histogram import SampleHistogram
from .sampler import run_sampling
from .stopping import StoppingPolicy
from ..boolean.bits import BitsLike, chi_values
from ..boolean.oracles import ExampleOracle, sample_training_set
from ..boolean.training_set import TrainingSet
from ..config.constants import (
    FULL_TABLE_OVERSAMPLING,
    HISTOGRAM_TOP,
    M_RULE_FIXED,
    M_RULE_FULL,
    M_RULE_SQRT,
    M_RULES,
    SCHEMA_VERSION,
)
from ..config.logging_config import get_logger
from ..config.settings import get_settings
from ..errors import InputShapeError, ParameterError
from ..walsh.spectrum import CoefficientIndex, approx_coefficient

logger = get_logger(__name__)


def default_draw_count(n: int) -> int:
    """m = ceil(sqrt(2^n))."""
    return math.ceil(math.sqrt(2.0 ** n))


def default_budget(n: int, constant: float) -> int:
    """K = ceil(c * sqrt(2^n))."""
    return math.ceil(constant * math.sqrt(2.0 ** n))


def default_estimation_count(precision: float) -> int:
    """m_est = ceil(16 p^2)."""
    return math.ceil(16.0 * precision * precision)


def draw_count_for_rule(rule: str, n: int, fixed: int | None = None) -> int:
    """Oracle draws for the training set under an m-rule."""
    if rule == M_RULE_SQRT:
        return default_draw_count(n)
    if rule == M_RULE_FULL:
        return FULL_TABLE_OVERSAMPLING * (1 << n)
    if rule == M_RULE_FIXED:
        if fixed is None or fixed < 1:
            raise ParameterError(f"m rule {M_RULE_FIXED!r} needs a draw count >= 1, got {fixed}")
        return int(fixed)
    raise ParameterError(f"unknown m rule {rule!r}, expected one of {M_RULES}")


def predicted_leader_amplitude(m: int, n: int, coefficient: float) -> float:
    """Post-transform amplitude sqrt(m/2^n) * coefficient of a training-set state."""
    return math.sqrt(m / 2.0 ** n) * coefficient


@dataclass(frozen=True)
class LearnerConfig:
    """Learner parameters; None fields are filled from settings by `resolved`."""

    m_draws: int | None = None
    policy: StoppingPolicy | None = None
    m_est: int | None = None
    exclude_zero: bool = False

    def resolved(self, n: int) -> "LearnerConfig":
        settings = get_settings()
        config = replace(
            self,
            m_draws=self.m_draws if self.m_draws is not None else default_draw_count(n),
            policy=self.policy if self.policy is not None
            else StoppingPolicy.fixed_budget(default_budget(n, settings.budget_constant)),
            m_est=self.m_est if self.m_est is not None
            else default_estimation_count(settings.precision),
        )
        if config.m_draws < 1:
            raise ParameterError(f"m_draws must be >= 1, got {config.m_draws}")
        if config.m_est < 1:
            raise ParameterError(f"m_est must be >= 1, got {config.m_est}")
        return config


@dataclass(frozen=True)
class LearnerResult:
    n: int
    m: int
    identified: CoefficientIndex
    estimate: float
    samples_used: int
    estimation_examples: int
    histogram: SampleHistogram
    converged: bool
    training_set: TrainingSet = field(repr=False, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "m": self.m,
            "identified": self.identified.bits,
            "estimate": self.estimate,
            "samples_used": self.samples_used,
            "estimation_examples": self.estimation_examples,
            "converged": self.converged,
            "histogram_top": self.histogram.top(HISTOGRAM_TOP),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def estimate_coefficient(
    oracle: ExampleOracle, a: CoefficientIndex | BitsLike, m_est: int,
) -> float:
    """Monte Carlo mean of y * chi_a(x) over m_est fresh examples.

    Draws are with replacement and not deduplicated; the standard error is
    at most 1/sqrt(m_est). The oracle carries its own random stream.
    """
    if m_est < 1:
        raise ParameterError(f"m_est must be >= 1, got {m_est}")
    index = a if isinstance(a, CoefficientIndex) else CoefficientIndex.from_bits(a)
    if index.n != oracle.n:
        raise InputShapeError(f"index arity {index.n} does not match oracle arity {oracle.n}")
    xs, ys = oracle.draw_many(m_est)
    products = ys.astype(np.int64) * chi_values(index.value, xs).astype(np.int64)
    return float(products.sum()) / m_est


def run_learner(
    oracle: ExampleOracle,
    n: int,
    config: LearnerConfig,
    rng: np.random.Generator,
    cap: int | None = None,
) -> LearnerResult:
    """Training set from the oracle, repeated sampling, then classical estimation."""
    if n != oracle.n:
        raise InputShapeError(f"learner arity {n} does not match oracle arity {oracle.n}")
    config = config.resolved(n)

    training_set = sample_training_set(oracle, config.m_draws)
    logger.debug("Training set: %d draws, m=%d distinct (n=%d)", config.m_draws, training_set.m, n)

    run = run_sampling(training_set, config.policy, rng, config.exclude_zero, cap)
    estimate = estimate_coefficient(oracle, run.identified, config.m_est)

    result = LearnerResult(
        n=n,
        m=training_set.m,
        identified=run.identified,
        estimate=estimate,
        samples_used=run.histogram.total,
        estimation_examples=config.m_est,
        histogram=run.histogram,
        converged=run.converged,
        training_set=training_set,
    )
    logger.info(
        "Learner n=%d m=%d: identified %s (estimate %.4f) after %d samples, converged=%s",
        n, result.m, result.identified.bits, estimate, result.samples_used, result.converged,
    )
    return result


def learn_from_training_set(
    training_set: TrainingSet,
    config: LearnerConfig,
    rng: np.random.Generator,
    cap: int | None = None,
) -> LearnerResult:
    """Sample a given training set when no example oracle is available.

    The estimate is the training-set coefficient at the selected index, so
    estimation_examples equals m.
    """
    n = training_set.n
    config = replace(config, m_draws=training_set.m).resolved(n)
    run = run_sampling(training_set, config.policy, rng, config.exclude_zero, cap)
    estimate = approx_coefficient(training_set, run.identified)
    logger.info(
        "Training set n=%d m=%d: identified %s (estimate %.4f) after %d samples",
        n, training_set.m, run.identified.bits, estimate, run.histogram.total,
    )
    return LearnerResult(
        n=n,
        m=training_set.m,
        identified=run.identified,
        estimate=estimate,
        samples_used=run.histogram.total,
        estimation_examples=training_set.m,
        histogram=run.histogram,
        converged=run.converged,
        training_set=training_set,
    )
