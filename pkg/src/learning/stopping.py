"""Stopping policies for repeated Fourier sampling.

A fixed budget draws exactly K samples. The sequential gap test draws in
rounds and stops once the one-sided Clopper-Pearson lower bound on the
leader's frequency exceeds the upper bound on the runner-up's, both at
confidence delta.

Near-tied leaders never separate that way, so the test also stops once the
leader's amplitude interval is narrower than the indifference zone: the
amplitude that a coefficient difference of `indifference` produces after
the transform, indifference * sqrt(m / 2^n). Every other index has a
count no larger than the leader's, hence an upper bound no larger than the
leader's, so none can then exceed the leader by more than the zone.
"""

import math
from dataclasses import dataclass, asdict
from typing import Any, Iterable

from scipy.stats import beta

from .histogram import SampleHistogram
from ..config.constants import (
    DEFAULT_INDIFFERENCE,
    DEFAULT_ROUND_SIZE,
    POLICY_FIXED,
    POLICY_SEQUENTIAL,
    POLICIES,
)
from ..errors import ParameterError


@dataclass(frozen=True)
class StoppingPolicy:
    kind: str
    budget: int | None = None
    confidence: float | None = None
    max_samples: int | None = None
    round_size: int = DEFAULT_ROUND_SIZE
    indifference: float | None = None

    def __post_init__(self):
        if self.kind not in POLICIES:
            raise ParameterError(f"unknown stopping policy {self.kind!r}, expected one of {POLICIES}")
        if self.kind == POLICY_FIXED:
            if self.budget is None or self.budget < 1:
                raise ParameterError(f"fixed budget must be >= 1, got {self.budget}")
            return
        if self.confidence is None or not 0.0 < self.confidence < 1.0:
            raise ParameterError(f"confidence must lie in (0, 1), got {self.confidence}")
        if self.max_samples is None or self.max_samples < 1:
            raise ParameterError(f"sample cap must be >= 1, got {self.max_samples}")
        if self.round_size < 1:
            raise ParameterError(f"round size must be >= 1, got {self.round_size}")
        if self.indifference is None:
            object.__setattr__(self, "indifference", DEFAULT_INDIFFERENCE)
        if not 0.0 <= self.indifference <= 2.0:
            raise ParameterError(f"indifference must lie in [0, 2], got {self.indifference}")

    @classmethod
    def fixed_budget(cls, budget: int) -> "StoppingPolicy":
        return cls(POLICY_FIXED, budget=int(budget))

    @classmethod
    def sequential_gap(
        cls,
        confidence: float,
        max_samples: int,
        round_size: int = DEFAULT_ROUND_SIZE,
        indifference: float = DEFAULT_INDIFFERENCE,
    ) -> "StoppingPolicy":
        return cls(POLICY_SEQUENTIAL, confidence=float(confidence), max_samples=int(max_samples),
                   round_size=int(round_size), indifference=float(indifference))

    @property
    def is_fixed(self) -> bool:
        return self.kind == POLICY_FIXED

    def to_dict(self) -> dict[str, Any]:
        return {key: value for key, value in asdict(self).items() if value is not None}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "StoppingPolicy":
        try:
            return cls(**data)
        except TypeError as e:
            raise ParameterError(f"invalid stopping policy {data!r}: {e}") from e


def lower_bound(count: int, total: int, confidence: float) -> float:
    """One-sided Clopper-Pearson lower bound on a binomial proportion."""
    if count <= 0:
        return 0.0
    return float(beta.ppf(1.0 - confidence, count, total - count + 1))


def upper_bound(count: int, total: int, confidence: float) -> float:
    """One-sided Clopper-Pearson upper bound on a binomial proportion."""
    if count >= total:
        return 1.0
    return float(beta.ppf(confidence, count + 1, total - count))


def indifference_zone(indifference: float, m: int, n: int) -> float:
    """Post-transform amplitude of a coefficient difference, indifference * sqrt(m / 2^n)."""
    return indifference * math.sqrt(m / float(1 << n))


def counts_separated(leader_count: int, runner_count: int, total: int, confidence: float) -> bool:
    """Lower bound on the leader above the upper bound on the runner-up."""
    if total < 1 or leader_count < 1:
        return False
    return lower_bound(leader_count, total, confidence) > upper_bound(runner_count, total, confidence)


def leader_resolved(leader_count: int, total: int, confidence: float, zone: float) -> bool:
    """Whether the bounds on the leader's amplitude lie within `zone` of each other."""
    if zone <= 0.0 or total < 1 or leader_count < 1:
        return False
    low = math.sqrt(lower_bound(leader_count, total, confidence))
    high = math.sqrt(upper_bound(leader_count, total, confidence))
    return high - low <= zone


def should_stop(leader_count: int, runner_count: int, total: int, confidence: float, zone: float) -> bool:
    return (counts_separated(leader_count, runner_count, total, confidence)
            or leader_resolved(leader_count, total, confidence, zone))


def gap_separated(histogram: SampleHistogram, confidence: float, exclude: Iterable[int] = ()) -> bool:
    """Whether the leader is significantly more frequent than the runner-up."""
    ranked = histogram.ranked(exclude)
    if not ranked:
        return False
    runner_count = ranked[1][1] if len(ranked) > 1 else 0
    return counts_separated(ranked[0][1], runner_count, histogram.total, confidence)


def sequential_stop(
    histogram: SampleHistogram, confidence: float, zone: float, exclude: Iterable[int] = (),
) -> bool:
    """The full stopping decision of the sequential gap test on a histogram."""
    ranked = histogram.ranked(exclude)
    if not ranked:
        return False
    runner_count = ranked[1][1] if len(ranked) > 1 else 0
    return should_stop(ranked[0][1], runner_count, histogram.total, confidence, zone)
