"""Repeated prepare-transform-observe sampling of a training-set state."""

from typing import NamedTuple

import numpy as np

from .histogram import SampleHistogram, identify_large
from .stopping import StoppingPolicy, indifference_zone, should_stop
from ..boolean.training_set import TrainingSet
from ..config.logging_config import get_logger
from ..quantum.state import BornSampler, apply_walsh, encode_training_set
from ..walsh.spectrum import CoefficientIndex

logger = get_logger(__name__)


class SamplingRun(NamedTuple):
    identified: CoefficientIndex
    histogram: SampleHistogram
    converged: bool


def _transformed_sampler(training_set: TrainingSet, cap: int | None) -> BornSampler:
    return BornSampler(apply_walsh(encode_training_set(training_set, cap)))


def sample_spectrum(
    training_set: TrainingSet, k: int, rng: np.random.Generator, cap: int | None = None,
) -> SampleHistogram:
    """Tally k observations of the transformed training-set state.

    Each observation counts as one full prepare-transform-observe cycle.
    """
    sampler = _transformed_sampler(training_set, cap)
    histogram = SampleHistogram(training_set.n)
    histogram.add(sampler.draw(k, rng))
    logger.debug("Sampled %d observations over %d distinct indices", k, len(histogram))
    return histogram


def _select(histogram: SampleHistogram, exclude: tuple[int, ...]) -> CoefficientIndex:
    if exclude and not histogram.ranked(exclude):
        logger.warning("Every observation fell on an excluded index; selecting it anyway")
        return identify_large(histogram)
    return identify_large(histogram, exclude)


def _top_two(histogram: SampleHistogram, candidates: set[int], exclude: tuple[int, ...]) -> list[int]:
    # Counts only grow, so the top two are always among the previous top two
    # and the indices observed in the latest round.
    ranked = sorted((i for i in candidates if i not in exclude), key=lambda i: (-histogram.count(i), i))
    return ranked[:2]


def run_sampling(
    training_set: TrainingSet,
    policy: StoppingPolicy,
    rng: np.random.Generator,
    exclude_zero: bool = False,
    cap: int | None = None,
) -> SamplingRun:
    """Sample until the policy stops, then select the most observed index.

    A sequential run stops on a separated leader or on a leader resolved
    within the policy's indifference zone. One that reaches its sample cap
    returns the current leader with converged=False.
    """
    exclude = (0,) if exclude_zero else ()

    if policy.is_fixed:
        histogram = sample_spectrum(training_set, policy.budget, rng, cap)
        return SamplingRun(_select(histogram, exclude), histogram, True)

    sampler = _transformed_sampler(training_set, cap)
    zone = indifference_zone(policy.indifference, training_set.m, training_set.n)
    histogram = SampleHistogram(training_set.n)
    contenders: list[int] = []
    converged = False
    rounds = 0
    while histogram.total < policy.max_samples:
        size = min(policy.round_size, policy.max_samples - histogram.total)
        batch = sampler.draw(size, rng)
        histogram.add(batch)
        rounds += 1
        contenders = _top_two(histogram, set(contenders).union(batch.tolist()), exclude)
        leader = histogram.count(contenders[0]) if contenders else 0
        runner = histogram.count(contenders[1]) if len(contenders) > 1 else 0
        if should_stop(leader, runner, histogram.total, policy.confidence, zone):
            converged = True
            break

    if converged:
        logger.debug("Gap test converged after %d rounds, %d samples", rounds, histogram.total)
    else:
        logger.info("Gap test did not converge within %d samples", policy.max_samples)
    return SamplingRun(_select(histogram, exclude), histogram, converged)
