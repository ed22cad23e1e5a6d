"""Fourier-sampling learner using only an example oracle."""

from .histogram import SampleHistogram, identify_large
from .stopping import (
    StoppingPolicy,
    lower_bound,
    upper_bound,
    indifference_zone,
    counts_separated,
    leader_resolved,
    gap_separated,
    sequential_stop,
)
from .sampler import SamplingRun, sample_spectrum, run_sampling
from .learner import (
    LearnerConfig,
    LearnerResult,
    default_draw_count,
    default_budget,
    default_estimation_count,
    draw_count_for_rule,
    predicted_leader_amplitude,
    estimate_coefficient,
    run_learner,
    learn_from_training_set,
)
from .hypothesis import WeakHypothesis, build_hypothesis, predict

__all__ = [
    "SampleHistogram",
    "identify_large",
    "StoppingPolicy",
    "lower_bound",
    "upper_bound",
    "indifference_zone",
    "counts_separated",
    "leader_resolved",
    "gap_separated",
    "sequential_stop",
    "SamplingRun",
    "sample_spectrum",
    "run_sampling",
    "LearnerConfig",
    "LearnerResult",
    "default_draw_count",
    "default_budget",
    "default_estimation_count",
    "draw_count_for_rule",
    "predicted_leader_amplitude",
    "estimate_coefficient",
    "run_learner",
    "learn_from_training_set",
    "WeakHypothesis",
    "build_hypothesis",
    "predict",
]
