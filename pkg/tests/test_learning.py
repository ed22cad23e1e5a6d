"""Histograms, stopping policies, the learner and weak hypotheses."""

import json
import math

import numpy as np
import pytest

from src.boolean import DnfFunction, ExampleOracle, ParityFunction, TrainingSet, TruthTableFunction, build_training_set, random_dnf
from src.errors import InputShapeError, ParameterError, PreconditionError, SignAmbiguousError
from src.harness import agreement_rate
from src.learning import (
    LearnerConfig,
    LearnerResult,
    SampleHistogram,
    StoppingPolicy,
    WeakHypothesis,
    build_hypothesis,
    default_budget,
    default_draw_count,
    draw_count_for_rule,
    estimate_coefficient,
    gap_separated,
    identify_large,
    indifference_zone,
    leader_resolved,
    learn_from_training_set,
    lower_bound,
    predict,
    run_learner,
    run_sampling,
    sample_spectrum,
    sequential_stop,
    upper_bound,
)
from src.quantum import apply_walsh, encode_training_set
from src.walsh import CoefficientIndex, approx_spectrum, exact_spectrum


def _histogram(n, counts):
    return SampleHistogram(n, {int(bits, 2): c for bits, c in counts.items()})


# Histogram

def test_histogram_totals():
    histogram = SampleHistogram.from_indices(2, [2, 2, 0, 2, 3])
    assert histogram.total == 5
    assert histogram.counts == {0: 1, 2: 3, 3: 1}
    assert sum(histogram.counts.values()) == histogram.total


def test_identify_large_strict_maximum():
    histogram = _histogram(2, {"10": 9, "00": 1, "01": 1, "11": 1})
    assert identify_large(histogram).bits == "10"


def test_identify_large_tie_break():
    assert identify_large(_histogram(2, {"00": 5, "11": 5})).bits == "00"


def test_identify_large_empty():
    with pytest.raises(PreconditionError):
        identify_large(SampleHistogram(2))


def test_histogram_ranking_helpers():
    histogram = _histogram(3, {"000": 7, "101": 4, "011": 4, "111": 1})
    assert histogram.leader() == (0, 7)
    assert histogram.runner_up() == (0b011, 4)
    assert histogram.leader(exclude=[0]) == (0b011, 4)
    assert histogram.top(2) == [{"index": "000", "count": 7}, {"index": "011", "count": 4}]
    assert SampleHistogram(3, {5: 2}).runner_up() is None


def test_histogram_rejects_out_of_range():
    with pytest.raises(InputShapeError):
        SampleHistogram.from_indices(2, [4])


# Sampling

def test_sample_spectrum_single_draw(worked_training_set, rng):
    histogram = sample_spectrum(worked_training_set, 1, rng)
    assert histogram.total == 1


def test_sample_spectrum_worked_frequency(worked_training_set, rng):
    histogram = sample_spectrum(worked_training_set, 12_000, rng)
    assert abs(histogram.count(0b10) / 12_000 - 0.75) < 0.02


def test_sample_spectrum_delta(rng):
    f = ParityFunction(5, 0b10110)
    training_set = build_training_set(f, 4 * 32 * 8, rng)
    assert training_set.m == 32
    histogram = sample_spectrum(training_set, 300, rng)
    assert histogram.counts == {0b10110: 300}


def test_sample_spectrum_validates_count(worked_training_set, rng):
    with pytest.raises(ParameterError):
        sample_spectrum(worked_training_set, 0, rng)


# Stopping policies

def test_policy_validation():
    with pytest.raises(ParameterError):
        StoppingPolicy.fixed_budget(0)
    with pytest.raises(ParameterError):
        StoppingPolicy.sequential_gap(1.0, 100)
    with pytest.raises(ParameterError):
        StoppingPolicy.sequential_gap(0.9, 0)
    with pytest.raises(ParameterError):
        StoppingPolicy("best_guess")


def test_policy_dict_round_trip():
    policy = StoppingPolicy.sequential_gap(0.9, 5000, 16)
    assert StoppingPolicy.from_dict(policy.to_dict()) == policy
    assert StoppingPolicy.fixed_budget(7).to_dict() == {"kind": "fixed_budget", "budget": 7, "round_size": 32}


def test_clopper_pearson_bounds():
    assert lower_bound(0, 10, 0.95) == 0.0
    assert upper_bound(10, 10, 0.95) == 1.0
    # all successes: lower bound solves p^N = 1 - delta
    assert lower_bound(32, 32, 0.95) == pytest.approx(0.05 ** (1 / 32))
    # no successes: upper bound solves (1 - p)^N = 1 - delta
    assert upper_bound(0, 32, 0.95) == pytest.approx(1 - 0.05 ** (1 / 32))
    assert lower_bound(30, 100, 0.95) < 0.3 < upper_bound(30, 100, 0.95)


def test_gap_test():
    assert gap_separated(_histogram(2, {"10": 32}), 0.95)
    assert not gap_separated(_histogram(2, {"10": 5, "01": 5}), 0.95)
    assert not gap_separated(SampleHistogram(2), 0.95)
    assert gap_separated(_histogram(2, {"00": 500, "10": 400, "01": 20}), 0.95, exclude=[0])


def test_policy_indifference():
    assert StoppingPolicy.sequential_gap(0.95, 100).indifference == 0.1
    assert StoppingPolicy("sequential_gap", confidence=0.95, max_samples=100).indifference == 0.1
    assert StoppingPolicy.fixed_budget(5).indifference is None
    assert StoppingPolicy.sequential_gap(0.95, 100, indifference=0.0).indifference == 0.0
    with pytest.raises(ParameterError):
        StoppingPolicy.sequential_gap(0.95, 100, indifference=-0.1)
    with pytest.raises(ParameterError):
        StoppingPolicy.sequential_gap(0.95, 100, indifference=2.5)


def test_indifference_zone_scales_with_the_amplitude_lattice():
    assert indifference_zone(0.1, 16, 8) == pytest.approx(0.025)
    assert indifference_zone(0.1, 4, 2) == pytest.approx(0.1)
    assert indifference_zone(0.0, 16, 8) == 0.0


def test_leader_resolution():
    assert leader_resolved(2500, 10_000, 0.95, 0.1)
    assert not leader_resolved(5, 20, 0.95, 0.1)
    assert not leader_resolved(0, 20, 0.95, 0.1)
    assert not leader_resolved(2500, 10_000, 0.95, 0.0)


def test_tied_leaders_stop_inside_the_indifference_zone(worked_function, rng):
    # the full table of the worked function has four coefficients of equal magnitude
    training_set = TrainingSet.from_arrays(2, np.arange(4), worked_function.truth_table())
    run = run_sampling(training_set, StoppingPolicy.sequential_gap(0.95, 100_000), rng)
    assert run.converged
    assert run.histogram.total < 2000


def test_fixed_budget_draws_exactly_k(worked_training_set, rng):
    run = run_sampling(worked_training_set, StoppingPolicy.fixed_budget(37), rng)
    assert run.histogram.total == 37
    assert run.converged


def test_sequential_gap_stops_in_first_round_on_delta(rng):
    training_set = build_training_set(ParityFunction(4, 0b0011), 4 * 16 * 8, rng)
    policy = StoppingPolicy.sequential_gap(0.95, 10_000, round_size=32)
    run = run_sampling(training_set, policy, rng)
    assert run.identified.bits == "0011"
    assert run.histogram.total == 32
    assert run.converged


def test_sequential_gap_flags_non_convergence(rng):
    # uniform spectrum: no leader ever separates
    training_set = build_training_set(TruthTableFunction([1, 1, -1, 1]), 400, rng)
    assert training_set.m == 4
    policy = StoppingPolicy.sequential_gap(0.999, 100, round_size=30)
    run = run_sampling(training_set, policy, rng)
    assert not run.converged
    assert run.histogram.total == 100


def test_worked_fixed_budget_identifies_dominant_index(worked_training_set):
    hits = 0
    for seed in range(1000):
        run = run_sampling(worked_training_set, StoppingPolicy.fixed_budget(100), np.random.default_rng(seed))
        hits += run.identified.bits == "10"
    assert hits >= 999


def test_exclude_zero(rng):
    constant = TruthTableFunction([1] * 8)
    training_set = build_training_set(constant, 100, rng)
    run = run_sampling(training_set, StoppingPolicy.fixed_budget(10), rng, exclude_zero=True)
    # every observation is the excluded index, so it is selected anyway
    assert run.identified.value == 0

    f = TruthTableFunction([1, 1, -1, 1])
    training_set = build_training_set(f, 400, rng)
    run = run_sampling(training_set, StoppingPolicy.fixed_budget(200), rng, exclude_zero=True)
    assert run.identified.value != 0


def test_argmax_consistency_with_large_budget():
    rng = np.random.default_rng(77)
    agreements = trials = 0
    while trials < 100:
        n = int(rng.integers(3, 9))
        f = DnfFunction(random_dnf(n, 3, min(3, n), rng))
        training_set = build_training_set(f, default_draw_count(n), rng)
        magnitudes = np.abs(approx_spectrum(training_set).coeffs)
        top = np.sort(magnitudes)[-2:]
        if top[1] - top[0] < 1e-9:
            continue
        trials += 1
        run = run_sampling(training_set, StoppingPolicy.fixed_budget(1_000_000), rng)
        agreements += run.identified.value == int(np.argmax(magnitudes))
    assert agreements >= 99


# Estimation

def test_estimate_constant_at_zero(rng):
    oracle = ExampleOracle(TruthTableFunction([1] * 16), rng)
    assert estimate_coefficient(oracle, CoefficientIndex(4, 0), 50) == 1.0


def test_estimate_parity_at_its_index(rng):
    oracle = ExampleOracle(ParityFunction(6, 0b110001), rng)
    assert estimate_coefficient(oracle, "110001", 50) == 1.0


def test_estimate_worked_coefficient(worked_function, rng):
    oracle = ExampleOracle(worked_function, rng)
    assert abs(estimate_coefficient(oracle, "10", 100_000) - 0.5) < 0.02
    assert oracle.draws == 100_000


def test_estimate_validation(worked_function, rng):
    oracle = ExampleOracle(worked_function, rng)
    with pytest.raises(ParameterError):
        estimate_coefficient(oracle, "10", 0)
    with pytest.raises(InputShapeError):
        estimate_coefficient(oracle, "100", 10)


# Learner

def test_default_counts():
    assert default_draw_count(16) == 256
    assert default_draw_count(5) == 6
    assert default_budget(16, 8.0) == 2048
    assert draw_count_for_rule("full_table", 6) == 256
    assert draw_count_for_rule("fixed", 6, 17) == 17
    with pytest.raises(ParameterError):
        draw_count_for_rule("fixed", 6)
    with pytest.raises(ParameterError):
        draw_count_for_rule("cube_root", 6)


def test_config_defaults_come_from_settings(isolated_settings):
    isolated_settings.budget_constant = 2.0
    config = LearnerConfig().resolved(10)
    assert config.m_draws == 32
    assert config.policy == StoppingPolicy.fixed_budget(64)
    assert config.m_est == 1024


def test_learner_full_table_parity(rng):
    n = 6
    a = 0b000101
    config = LearnerConfig(m_draws=draw_count_for_rule("full_table", n), m_est=10_000)
    result = run_learner(ExampleOracle(ParityFunction(n, a), rng), n, config, rng)
    assert result.identified.bits == "000101"
    assert abs(result.estimate - 1.0) < 0.02
    assert result.samples_used >= 1


def test_learner_constant_function(rng):
    config = LearnerConfig(m_draws=draw_count_for_rule("full_table", 5))
    result = run_learner(ExampleOracle(TruthTableFunction([1] * 32), rng), 5, config, rng)
    assert result.identified.bits == "00000"
    assert result.estimate == 1.0


def test_learner_small_worked_function(worked_function, rng):
    config = LearnerConfig(m_draws=3, policy=StoppingPolicy.fixed_budget(400))
    result = run_learner(ExampleOracle(worked_function, rng), 2, config, rng)
    probabilities = apply_walsh(encode_training_set(result.training_set)).probabilities()
    assert probabilities[result.identified.value] == pytest.approx(probabilities.max())
    assert result.identified.bits in {"00", "01", "10", "11"}
    assert -1.0 <= result.estimate <= 1.0


def test_learner_rejects_arity_mismatch(worked_function, rng):
    with pytest.raises(InputShapeError):
        run_learner(ExampleOracle(worked_function, rng), 3, LearnerConfig(), rng)


def test_learner_is_deterministic():
    f = DnfFunction(random_dnf(8, 4, 3, np.random.default_rng(0)))
    outputs = []
    for _ in range(2):
        rng = np.random.default_rng(99)
        result = run_learner(ExampleOracle(f, rng), 8, LearnerConfig(), rng)
        outputs.append(result.to_json())
    assert outputs[0] == outputs[1]


def test_result_json_shape(rng):
    f = DnfFunction(random_dnf(6, 2, 2, rng))
    result = run_learner(ExampleOracle(f, rng), 6, LearnerConfig(), rng)
    data = json.loads(result.to_json())
    assert set(data) >= {"n", "m", "identified", "estimate", "samples_used", "converged", "histogram_top"}
    assert data["n"] == 6
    assert len(data["identified"]) == 6
    assert len(data["histogram_top"]) <= 16
    assert data["histogram_top"][0]["count"] >= data["histogram_top"][-1]["count"]
    assert data["samples_used"] == default_budget(6, 8.0)


def test_learning_from_a_given_training_set(worked_training_set):
    config = LearnerConfig(policy=StoppingPolicy.fixed_budget(100))
    result = learn_from_training_set(worked_training_set, config, np.random.default_rng(7))
    assert result.identified.bits == "10"
    assert result.estimate == pytest.approx(1.0)
    assert result.m == 3


# Hypotheses

def _result(identified, estimate, training_set):
    return LearnerResult(
        n=identified.n, m=training_set.m, identified=identified, estimate=estimate,
        samples_used=1, estimation_examples=1, histogram=SampleHistogram(identified.n),
        converged=True, training_set=training_set,
    )


def test_worked_hypothesis_agreement(worked_function, worked_training_set):
    hypothesis = build_hypothesis(_result(CoefficientIndex.from_bits("10"), 0.5, worked_training_set))
    assert hypothesis.sign == 1
    assert [predict(hypothesis, x) for x in ("00", "01", "10", "11")] == [1, 1, -1, -1]
    assert agreement_rate(hypothesis, worked_function) == 0.75
    assert agreement_rate(hypothesis.flipped(), worked_function) == 0.25


def test_parity_hypothesis_agrees_everywhere(rng):
    f = ParityFunction(5, 0b01101)
    hypothesis = WeakHypothesis(CoefficientIndex(5, 0b01101), 1)
    assert agreement_rate(hypothesis, f) == 1.0


def test_zero_estimate_is_sign_ambiguous(worked_training_set):
    with pytest.raises(SignAmbiguousError):
        build_hypothesis(_result(CoefficientIndex.from_bits("10"), 0.0, worked_training_set))


def test_hypothesis_sign_validation():
    with pytest.raises(ParameterError):
        WeakHypothesis(CoefficientIndex(2, 1), 0)


def test_agreement_identity_exhaustive():
    rng = np.random.default_rng(5)
    for n in range(1, 11):
        f = DnfFunction(random_dnf(n, 3, min(2, n), rng))
        spectrum = exact_spectrum(f)
        for a in rng.integers(0, 1 << n, size=6):
            coefficient = spectrum[int(a)]
            sign = 1 if coefficient >= 0 else -1
            hypothesis = WeakHypothesis(CoefficientIndex(n, int(a)), sign)
            assert agreement_rate(hypothesis, f) == pytest.approx(0.5 * (1 + abs(coefficient)), abs=1e-12)


def test_end_to_end_weak_learning():
    rng = np.random.default_rng(2718)
    weak = 0
    trials = 50
    for _ in range(trials):
        n = int(rng.integers(6, 11))
        f = DnfFunction(random_dnf(n, 4, 3, rng))
        config = LearnerConfig(
            m_draws=draw_count_for_rule("full_table", n),
            policy=StoppingPolicy.fixed_budget(4 * default_budget(n, 8.0)),
        )
        result = run_learner(ExampleOracle(f, rng), n, config, rng)
        try:
            hypothesis = build_hypothesis(result)
        except SignAmbiguousError:
            continue
        weak += agreement_rate(hypothesis, f) > 0.5
    assert weak >= 0.9 * trials


def test_predicted_amplitude_matches_bridge(worked_training_set):
    from src.learning import predicted_leader_amplitude

    amps = apply_walsh(encode_training_set(worked_training_set)).amps
    assert predicted_leader_amplitude(3, 2, 1.0) == pytest.approx(amps[0b10])
    assert predicted_leader_amplitude(3, 2, 1 / 3) == pytest.approx(math.sqrt(3) / 6)


def test_sequential_stop_agrees_with_full_gap_test():
    rng = np.random.default_rng(12)
    f = DnfFunction(random_dnf(8, 4, 3, rng))
    training_set = build_training_set(f, 4 * default_draw_count(8), rng)
    policy = StoppingPolicy.sequential_gap(0.95, 20_000, round_size=16)
    run = run_sampling(training_set, policy, rng)
    assert run.converged == sequential_stop(run.histogram, 0.95, indifference_zone(0.1, training_set.m, 8))
