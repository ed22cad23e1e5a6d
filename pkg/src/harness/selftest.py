"""Cross-module property suites, run in-process by the `selftest` command.

Each suite takes its own seeded generator, raises AssertionError on a
violated property and returns a short detail string otherwise.
"""

import math
import sys
from dataclasses import dataclass
from typing import Callable, TextIO

import numpy as np

from .verification import chi_square_pvalue
from ..boolean.bits import parity
from ..boolean.functions import TruthTableFunction
from ..boolean.oracles import build_training_set
from ..boolean.training_set import TrainingSet
from ..config.constants import SCALING_UNITARY
from ..config.logging_config import get_logger
from ..learning.learner import predicted_leader_amplitude
from ..quantum.state import (
    BornSampler,
    StateVector,
    apply_walsh,
    encode_function,
    encode_training_set,
    function_value,
)
from ..walsh.spectrum import (
    approx_spectrum,
    evaluate_expansion,
    exact_spectrum,
    reconstruct,
)
from ..walsh.transform import fwht, hadamard_tensor, sign_fault, walsh_matrix

logger = get_logger(__name__)

WORKED_TABLE = (1, 1, -1, 1)
WORKED_EXAMPLES = (("00", 1), ("01", 1), ("10", -1))

TIGHT = 1e-12
BRIDGE_TOLERANCE = 1e-10
MEMORIZATION_TOLERANCE = 1e-9
BORN_SAMPLES = 200_000
BORN_PVALUE = 1e-6
WORKED_BORN_SAMPLES = 1_000_000
WORKED_BORN_TOLERANCE = 0.002


def _random_function(n: int, rng: np.random.Generator) -> TruthTableFunction:
    return TruthTableFunction(rng.choice(np.array([-1, 1], dtype=np.int8), size=1 << n))


def _random_training_set(n: int, rng: np.random.Generator) -> tuple[TruthTableFunction, TrainingSet]:
    f = _random_function(n, rng)
    target = int(rng.integers(1, 2 * math.isqrt(1 << n) + 2))
    return f, build_training_set(f, target, rng)


def _direct_coefficients(training_set: TrainingSet) -> np.ndarray:
    """(1/m) sum_{x in T} f(x) chi_a(x) for every a, without the transform kernel."""
    indices = np.arange(1 << training_set.n, dtype=np.int64)
    signs = 1 - 2 * parity(indices[:, None] & training_set.indices[None, :]).astype(np.int64)
    return signs @ training_set.labels.astype(np.int64) / training_set.m


def suite_worked_example(rng: np.random.Generator) -> str:
    f = TruthTableFunction(WORKED_TABLE)
    training_set = TrainingSet.from_examples(2, WORKED_EXAMPLES)

    np.testing.assert_allclose(exact_spectrum(f).coeffs, [0.5, -0.5, 0.5, 0.5], atol=TIGHT)
    approx = approx_spectrum(training_set)
    np.testing.assert_allclose(approx.coeffs, [1 / 3, -1 / 3, 1.0, 1 / 3], atol=TIGHT)

    transformed = apply_walsh(encode_training_set(training_set))
    np.testing.assert_allclose(transformed.amps, np.array([1, -1, 3, 1]) / (2 * np.sqrt(3)), atol=TIGHT)

    values = [evaluate_expansion(approx, None, x) for x in ("00", "01", "10", "11")]
    np.testing.assert_allclose(values, [4 / 3, 4 / 3, -4 / 3, 0.0], atol=TIGHT)

    assert abs(function_value(encode_function(f), "11") - 1.0) < TIGHT, "full encoding misreads f(11)"
    assert abs(function_value(encode_training_set(training_set), "11")) < TIGHT, "training encoding nonzero off T"
    return "spectrum, estimates, amplitudes and expansion match"


def suite_transform(rng: np.random.Generator) -> str:
    worst = 0.0
    for _ in range(500):
        n = int(rng.integers(1, 9))
        v = rng.normal(size=1 << n)
        worst = max(worst, float(np.max(np.abs(fwht(v) - walsh_matrix(n) @ v))))
    assert worst < BRIDGE_TOLERANCE, f"fast transform deviates from B.v by {worst:.3e}"

    for n in range(1, 7):
        assert np.allclose(hadamard_tensor(n), walsh_matrix(n) / np.sqrt(2.0 ** n), atol=TIGHT), \
            f"H tensor power differs from B/sqrt(2^n) at n={n}"

    for n in range(1, 21):
        v = rng.normal(size=1 << n)
        drift = abs(np.linalg.norm(fwht(v, SCALING_UNITARY)) - np.linalg.norm(v)) / np.linalg.norm(v)
        assert drift < BRIDGE_TOLERANCE, f"unitary scaling changes the norm at n={n} by {drift:.3e}"
    return f"500 vectors, max deviation {worst:.1e}"


def suite_orthonormality(rng: np.random.Generator) -> str:
    for n in range(1, 9):
        matrix = walsh_matrix(n).astype(np.int64)
        assert np.array_equal(matrix @ matrix.T, (1 << n) * np.eye(1 << n, dtype=np.int64)), \
            f"parity basis not orthogonal at n={n}"
    return "exact for n <= 8"


def suite_parseval(rng: np.random.Generator) -> str:
    for _ in range(50):
        n = int(rng.integers(1, 11))
        total = exact_spectrum(_random_function(n, rng)).parseval()
        assert abs(total - 1.0) < BRIDGE_TOLERANCE, f"sum of squared coefficients {total!r} at n={n}"
    return "50 random functions"


def suite_bridge(rng: np.random.Generator) -> str:
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(4, 13))
        _, training_set = _random_training_set(n, rng)
        amps = apply_walsh(encode_training_set(training_set)).amps
        predicted = predicted_leader_amplitude(training_set.m, n, _direct_coefficients(training_set))
        worst = max(worst, float(np.max(np.abs(amps - predicted))))
    assert worst < BRIDGE_TOLERANCE, f"post-transform amplitudes deviate from sqrt(m/2^n) f~ by {worst:.3e}"
    return f"200 pairs, max deviation {worst:.1e}"


def suite_memorization(rng: np.random.Generator) -> str:
    for _ in range(100):
        n = int(rng.integers(1, 11))
        _, training_set = _random_training_set(n, rng)
        expected = np.zeros(1 << n)
        expected[training_set.indices] = (1 << n) / training_set.m * training_set.labels
        values = reconstruct(approx_spectrum(training_set))
        deviation = float(np.max(np.abs(values - expected)))
        assert deviation < MEMORIZATION_TOLERANCE, f"full expansion deviates from memorized labels by {deviation:.3e}"
    return "100 training sets, exhaustive"


def suite_born(rng: np.random.Generator) -> str:
    worst = 1.0
    for _ in range(20):
        n = int(rng.integers(1, 11))
        amps = rng.normal(size=1 << n)
        state = StateVector(amps / np.linalg.norm(amps))
        counts = np.bincount(BornSampler(state).draw(BORN_SAMPLES, rng), minlength=len(state))
        worst = min(worst, chi_square_pvalue(counts, state.probabilities()))
    assert worst > BORN_PVALUE, f"chi-square p-value {worst:.3e} rejects the Born distribution"

    training_set = TrainingSet.from_examples(2, WORKED_EXAMPLES)
    draws = BornSampler(apply_walsh(encode_training_set(training_set))).draw(WORKED_BORN_SAMPLES, rng)
    frequency = float(np.mean(draws == 0b10))
    assert abs(frequency - 0.75) < WORKED_BORN_TOLERANCE, f"frequency of 10 is {frequency:.4f}, expected 0.75"
    return f"20 states, min p-value {worst:.3g}; frequency(10) = {frequency:.4f}"


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[[np.random.Generator], str]


SUITES = (
    Suite("worked_example", suite_worked_example),
    Suite("transform", suite_transform),
    Suite("orthonormality", suite_orthonormality),
    Suite("parseval", suite_parseval),
    Suite("bridge", suite_bridge),
    Suite("memorization", suite_memorization),
    Suite("born", suite_born),
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def run_suites(seed: int = 0, inject_fault: bool = False) -> list[SuiteResult]:
    """Run every suite in order with per-suite generators derived from seed."""
    results = []
    for position, suite in enumerate(SUITES):
        rng = np.random.default_rng([seed, position])
        try:
            if inject_fault:
                with sign_fault():
                    detail = suite.run(rng)
            else:
                detail = suite.run(rng)
            results.append(SuiteResult(suite.name, True, detail))
        except AssertionError as e:
            logger.error("Suite %s failed: %s", suite.name, e)
            lines = str(e).strip().splitlines()
            results.append(SuiteResult(suite.name, False, lines[0] if lines else "assertion failed"))
        except Exception as e:
            logger.exception("Suite %s raised", suite.name)
            results.append(SuiteResult(suite.name, False, f"{type(e).__name__}: {e}"))
    return results


def report(results: list[SuiteResult], stream: TextIO | None = None) -> bool:
    """Print one line per suite and a tally to stream (default: the current stdout)."""
    stream = stream or sys.stdout
    for result in results:
        print(result.line(), file=stream)
    passed = sum(r.passed for r in results)
    print(f"Results: {passed}/{len(results)} suites passed", file=stream)
    return passed == len(results)
