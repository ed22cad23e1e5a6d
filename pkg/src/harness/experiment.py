"""Scaling experiments: seeded trials over random DNF targets.

Each trial draws a random DNF, runs the learner against an example oracle
over it, and then computes oracle-side reference values (exact spectrum,
hypothesis agreement, post-transform state diagnostics) on the classical
path only. Trials run concurrently; their seeds depend only on the base
seed, the arity and the trial number, so the record set is the same for
any worker count.
"""

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict, field, fields
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
from scipy.stats import linregress

from .verification import agreement_rate
from ..boolean.functions import DnfFunction, random_dnf
from ..boolean.oracles import ExampleOracle
from ..config.constants import (
    BYTES_PER_AMPLITUDE,
    DEFAULT_DNF_LITERALS,
    DEFAULT_DNF_TERMS,
    DEFAULT_N_VALUES,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    M_RULE_FIXED,
    M_RULE_SQRT,
    M_RULES,
    HEADLINE_PRESET_N,
    POLICY_FIXED,
    POLICY_SEQUENTIAL,
    POLICIES,
    SCHEMA_VERSION,
)
from ..config.limits import resolve_max_n
from ..config.logging_config import get_logger
from ..config.settings import get_settings
from ..errors import FormatError, ParameterError, SignAmbiguousError
from ..learning.hypothesis import build_hypothesis
from ..learning.learner import (
    LearnerConfig,
    default_budget,
    default_draw_count,
    default_estimation_count,
    draw_count_for_rule,
    run_learner,
)
from ..learning.stopping import StoppingPolicy
from ..quantum.state import apply_walsh, diagnose, encode_training_set
from ..walsh.spectrum import exact_spectrum

logger = get_logger(__name__)

PRESET_DEFAULT = "default"
PRESET_HEADLINE = "headline"
PRESETS = (PRESET_DEFAULT, PRESET_HEADLINE)

RECORDS_FILE = "records.csv"
SUMMARY_FILE = "summary.json"


@dataclass(frozen=True)
class ExperimentConfig:
    """One scaling experiment. None fields fall back to the user settings."""

    n_values: tuple[int, ...] = tuple(DEFAULT_N_VALUES)
    trials: int = DEFAULT_TRIALS
    terms: int = DEFAULT_DNF_TERMS
    literals: int = DEFAULT_DNF_LITERALS
    m_rule: str = M_RULE_SQRT
    m_fixed: int | None = None
    policy: str = POLICY_SEQUENTIAL
    budget_constant: float | None = None
    confidence: float | None = None
    max_samples: int | None = None
    round_size: int | None = None
    indifference: float | None = None
    precision: float | None = None
    hit_quantile: float | None = None
    exclude_zero: bool = False
    base_seed: int = DEFAULT_SEED
    output: str = "results"

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))
        if not self.n_values:
            raise ParameterError("n_values must not be empty")
        if min(self.n_values) < 1:
            raise ParameterError(f"arities must be >= 1, got {list(self.n_values)}")
        if self.trials < 1:
            raise ParameterError(f"trials must be >= 1, got {self.trials}")
        if self.terms < 1:
            raise ParameterError(f"DNF term count must be >= 1, got {self.terms}")
        if not 1 <= self.literals <= min(self.n_values):
            raise ParameterError(
                f"literals per term must lie in [1, {min(self.n_values)}], got {self.literals}"
            )
        if self.m_rule not in M_RULES:
            raise ParameterError(f"unknown m rule {self.m_rule!r}, expected one of {M_RULES}")
        if self.m_rule == M_RULE_FIXED and (self.m_fixed is None or self.m_fixed < 1):
            raise ParameterError(f"m rule {M_RULE_FIXED!r} needs m_fixed >= 1")
        if self.policy not in POLICIES:
            raise ParameterError(f"unknown stopping policy {self.policy!r}, expected one of {POLICIES}")
        if self.hit_quantile is not None and not 0.0 < self.hit_quantile <= 1.0:
            raise ParameterError(f"hit quantile must lie in (0, 1], got {self.hit_quantile}")
        if self.base_seed < 0:
            raise ParameterError(f"seed must be non-negative, got {self.base_seed}")

    @classmethod
    def preset(cls, name: str) -> "ExperimentConfig":
        if name == PRESET_DEFAULT:
            return cls()
        if name == PRESET_HEADLINE:
            return cls(n_values=(HEADLINE_PRESET_N,), trials=1, policy=POLICY_FIXED)
        raise ParameterError(f"unknown preset {name!r}, expected one of {PRESETS}")

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ExperimentConfig":
        if not isinstance(data, dict):
            raise FormatError("experiment config must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known - {"schema_version"})
        if unknown:
            raise FormatError(f"unknown experiment config keys: {', '.join(unknown)}")
        values = {key: value for key, value in data.items() if key in known}
        try:
            return cls(**values)
        except TypeError as e:
            raise FormatError(f"invalid experiment config: {e}") from e

    @classmethod
    def load(cls, path: Path) -> "ExperimentConfig":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise FormatError(f"cannot read experiment config {path}: {e}") from e
        return cls.from_dict(data)

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["n_values"] = list(self.n_values)
        return data

    def arities_over_cap(self, cap: int | None = None) -> list[int]:
        max_n = resolve_max_n(cap)
        return [n for n in self.n_values if n > max_n]

    def stopping_policy(self, n: int) -> StoppingPolicy:
        settings = get_settings()
        if self.policy == POLICY_FIXED:
            constant = self.budget_constant if self.budget_constant is not None else settings.budget_constant
            return StoppingPolicy.fixed_budget(default_budget(n, constant))
        return StoppingPolicy.sequential_gap(
            self.confidence if self.confidence is not None else settings.confidence,
            self.max_samples if self.max_samples is not None else settings.max_samples,
            self.round_size if self.round_size is not None else settings.round_size,
            self.indifference if self.indifference is not None else settings.indifference,
        )

    def learner_config(self, n: int) -> LearnerConfig:
        return LearnerConfig(
            m_draws=draw_count_for_rule(self.m_rule, n, self.m_fixed),
            policy=self.stopping_policy(n),
            m_est=default_estimation_count(self.precision) if self.precision is not None else None,
            exclude_zero=self.exclude_zero,
        )

    def resolved_hit_quantile(self) -> float:
        return self.hit_quantile if self.hit_quantile is not None else get_settings().hit_quantile


@dataclass(frozen=True)
class ResourceProjection:
    """What running one arity would cost."""

    n: int
    amplitudes: int
    state_bytes: int
    m: int
    projected_samples: int
    qubits: int

    @classmethod
    def for_arity(cls, n: int, budget_constant: float | None = None) -> "ResourceProjection":
        constant = budget_constant if budget_constant is not None else get_settings().budget_constant
        return cls(
            n=n,
            amplitudes=1 << n,
            state_bytes=BYTES_PER_AMPLITUDE * (1 << n),
            m=default_draw_count(n),
            projected_samples=default_budget(n, constant),
            qubits=2 * n + 1,
        )

    @property
    def state_gib(self) -> float:
        return self.state_bytes / 2 ** 30

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["state_gib"] = self.state_gib
        return data


@dataclass
class TrialRecord:
    n: int
    trial: int
    seed: int
    formula: str = ""
    m_draws: int = 0
    m: int = 0
    samples_used: int = 0
    converged: bool = False
    identified: str = ""
    estimate: float = math.nan
    true_argmax: str = ""
    true_max_value: float = math.nan
    identified_coefficient: float = math.nan
    hit: bool = False
    argmax_hit: bool = False
    agreement: float = math.nan
    nonzero_count: int = 0
    nonzero_bound_ok: bool = False
    max_probability: float = math.nan
    min_nonzero_probability: float = math.nan
    probability_ratio: float = math.nan
    min_nonzero_amplitude: float = math.nan
    wall_time: float = math.nan
    error: str = field(default="")

    @property
    def failed(self) -> bool:
        return bool(self.error)


def trial_seed(base_seed: int, n: int, trial: int) -> int:
    """Seed of one trial: first word of SeedSequence(base_seed, spawn_key=(n, trial))."""
    sequence = np.random.SeedSequence(base_seed, spawn_key=(n, trial))
    return int(sequence.generate_state(1, np.uint64)[0])


def run_trial(
    config: ExperimentConfig, n: int, trial: int, cap: int | None = None, timing: bool = False,
) -> TrialRecord:
    """One seeded trial. Failures are recorded on the record, never raised."""
    seed = trial_seed(config.base_seed, n, trial)
    record = TrialRecord(n=n, trial=trial, seed=seed)
    started = time.perf_counter()
    try:
        rng = np.random.default_rng(seed)
        formula = random_dnf(n, config.terms, config.literals, rng)
        target = DnfFunction(formula)
        record.formula = str(formula)

        learner_config = config.learner_config(n)
        result = run_learner(ExampleOracle(target, rng), n, learner_config, rng, cap)
        record.m_draws = learner_config.m_draws
        record.m = result.m
        record.samples_used = result.samples_used
        record.converged = result.converged
        record.identified = result.identified.bits
        record.estimate = result.estimate

        # Oracle side: classical exact path only
        spectrum = exact_spectrum(target, cap)
        magnitudes = np.abs(spectrum.coeffs)
        true_argmax = spectrum.argmax(config.exclude_zero)
        record.true_argmax = true_argmax.bits
        record.true_max_value = spectrum[true_argmax]
        record.identified_coefficient = spectrum[result.identified]
        record.argmax_hit = result.identified.value == true_argmax.value
        record.hit = bool(
            magnitudes[result.identified.value]
            >= config.resolved_hit_quantile() * magnitudes[true_argmax.value]
        )

        try:
            record.agreement = agreement_rate(build_hypothesis(result), target, cap)
        except SignAmbiguousError as e:
            logger.warning("Trial n=%d #%d: %s", n, trial, e)

        diagnostics = diagnose(apply_walsh(encode_training_set(result.training_set, cap)))
        record.nonzero_count = diagnostics.nonzero_count
        record.nonzero_bound_ok = diagnostics.nonzero_count * result.m >= (1 << n)
        record.max_probability = diagnostics.max_probability
        record.min_nonzero_probability = diagnostics.min_nonzero_probability
        record.probability_ratio = diagnostics.probability_ratio
        record.min_nonzero_amplitude = diagnostics.min_nonzero_amplitude
    except Exception as e:
        logger.exception("Trial n=%d #%d failed", n, trial)
        record.error = f"{type(e).__name__}: {e}"

    if timing:
        record.wall_time = time.perf_counter() - started
    return record


def records_to_frame(records: list[TrialRecord]) -> pd.DataFrame:
    ordered = sorted(records, key=lambda r: (r.n, r.trial))
    frame = pd.DataFrame([asdict(r) for r in ordered], columns=[f.name for f in fields(TrialRecord)])
    frame.insert(0, "schema_version", SCHEMA_VERSION)
    return frame


def write_records(path: Path, records: list[TrialRecord]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    records_to_frame(records).to_csv(path, index=False, lineterminator="\n")
    logger.info("Wrote %d trial records to %s", len(records), path)


def _finite(value: float) -> float | None:
    value = float(value)
    return value if math.isfinite(value) else None


def summarize(records: list[TrialRecord], config: ExperimentConfig) -> dict[str, Any]:
    """Per-arity medians and rates, plus the log2 sample-count slope against n."""
    frame = records_to_frame(records)
    per_n = []
    for n in sorted(set(config.n_values)):
        group = frame[frame["n"] == n]
        ok = group[group["error"] == ""]
        entry: dict[str, Any] = {"n": n, "trials": int(len(group)), "failures": int(len(group) - len(ok))}
        if len(ok):
            agreement = ok["agreement"].dropna()
            entry.update(
                median_samples=_finite(ok["samples_used"].median()),
                mean_samples=_finite(ok["samples_used"].mean()),
                median_m=_finite(ok["m"].median()),
                converged_rate=_finite(ok["converged"].mean()),
                hit_rate=_finite(ok["hit"].mean()),
                argmax_hit_rate=_finite(ok["argmax_hit"].mean()),
                median_agreement=_finite(agreement.median()) if len(agreement) else None,
                weak_learning_rate=_finite((agreement > 0.5).sum() / len(ok)),
                median_probability_ratio=_finite(ok["probability_ratio"].median()),
                median_min_nonzero_amplitude=_finite(ok["min_nonzero_amplitude"].median()),
                median_nonzero_count=_finite(ok["nonzero_count"].median()),
                nonzero_bound_holds=bool(ok["nonzero_bound_ok"].all()),
            )
        per_n.append(entry)

    fitted = [e for e in per_n if e.get("median_samples")]
    slope = intercept = rvalue = None
    if len({e["n"] for e in fitted}) >= 2:
        fit = linregress([e["n"] for e in fitted], [math.log2(e["median_samples"]) for e in fitted])
        slope, intercept, rvalue = float(fit.slope), float(fit.intercept), float(fit.rvalue)

    ratios = [e["median_probability_ratio"] for e in per_n if e.get("median_probability_ratio") is not None]
    return {
        "schema_version": SCHEMA_VERSION,
        "config": config.to_dict(),
        "per_n": per_n,
        "slope": slope,
        "intercept": intercept,
        "rvalue": rvalue,
        "probability_ratio_increasing": all(a < b for a, b in zip(ratios, ratios[1:])),
    }


def write_summary(path: Path, summary: dict[str, Any]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
    logger.info("Wrote summary to %s", path)


@dataclass
class ExperimentResult:
    records: list[TrialRecord]
    summary: dict[str, Any]


def run_experiment(
    config: ExperimentConfig, workers: int | None = None, cap: int | None = None, timing: bool = False,
) -> ExperimentResult:
    """Run every (n, trial) unit; records come back sorted by (n, trial)."""
    workers = max(1, workers if workers is not None else get_settings().workers)
    units = [(n, trial) for n in config.n_values for trial in range(config.trials)]
    logger.info("Running %d trials over n=%s with %d worker(s)", len(units), list(config.n_values), workers)

    if workers == 1:
        records = [run_trial(config, n, trial, cap, timing) for n, trial in units]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run_trial, config, n, trial, cap, timing) for n, trial in units]
            records = [future.result() for future in futures]

    records.sort(key=lambda r: (r.n, r.trial))
    failures = sum(r.failed for r in records)
    if failures:
        logger.warning("%d of %d trials failed", failures, len(records))
    return ExperimentResult(records, summarize(records, config))
