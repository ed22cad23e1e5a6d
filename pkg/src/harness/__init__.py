"""Experiment orchestration, oracle-side verification and the selftest suites."""

from .verification import agreement_rate, chi_square_pvalue
from .experiment import (
    PRESETS,
    PRESET_DEFAULT,
    PRESET_HEADLINE,
    RECORDS_FILE,
    SUMMARY_FILE,
    ExperimentConfig,
    ExperimentResult,
    ResourceProjection,
    TrialRecord,
    trial_seed,
    run_trial,
    run_experiment,
    records_to_frame,
    write_records,
    summarize,
    write_summary,
)
from .selftest import SUITES, SuiteResult, run_suites, report

__all__ = [
    "agreement_rate",
    "chi_square_pvalue",
    "PRESETS",
    "PRESET_DEFAULT",
    "PRESET_HEADLINE",
    "RECORDS_FILE",
    "SUMMARY_FILE",
    "ExperimentConfig",
    "ExperimentResult",
    "ResourceProjection",
    "TrialRecord",
    "trial_seed",
    "run_trial",
    "run_experiment",
    "records_to_frame",
    "write_records",
    "summarize",
    "write_summary",
    "SUITES",
    "SuiteResult",
    "run_suites",
    "report",
]
