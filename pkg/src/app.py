"""Command handlers behind the CLI subcommands."""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .boolean import (
    DnfFunction,
    ExampleOracle,
    load_function,
    load_training_set,
    parity_from_bits,
    random_dnf,
    save_dnf,
    dnf_to_dict,
)
from .config import get_settings, EXIT_OK, EXIT_RESOURCE, EXIT_NOT_CONVERGED, EXIT_SELFTEST_FAILED
from .config.constants import DEFAULT_SEED, M_RULE_FIXED, M_RULE_FULL, M_RULE_SQRT
from .config.limits import check_arity
from .config.logging_config import get_logger
from .errors import ParameterError
from .harness import (
    RECORDS_FILE,
    SUMMARY_FILE,
    ExperimentConfig,
    ResourceProjection,
    report,
    run_experiment,
    run_suites,
    write_records,
    write_summary,
)
from .learning import (
    LearnerConfig,
    StoppingPolicy,
    default_budget,
    default_estimation_count,
    draw_count_for_rule,
    learn_from_training_set,
    run_learner,
)
from .quantum import apply_walsh, encode_training_set, write_state_csv
from .walsh import approx_spectrum, exact_spectrum, spectrum_to_frame, write_spectrum

# Module logger
logger = get_logger("app")

_M_ALIASES = {
    "sqrt": M_RULE_SQRT,
    M_RULE_SQRT: M_RULE_SQRT,
    "full": M_RULE_FULL,
    M_RULE_FULL: M_RULE_FULL,
}


def parse_m_rule(value: str) -> tuple[str, int | None]:
    """`--m` value: sqrt, full or an explicit draw count."""
    if value in _M_ALIASES:
        return _M_ALIASES[value], None
    try:
        count = int(value)
    except ValueError:
        raise ParameterError(f"--m expects 'sqrt', 'full' or a draw count, got {value!r}") from None
    return M_RULE_FIXED, count


def _emit(text: str, out: Path | None) -> None:
    """Write a command result to --out, or to stdout."""
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
        return
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info("Wrote %s", out)


class SamplerApp:
    """Runs one parsed command line and returns its exit code."""

    def __init__(self, args: argparse.Namespace):
        self._args = args
        self._settings = get_settings()
        self._cap = args.cap
        self._seed = args.seed if args.seed is not None else DEFAULT_SEED

    def run(self) -> int:
        handler = getattr(self, f"cmd_{self._args.command.replace('-', '_')}")
        logger.debug("Running command %s", self._args.command)
        return handler()

    def _rng(self) -> np.random.Generator:
        return np.random.default_rng(self._seed)

    def cmd_spectrum(self) -> int:
        """Exact spectrum of a function file, or the estimates of a training-set file."""
        args = self._args
        if args.training_set:
            training_set = load_training_set(args.input)
            spectrum = approx_spectrum(training_set, self._cap)
            if args.dump_state:
                write_state_csv(args.dump_state, apply_walsh(encode_training_set(training_set, self._cap)))
        else:
            if args.dump_state:
                raise ParameterError("--dump-state needs --training-set")
            spectrum = exact_spectrum(load_function(args.input), self._cap)

        if args.out is None:
            _emit(spectrum_to_frame(spectrum).to_csv(index=False, lineterminator="\n"), None)
        else:
            write_spectrum(args.out, spectrum)
        return EXIT_OK

    def _learner_config(self, n: int) -> LearnerConfig:
        args = self._args
        rule, fixed = parse_m_rule(args.m)
        if args.sequential:
            policy = StoppingPolicy.sequential_gap(
                args.confidence if args.confidence is not None else self._settings.confidence,
                args.max_samples if args.max_samples is not None else self._settings.max_samples,
                args.round_size if args.round_size is not None else self._settings.round_size,
                args.indifference if args.indifference is not None else self._settings.indifference,
            )
        else:
            budget = args.budget if args.budget is not None else default_budget(n, self._settings.budget_constant)
            policy = StoppingPolicy.fixed_budget(budget)
        if args.m_est is not None:
            m_est = args.m_est
        elif args.precision is not None:
            m_est = default_estimation_count(args.precision)
        else:
            m_est = None
        return LearnerConfig(
            m_draws=draw_count_for_rule(rule, n, fixed),
            policy=policy,
            m_est=m_est,
            exclude_zero=args.exclude_zero,
        )

    def _target(self, rng: np.random.Generator):
        args = self._args
        if args.table:
            return load_function(args.table)
        if args.parity:
            return parity_from_bits(args.parity)
        formula = random_dnf(args.random_dnf, args.terms, args.literals, rng)
        logger.info("Random target: %s", formula)
        return DnfFunction(formula)

    def cmd_learn(self) -> int:
        """Run the learner and print its result as JSON."""
        args = self._args
        rng = self._rng()
        if args.training_set:
            training_set = load_training_set(args.training_set)
            config = self._learner_config(training_set.n)
            result = learn_from_training_set(training_set, config, rng, self._cap)
        else:
            target = self._target(rng)
            check_arity(target.n, self._cap)
            config = self._learner_config(target.n)
            result = run_learner(ExampleOracle(target, rng), target.n, config, rng, self._cap)

        _emit(result.to_json(), args.out)
        if not result.converged:
            logger.warning("Sequential gap test did not converge; reporting current leader")
            return EXIT_NOT_CONVERGED
        return EXIT_OK

    def _experiment_config(self) -> ExperimentConfig:
        args = self._args
        config = ExperimentConfig.load(args.config) if args.config else ExperimentConfig.preset(args.preset)
        overrides = {}
        if args.n_values:
            overrides["n_values"] = args.n_values
        if args.trials is not None:
            overrides["trials"] = args.trials
        if args.seed is not None:
            overrides["base_seed"] = args.seed
        if args.out is not None:
            overrides["output"] = str(args.out)
        if overrides:
            config = ExperimentConfig.from_dict({**config.to_dict(), **overrides})
        return config

    def cmd_scale(self) -> int:
        """Run a scaling experiment, or print projections when it exceeds the cap."""
        args = self._args
        config = self._experiment_config()

        over = config.arities_over_cap(self._cap)
        if over:
            projections = [ResourceProjection.for_arity(n, config.budget_constant).to_dict() for n in over]
            _emit(json.dumps({"refused": True, "projections": projections}, indent=2), None)
            logger.error(
                "Arities %s exceed the memory cap; printed projected resources instead", over,
            )
            return EXIT_RESOURCE

        result = run_experiment(config, args.workers, self._cap, args.timing)
        output = Path(config.output)
        write_records(output / RECORDS_FILE, result.records)
        write_summary(output / SUMMARY_FILE, result.summary)
        _emit(json.dumps(result.summary, indent=2), None)
        return EXIT_OK

    def cmd_gen_dnf(self) -> int:
        """Write a random DNF formula as JSON."""
        args = self._args
        formula = random_dnf(args.n, args.terms, args.literals, self._rng())
        if args.out is None:
            _emit(json.dumps(dnf_to_dict(formula), indent=2), None)
        else:
            save_dnf(args.out, formula)
            logger.info("Wrote %d-term DNF over %d variables to %s", len(formula.terms), formula.n, args.out)
        return EXIT_OK

    def cmd_selftest(self) -> int:
        """Run the property suites; exit 4 when any fails."""
        results = run_suites(self._seed, self._args.inject_fault)
        passed = report(results)
        return EXIT_OK if passed else EXIT_SELFTEST_FAILED
