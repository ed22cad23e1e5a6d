"""Entry point for the Quantum Fourier Sampler command line."""

import argparse
import platform
import sys
from pathlib import Path


def _setup_logging(verbose: bool, quiet: bool) -> None:
    """Initialize logging configuration before other imports."""
    try:
        from src.config import configure_logging, level_for
    except ImportError:
        from .config import configure_logging, level_for

    configure_logging(level_for(verbose, quiet))


def _log_startup_info() -> None:
    """Log application startup information."""
    try:
        from src.config import get_logger
        from src.config.constants import APP_NAME, APP_VERSION
    except ImportError:
        from .config import get_logger
        from .config.constants import APP_NAME, APP_VERSION

    logger = get_logger("main")

    logger.debug("%s v%s starting", APP_NAME, APP_VERSION)
    logger.debug("Python: %s", sys.version)
    logger.debug("Platform: %s %s", platform.system(), platform.release())
    logger.debug("Architecture: %s", platform.machine())


def _setup_exception_handler() -> None:
    """Set up global exception handler for uncaught exceptions."""
    try:
        from src.config import get_logger
    except ImportError:
        from .config import get_logger

    logger = get_logger("main")

    def handle_exception(exc_type, exc_value, exc_traceback):
        """Handle uncaught exceptions by logging them."""
        if issubclass(exc_type, KeyboardInterrupt):
            logger.info("Interrupted by user (KeyboardInterrupt)")
            sys.__excepthook__(exc_type, exc_value, exc_traceback)
            return

        logger.critical(
            "Uncaught exception",
            exc_info=(exc_type, exc_value, exc_traceback)
        )

    sys.excepthook = handle_exception


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the usage code."""

    def error(self, message: str):
        try:
            from src.config.constants import EXIT_USAGE
        except ImportError:
            from .config.constants import EXIT_USAGE

        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    try:
        from src.config.constants import APP_VERSION, DEFAULT_DNF_LITERALS, DEFAULT_DNF_TERMS
        from src.harness import PRESETS, PRESET_DEFAULT
    except ImportError:
        from .config.constants import APP_VERSION, DEFAULT_DNF_LITERALS, DEFAULT_DNF_TERMS
        from .harness import PRESETS, PRESET_DEFAULT

    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="base random seed (u64)")
    common.add_argument("--out", type=Path, default=None, help="output path (default: stdout)")
    common.add_argument("--cap", type=int, default=None, help="largest arity n allowed in memory")
    common.add_argument("--workers", type=int, default=None, help="concurrent trials for scale")
    common.add_argument("--config-dir", type=Path, default=None, help="settings directory")
    common.add_argument("--timing", action="store_true", help="record wall time in trial records")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")

    parser = _Parser(prog="fourier-sampler", description="Quantum Fourier sampling learner for DNF.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {APP_VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    spectrum = commands.add_parser("spectrum", parents=[common], help="exact Walsh spectrum of a function file")
    spectrum.add_argument("input", type=Path, help="function JSON (truth table or DNF)")
    spectrum.add_argument("--training-set", action="store_true",
                          help="input is a training set; write its estimated coefficients")
    spectrum.add_argument("--dump-state", type=Path, default=None,
                          help="also write the transformed training-set state as CSV")

    learn = commands.add_parser("learn", parents=[common], help="find a large coefficient from examples")
    source = learn.add_mutually_exclusive_group(required=True)
    source.add_argument("--table", type=Path, help="target function JSON (truth table or DNF)")
    source.add_argument("--parity", help="target parity chi_a given as a bitstring a")
    source.add_argument("--random-dnf", type=int, metavar="N", help="random DNF target over N variables")
    source.add_argument("--training-set", type=Path, help="sample a given training set JSON")
    learn.add_argument("--terms", type=int, default=DEFAULT_DNF_TERMS, help="terms of a random DNF")
    learn.add_argument("--literals", type=int, default=DEFAULT_DNF_LITERALS, help="literals per term")
    learn.add_argument("--m", default="sqrt", help="training draws: sqrt, full or a count")
    learn.add_argument("--budget", type=int, default=None, help="fixed sample budget K")
    learn.add_argument("--sequential", action="store_true", help="use the sequential gap test")
    learn.add_argument("--confidence", type=float, default=None, help="gap test confidence delta")
    learn.add_argument("--max-samples", type=int, default=None, help="gap test sample cap")
    learn.add_argument("--round-size", type=int, default=None, help="samples per gap test round")
    learn.add_argument("--indifference", type=float, default=None,
                       help="coefficient difference the gap test may leave unresolved")
    learn.add_argument("--m-est", type=int, default=None, help="examples for coefficient estimation")
    learn.add_argument("--precision", type=float, default=None, help="precision p, m_est = ceil(16 p^2)")
    learn.add_argument("--exclude-zero", action="store_true", help="never report the all-zero index")

    scale = commands.add_parser("scale", parents=[common], help="sample-count scaling experiment")
    scale.add_argument("config", type=Path, nargs="?", default=None, help="experiment config JSON")
    scale.add_argument("--preset", choices=PRESETS, default=PRESET_DEFAULT, help="named config when no file")
    scale.add_argument("--n-values", type=int, nargs="+", default=None, help="override arities")
    scale.add_argument("--trials", type=int, default=None, help="override trials per arity")

    gen_dnf = commands.add_parser("gen-dnf", parents=[common], help="write a random DNF formula")
    gen_dnf.add_argument("--n", type=int, required=True, help="number of variables")
    gen_dnf.add_argument("--terms", type=int, default=DEFAULT_DNF_TERMS, help="number of terms")
    gen_dnf.add_argument("--literals", type=int, default=DEFAULT_DNF_LITERALS, help="literals per term")

    selftest = commands.add_parser("selftest", parents=[common], help="run the property suites")
    selftest.add_argument("--inject-fault", action="store_true", help="break the transform kernel first")

    return parser


def main(argv: list[str] | None = None) -> int:
    """Run the command line.

    Returns:
        Exit code (0 success, 1 usage, 2 resource, 3 non-converged, 4 selftest failure).
    """
    args = build_parser().parse_args(argv)

    _setup_logging(args.verbose, args.quiet)
    _log_startup_info()
    _setup_exception_handler()

    try:
        from src.config import Settings, get_logger, use_settings
        from src.app import SamplerApp
        from src.errors import FourierSamplerError
    except ImportError:
        from .config import Settings, get_logger, use_settings
        from .app import SamplerApp
        from .errors import FourierSamplerError

    logger = get_logger("main")

    if args.config_dir is not None:
        use_settings(Settings(args.config_dir))

    try:
        exit_code = SamplerApp(args).run()
    except FourierSamplerError as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    logger.debug("Command %s exited with code %d", args.command, exit_code)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
