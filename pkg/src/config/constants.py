"""Application constants."""

APP_NAME = "Quantum Fourier Sampler"
APP_VERSION = "1.0.0"
APP_AUTHOR = "QuantumFourierSampler"

# Version stamped into every CSV/JSON file we write
SCHEMA_VERSION = 1

# Memory cap on the arity n. A state of 2^26 float64 amplitudes is 512 MiB.
DEFAULT_MAX_N = 26
MAX_N_ENV_VAR = "FOURIER_SAMPLER_MAX_N"
BYTES_PER_AMPLITUDE = 8

# Transform scaling options
SCALING_NONE = "none"
SCALING_CLASSICAL = "classical"  # 1/2^n, coefficients of the expansion
SCALING_UNITARY = "unitary"      # 1/sqrt(2^n), the quantum operator
SCALINGS = (SCALING_NONE, SCALING_CLASSICAL, SCALING_UNITARY)

# Norm tolerances
NORM_TOLERANCE = 1e-10
MEASURE_NORM_TOLERANCE = 1e-6

# Rules for choosing the training-set draw count m
M_RULE_SQRT = "sqrt_2n"
M_RULE_FIXED = "fixed"
M_RULE_FULL = "full_table"
M_RULES = (M_RULE_SQRT, M_RULE_FIXED, M_RULE_FULL)

# In the full-table regime the oracle is drawn this many times per input
FULL_TABLE_OVERSAMPLING = 4

# Stopping policies
POLICY_FIXED = "fixed_budget"
POLICY_SEQUENTIAL = "sequential_gap"
POLICIES = (POLICY_FIXED, POLICY_SEQUENTIAL)

# Learner defaults
DEFAULT_BUDGET_CONSTANT = 8.0    # K = ceil(c * sqrt(2^n))
DEFAULT_PRECISION = 8.0          # m_est = ceil(16 * p^2)
DEFAULT_CONFIDENCE = 0.95        # delta of the sequential gap test
DEFAULT_ROUND_SIZE = 32
DEFAULT_MAX_SAMPLES = 1_000_000
# The gap test also stops once the leader's coefficient is pinned to within this
DEFAULT_INDIFFERENCE = 0.1

# Number of histogram entries kept in LearnerResult JSON
HISTOGRAM_TOP = 16

# Experiment defaults
DEFAULT_N_VALUES = [8, 10, 12, 14, 16]
DEFAULT_TRIALS = 50
DEFAULT_DNF_TERMS = 4
DEFAULT_DNF_LITERALS = 3
DEFAULT_SEED = 0
DEFAULT_WORKERS = 1
DEFAULT_HIT_QUANTILE = 0.99

# Headline configuration: n=30, m=2^15
HEADLINE_PRESET_N = 30

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_NOT_CONVERGED = 3
EXIT_SELFTEST_FAILED = 4
