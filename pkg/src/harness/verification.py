"""Oracle-side checks: exhaustive agreement and goodness of fit."""

import numpy as np
from scipy.stats import chisquare

from ..boolean.functions import BipolarFunction
from ..config.limits import check_arity
from ..errors import InputShapeError
from ..learning.hypothesis import WeakHypothesis

# Cells expecting fewer observations are pooled into one
MIN_EXPECTED_COUNT = 5.0


def agreement_rate(hypothesis: WeakHypothesis, f: BipolarFunction, cap: int | None = None) -> float:
    """Fraction of all 2^n inputs on which the hypothesis matches f."""
    if hypothesis.index.n != f.n:
        raise InputShapeError(f"hypothesis arity {hypothesis.index.n} does not match function arity {f.n}")
    check_arity(f.n, cap)
    indices = np.arange(1 << f.n, dtype=np.int64)
    predictions = hypothesis.predict_all(indices)
    return float(np.mean(predictions == f.truth_table(cap)))


def chi_square_pvalue(counts: np.ndarray, probabilities: np.ndarray) -> float:
    """Goodness-of-fit p-value of observed counts against Born probabilities.

    An observation on a zero-probability cell yields p = 0.
    """
    counts = np.asarray(counts, dtype=np.float64)
    probabilities = np.asarray(probabilities, dtype=np.float64)
    if counts.shape != probabilities.shape:
        raise InputShapeError(f"counts shape {counts.shape} does not match probabilities {probabilities.shape}")
    support = probabilities > 0
    if np.any(counts[~support] > 0):
        return 0.0

    observed = counts[support]
    expected = probabilities[support] / probabilities[support].sum() * observed.sum()
    small = expected < MIN_EXPECTED_COUNT
    if small.any():
        observed = np.append(observed[~small], observed[small].sum())
        expected = np.append(expected[~small], expected[small].sum())
    if observed.size < 2:
        return 1.0
    return float(chisquare(observed, expected).pvalue)
