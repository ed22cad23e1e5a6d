"""Bipolar boolean target functions: DNF, truth table and parity backings.

Boolean true maps to +1 and false to -1.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np

from .bits import BitsLike, bits_to_index, chi_values, variable_bit, arity_of_length
from ..config.limits import check_arity
from ..config.logging_config import get_logger
from ..errors import InputShapeError, ParameterError

logger = get_logger(__name__)


@dataclass(frozen=True)
class Literal:
    """A variable or its negation."""

    var: int
    negated: bool = False

    def __str__(self) -> str:
        return f"~x{self.var}" if self.negated else f"x{self.var}"


@dataclass(frozen=True)
class DnfFormula:
    """Disjunction of conjunctive terms over n binary variables.

    An empty term list is the constant-false formula.
    """

    n: int
    terms: tuple[tuple[Literal, ...], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"arity must be >= 1, got {self.n}")
        terms = tuple(tuple(term) for term in self.terms)
        for term in terms:
            seen: set[int] = set()
            for lit in term:
                if not 0 <= lit.var < self.n:
                    raise InputShapeError(f"variable x{lit.var} out of range for n={self.n}")
                if lit.var in seen:
                    raise ParameterError(f"variable x{lit.var} repeated within a term")
                seen.add(lit.var)
        object.__setattr__(self, "terms", terms)

    def satisfied(self, indices: np.ndarray) -> np.ndarray:
        """Boolean mask: which indices satisfy at least one term."""
        indices = np.asarray(indices, dtype=np.int64)
        result = np.zeros(indices.shape, dtype=bool)
        for term in self.terms:
            term_ok = np.ones(indices.shape, dtype=bool)
            for lit in term:
                bit = variable_bit(indices, lit.var, self.n)
                term_ok &= (bit == 0) if lit.negated else (bit == 1)
            result |= term_ok
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "false"
        return " | ".join(
            "(" + " & ".join(str(lit) for lit in term) + ")" if term else "true"
            for term in self.terms
        )


class BipolarFunction(ABC):
    """A function {0,1}^n -> {-1,+1}."""

    def __init__(self, n: int):
        if n < 1:
            raise ParameterError(f"arity must be >= 1, got {n}")
        self._n = n

    @property
    def n(self) -> int:
        return self._n

    @abstractmethod
    def values_at(self, indices: np.ndarray) -> np.ndarray:
        """Evaluate at many integer indices, returning an int8 array of +1/-1."""
        pass

    def value_at(self, index: int) -> int:
        """Evaluate at one integer index."""
        if not 0 <= int(index) < (1 << self._n):
            raise InputShapeError(f"index {index} out of range for n={self._n}")
        return int(self.values_at(np.array([index], dtype=np.int64))[0])

    def eval(self, x: BitsLike) -> int:
        """Evaluate at a bitstring of length n."""
        return self.value_at(bits_to_index(x, self._n))

    def __call__(self, x: BitsLike) -> int:
        return self.eval(x)

    def truth_table(self, cap: int | None = None) -> np.ndarray:
        """All 2^n outputs in index order."""
        check_arity(self._n, cap)
        table = self.values_at(np.arange(1 << self._n, dtype=np.int64))
        table.flags.writeable = False
        return table


class DnfFunction(BipolarFunction):
    """Bipolar function backed by a DNF formula."""

    def __init__(self, formula: DnfFormula):
        super().__init__(formula.n)
        self.formula = formula

    def values_at(self, indices: np.ndarray) -> np.ndarray:
        return np.where(self.formula.satisfied(indices), 1, -1).astype(np.int8)

    def __repr__(self) -> str:
        return f"DnfFunction(n={self.n}, {self.formula})"


class TruthTableFunction(BipolarFunction):
    """Bipolar function backed by an explicit table of 2^n outputs."""

    def __init__(self, outputs):
        table = np.asarray(outputs)
        if table.ndim != 1:
            raise InputShapeError("truth table must be one-dimensional")
        n = arity_of_length(len(table))
        if n < 1:
            raise InputShapeError("truth table needs at least 2 entries")
        if not np.all(np.isin(table, (-1, 1))):
            raise InputShapeError("truth table entries must be -1 or +1")
        super().__init__(n)
        self._table = table.astype(np.int8)
        self._table.flags.writeable = False

    def values_at(self, indices: np.ndarray) -> np.ndarray:
        return self._table[np.asarray(indices, dtype=np.int64)].copy()

    def truth_table(self, cap: int | None = None) -> np.ndarray:
        return self._table

    def __repr__(self) -> str:
        return f"TruthTableFunction(n={self.n})"


class ParityFunction(BipolarFunction):
    """The parity basis function chi_a as a target."""

    def __init__(self, n: int, mask: int):
        super().__init__(n)
        if not 0 <= mask < (1 << n):
            raise InputShapeError(f"mask {mask} out of range for n={n}")
        self.mask = mask

    def values_at(self, indices: np.ndarray) -> np.ndarray:
        return chi_values(self.mask, indices)

    def __repr__(self) -> str:
        return f"ParityFunction(n={self.n}, mask={self.mask:0{self.n}b})"


def evaluate(f: BipolarFunction, x: BitsLike) -> int:
    """Evaluate f at the bitstring x (the membership-query primitive)."""
    return f.eval(x)


def to_truth_table(f: BipolarFunction, cap: int | None = None) -> TruthTableFunction:
    """Materialize any backing as an explicit truth table."""
    return TruthTableFunction(f.truth_table(cap))


def random_dnf(n: int, s: int, k: int, rng: np.random.Generator) -> DnfFormula:
    """Random s-term DNF, each term over k distinct variables with uniform polarity.

    Deterministic given the state of rng.
    """
    if n < 1:
        raise ParameterError(f"arity must be >= 1, got {n}")
    if s < 1:
        raise ParameterError(f"term count must be >= 1, got {s}")
    if not 1 <= k <= n:
        raise ParameterError(f"literals per term must satisfy 1 <= k <= n, got k={k}, n={n}")

    terms = []
    for _ in range(s):
        variables = np.sort(rng.choice(n, size=k, replace=False))
        negations = rng.integers(0, 2, size=k)
        terms.append(tuple(
            Literal(int(v), bool(neg)) for v, neg in zip(variables, negations)
        ))
    formula = DnfFormula(n, tuple(terms))
    logger.debug("Generated random DNF n=%d s=%d k=%d: %s", n, s, k, formula)
    return formula
