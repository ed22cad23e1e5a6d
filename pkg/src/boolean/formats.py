"""JSON file formats for DNF formulas, truth tables and training sets.

    DNF:          {"n": int, "terms": [[{"var": int, "neg": bool}, ...], ...]}
    Truth table:  {"n": int, "outputs": [+1/-1 x 2^n]}  (index order)
    Training set: {"n": int, "examples": [{"x": "0110", "y": +1/-1}, ...]}
"""

import json
from pathlib import Path
from typing import Any

from .bits import bits_to_index
from .functions import (
    BipolarFunction, DnfFormula, DnfFunction, Literal, ParityFunction, TruthTableFunction,
)
from .training_set import TrainingSet
from ..config.constants import SCHEMA_VERSION
from ..config.logging_config import get_logger
from ..errors import FormatError, FourierSamplerError

logger = get_logger(__name__)


def _require_int(data: dict, key: str) -> int:
    value = data.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"field {key!r} must be an integer, got {value!r}")
    return value


def _require_arity(data: dict) -> int:
    n = _require_int(data, "n")
    if n < 1:
        raise FormatError(f"field 'n' must be >= 1, got {n}")
    return n


def dnf_to_dict(formula: DnfFormula) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": formula.n,
        "terms": [
            [{"var": lit.var, "neg": lit.negated} for lit in term]
            for term in formula.terms
        ],
    }


def dnf_from_dict(data: dict[str, Any]) -> DnfFormula:
    n = _require_arity(data)
    raw_terms = data.get("terms")
    if not isinstance(raw_terms, list):
        raise FormatError("field 'terms' must be a list of terms")
    terms = []
    for raw_term in raw_terms:
        if not isinstance(raw_term, list):
            raise FormatError("each term must be a list of literals")
        term = []
        for raw_lit in raw_term:
            if not isinstance(raw_lit, dict):
                raise FormatError(f"literal must be an object, got {raw_lit!r}")
            var = _require_int(raw_lit, "var")
            neg = raw_lit.get("neg", False)
            if not isinstance(neg, bool):
                raise FormatError(f"field 'neg' must be a boolean, got {neg!r}")
            term.append(Literal(var, neg))
        terms.append(tuple(term))
    try:
        return DnfFormula(n, tuple(terms))
    except FourierSamplerError as e:
        raise FormatError(f"invalid DNF: {e}") from e


def table_to_dict(function: BipolarFunction) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": function.n,
        "outputs": [int(v) for v in function.truth_table()],
    }


def table_from_dict(data: dict[str, Any]) -> TruthTableFunction:
    n = _require_arity(data)
    outputs = data.get("outputs")
    if not isinstance(outputs, list):
        raise FormatError("field 'outputs' must be a list")
    if len(outputs) != 1 << n:
        raise FormatError(f"truth table for n={n} needs {1 << n} outputs, got {len(outputs)}")
    if any(isinstance(v, bool) or v not in (-1, 1) for v in outputs):
        raise FormatError("truth-table outputs must be -1 or +1")
    return TruthTableFunction(outputs)


def training_set_to_dict(training_set: TrainingSet) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": training_set.n,
        "examples": [{"x": x, "y": y} for x, y in training_set.items_bits()],
    }


def training_set_from_dict(data: dict[str, Any]) -> TrainingSet:
    n = _require_arity(data)
    examples = data.get("examples")
    if not isinstance(examples, list):
        raise FormatError("field 'examples' must be a list")
    pairs = []
    for example in examples:
        if not isinstance(example, dict) or "x" not in example or "y" not in example:
            raise FormatError(f"example must be an object with 'x' and 'y': {example!r}")
        x, y = example["x"], example["y"]
        if not isinstance(x, str):
            raise FormatError(f"example input must be a bitstring, got {x!r}")
        if isinstance(y, bool) or y not in (-1, 1):
            raise FormatError(f"example label must be -1 or +1, got {y!r}")
        pairs.append((x, y))
    try:
        return TrainingSet.from_examples(n, pairs)
    except FormatError:
        raise
    except FourierSamplerError as e:
        raise FormatError(f"invalid training set: {e}") from e


def function_from_dict(data: dict[str, Any]) -> BipolarFunction:
    """Either format: 'terms' selects DNF, 'outputs' selects truth table."""
    if not isinstance(data, dict):
        raise FormatError("function file must contain a JSON object")
    if "terms" in data:
        return DnfFunction(dnf_from_dict(data))
    if "outputs" in data:
        return table_from_dict(data)
    raise FormatError("function file needs either 'terms' (DNF) or 'outputs' (truth table)")


def _read_json(path: Path) -> Any:
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: invalid JSON: {e}") from e
    except OSError as e:
        raise FormatError(f"{path}: cannot read: {e}") from e


def write_json(path: Path, data: Any) -> None:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(data, f, indent=2)
        f.write("\n")
    logger.debug("Wrote %s", path)


def load_function(path: Path) -> BipolarFunction:
    function = function_from_dict(_read_json(path))
    logger.info("Loaded %r from %s", function, path)
    return function


def load_training_set(path: Path) -> TrainingSet:
    data = _read_json(path)
    if not isinstance(data, dict):
        raise FormatError("training-set file must contain a JSON object")
    return training_set_from_dict(data)


def save_dnf(path: Path, formula: DnfFormula) -> None:
    write_json(path, dnf_to_dict(formula))


def save_truth_table(path: Path, function: BipolarFunction) -> None:
    write_json(path, table_to_dict(function))


def save_training_set(path: Path, training_set: TrainingSet) -> None:
    write_json(path, training_set_to_dict(training_set))


def parity_from_bits(bits: str) -> ParityFunction:
    """chi_a target for a mask given as a bitstring (e.g. '000101')."""
    return ParityFunction(len(bits), bits_to_index(bits))
