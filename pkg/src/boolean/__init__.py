"""Boolean target functions, training sets and oracles."""

from .bits import bits_to_index, index_to_bits, parity, chi_values
from .functions import (
    Literal,
    DnfFormula,
    BipolarFunction,
    DnfFunction,
    TruthTableFunction,
    ParityFunction,
    evaluate,
    to_truth_table,
    random_dnf,
)
from .training_set import TrainingSet
from .oracles import (
    ExampleOracle,
    MembershipOracle,
    draw_example,
    sample_training_set,
    build_training_set,
)
from .formats import (
    load_function,
    load_training_set,
    save_dnf,
    save_truth_table,
    save_training_set,
    function_from_dict,
    dnf_to_dict,
    training_set_to_dict,
    parity_from_bits,
)

__all__ = [
    "bits_to_index",
    "index_to_bits",
    "parity",
    "chi_values",
    "Literal",
    "DnfFormula",
    "BipolarFunction",
    "DnfFunction",
    "TruthTableFunction",
    "ParityFunction",
    "evaluate",
    "to_truth_table",
    "random_dnf",
    "TrainingSet",
    "ExampleOracle",
    "MembershipOracle",
    "draw_example",
    "sample_training_set",
    "build_training_set",
    "load_function",
    "load_training_set",
    "save_dnf",
    "dnf_to_dict",
    "training_set_to_dict",
    "save_truth_table",
    "save_training_set",
    "function_from_dict",
    "parity_from_bits",
]
