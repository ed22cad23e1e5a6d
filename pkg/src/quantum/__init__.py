"""State-vector simulation of the Fourier sampling step."""

from .state import (
    StateVector,
    MeasurementOutcome,
    StateDiagnostics,
    BornSampler,
    basis_state,
    encode_function,
    encode_training_set,
    apply_walsh,
    sample,
    measure,
    amplitude,
    inner_product,
    function_value,
    diagnose,
)
from .dump import write_state_csv, state_to_frame

__all__ = [
    "StateVector",
    "MeasurementOutcome",
    "StateDiagnostics",
    "BornSampler",
    "basis_state",
    "encode_function",
    "encode_training_set",
    "apply_walsh",
    "sample",
    "measure",
    "amplitude",
    "inner_product",
    "function_value",
    "diagnose",
    "write_state_csv",
    "state_to_frame",
]
