"""Classical Walsh/Fourier machinery."""

from .transform import chi, fwht, walsh_matrix, hadamard_tensor, sign_fault
from .spectrum import (
    CoefficientIndex,
    FourierSpectrum,
    exact_spectrum,
    approx_coefficient,
    approx_spectrum,
    evaluate_expansion,
    reconstruct,
    memorization_value,
)
from .export import write_spectrum, read_spectrum_csv, spectrum_to_frame

__all__ = [
    "chi",
    "fwht",
    "walsh_matrix",
    "hadamard_tensor",
    "sign_fault",
    "CoefficientIndex",
    "FourierSpectrum",
    "exact_spectrum",
    "approx_coefficient",
    "approx_spectrum",
    "evaluate_expansion",
    "reconstruct",
    "memorization_value",
    "write_spectrum",
    "read_spectrum_csv",
    "spectrum_to_frame",
]
