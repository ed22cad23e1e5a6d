"""Quantum Fourier Sampler - finding large Walsh coefficients of DNF from examples."""

from .config.constants import APP_NAME, APP_VERSION

__version__ = APP_VERSION
__app_name__ = APP_NAME
