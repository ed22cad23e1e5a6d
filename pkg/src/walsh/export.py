"""Spectrum export: CSV (index_bits, coefficient) or JSON."""

from pathlib import Path

import numpy as np
import pandas as pd

from .spectrum import FourierSpectrum
from ..boolean.bits import bits_to_index, index_to_bits
from ..boolean.formats import write_json
from ..config.constants import SCHEMA_VERSION
from ..config.logging_config import get_logger
from ..errors import FormatError

logger = get_logger(__name__)


def spectrum_to_frame(spectrum: FourierSpectrum) -> pd.DataFrame:
    return pd.DataFrame({
        "index_bits": [index_to_bits(a, spectrum.n) for a in range(len(spectrum))],
        "coefficient": spectrum.coeffs,
    })


def spectrum_to_dict(spectrum: FourierSpectrum) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": spectrum.n,
        "coefficients": [float(c) for c in spectrum.coeffs],
    }


def write_spectrum(path: Path, spectrum: FourierSpectrum) -> None:
    """Write as JSON when the path ends in .json, otherwise CSV."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        write_json(path, spectrum_to_dict(spectrum))
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        spectrum_to_frame(spectrum).to_csv(path, index=False, lineterminator="\n")
    logger.info("Wrote spectrum n=%d to %s", spectrum.n, path)


def read_spectrum_csv(path: Path) -> FourierSpectrum:
    try:
        frame = pd.read_csv(path, dtype={"index_bits": str})
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise FormatError(f"{path}: cannot read spectrum: {e}") from e
    if list(frame.columns) != ["index_bits", "coefficient"]:
        raise FormatError(f"{path}: expected columns index_bits, coefficient")
    n = len(frame["index_bits"].iloc[0])
    order = [bits_to_index(bits, n) for bits in frame["index_bits"]]
    if order != list(range(len(frame))):
        raise FormatError(f"{path}: rows must be in index order")
    return FourierSpectrum(frame["coefficient"].to_numpy(dtype=np.float64))
