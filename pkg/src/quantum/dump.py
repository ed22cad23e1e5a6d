"""Debug dump of a state as CSV (index_bits, amplitude)."""

from pathlib import Path

import pandas as pd

from .state import StateVector
from ..boolean.bits import index_to_bits
from ..config.logging_config import get_logger

logger = get_logger(__name__)


def state_to_frame(state: StateVector) -> pd.DataFrame:
    return pd.DataFrame({
        "index_bits": [index_to_bits(x, state.n) for x in range(len(state))],
        "amplitude": state.amps,
    })


def write_state_csv(path: Path, state: StateVector) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    state_to_frame(state).to_csv(path, index=False, lineterminator="\n")
    logger.debug("Dumped n=%d state to %s", state.n, path)
