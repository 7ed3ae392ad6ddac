"""
Tabulated risk curves for plotting.

The grid is a uniform set of priors with every exact breakpoint added, so the
kinks of the piecewise-affine curves appear as rows. All values are computed
exactly and rendered as decimal strings.
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import List, Union

import pandas as pd

from src.config import get_settings
from src.core.channels import ChannelPair
from src.core.exactnum import rat_to_decimal
from src.core.models import PauliAxis, SweepRow
from src.core.risk import (
    bayes_risk_entangled,
    bayes_risk_no_ancilla,
    eigenstate_curves,
)
from src.utils.io import write_atomic

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["p", "R_B", "RpB_x", "RpB_y", "RpB_z", "RpB"]


def sweep_grid(pair: ChannelPair, points: int) -> List[Fraction]:
    """
    Uniform priors k / (points - 1) merged with the pair's breakpoints.

    Args:
        pair: Channel pair
        points: Number of uniform grid points, at least 2

    Returns:
        Sorted exact priors without duplicates
    """
    if points < 2:
        raise ValueError(f"A sweep needs at least 2 points, got {points}")
    grid = {Fraction(k, points - 1) for k in range(points)}
    grid.update(entry.p_alpha for entry in pair.breakpoints)
    return sorted(grid)


def sweep_rows(pair: ChannelPair, points: int) -> List[SweepRow]:
    """Entangled, per-axis and unassisted risks at every grid prior."""
    digits = get_settings().sweep_digits
    entangled = bayes_risk_entangled(pair)
    unassisted = bayes_risk_no_ancilla(pair)
    axes = eigenstate_curves(pair)

    def render(value: Fraction) -> str:
        return rat_to_decimal(value, digits)

    rows = [
        SweepRow(
            p=render(p),
            R_B=render(entangled(p)),
            RpB_x=render(axes[PauliAxis.X](p)),
            RpB_y=render(axes[PauliAxis.Y](p)),
            RpB_z=render(axes[PauliAxis.Z](p)),
            RpB=render(unassisted(p)),
        )
        for p in sweep_grid(pair, points)
    ]
    logger.debug(f"Sweep of {pair.describe()} has {len(rows)} rows")
    return rows


def sweep_frame(rows: List[SweepRow]) -> pd.DataFrame:
    return pd.DataFrame([row.model_dump() for row in rows], columns=SWEEP_COLUMNS)


def write_sweep_csv(pair: ChannelPair, points: int, out: Union[str, Path]) -> int:
    """
    Write the sweep as UTF-8 CSV with LF line endings.

    Returns:
        Number of data rows written

    Raises:
        OSError: the output cannot be written
    """
    frame = sweep_frame(sweep_rows(pair, points))
    write_atomic(out, frame.to_csv(index=False, lineterminator="\n"))
    logger.info(f"Wrote {len(frame)} sweep rows to {out}")
    return len(frame)
