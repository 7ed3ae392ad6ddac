"""
Configuration management for the Pauli channel minimax toolkit.

This module provides centralized configuration including:
- Numerical tolerances shared by the exact and floating-point layers
- Environment variable overrides (prefix PAULI_MINIMAX_)
- Logging configuration through rich
"""

import logging
import os
from functools import lru_cache
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field
from rich.logging import RichHandler

ENV_PREFIX = "PAULI_MINIMAX_"


class Settings(BaseModel):
    """Tolerances and defaults used across the package."""

    log_level: str = Field(default="WARNING", description="Root logging level.")
    rational_bits: int = Field(
        default=64, ge=16, description="Signed storage width for exact fractions."
    )

    # Oracle eigensolver and Helstrom construction
    jacobi_tolerance: float = Field(
        default=1e-13, gt=0, description="Off-diagonal Frobenius norm at convergence."
    )
    jacobi_max_sweeps: int = Field(default=100, ge=1)
    hermitian_tolerance: float = Field(default=1e-12, gt=0)
    kernel_relative_tolerance: float = Field(
        default=1e-11,
        gt=0,
        description="Eigenvalues below this fraction of the norm form the kernel.",
    )
    equalizer_kernel_tolerance: float = Field(
        default=1e-8,
        gt=0,
        description="Absolute kernel threshold once the prior comes from a search.",
    )
    golden_section_tolerance: float = Field(default=1e-10, gt=0)
    density_tolerance: float = Field(default=1e-9, gt=0)
    unit_modulus_tolerance: float = Field(default=1e-12, gt=0)

    # Verification thresholds
    entangled_oracle_tolerance: float = Field(default=1e-12, gt=0)
    bloch_oracle_tolerance: float = Field(default=1e-9, gt=0)
    optimal_input_tolerance: float = Field(default=1e-9, gt=0)
    equalizer_tolerance: float = Field(default=1e-7, gt=0)
    minimax_value_tolerance: float = Field(default=1e-8, gt=0)

    # Output
    sweep_digits: int = Field(default=12, ge=3)
    random_denominator: int = Field(
        default=20, ge=2, description="Denominator of random channel weights."
    )


def _environment_overrides() -> Dict[str, Any]:
    overrides = {}
    for name in Settings.model_fields:
        value = os.environ.get(f"{ENV_PREFIX}{name.upper()}")
        if value is not None:
            overrides[name] = value
    return overrides


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Build the settings once, applying PAULI_MINIMAX_* environment overrides.

    Returns:
        The shared Settings instance
    """
    return Settings(**_environment_overrides())


def setup_logging(level: Optional[str] = None) -> None:
    """
    Configure logging for the toolkit.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL). Falls back
               to the configured default when omitted.
    """
    level_name = (level or get_settings().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level_name, logging.WARNING),
        format="%(name)s: %(message)s",
        handlers=[RichHandler(rich_tracebacks=True, show_path=False)],
        force=True,
    )
