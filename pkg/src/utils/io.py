"""
Reading channel-pair and state files, and writing outputs atomically.

Input problems are reported as InputFileError carrying the file path and,
for malformed JSON, the offending line.
"""

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Optional, Tuple, Union

from pydantic import ValidationError

from src.core.channels import ChannelPair, make_pair
from src.core.errors import InputFileError, PauliMinimaxError
from src.core.models import ChannelSpec, PairFile, StateFile
from src.oracle.channels import require_density_matrix
from src.oracle.linalg import HermitianMatrix

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def read_json(path: PathLike) -> Any:
    """
    Parse a JSON file.

    Raises:
        InputFileError: the file is unreadable or not valid JSON
    """
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as error:
        raise InputFileError(
            f"{path}:{error.lineno}:{error.colno}: {error.msg}",
            path=str(path),
            line=error.lineno,
        ) from error
    except OSError as error:
        message = f"{path}: {error.strerror or error}"
        raise InputFileError(message, path=str(path)) from error


def _describe_validation(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "document"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


def _line_of_key(path: PathLike, key: Optional[str]) -> Optional[int]:
    """First line of the file mentioning the JSON key, or None."""
    if not key:
        return None
    needle = f'"{key}"'
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for number, text in enumerate(handle, start=1):
                if needle in text:
                    return number
    except OSError:
        return None
    return None


def _located_error(
    path: PathLike, message: str, key: Optional[str]
) -> InputFileError:
    line = _line_of_key(path, key)
    where = f"{path}:{line}" if line is not None else f"{path}"
    return InputFileError(f"{where}: {message}", path=str(path), line=line)


def _first_key(error: ValidationError) -> Optional[str]:
    for item in error.errors():
        if item["loc"]:
            return str(item["loc"][0])
    return None


def load_pair_file(path: PathLike) -> Tuple[PairFile, ChannelPair]:
    """
    Read and validate a channel-pair file.

    Args:
        path: JSON file {"label": ..., "channel1": {"q": [...]}, "channel2": {...}}

    Returns:
        (parsed file, validated ChannelPair)

    Raises:
        InputFileError: malformed JSON, schema violation or invalid distribution
    """
    data = read_json(path)
    try:
        spec = PairFile.model_validate(data)
        pair = make_pair(spec.channel1.q, spec.channel2.q)
    except ValidationError as error:
        raise _located_error(
            path, _describe_validation(error), _first_key(error)
        ) from error
    except (PauliMinimaxError, ZeroDivisionError) as error:
        key = getattr(error, "channel", None)
        raise _located_error(path, str(error), key) from error
    logger.debug(f"Loaded pair {spec.label or pair.describe()} from {path}")
    return spec, pair


def pair_to_file(pair: ChannelPair, label: Optional[str] = None) -> PairFile:
    """PairFile document reproducing a pair (used to report failing trials)."""
    return PairFile(
        label=label,
        channel1=ChannelSpec(q=list(pair.ch1.q)),
        channel2=ChannelSpec(q=list(pair.ch2.q)),
    )


def load_state_file(
    path: PathLike,
) -> Tuple[StateFile, HermitianMatrix, HermitianMatrix]:
    """
    Read two density matrices stored as nested [re, im] pairs.

    Raises:
        InputFileError: malformed file, non-Hermitian matrix or a matrix that
            is not a density operator
    """
    data = read_json(path)
    try:
        spec = StateFile.model_validate(data)
        rho1 = require_density_matrix(HermitianMatrix.from_pairs(spec.rho1), "rho1")
        rho2 = require_density_matrix(HermitianMatrix.from_pairs(spec.rho2), "rho2")
    except ValidationError as error:
        raise _located_error(
            path, _describe_validation(error), _first_key(error)
        ) from error
    except PauliMinimaxError as error:
        key = "rho2" if "rho2" in str(error) else "rho1"
        raise _located_error(path, str(error), key) from error
    return spec, rho1, rho2


def write_atomic(path: PathLike, text: str) -> None:
    """
    Write text through a temporary file in the target directory, then rename.

    Raises:
        OSError: the directory is not writable
    """
    path = Path(path)
    handle, temp_name = tempfile.mkstemp(
        dir=path.parent, prefix=f".{path.name}.", suffix=".tmp"
    )
    try:
        with os.fdopen(handle, "w", encoding="utf-8", newline="\n") as stream:
            stream.write(text)
        os.replace(temp_name, path)
    except BaseException:
        if os.path.exists(temp_name):
            os.unlink(temp_name)
        raise
