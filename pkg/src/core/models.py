"""
Defines the Pydantic data models used at the boundaries of the toolkit.

These models validate what comes in from files (channel pairs, density
matrices) and give a stable, JSON-serializable shape to what goes out
(Bloch vectors, case labels, discrimination reports, sweep rows). Exact
fractions are carried as "num/den" strings in JSON.
"""

import math
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Dict, List, Optional, Tuple

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    WithJsonSchema,
    computed_field,
    field_validator,
    model_validator,
)

from src.core.exactnum import check_width, rat_parse, rat_render


def _to_fraction(value: Any) -> Any:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"{value} is not a finite number")
        # repr gives the shortest round-tripping decimal, e.g. 1e-05 -> 1/100000
        return check_width(Fraction(Decimal(repr(value))))
    if isinstance(value, (str, int)):
        return rat_parse(value)
    return value


RationalField = Annotated[
    Fraction,
    BeforeValidator(_to_fraction),
    PlainSerializer(rat_render, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^-?\d+/\d+$"}),
]


class PauliAxis(str, Enum):
    """Pauli matrices whose eigenstates serve as unassisted input states."""

    X = "x"
    Y = "y"
    Z = "z"


class BlochVector(BaseModel):
    """Pure qubit input state 1/2 (I + n . sigma) with its polar angles."""

    model_config = ConfigDict(frozen=True)

    n: Tuple[float, float, float] = Field(..., description="Unit Bloch vector.")
    theta: float = Field(..., description="Polar angle in radians.")
    phi: float = Field(..., description="Azimuthal angle in radians.")

    @model_validator(mode="after")
    def _check_consistency(self) -> "BlochVector":
        norm = math.sqrt(sum(component * component for component in self.n))
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"Bloch vector {self.n} is not unit length")
        expected = _angles_to_vector(self.theta, self.phi)
        if any(abs(a - b) > 1e-12 for a, b in zip(self.n, expected)):
            raise ValueError(
                f"Bloch vector {self.n} inconsistent with theta={self.theta}, "
                f"phi={self.phi}"
            )
        return self

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "BlochVector":
        return cls(n=_angles_to_vector(theta, phi), theta=theta, phi=phi)

    @classmethod
    def eigenstate(cls, axis: PauliAxis, sign: int = 1) -> "BlochVector":
        """The +1 (sign=1) or -1 (sign=-1) eigenstate of a Pauli matrix."""
        if axis is PauliAxis.Z:
            return cls.from_angles(0.0 if sign > 0 else math.pi, 0.0)
        if axis is PauliAxis.X:
            return cls.from_angles(math.pi / 2, 0.0 if sign > 0 else math.pi)
        return cls.from_angles(math.pi / 2, math.pi / 2 if sign > 0 else -math.pi / 2)


def _angles_to_vector(theta: float, phi: float) -> Tuple[float, float, float]:
    sin_theta = math.sin(theta)
    return (sin_theta * math.cos(phi), sin_theta * math.sin(phi), math.cos(theta))


class CaseTag(str, Enum):
    """Configurations of the worst prior among the sorted breakpoints."""

    IDENTICAL = "Identical"
    DEGENERATE_TERM = "DegenerateTerm"
    P0_STRICTLY_FIRST = "T5_p0_strictly_first"
    LEFT_DOUBLE = "T5_left_double"
    TRIPLE_LEFT = "T5_triple_left"
    MIDDLE_EQUAL_SLOPES = "T5_middle_equal_slopes"
    MIDDLE_DOUBLE = "T5_middle_double"
    ENTANGLEMENT_REQUIRED = "EntanglementRequired"


class CaseLabel(BaseModel):
    """Result of the entanglement-necessity classification."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    tag: CaseTag
    condition_holds: bool = Field(
        ..., description="True when entanglement is not needed in this configuration."
    )
    mirrored: bool = Field(
        default=False, description="Detected on the pair with channels exchanged."
    )
    p_star: RationalField = Field(..., description="Worst prior the label refers to.")
    detail: str = Field(default="", description="The evaluated slope condition.")

    @property
    def name(self) -> str:
        prefix = "Mirror_" if self.mirrored else ""
        return f"{prefix}{self.tag.value}"

    @property
    def verdict(self) -> CaseTag:
        return self.tag if self.condition_holds else CaseTag.ENTANGLEMENT_REQUIRED

    @property
    def entanglement_needed(self) -> bool:
        return not self.condition_holds


class ChannelSpec(BaseModel):
    """Four Pauli weights of one channel, as exact fractions."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    q: List[RationalField] = Field(..., min_length=4, max_length=4)


class PairFile(BaseModel):
    """On-disk description of a channel pair."""

    model_config = ConfigDict(arbitrary_types_allowed=True, extra="ignore")

    label: Optional[str] = None
    channel1: ChannelSpec
    channel2: ChannelSpec


class DiscriminationReport(BaseModel):
    """Minimax analysis of one channel pair, with and without ancilla."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    label: Optional[str] = None
    channel1: ChannelSpec
    channel2: ChannelSpec
    breakpoints: List[Optional[RationalField]] = Field(
        ..., description="p_alpha in sorted order; None for degenerate indices."
    )
    slopes: List[RationalField] = Field(..., description="t_alpha in sorted order.")
    sorted_indices: List[int]
    R_M: RationalField
    R_M_prime: RationalField
    p_star: RationalField
    p_star_plateau: Optional[Tuple[RationalField, RationalField]] = None
    p_star_prime: RationalField
    p_star_prime_plateau: Optional[Tuple[RationalField, RationalField]] = None
    case: CaseLabel
    entanglement_strictly_helps: bool
    optimal_inputs_no_ancilla: List[BlochVector]
    optimal_inputs_unique: bool = Field(
        default=True,
        description="False when the inputs come from a multi-curve crossing.",
    )
    mixing_weight: Optional[RationalField] = Field(
        default=None, description="Exact tan^2 of the mixing angle, if any."
    )
    optimal_input_entangled: str = "any maximally entangled state"
    bayes_uniform_entangled: RationalField
    bayes_uniform_no_ancilla: RationalField
    bayes_axis_at_p_star_prime: PauliAxis
    curve_entangled: List[Tuple[str, str]] = Field(
        ..., description="Knots [p, R_B(p)] of the entangled risk curve."
    )
    curve_no_ancilla: List[Tuple[str, str]] = Field(
        ..., description="Knots [p, R'_B(p)] of the unassisted risk curve."
    )

    @computed_field
    @property
    def floats(self) -> Dict[str, float]:
        return {
            "R_M": float(self.R_M),
            "R_M_prime": float(self.R_M_prime),
            "p_star": float(self.p_star),
            "p_star_prime": float(self.p_star_prime),
            "bayes_uniform_entangled": float(self.bayes_uniform_entangled),
            "bayes_uniform_no_ancilla": float(self.bayes_uniform_no_ancilla),
        }


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class SweepRow(BaseModel):
    """One line of a risk-curve sweep, values rendered as decimal strings."""

    p: str
    R_B: str
    RpB_x: str
    RpB_y: str
    RpB_z: str
    RpB: str


ComplexEntry = Tuple[float, float]


class StateFile(BaseModel):
    """Two density matrices written as nested [re, im] pairs."""

    label: Optional[str] = None
    rho1: List[List[ComplexEntry]]
    rho2: List[List[ComplexEntry]]

    @field_validator("rho1", "rho2")
    @classmethod
    def _square(cls, value: List[List[ComplexEntry]]) -> List[List[ComplexEntry]]:
        size = len(value)
        if size not in (2, 4) or any(len(row) != size for row in value):
            raise ValueError("density matrices must be 2x2 or 4x4")
        return value

    @model_validator(mode="after")
    def _same_dimension(self) -> "StateFile":
        if len(self.rho1) != len(self.rho2):
            raise ValueError("rho1 and rho2 must have the same dimension")
        return self
