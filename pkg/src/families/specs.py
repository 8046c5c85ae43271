"""
Validated parameter records for the named tree families.

GammaSpec describes a member of Γ(n, d): the path P_{d+1} with n_i extra
leaves hung on every third interior vertex. DoubleStarSpec describes the
double starlike tree T(d, p, q).
"""

import logging
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.core.errors import SpectreeError

logger = logging.getLogger(__name__)


class FamilySpecError(SpectreeError):
    """Family parameters that violate the family's preconditions."""


class GammaSpec(BaseModel):
    """
    Composition (d; n_1, ..., n_k) with k = (d + 1) / 3.

    Frozen so specs can serve as dictionary keys.
    """

    model_config = ConfigDict(frozen=True)

    d: int = Field(..., ge=2, description="Diameter, congruent to 2 mod 3")
    parts: tuple[int, ...] = Field(..., description="Extra leaves per attachment vertex")

    @field_validator("d")
    @classmethod
    def validate_diameter(cls, v: int) -> int:
        if v % 3 != 2:
            raise ValueError(f"d must be congruent to 2 mod 3, got {v}")
        return v

    @field_validator("parts")
    @classmethod
    def validate_parts(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(x < 0 for x in v):
            raise ValueError(f"leaf counts must be non-negative, got {v}")
        return v

    @model_validator(mode="after")
    def check_part_count(self) -> "GammaSpec":
        expected = (self.d + 1) // 3
        if len(self.parts) != expected:
            raise ValueError(
                f"d={self.d} needs exactly {expected} parts, got {len(self.parts)}"
            )
        return self

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def order(self) -> int:
        """n = d + 1 + sum(parts)."""
        return self.d + 1 + sum(self.parts)

    def normalized(self) -> "GammaSpec":
        """The reversal-equivalent spec with the lexicographically smaller parts."""
        reversed_parts = tuple(reversed(self.parts))
        if reversed_parts < self.parts:
            return GammaSpec(d=self.d, parts=reversed_parts)
        return self

    def __str__(self) -> str:
        return f"H_{self.d}({','.join(str(x) for x in self.parts)})"


class DoubleStarSpec(BaseModel):
    """Parameters of T(d, p, q): P_{d-1} with p and q leaves on its two ends."""

    model_config = ConfigDict(frozen=True)

    d: int = Field(..., ge=2, description="Diameter")
    p: int = Field(..., ge=1, description="Leaves on the first end")
    q: int = Field(..., ge=1, description="Leaves on the second end")

    @property
    def order(self) -> int:
        return self.d - 1 + self.p + self.q


def _first_error(exc: ValidationError) -> str:
    err = exc.errors()[0]
    location = ".".join(str(part) for part in err.get("loc", ())) or "spec"
    return f"{location}: {err['msg']}"


def make_gamma_spec(d: Any, parts: Any) -> GammaSpec:
    """
    Build a GammaSpec from raw values (e.g. CLI flags).

    `parts` may be a sequence or a comma-separated string such as "1,1,1".

    Raises:
        FamilySpecError: If the values violate the Γ(n, d) preconditions
    """
    if isinstance(parts, str):
        try:
            parts = [int(tok) for tok in parts.split(",") if tok.strip()]
        except ValueError as e:
            raise FamilySpecError(f"parts must be integers: {parts!r}") from e
    elif isinstance(parts, int):
        parts = [parts]
    try:
        return GammaSpec(d=d, parts=tuple(parts))
    except ValidationError as e:
        raise FamilySpecError(f"invalid gamma spec: {_first_error(e)}") from e


def make_double_star_spec(d: Any, p: Any, q: Any) -> DoubleStarSpec:
    """
    Build a DoubleStarSpec from raw values.

    Raises:
        FamilySpecError: If d < 2, p < 1 or q < 1
    """
    try:
        return DoubleStarSpec(d=d, p=p, q=q)
    except ValidationError as e:
        raise FamilySpecError(f"invalid double-star spec: {_first_error(e)}") from e
