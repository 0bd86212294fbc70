"""Value objects shared by all catalanc modules."""
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel as PydanticBaseModel
from pydantic import ConstrainedInt, root_validator, validator

from ._expressions import eval_rational


class BaseModel(PydanticBaseModel):
    class Config:
        extra = "forbid"
        allow_mutation = False


class StrictPositiveInt(ConstrainedInt):
    strict = True
    gt = 0


class StrictNonNegativeInt(ConstrainedInt):
    strict = True
    ge = 0


class ValidationReport(BaseModel):
    """Outcome of checking a word or a forest against the conditions of its definition.

    A failed report names the earliest violated condition (as a roman numeral) and the
    witnesses exhibiting the violation, already rendered in their text format.
    """

    condition: Optional[str] = None
    witness: Tuple[str, ...] = ()
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.condition is None

    def __bool__(self) -> bool:
        return self.ok

    def render(self) -> str:
        if self.ok:
            return "ok"
        rendered = f"violation {self.condition}"
        if self.witness:
            rendered += " witness=" + ",".join(self.witness)
        return rendered

    @classmethod
    def success(cls) -> "ValidationReport":
        return cls()

    @classmethod
    def violation(cls, condition: str, *witness, detail: str = "") -> "ValidationReport":
        return cls(condition=condition, witness=tuple(str(item) for item in witness), detail=detail)


class CountTable(BaseModel):
    n: StrictPositiveInt
    entries: Dict[int, int]

    @validator("entries")
    def check_keys_are_in_range(cls, entries, values):
        n = values.get("n")
        if n is not None and any(not 1 <= s <= n for s in entries):
            raise ValueError(f"Keys of the table have to lie between 1 and {n}.")
        if any(count < 0 for count in entries.values()):
            raise ValueError("Counts cannot be negative.")
        return entries

    def total(self) -> int:
        return sum(self.entries.values())

    def render(self) -> List[str]:
        return [f"s={s} count={self.entries[s]}" for s in sorted(self.entries)]


def _parse_coordinate(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return eval_rational(value)
    raise ValueError(f"Coordinates have to be exact rationals, got {value!r}")


class RegionPoint(BaseModel):
    """Point of R^n given by exact rational coordinates x_1, ..., x_n.

    The point is required to avoid every hyperplane of the arrangement, i.e. the 4n values
    +-x_i and 1 +- x_i have to be pairwise distinct. The check itself lives in
    catalanc.bijections.sigma, which reports the offending hyperplane.
    """

    coords: Tuple[Fraction, ...]

    class Config:
        arbitrary_types_allowed = True

    @validator("coords", pre=True)
    def parse_coordinates(cls, coords):
        if isinstance(coords, (str, bytes)):
            raise ValueError("Coordinates have to be given as a sequence.")
        return tuple(_parse_coordinate(coord) for coord in coords)

    @root_validator(skip_on_failure=True)
    def check_point_is_not_empty(cls, values):
        if not values["coords"]:
            raise ValueError("Point needs at least one coordinate.")
        return values

    @property
    def n(self) -> int:
        return len(self.coords)

    def value(self, index: int) -> Fraction:
        """Return x_index, using x_{-i} = -x_i for negative indices."""
        return self.coords[index - 1] if index > 0 else -self.coords[-index - 1]

    def render(self) -> str:
        return ",".join(str(coord) for coord in self.coords)

    @classmethod
    def parse(cls, text: str) -> "RegionPoint":
        return cls(coords=[part for part in text.split(",")])
