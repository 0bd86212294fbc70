"""Desk-scale bounds of the exhaustive operations."""
from typing import NamedTuple, Optional

from .exceptions import DeskScaleError


class Limits(NamedTuple):
    max_n: Optional[int] = None


_LIMITS = {
    "annotated-sketches": Limits(max_n=6),
    "symmetric-sketches": Limits(max_n=4),
    "labeled-forests": Limits(max_n=5),
    "forests": Limits(max_n=10),
    "symmetric-forests": Limits(max_n=4),
    "verify-counts": Limits(max_n=200),
    "verify-bijection": Limits(max_n=4),
    "verify-shuffles": Limits(max_n=4),
    "verify-oracle": Limits(max_n=3),
}


def get_limits(kind: str) -> Limits:
    """Obtain the desk-scale bound for given kind of exhaustive operation.

    :param kind: name of the operation, e.g. "symmetric-sketches" or "verify-oracle".
    :return: namedtuple with max_n. If max_n is None, it should be treated as lack of limit.
    :raise NotImplementedError: if kind is not a known operation.
    """
    try:
        return _LIMITS[kind]
    except KeyError:
        raise NotImplementedError(f"No desk-scale limits defined for {kind}") from None


def check_desk_scale(kind: str, n: int, force: bool = False) -> None:
    """Refuse n beyond the documented bound of kind unless force is set.

    :raise DeskScaleError: if n exceeds the bound and force is False.
    """
    max_n = get_limits(kind).max_n
    if not force and max_n is not None and n > max_n:
        raise DeskScaleError(
            f"{kind} is bounded by n <= {max_n} at desk scale, got n={n} (use --force to override)"
        )
