"""Exact counts of regions, forests and lattice paths.

All values are Python integers. Binomials and factorials come from ``scipy.special`` with
``exact=True``, so nothing here is ever evaluated in floating point.
"""
from typing import Dict, Iterator, List, NamedTuple

import numpy as np
from scipy.special import comb, factorial

from .common_models import CountTable
from .exceptions import InvalidSizeError, MalformedPathError

# Number of regions for n = 1..4, i.e. (-1)^n chi(-1) of the arrangement's characteristic
# polynomial. Kept only as a cross-check constant.
KNOWN_REGION_COUNTS = {1: 4, 2: 48, 3: 960, 4: 26880}


class LatticePath(NamedTuple):
    """Lattice path written as a string of U (up) and D (down) steps."""

    steps: str

    def __str__(self) -> str:
        return self.steps

    @classmethod
    def parse(cls, text: str) -> "LatticePath":
        steps = text.strip().upper()
        if set(steps) - {"U", "D"}:
            raise MalformedPathError(f"Lattice path can only contain U and D steps: {text!r}")
        return cls(steps)

    @property
    def ups(self) -> int:
        return self.steps.count("U")

    @property
    def downs(self) -> int:
        return self.steps.count("D")

    def heights(self) -> np.ndarray:
        """Heights after each step (U counts +1, D counts -1)."""
        return np.cumsum(_as_increments(self.steps))

    def is_dyck(self) -> bool:
        return self.ups == self.downs and bool(np.all(self.heights() >= 0))


def _as_increments(steps: str) -> np.ndarray:
    return np.array([1 if step == "U" else -1 for step in steps], dtype=np.int64)


def binomial(n: int, k: int) -> int:
    return int(comb(n, k, exact=True))


def catalan(n: int) -> int:
    """Catalan number C(2n, n) / (n + 1)."""
    if n < 0:
        raise InvalidSizeError(f"Catalan numbers are defined for n >= 0, got {n}")
    return binomial(2 * n, n) // (n + 1)


def c_ns(n: int, s: int) -> int:
    """Number of ordered forests with n nodes and s special leaves: s C(2n-s, n) / (2n-s).

    :raise InvalidSizeError: if s is not in 1..n.
    """
    if not 1 <= s <= n:
        raise InvalidSizeError(f"s has to lie between 1 and n={n}, got {s}")
    numerator, denominator = s * binomial(2 * n - s, n), 2 * n - s
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise RuntimeError(f"{denominator} does not divide {numerator} (n={n}, s={s})")
    return quotient


def d_ns(s: int) -> int:
    """Size of every shuffle set of a forest with s special leaves, i.e. 2^s."""
    if s < 0:
        raise InvalidSizeError(f"s has to be nonnegative, got {s}")
    return 2**s


def region_count(n: int) -> int:
    """Number of regions of the type C Catalan arrangement in R^n: 2^n n! C(2n, n)."""
    if n < 1:
        raise InvalidSizeError(f"n has to be positive, got {n}")
    return 2**n * int(factorial(n, exact=True)) * binomial(2 * n, n)


def region_count_via_sum(n: int) -> int:
    """Number of regions computed as 2^n n! sum_s C_{n,s} D_{n,s}."""
    if n < 1:
        raise InvalidSizeError(f"n has to be positive, got {n}")
    return 2**n * int(factorial(n, exact=True)) * sum(c_ns(n, s) * d_ns(s) for s in range(1, n + 1))


def shuffle_identity(n: int) -> bool:
    """Check sum_s s 2^s C(2n-s, n) / (2n-s) == C(2n, n)."""
    return sum(c_ns(n, s) * d_ns(s) for s in range(1, n + 1)) == binomial(2 * n, n)


def special_leaf_table(n: int) -> CountTable:
    """Closed-form table s -> C_{n,s}."""
    return CountTable(n=n, entries={s: c_ns(n, s) for s in range(1, n + 1)})


def _c_or_zero(n: int, s: int) -> int:
    # C_{n-1,0} does not appear in the closed form, the recurrence treats it as 0
    return c_ns(n, s) if 1 <= s <= n else 0


def check_recurrence(n: int) -> bool:
    """Check C_{n,s} = C_{n-1,s-1} + C_{n,s+1} for all 1 <= s <= n - 1."""
    if n < 2:
        raise InvalidSizeError(f"The recurrence needs n >= 2, got {n}")
    return all(
        c_ns(n, s) == _c_or_zero(n - 1, s - 1) + _c_or_zero(n, s + 1) for s in range(1, n)
    )


def excess(path: LatticePath) -> int:
    return path.ups - path.downs


def dominating_rotations(path: LatticePath) -> int:
    """Count cyclic rotations of the path whose every prefix has more U than D steps.

    By the cycle lemma the count equals the excess #U - #D, which is checked.

    :raise InvalidSizeError: if the excess is not positive.
    """
    surplus = excess(path)
    if surplus <= 0:
        raise InvalidSizeError(f"Cycle lemma needs a path with positive excess, got {path}")
    length = len(path.steps)
    increments = _as_increments(path.steps)
    rotations = increments[(np.arange(length)[:, None] + np.arange(length)[None, :]) % length]
    count = int(np.all(np.cumsum(rotations, axis=1) > 0, axis=1).sum())
    if count != surplus:
        raise RuntimeError(f"{path} has {count} dominating rotations but excess {surplus}")
    return count


def _extend_dyck(steps: List[str], ups: int, downs: int, n: int) -> Iterator[str]:
    if downs == n:
        yield "".join(steps)
        return
    for step in ("D", "U"):
        if (step == "D" and downs < ups) or (step == "U" and ups < n):
            steps.append(step)
            yield from _extend_dyck(steps, ups + (step == "U"), downs + (step == "D"), n)
            steps.pop()


def dyck_paths(n: int) -> Iterator[LatticePath]:
    """Generate Dyck paths of semilength n, in lexicographic order of their steps (D < U)."""
    for steps in _extend_dyck([], 0, 0, n):
        yield LatticePath(steps)


def count_paths_with_tail(n: int, s: int) -> int:
    """Count Dyck paths of semilength n ending with U followed by exactly s D steps."""
    if not 1 <= s <= n:
        raise InvalidSizeError(f"s has to lie between 1 and n={n}, got {s}")
    return sum(1 for path in dyck_paths(n) if _tail_length(path) == s)


def _tail_length(path: LatticePath) -> int:
    return len(path.steps) - len(path.steps.rstrip("D"))


def paths_by_tail(n: int) -> Dict[int, int]:
    """Tally Dyck paths of semilength n by the length of their final run of D steps."""
    tally: Dict[int, int] = {s: 0 for s in range(1, n + 1)}
    for path in dyck_paths(n):
        tally[_tail_length(path)] += 1
    return tally
