"""Annotated 1-sketches and symmetric annotated 1-sketches.

A letter ``i^s`` stands for the value ``x_i + s`` with ``s`` in {0, 1} and ``x_{-i} = -x_i``.
A word records the relative order of such values. Two families of words are handled here:

- annotated 1-sketches of size n: 2n letters, one pair ``j^0``, ``j^1`` for each
  ``|j|`` in 1..n, satisfying conditions (ii) and (iii) below,
- symmetric annotated 1-sketches of size 2n: all 4n letters of the alphabet, satisfying

  (i)   every letter of the alphabet occurs,
  (ii)  ``i^0`` appears before ``i^1``,
  (iii) if ``i^0`` appears before ``j^0`` then ``i^1`` appears before ``j^1``,
  (iv)  if ``i^0`` appears before ``j^s`` then ``-j^0`` appears before ``-i^s``.

Condition failures are reported with :class:`ValidationReport` objects, while malformed
input (bad tokens, index 0, indices out of range, repeated letters) raises
:class:`MalformedWordError`.
"""
import re
from itertools import combinations
from logging import getLogger
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .common_models import ValidationReport
from .counting import LatticePath
from .exceptions import InvalidSketchError, MalformedWordError

logger = getLogger("catalanc")

_TOKEN_RE = re.compile(r"^(?P<index>[+-]?\d+)\^(?P<level>\d+)$")

SYMMETRIC_SKETCH = "symmetric annotated 1-sketch"
ANNOTATED_SKETCH = "annotated 1-sketch"


class Letter(NamedTuple):
    """Letter ``index^level``. Tuple order is the canonical (index, level) order."""

    index: int
    level: int

    def __str__(self) -> str:
        return f"{self.index}^{self.level}"

    def bar(self) -> "Letter":
        """Image under the symmetry ``k^s -> (-k)^(1-s)``."""
        return Letter(-self.index, 1 - self.level)

    @classmethod
    def parse(cls, token: str) -> "Letter":
        match = _TOKEN_RE.match(token.strip())
        if match is None:
            raise MalformedWordError(f"Unparsable letter token: {token!r}")
        index, level = int(match["index"]), int(match["level"])
        if index == 0:
            raise MalformedWordError(f"Letter index cannot be 0: {token!r}")
        if level not in (0, 1):
            raise MalformedWordError(f"Letter level has to be 0 or 1: {token!r}")
        return cls(index, level)


class SketchWord(NamedTuple):
    """Word over the type-C alphabet together with its size parameter n.

    Instances are created through :func:`make_word` or :meth:`SketchWord.parse`, which reject
    malformed letter lists. Equality and hashing are those of the (letters, n) tuple.
    """

    letters: Tuple[Letter, ...]
    n: int

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "SketchWord":
        """Parse space separated ``i^s`` tokens.

        :param text: the word, e.g. "-1^0 1^0 -1^1 1^1". Empty text is the empty word.
        :param n: size parameter. If omitted it is inferred as the largest absolute index.
        :return: parsed word.
        :raise MalformedWordError: for bad tokens, indices outside -n..n or repeated letters.
        """
        return make_word([Letter.parse(token) for token in text.split()], n)


def make_word(letters: Iterable[Letter], n: Optional[int] = None) -> SketchWord:
    """Build a word from letters, checking that the letter list is well formed."""
    letters = tuple(Letter(*letter) for letter in letters)
    inferred = max((abs(letter.index) for letter in letters), default=0)
    if n is None:
        n = inferred
    elif inferred > n:
        raise MalformedWordError(f"Letter index {inferred} out of range for n={n}")
    if n < 0 or (n == 0 and letters):
        raise MalformedWordError(f"Size parameter has to be positive, got {n}")
    for letter in letters:
        if letter.index == 0 or letter.level not in (0, 1):
            raise MalformedWordError(f"Malformed letter {letter!r}")
    seen = set()
    for letter in letters:
        if letter in seen:
            raise MalformedWordError(f"Letter {letter} occurs more than once")
        seen.add(letter)
    return SketchWord(letters, n)


def parse_word(text: str, n: Optional[int] = None) -> SketchWord:
    return SketchWord.parse(text, n)


def alphabet(n: int) -> List[Letter]:
    """Return the 4n letters ``i^s``, ``i`` in -n..-1, 1..n, in canonical order."""
    return sorted(
        Letter(sign * k, level) for k in range(1, n + 1) for sign in (-1, 1) for level in (0, 1)
    )


def _positions(word: SketchWord) -> Dict[Letter, int]:
    return {letter: position for position, letter in enumerate(word.letters)}


def _check_size(word: SketchWord, n: Optional[int]) -> int:
    if n is None:
        return word.n
    if n < 1:
        raise MalformedWordError(f"Size parameter has to be positive, got {n}")
    if any(abs(letter.index) > n for letter in word.letters):
        raise MalformedWordError(f"Word {word} uses indices outside of -{n}..{n}")
    return n


def _check_level_order(word: SketchWord, positions: Dict[Letter, int]) -> ValidationReport:
    # (ii): every level-0 letter precedes its level-1 partner
    for letter in word.letters:
        if letter.level == 1 and positions.get(Letter(letter.index, 0), -1) > positions[letter]:
            return ValidationReport.violation("ii", Letter(letter.index, 0), letter)
    # (iii): level-1 letters come in the order of their level-0 partners
    zeros = [letter for letter in word.letters if letter.level == 0]
    for first, second in combinations(zeros, 2):
        first_one, second_one = Letter(first.index, 1), Letter(second.index, 1)
        if (
            first_one in positions
            and second_one in positions
            and positions[first_one] > positions[second_one]
        ):
            return ValidationReport.violation("iii", first, second)
    return ValidationReport.success()


def validate_symmetric_sketch(word: SketchWord, n: Optional[int] = None) -> ValidationReport:
    """Check whether given word is a symmetric annotated 1-sketch of size 2n.

    Conditions are checked literally and in order (i), (ii), (iii), (iv); the first violated
    one is reported together with witness letters.

    :param word: word to check.
    :param n: size parameter, by default the one carried by the word.
    :return: validation report.
    :raise MalformedWordError: if the word uses indices outside of -n..n.
    """
    n = _check_size(word, n)
    positions = _positions(word)

    for letter in alphabet(n):
        if letter not in positions:
            return ValidationReport.violation("i", letter, detail="missing letter")

    report = _check_level_order(word, positions)
    if not report:
        return report

    for first_position, first in enumerate(word.letters):
        if first.level != 0:
            continue
        for second in word.letters[first_position + 1 :]:
            if positions[Letter(-second.index, 0)] > positions[Letter(-first.index, second.level)]:
                return ValidationReport.violation("iv", first, second)
    return ValidationReport.success()


def validate_annotated_sketch(word: SketchWord, n: Optional[int] = None) -> ValidationReport:
    """Check whether given word is an annotated 1-sketch of size n.

    Failures of the letter set (a missing pair, an unmatched letter, both signs of one
    index, wrong length) are reported as condition (i).
    """
    n = _check_size(word, n)
    positions = _positions(word)

    zero_indices = [letter.index for letter in word.letters if letter.level == 0]
    by_absolute_value = {abs(index): index for index in zero_indices}
    for letter in word.letters:
        if letter.level == 1 and Letter(letter.index, 0) not in positions:
            return ValidationReport.violation("i", letter, detail="unmatched level-1 letter")
    for index in zero_indices:
        if Letter(index, 1) not in positions:
            return ValidationReport.violation("i", Letter(index, 0), detail="missing partner")
        if by_absolute_value[abs(index)] != index:
            return ValidationReport.violation(
                "i", Letter(by_absolute_value[abs(index)], 0), Letter(index, 0), detail="both signs"
            )
    for k in range(1, n + 1):
        if k not in by_absolute_value:
            return ValidationReport.violation("i", Letter(k, 0), detail="missing index")

    return _check_level_order(word, positions)


def require_symmetric_sketch(word: SketchWord) -> SketchWord:
    report = validate_symmetric_sketch(word)
    if not report:
        raise InvalidSketchError(report, SYMMETRIC_SKETCH)
    return word


def require_annotated_sketch(word: SketchWord) -> SketchWord:
    report = validate_annotated_sketch(word)
    if not report:
        raise InvalidSketchError(report, ANNOTATED_SKETCH)
    return word


def symmetric_word(word: SketchWord) -> SketchWord:
    """Reverse the word and replace each ``k^s`` by ``(-k)^(1-s)``. This is an involution."""
    return SketchWord(tuple(letter.bar() for letter in reversed(word.letters)), word.n)


def letter_subwords(word: SketchWord) -> Tuple[SketchWord, SketchWord]:
    """Split a word into its level-0 subword and its level-1 subword."""
    return (
        SketchWord(tuple(letter for letter in word.letters if letter.level == 0), word.n),
        SketchWord(tuple(letter for letter in word.letters if letter.level == 1), word.n),
    )


def rightmost_zero_position(word: SketchWord) -> int:
    """Return the (1-based) position s of the last level-0 letter, so that word is in A_{n,s}.

    :raise InvalidSketchError: if word is not an annotated 1-sketch.
    """
    require_annotated_sketch(word)
    return max(position for position, letter in enumerate(word.letters, 1) if letter.level == 0)


def decompose_symmetric(word: SketchWord) -> Tuple[SketchWord, SketchWord]:
    """Split a symmetric sketch into an annotated 1-sketch and its symmetric.

    The first component is the subword made of the n leftmost level-0 letters and their
    level-1 partners, the second one is made of all remaining letters.
    """
    require_symmetric_sketch(word)
    zero_indices = [letter.index for letter in word.letters if letter.level == 0][: word.n]
    leftmost = set(zero_indices)
    first = tuple(letter for letter in word.letters if letter.index in leftmost)
    second = tuple(letter for letter in word.letters if letter.index not in leftmost)
    return SketchWord(first, word.n), SketchWord(second, word.n)


def _shuffle_letters(psi: Tuple[Letter, ...]) -> Iterator[Tuple[Letter, ...]]:
    if not psi:
        yield ()
        return
    last, head = psi[-1], psi[:-1]
    for i in range(len(psi)):
        prefix = head[:i]
        closing = tuple(letter.bar() for letter in reversed(prefix))
        for middle in _shuffle_letters(head[i:]):
            yield prefix + (last.bar(),) + middle + (last,) + closing
    yield psi + tuple(letter.bar() for letter in reversed(psi))


def tail_shuffles(psi: SketchWord) -> List[SketchWord]:
    """Compute the shuffles of a word of level-1 letters with its symmetric.

    The words are produced in the order of the recursive construction: first the word opening
    with the symmetric of the last letter, then those keeping a growing prefix of psi in front,
    and finally psi followed by its symmetric. There are exactly 2^len(psi) of them.

    :param psi: word made only of level-1 letters with distinct indices.
    :return: list of the shuffles.
    :raise MalformedWordError: if psi contains a level-0 letter.
    """
    for letter in psi.letters:
        if letter.level != 1:
            raise MalformedWordError(f"Shuffles are defined for level-1 letters only, got {letter}")
    shuffles = [SketchWord(letters, psi.n) for letters in _shuffle_letters(psi.letters)]
    if len(set(shuffles)) != len(shuffles) or len(shuffles) != 2 ** len(psi.letters):
        raise RuntimeError(f"Shuffles of {psi} are not 2^k distinct words")
    return shuffles


def sketch_shuffles(word: SketchWord) -> List[SketchWord]:
    """Compute the set of shuffles of an annotated 1-sketch with its symmetric.

    Writing the sketch as ``w0 j^0 psi`` with psi the trailing level-1 letters, each result
    has the form ``w0 j^0 u (-j)^1 sym(w0)`` with u ranging over the shuffles of psi.

    :param word: annotated 1-sketch in A_{n,s}.
    :return: 2^(2n - s) symmetric annotated 1-sketches of size 2n.
    :raise InvalidSketchError: if word is not an annotated 1-sketch.
    """
    s = rightmost_zero_position(word)
    prefix, last_zero = word.letters[: s - 1], word.letters[s - 1]
    psi = SketchWord(word.letters[s:], word.n)
    suffix = symmetric_word(SketchWord(prefix, word.n)).letters
    return [
        SketchWord(prefix + (last_zero,) + middle.letters + (last_zero.bar(),) + suffix, word.n)
        for middle in tail_shuffles(psi)
    ]


def _extend_annotated(
    letters: List[Letter], opened: List[int], closed: int, n: int
) -> Iterator[Tuple[Letter, ...]]:
    if closed == n:
        yield tuple(letters)
        return
    candidates = []
    if len(opened) < n:
        used = {abs(index) for index in opened}
        candidates.extend(
            Letter(sign * k, 0) for k in range(1, n + 1) if k not in used for sign in (-1, 1)
        )
    if closed < len(opened):
        candidates.append(Letter(opened[closed], 1))

    for letter in sorted(candidates):
        letters.append(letter)
        if letter.level == 0:
            opened.append(letter.index)
            yield from _extend_annotated(letters, opened, closed, n)
            opened.pop()
        else:
            yield from _extend_annotated(letters, opened, closed + 1, n)
        letters.pop()


def enumerate_annotated_sketches(n: int) -> Iterator[SketchWord]:
    """Generate all annotated 1-sketches of size n in lexicographic order.

    Letters are compared by (index, level), so for n=1 the order is "-1^0 -1^1", "1^0 1^1".
    There are 2^n n! Catalan(n) of them.
    """
    logger.info("Enumerating annotated 1-sketches of size %d", n)
    for letters in _extend_annotated([], [], 0, n):
        yield SketchWord(letters, n)


def enumerate_symmetric_sketches(n: int) -> Iterator[SketchWord]:
    """Generate all symmetric annotated 1-sketches of size 2n.

    Shuffle sets of the annotated 1-sketches are disjoint, and they are emitted one after
    another in the order of :func:`enumerate_annotated_sketches`.
    """
    logger.info("Enumerating symmetric annotated 1-sketches of size %d", 2 * n)
    for word in enumerate_annotated_sketches(n):
        yield from sketch_shuffles(word)


def to_dyck_path(word: SketchWord) -> LatticePath:
    """Map an annotated 1-sketch to a Dyck path: U for level-0 letters, D for level-1 ones."""
    require_annotated_sketch(word)
    return LatticePath("".join("U" if letter.level == 0 else "D" for letter in word.letters))
