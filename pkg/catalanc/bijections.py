"""Maps between regions, symmetric sketches and symmetric forests.

- sigma sends a point off the arrangement to the word listing the values x_i + s in
  increasing order,
- representative_point goes back, building an exact rational point of the region,
- phi reads a sketch from left to right and grows a forest,
- psi reads a forest in BFS order and writes the sketch back.
"""
from collections import defaultdict
from fractions import Fraction
from logging import getLogger
from typing import Dict, List, Optional, Tuple

from .common_models import RegionPoint
from .exceptions import HyperplaneCollisionError
from .forests import (
    Node,
    OrderedForest,
    bfs_order,
    require_labeled_forest,
    require_symmetric_forest,
)
from .words import (
    Letter,
    SketchWord,
    require_annotated_sketch,
    require_symmetric_sketch,
)

logger = getLogger("catalanc")


def hyperplane_equation(first: Letter, second: Letter) -> str:
    """Render the hyperplane x_i + s = x_j + t on which two letters have equal values.

    The equation is written in the coordinates x_1, ..., x_n with the first nonzero
    coefficient positive, e.g. "2x1 = 1" or "x1 - x2 = 1".
    """
    coefficients: Dict[int, int] = defaultdict(int)
    coefficients[abs(first.index)] += 1 if first.index > 0 else -1
    coefficients[abs(second.index)] -= 1 if second.index > 0 else -1
    rhs = second.level - first.level
    terms = [(k, c) for k, c in sorted(coefficients.items()) if c != 0]
    if terms and terms[0][1] < 0:
        terms = [(k, -c) for k, c in terms]
        rhs = -rhs

    text = ""
    for k, c in terms:
        magnitude = "" if abs(c) == 1 else str(abs(c))
        if not text:
            text = f"{'-' if c < 0 else ''}{magnitude}x{k}"
        else:
            text += f" {'-' if c < 0 else '+'} {magnitude}x{k}"
    return f"{text or '0'} = {rhs}"


def sigma(point: RegionPoint) -> SketchWord:
    """Map a point to the symmetric annotated 1-sketch of its region.

    :param point: point with exact rational coordinates.
    :return: word listing the letters i^s by increasing value of x_i + s.
    :raise HyperplaneCollisionError: if two of the values coincide, i.e. the point lies on a
     hyperplane of the arrangement.
    """
    n = point.n
    values = sorted(
        (point.value(index) + level, Letter(index, level))
        for k in range(1, n + 1)
        for index in (-k, k)
        for level in (0, 1)
    )
    for (value, letter), (next_value, next_letter) in zip(values, values[1:]):
        if value == next_value:
            raise HyperplaneCollisionError(
                letter, next_letter, hyperplane_equation(letter, next_letter)
            )
    return SketchWord(tuple(letter for _, letter in values), n)


def representative_point(word: SketchWord) -> RegionPoint:
    """Build an exact rational point in the region encoded by a symmetric sketch.

    Consecutive letters (a, s), (b, t) of the word give the constraints
    y_b + t >= y_a + s + 1/(2n+1). Their least solution above zero is found by longest-path
    relaxation and symmetrised as x_i = (y_i - y_{-i}) / 2, which satisfies the same
    constraints because the word is mapped onto itself by the symmetry.

    :param word: symmetric annotated 1-sketch.
    :return: point whose coordinates have denominators dividing 2(2n+1).
    :raise InvalidSketchError: if word is not a symmetric annotated 1-sketch.
    """
    require_symmetric_sketch(word)
    n = word.n
    gap = Fraction(1, 2 * n + 1)
    constraints = [
        (first.index, second.index, first.level - second.level + gap)
        for first, second in zip(word.letters, word.letters[1:])
    ]
    y: Dict[int, Fraction] = {index: Fraction(0) for k in range(1, n + 1) for index in (-k, k)}

    for _ in range(len(y) + 1):
        changed = False
        for source, target, weight in constraints:
            if y[target] < y[source] + weight:
                y[target] = y[source] + weight
                changed = True
        if not changed:
            break
    else:
        raise RuntimeError(f"Order constraints of {word} are not satisfiable")

    point = RegionPoint(coords=[(y[k] - y[-k]) / 2 for k in range(1, n + 1)])
    if sigma(point) != word:
        raise RuntimeError(f"Point {point.render()} does not lie in the region of {word}")
    return point


def _build_nodes(label: int, children: Dict[int, List[int]]) -> Node:
    return Node(label, tuple(_build_nodes(child, children) for child in children[label]))


def phi(word: SketchWord, symmetric: Optional[bool] = None) -> OrderedForest:
    """Grow the forest of a sketch in a single left to right pass.

    A level-0 letter following a level-0 letter ``j^0`` becomes the next right sibling of j,
    a level-0 letter following ``j^1`` becomes the leftmost child of j. Level-1 letters create
    no nodes.

    :param word: symmetric annotated 1-sketch or annotated 1-sketch.
    :param symmetric: which kind of sketch is expected. By default it is decided by the length
     of the word (4n letters for symmetric sketches).
    :return: the forest; symmetric when word was symmetric.
    :raise InvalidSketchError: if the word is not a sketch of the expected kind.
    """
    if symmetric is None:
        symmetric = len(word.letters) == 4 * word.n
    if symmetric:
        require_symmetric_sketch(word)
    else:
        require_annotated_sketch(word)

    roots: List[int] = []
    children: Dict[int, List[int]] = defaultdict(list)
    siblings: Dict[int, List[int]] = {}
    previous: Optional[Letter] = None
    for letter in word.letters:
        if letter.level == 0:
            if previous is None:
                siblings[letter.index] = roots
            elif previous.level == 0:
                siblings[letter.index] = siblings[previous.index]
            else:
                siblings[letter.index] = children[previous.index]
            siblings[letter.index].append(letter.index)
        previous = letter
    return OrderedForest(tuple(_build_nodes(root, children) for root in roots))


def psi(forest: OrderedForest, symmetric: Optional[bool] = None) -> SketchWord:
    """Write back the sketch of a forest by reading it in BFS order.

    The first node and every next right sibling emit their level-0 letter. A leftmost child of
    the node at BFS position p first releases the level-1 letters of all nodes up to p not yet
    closed, in BFS order, and then emits its level-0 letter. Level-1 letters still pending at
    the end (those of the special leaves) close the word.

    :param forest: symmetric forest or labeled forest.
    :param symmetric: which kind of forest is expected. By default forests whose labels are
     closed under negation are treated as symmetric.
    :return: the symmetric sketch or the annotated 1-sketch of the forest.
    :raise InvalidForestError: if a symmetric forest is expected and forest is not one.
    :raise MalformedForestError: if a labeled forest is expected and its labels are not a
     signed permutation of 1..n.
    """
    order = bfs_order(forest)
    if symmetric is None:
        symmetric = set(order) == {-label for label in order}
    if symmetric:
        require_symmetric_forest(forest)
        n = len(order) // 2
    else:
        n = require_labeled_forest(forest)

    position = {label: index for index, label in enumerate(order)}
    first_child_of: Dict[int, int] = {}
    for node in _nodes(forest):
        if node.children:
            first_child_of[node.children[0].label] = position[node.label]

    letters: List[Letter] = [Letter(order[0], 0)]
    closed = 0
    for label in order[1:]:
        if label in first_child_of:
            parent_position = first_child_of[label]
            letters.extend(Letter(pending, 1) for pending in order[closed : parent_position + 1])
            closed = parent_position + 1
        letters.append(Letter(label, 0))
    letters.extend(Letter(pending, 1) for pending in order[closed:])
    return SketchWord(tuple(letters), n)


def _nodes(forest: OrderedForest) -> List[Node]:
    stack, nodes = list(forest.roots), []
    while stack:
        node = stack.pop()
        nodes.append(node)
        stack.extend(node.children)
    return nodes


def region_to_forest(point: RegionPoint) -> OrderedForest:
    """Symmetric forest of the region containing point."""
    return phi(sigma(point), symmetric=True)


def forest_to_region(forest: OrderedForest) -> RegionPoint:
    """Representative point of the region corresponding to a symmetric forest."""
    return representative_point(psi(forest, symmetric=True))


def minimum_gap(point: RegionPoint) -> Fraction:
    """Smallest difference between two consecutive values x_i + s of the point."""
    values = sorted(
        point.value(index) + level
        for k in range(1, point.n + 1)
        for index in (-k, k)
        for level in (0, 1)
    )
    return min(second - first for first, second in zip(values, values[1:]))


def perturb(point: RegionPoint, offsets: Tuple[Fraction, ...]) -> RegionPoint:
    return RegionPoint(coords=[coord + offset for coord, offset in zip(point.coords, offsets)])
