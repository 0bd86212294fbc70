"""Rooted labeled ordered forests and symmetric forests.

Forests are written with the grammar::

    Forest := Tree ("," Tree)*
    Tree   := INT ["(" Forest ")"]

e.g. ``-2(3,-3(2)),1(-1)``. Breadth first order starts from a virtual super-root whose
ordered children are the roots, so roots come first, then their children, and so on.

Node ``i`` is a sub-descendant of node ``j`` when ``i`` comes after ``j`` in BFS order but
before the slot where the children of ``j`` are placed. For an internal ``j`` the slot is its
first child. For a leaf ``j`` it is the place its children would take, i.e. the first child of
the first internal node following ``j``; if there is none, the slot lies past the last node.
"""
import re
from collections import deque
from functools import lru_cache
from logging import getLogger
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .common_models import CountTable, ValidationReport
from .exceptions import InvalidForestError, MalformedForestError

logger = getLogger("catalanc")

_TOKEN_RE = re.compile(r"\s*(?:(?P<label>[+-]?\d+)|(?P<symbol>[(),]))")

Shape = Tuple["Shape", ...]


class Node(NamedTuple):
    label: int
    children: Tuple["Node", ...] = ()

    def __str__(self) -> str:
        if not self.children:
            return str(self.label)
        return f"{self.label}({','.join(str(child) for child in self.children)})"


class OrderedForest(NamedTuple):
    """Ordered sequence of rooted ordered trees with integer labels."""

    roots: Tuple[Node, ...]

    def __str__(self) -> str:
        return ",".join(str(root) for root in self.roots)

    @classmethod
    def parse(cls, text: str) -> "OrderedForest":
        return parse_forest(text)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = self._tokenize(text)
        self.position = 0

    def _tokenize(self, text: str) -> List[str]:
        tokens, offset = [], 0
        while offset < len(text):
            if text[offset:].strip() == "":
                break
            match = _TOKEN_RE.match(text, offset)
            if match is None:
                raise MalformedForestError(f"Unexpected character at {offset} in {text!r}")
            tokens.append(match["label"] if match["label"] is not None else match["symbol"])
            offset = match.end()
        return tokens

    def _peek(self) -> Optional[str]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def _take(self, expected: Optional[str] = None) -> str:
        token = self._peek()
        if token is None or (expected is not None and token != expected):
            raise MalformedForestError(
                f"Expected {expected or 'a label'} but found {token or 'end of input'} "
                f"in {self.text!r}"
            )
        self.position += 1
        return token

    def forest(self) -> Tuple[Node, ...]:
        trees = [self.tree()]
        while self._peek() == ",":
            self._take(",")
            trees.append(self.tree())
        return tuple(trees)

    def tree(self) -> Node:
        token = self._take()
        if token in "(),":
            raise MalformedForestError(f"Expected a label but found {token} in {self.text!r}")
        label = int(token)
        if label == 0:
            raise MalformedForestError(f"Node label cannot be 0 in {self.text!r}")
        children: Tuple[Node, ...] = ()
        if self._peek() == "(":
            self._take("(")
            children = self.forest()
            self._take(")")
        return Node(label, children)

    def parse(self) -> OrderedForest:
        roots = self.forest()
        if self._peek() is not None:
            raise MalformedForestError(f"Unexpected {self._peek()} in {self.text!r}")
        return OrderedForest(roots)


def parse_forest(text: str) -> OrderedForest:
    """Parse forest text.

    :param text: forest in the grammar described in the module docstring. Whitespace is
     insignificant.
    :return: parsed forest.
    :raise MalformedForestError: if the text does not follow the grammar, a label is 0 or
     labels repeat.
    """
    forest = _Parser(text).parse()
    labels = bfs_order(forest)
    if len(set(labels)) != len(labels):
        raise MalformedForestError(f"Labels of {text!r} are not distinct")
    return forest


def _bfs_nodes(forest: OrderedForest) -> List[Node]:
    nodes, queue = [], deque(forest.roots)
    while queue:
        node = queue.popleft()
        nodes.append(node)
        queue.extend(node.children)
    return nodes


def bfs_order(forest: OrderedForest) -> List[int]:
    """Labels of the forest read level by level, left to right."""
    return [node.label for node in _bfs_nodes(forest)]


def forest_size(forest: OrderedForest) -> int:
    return len(_bfs_nodes(forest))


def require_labeled_forest(forest: OrderedForest) -> int:
    """Check that absolute values of the labels are exactly 1..n and return n."""
    labels = bfs_order(forest)
    n = len(labels)
    if sorted(abs(label) for label in labels) != list(range(1, n + 1)):
        raise MalformedForestError(f"Absolute values of labels of {forest} have to be 1..{n}")
    return n


class _BFSIndex:
    """Positions and children slots of all nodes of a forest."""

    def __init__(self, forest: OrderedForest):
        self.nodes = _bfs_nodes(forest)
        self.order = [node.label for node in self.nodes]
        self.position = {label: position for position, label in enumerate(self.order)}
        self.slot = [len(self.nodes)] * len(self.nodes)
        pending = len(self.nodes)
        for position in reversed(range(len(self.nodes))):
            node = self.nodes[position]
            if node.children:
                pending = self.position[node.children[0].label]
            self.slot[position] = pending

    def is_sub_descendant(self, i: int, j: int) -> bool:
        first, second = self.position[j], self.position[i]
        return first < second < self.slot[first]


def is_sub_descendant(forest: OrderedForest, i: int, j: int) -> bool:
    """Check whether node i is a sub-descendant of node j.

    :raise MalformedForestError: if any of the labels is missing from the forest.
    """
    index = _BFSIndex(forest)
    for label in (i, j):
        if label not in index.position:
            raise MalformedForestError(f"Label {label} does not occur in {forest}")
    return index.is_sub_descendant(i, j)


def validate_symmetric_forest(forest: OrderedForest, n: Optional[int] = None) -> ValidationReport:
    """Check whether forest is a symmetric forest with 2n nodes.

    Conditions are checked in order:
    (i) absolute values of the first n labels in BFS order are 1..n,
    (ii) e_{n+j} = -e_{n-j+1} for j in 1..n,
    (iii) whenever i is a sub-descendant of j, -j is a sub-descendant of -i.

    :param forest: forest to check.
    :param n: half of the number of nodes, inferred when omitted.
    :return: report naming the first violated condition with witness labels.
    :raise MalformedForestError: if the forest does not have exactly 2n nodes.
    """
    index = _BFSIndex(forest)
    size = len(index.order)
    if n is None:
        n = size // 2
    if size != 2 * n or n < 1:
        raise MalformedForestError(f"Symmetric forest of size 2n={2 * n} cannot have {size} nodes")

    order = index.order
    if sorted(abs(label) for label in order[:n]) != list(range(1, n + 1)):
        return ValidationReport.violation("i", *order[:n])
    for j in range(1, n + 1):
        if order[n + j - 1] != -order[n - j]:
            return ValidationReport.violation("ii", order[n + j - 1], order[n - j])
    for first in order:
        for second in order:
            if index.is_sub_descendant(second, first) and not index.is_sub_descendant(
                -first, -second
            ):
                return ValidationReport.violation("iii", second, first)
    return ValidationReport.success()


def require_symmetric_forest(forest: OrderedForest) -> OrderedForest:
    report = validate_symmetric_forest(forest)
    if not report:
        raise InvalidForestError(report)
    return forest


def special_leaves(forest: OrderedForest) -> List[int]:
    """Leaves following the last internal node in BFS order.

    A forest without internal nodes hangs from a fictitious parent, so all its nodes are special.
    """
    nodes = _bfs_nodes(forest)
    internal = [position for position, node in enumerate(nodes) if node.children]
    start = internal[-1] + 1 if internal else 0
    return [node.label for node in nodes[start:]]


def _render(nodes: Sequence[Node], label) -> str:
    parts = []
    for node in nodes:
        text = label(node)
        if node.children:
            text += f"({_render(node.children, label)})"
        parts.append(text)
    return ",".join(parts)


def forest_shape(forest: OrderedForest) -> str:
    """Render the unlabeled shape, e.g. "•(•),•"."""
    return _render(forest.roots, lambda _node: "•")


def _shape_of(forest: OrderedForest) -> Shape:
    def _tree(node: Node) -> Shape:
        return tuple(_tree(child) for child in node.children)

    return tuple(_tree(root) for root in forest.roots)


def _label_shape(shape: Shape, labels: Sequence[int]) -> OrderedForest:
    # labels[p] goes to the node at BFS position p
    children_positions: List[range] = []
    queue = deque(shape)
    next_position = len(shape)
    while queue:
        tree = queue.popleft()
        children_positions.append(range(next_position, next_position + len(tree)))
        next_position += len(tree)
        queue.extend(tree)
    nodes: List[Node] = [Node(0)] * len(children_positions)
    for position in reversed(range(len(children_positions))):
        nodes[position] = Node(
            labels[position], tuple(nodes[child] for child in children_positions[position])
        )
    return OrderedForest(tuple(nodes[: len(shape)]))


def relabel(forest: OrderedForest, labels: Sequence[int]) -> OrderedForest:
    """Return the forest of the same shape whose BFS order is given by labels."""
    return _label_shape(_shape_of(forest), labels)


@lru_cache(maxsize=None)
def _shapes(n: int) -> Tuple[Shape, ...]:
    if n == 0:
        return ((),)
    return tuple(
        (first,) + rest
        for size in range(1, n + 1)
        for first in _shapes(size - 1)
        for rest in _shapes(n - size)
    )


def serialization_key(forest: OrderedForest) -> Tuple[Tuple[int, int], ...]:
    """Sort key comparing serialized forests token by token, labels by their numeric value.

    At any position where two serializations with equal prefixes differ, either both tokens
    are labels or both are symbols, and symbols compare as characters.
    """
    return tuple(
        (0, int(match["label"])) if match["label"] is not None else (1, ord(match["symbol"]))
        for match in _TOKEN_RE.finditer(str(forest))
    )


@lru_cache(maxsize=None)
def _canonical_shapes(n: int) -> Tuple[OrderedForest, ...]:
    labels = list(range(1, n + 1))
    shapes = (_label_shape(shape, labels) for shape in _shapes(n))
    return tuple(sorted(shapes, key=serialization_key))


def signed_permutations(n: int) -> Iterator[Tuple[int, ...]]:
    """Generate the 2^n n! signed permutations of 1..n in lexicographic order."""
    values = sorted(sign * k for k in range(1, n + 1) for sign in (-1, 1))
    yield from _extend_signed([], set(), values, n)


def _extend_signed(
    prefix: List[int], used: set, values: Sequence[int], n: int
) -> Iterator[Tuple[int, ...]]:
    if len(prefix) == n:
        yield tuple(prefix)
        return
    for value in values:
        if abs(value) in used:
            continue
        prefix.append(value)
        used.add(abs(value))
        yield from _extend_signed(prefix, used, values, n)
        used.discard(abs(value))
        prefix.pop()


def enumerate_forests(n: int, labeled: bool = False) -> Iterator[OrderedForest]:
    """Generate ordered forests with n nodes.

    Shapes are canonically labeled 1..n in BFS order. Labeled forests carry every signed
    permutation of 1..n in BFS order. Both streams are sorted by :func:`serialization_key`.
    """
    logger.info("Enumerating %s forests with %d nodes", "labeled" if labeled else "unlabeled", n)
    if not labeled:
        yield from _canonical_shapes(n)
        return
    forests = [
        relabel(shape, labels)
        for shape in _canonical_shapes(n)
        for labels in signed_permutations(n)
    ]
    yield from sorted(forests, key=serialization_key)


def count_forests_by_special_leaves(n: int) -> CountTable:
    """Tally unlabeled forests with n nodes by their number of special leaves."""
    entries: Dict[int, int] = {s: 0 for s in range(1, n + 1)}
    for forest in enumerate_forests(n):
        entries[len(special_leaves(forest))] += 1
    return CountTable(n=n, entries=entries)


def symmetric_forest(forest: OrderedForest) -> OrderedForest:
    """Return the symmetric of a labeled forest.

    It is the forest labeled -e_n, ..., -e_1 in BFS order in which -e_i is a sub-descendant of
    -e_j exactly when e_j is a sub-descendant of e_i. It is obtained by going through words.
    """
    from .bijections import phi, psi
    from .words import symmetric_word

    require_labeled_forest(forest)
    return phi(symmetric_word(psi(forest, symmetric=False)))


def forest_shuffles(forest: OrderedForest) -> List[OrderedForest]:
    """Return the 2^s symmetric forests obtained by shuffling a labeled forest with its symmetric.

    :param forest: labeled forest with s special leaves.
    :return: symmetric forests with 2n nodes, in the order of the corresponding word shuffles.
    :raise MalformedForestError: if the labels are not a signed permutation of 1..n.
    """
    from .bijections import phi, psi
    from .words import sketch_shuffles

    require_labeled_forest(forest)
    shuffles = [phi(word) for word in sketch_shuffles(psi(forest, symmetric=False))]
    if len(shuffles) != 2 ** len(special_leaves(forest)):
        raise RuntimeError(f"{forest} has {len(shuffles)} shuffles instead of 2^s")
    return shuffles


def _induced(nodes: Sequence[Node], keep: set) -> Tuple[Node, ...]:
    # keep has to be closed under taking parents
    result = []
    for node in nodes:
        if node.label in keep:
            result.append(Node(node.label, _induced(node.children, keep)))
    return tuple(result)


def decompose_symmetric_forest(forest: OrderedForest) -> Tuple[OrderedForest, OrderedForest]:
    """Split a symmetric forest into the sub-forests induced by both halves of its BFS order.

    :raise InvalidForestError: if forest is not a symmetric forest.
    """
    require_symmetric_forest(forest)
    nodes = _bfs_nodes(forest)
    n = len(nodes) // 2
    first_half = {node.label for node in nodes[:n]}
    # Parents precede children in BFS order, so the first half is closed under taking parents
    first = OrderedForest(_induced(forest.roots, first_half))
    attached_to_first = {child.label for node in nodes[:n] for child in node.children}
    root_labels = {root.label for root in forest.roots}
    second_roots = tuple(
        node for node in nodes[n:] if node.label in attached_to_first or node.label in root_labels
    )
    return first, OrderedForest(second_roots)
