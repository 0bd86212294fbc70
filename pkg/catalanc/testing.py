"""Brute-force oracles and assertion helpers used by the tests and by ``catalanc verify``.

Everything here is built straight from the definitions, without going through the word/forest
bijections, so that it can be used to check them.
"""
from itertools import permutations, product
from typing import Iterable, List, Optional, Sequence, Set

from .forests import (
    Node,
    OrderedForest,
    _BFSIndex,
    _canonical_shapes,
    bfs_order,
    relabel,
    require_labeled_forest,
    signed_permutations,
    special_leaves,
    validate_symmetric_forest,
)
from .words import SketchWord, alphabet, validate_symmetric_sketch


def symmetric_sketches_by_permutation_filter(n: int) -> List[SketchWord]:
    """Return all orderings of the 4n letters that satisfy the definition of symmetric sketches.

    This visits (4n)! orderings, which is only feasible for n <= 2.
    """
    return [
        word
        for word in (SketchWord(letters, n) for letters in permutations(alphabet(n)))
        if validate_symmetric_sketch(word)
    ]


def symmetric_forests_by_definition(n: int) -> List[OrderedForest]:
    """Return all symmetric forests with 2n nodes by filtering labeled shapes.

    Every shape with 2n nodes is labeled with a signed permutation e_1..e_n on its first half
    and with -e_n..-e_1 on its second half, then filtered by the sub-descendant condition.
    """
    result = []
    for shape in _canonical_shapes(2 * n):
        for labels in signed_permutations(n):
            forest = relabel(shape, labels + tuple(-label for label in reversed(labels)))
            if validate_symmetric_forest(forest, n):
                result.append(forest)
    return result


def symmetric_forest_by_definition(forest: OrderedForest) -> OrderedForest:
    """Find the symmetric of a labeled forest by searching all shapes.

    The symmetric is the forest labeled -e_n..-e_1 in BFS order in which -e_i is a
    sub-descendant of -e_j exactly when e_j is a sub-descendant of e_i.

    :raise RuntimeError: if there is not exactly one such forest.
    """
    n = require_labeled_forest(forest)
    order = bfs_order(forest)
    index = _BFSIndex(forest)
    labels = [-label for label in reversed(order)]
    candidates = []
    for shape in _canonical_shapes(n):
        candidate = relabel(shape, labels)
        candidate_index = _BFSIndex(candidate)
        if all(
            candidate_index.is_sub_descendant(-i, -j) == index.is_sub_descendant(j, i)
            for i in order
            for j in order
        ):
            candidates.append(candidate)
    if len(candidates) != 1:
        raise RuntimeError(f"{forest} has {len(candidates)} symmetric forests instead of one")
    return candidates[0]


def _attach(
    forest: OrderedForest, mirror: OrderedForest, targets: Sequence[Optional[int]]
) -> OrderedForest:
    # targets[k] is the node receiving the k-th root of mirror, None for the super-root
    attached = {}
    for root, target in zip(mirror.roots, targets):
        attached.setdefault(target, []).append(root)

    def _grow(node: Node) -> Node:
        return Node(
            node.label,
            tuple(_grow(child) for child in node.children) + tuple(attached.get(node.label, ())),
        )

    roots = tuple(_grow(root) for root in forest.roots)
    return OrderedForest(roots + tuple(attached.get(None, ())))


def forest_shuffles_by_definition(forest: OrderedForest) -> List[OrderedForest]:
    """Shuffle a labeled forest with its symmetric by connecting edges directly.

    Every root of the symmetric forest is connected to e_{n-s} (the virtual super-root when
    s = n) or to one of the s special leaves. A result is kept when its BFS order is
    e_1..e_n, -e_n..-e_1 and every pair of nodes satisfies the sub-descendant property.
    """
    n = require_labeled_forest(forest)
    order = bfs_order(forest)
    leaves = special_leaves(forest)
    s = len(leaves)
    mirror = symmetric_forest_by_definition(forest)
    targets: List[Optional[int]] = [order[n - s - 1] if s < n else None] + leaves
    expected_order = order + [-label for label in reversed(order)]

    result = []
    for assignment in product(targets, repeat=len(mirror.roots)):
        candidate = _attach(forest, mirror, assignment)
        if bfs_order(candidate) == expected_order and validate_symmetric_forest(candidate, n):
            result.append(candidate)
    return result


def assert_same_elements(actual: Iterable, expected: Iterable) -> None:
    """Assert that two iterables hold the same elements, with no repetitions in actual."""
    actual, expected = list(actual), list(expected)
    actual_set: Set = set(actual)
    assert len(actual_set) == len(actual), "actual elements contain repetitions"
    missing = set(expected) - actual_set
    unexpected = actual_set - set(expected)
    assert not missing and not unexpected, (
        f"missing: {sorted(map(str, missing))}, unexpected: {sorted(map(str, unexpected))}"
    )


def assert_all_valid_symmetric_sketches(words: Iterable[SketchWord]) -> None:
    for word in words:
        report = validate_symmetric_sketch(word)
        assert report, f"{word} is not a symmetric sketch: {report.render()}"


def assert_all_valid_symmetric_forests(forests: Iterable[OrderedForest]) -> None:
    for forest in forests:
        report = validate_symmetric_forest(forest)
        assert report, f"{forest} is not a symmetric forest: {report.render()}"
