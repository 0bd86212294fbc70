"""Definition of command line parsers and handlers for count, enumerate, map and shuffle.

Handlers only parse their input, call the library and print one object per line.
"""
import sys
from argparse import ArgumentTypeError, Namespace
from typing import Iterable, Optional

from .bijections import phi, psi, representative_point, sigma
from .common_models import RegionPoint
from .counting import c_ns, d_ns, region_count, region_count_via_sum, special_leaf_table
from .exceptions import CatalanError
from .forests import enumerate_forests, forest_shape, forest_shuffles, parse_forest
from .limits import check_desk_scale
from .words import (
    enumerate_annotated_sketches,
    enumerate_symmetric_sketches,
    parse_word,
    sketch_shuffles,
)


def positive_int(text: str) -> int:
    """Argument type accepting integers >= 1."""
    try:
        value = int(text)
    except ValueError:
        raise ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 1:
        raise ArgumentTypeError(f"has to be positive, got {value}")
    return value


def _read_object(args: Namespace) -> str:
    """Return the object given as positional argument, or read it from standard input."""
    text = args.object if args.object is not None else sys.stdin.read()
    return text.strip()


def _print_lines(objects: Iterable) -> None:
    for item in objects:
        print(item)


def _count(args: Namespace) -> int:
    """Function executed when catalanc count is invoked."""
    if args.table:
        _print_lines(
            f"s={s} C={c_ns(args.n, s)} D={d_ns(s)} product={c_ns(args.n, s) * d_ns(s)}"
            for s in range(1, args.n + 1)
        )
    elif args.by_special:
        _print_lines(special_leaf_table(args.n).render())
    elif args.via_sum:
        print(region_count_via_sum(args.n))
    else:
        print(region_count(args.n))
    return 0


def _enumerate(args: Namespace) -> int:
    """Function executed when catalanc enumerate is invoked."""
    n, force = args.n, args.force
    if args.kind == "sketches" and args.labeled:
        print("catalanc enumerate: error: --labeled applies only to forests", file=sys.stderr)
        return 2
    if args.kind == "sketches":
        if args.symmetric:
            check_desk_scale("symmetric-sketches", n, force)
            _print_lines(enumerate_symmetric_sketches(n))
        else:
            check_desk_scale("annotated-sketches", n, force)
            _print_lines(enumerate_annotated_sketches(n))
    elif args.symmetric:
        check_desk_scale("symmetric-forests", n, force)
        _print_lines(phi(word, symmetric=True) for word in enumerate_symmetric_sketches(n))
    elif args.labeled:
        check_desk_scale("labeled-forests", n, force)
        _print_lines(enumerate_forests(n, labeled=True))
    else:
        check_desk_scale("forests", n, force)
        _print_lines(forest_shape(forest) for forest in enumerate_forests(n))
    return 0


def _check_point_size(point: RegionPoint, n: Optional[int]) -> RegionPoint:
    if n is not None and point.n != n:
        raise CatalanError(f"Point {point.render()} has {point.n} coordinates, expected {n}")
    return point


def _map(args: Namespace) -> int:
    """Function executed when catalanc map is invoked."""
    if args.direction == "point-to-sketch":
        text = args.coords if args.coords is not None else _read_object(args)
        print(sigma(_check_point_size(RegionPoint.parse(text), args.n)))
        return 0

    text = _read_object(args)
    if args.direction == "sketch-to-forest":
        print(phi(parse_word(text, args.n)))
    elif args.direction == "forest-to-sketch":
        print(psi(parse_forest(text)))
    else:
        print(representative_point(parse_word(text, args.n)).render())
    return 0


def _shuffle(args: Namespace) -> int:
    """Function executed when catalanc shuffle is invoked."""
    text = _read_object(args)
    if args.kind == "sketch":
        _print_lines(sketch_shuffles(parse_word(text)))
    else:
        _print_lines(forest_shuffles(parse_forest(text)))
    return 0


def _add_object_argument(parser, what: str) -> None:
    parser.add_argument(
        "object", help=f"{what}. If omitted, it is read from standard input", nargs="?"
    )


def add_count_parser(parent_parser) -> None:
    """Add count parser to the parent parser.

    :param parent_parser: a parser to which count command should be added.
    """
    parser = parent_parser.add_parser(
        "count", description="Print exact counts of regions and of forests by special leaves."
    )
    parser.add_argument(
        "--n", help="dimension of the arrangement", type=positive_int, required=True
    )
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--by-special",
        help="print the number of forests with s special leaves for each s",
        action="store_true",
    )
    group.add_argument(
        "--via-sum",
        help="compute the number of regions as a sum over the number of special leaves",
        action="store_true",
    )
    group.add_argument(
        "--table",
        help="print C(n,s), D(n,s) and their product for each s",
        action="store_true",
    )
    parser.set_defaults(func=_count)


def add_enumerate_parser(parent_parser) -> None:
    """Add enumerate parser to the parent parser.

    :param parent_parser: a parser to which enumerate command should be added.
    """
    parser = parent_parser.add_parser(
        "enumerate", description="Print all sketches or forests of given size, one per line."
    )
    parser.add_argument("kind", choices=["sketches", "forests"])
    parser.add_argument("--n", help="size of the objects", type=positive_int, required=True)
    kind = parser.add_mutually_exclusive_group()
    kind.add_argument(
        "--symmetric", help="enumerate symmetric sketches or forests", action="store_true"
    )
    kind.add_argument(
        "--labeled", help="enumerate labeled forests instead of shapes", action="store_true"
    )
    parser.add_argument(
        "--force", help="allow sizes beyond the desk-scale limits", action="store_true"
    )
    parser.set_defaults(func=_enumerate)


def add_map_parser(parent_parser) -> None:
    """Add map parser to the parent parser.

    :param parent_parser: a parser to which map command should be added.
    """
    parser = parent_parser.add_parser(
        "map", description="Convert between points, symmetric sketches and symmetric forests."
    )
    parser.add_argument(
        "direction",
        choices=["sketch-to-forest", "forest-to-sketch", "point-to-sketch", "sketch-to-point"],
    )
    _add_object_argument(parser, "sketch, forest or comma separated coordinates")
    parser.add_argument("--n", help="size parameter of the object", type=positive_int)
    parser.add_argument(
        "--coords",
        help="comma separated rational coordinates, e.g. 1/6. Use --coords=-1/6 for negatives",
    )
    parser.set_defaults(func=_map)


def add_shuffle_parser(parent_parser) -> None:
    """Add shuffle parser to the parent parser.

    :param parent_parser: a parser to which shuffle command should be added.
    """
    parser = parent_parser.add_parser(
        "shuffle",
        description="Print the shuffles of an annotated 1-sketch or a forest with its symmetric.",
    )
    parser.add_argument("kind", choices=["sketch", "forest"])
    _add_object_argument(parser, "annotated 1-sketch or labeled forest")
    parser.set_defaults(func=_shuffle)
