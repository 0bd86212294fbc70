"""Regions of the type C Catalan arrangement, symmetric annotated 1-sketches and symmetric forests.

The package implements the chain of bijections

    regions  <->  symmetric annotated 1-sketches  <->  symmetric forests

together with the shuffle constructions on words and forests, exact counting formulas and
brute-force oracles certifying them at small sizes.
"""
from .bijections import (
    forest_to_region,
    hyperplane_equation,
    phi,
    psi,
    region_to_forest,
    representative_point,
    sigma,
)
from .common_models import CountTable, RegionPoint, ValidationReport
from .counting import (
    LatticePath,
    c_ns,
    catalan,
    check_recurrence,
    count_paths_with_tail,
    d_ns,
    dominating_rotations,
    region_count,
    region_count_via_sum,
)
from .exceptions import (
    CatalanError,
    DeskScaleError,
    HyperplaneCollisionError,
    InvalidForestError,
    InvalidSizeError,
    InvalidSketchError,
    MalformedForestError,
    MalformedPathError,
    MalformedWordError,
)
from .forests import (
    Node,
    OrderedForest,
    bfs_order,
    count_forests_by_special_leaves,
    decompose_symmetric_forest,
    enumerate_forests,
    forest_shuffles,
    is_sub_descendant,
    parse_forest,
    special_leaves,
    symmetric_forest,
    validate_symmetric_forest,
)
from .words import (
    Letter,
    SketchWord,
    decompose_symmetric,
    enumerate_annotated_sketches,
    enumerate_symmetric_sketches,
    parse_word,
    rightmost_zero_position,
    sketch_shuffles,
    symmetric_word,
    tail_shuffles,
    to_dyck_path,
    validate_annotated_sketch,
    validate_symmetric_sketch,
)
