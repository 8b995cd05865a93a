"""Upward planar straight-line embeddings of paths, caterpillars, and trees."""

from .construct import (
    embed_caterpillar,
    embed_caterpillar_monotone,
    embed_path_one_sided,
    embed_three_section,
)
from .digraph import (
    Caterpillar,
    Digraph,
    OrientedPath,
    Section,
    SectionDecomposition,
    caterpillar_decompose,
    enumerate_paths,
    is_tree,
    random_caterpillar,
    random_path,
    random_tree,
    sections,
)
from .enumeration import count_upse, decide_fixed_vertex, enumerate_upse
from .errors import (
    BadShape,
    ConstructionFailed,
    DuplicateY,
    InvalidInstance,
    InvalidPartition,
    NotACaterpillar,
    NotATree,
    NotConvex,
    NotGeneral,
    NotMonotoneBackbone,
    NotOneSided,
    SizeMismatch,
    TooFewPoints,
    UpseError,
)
from .geometry import (
    CLOCKWISE,
    COLLINEAR,
    COUNTERCLOCKWISE,
    Point,
    PointSet,
    convex_hull_indices,
    generate_point_set,
    is_convex_position,
    is_general_position,
    is_one_sided,
    orientation,
    segments_cross,
    sort_by_y,
)
from .reduction import (
    Certificate,
    CertificateCheck,
    ReductionInstance,
    ThreePartitionInstance,
    certificate,
    consistent_embedding,
    reduce_3partition,
    solve_3partition,
)
from .svg import render_svg
from .verify import Embedding, is_planar_drawing, is_upse, is_upward

__version__ = "0.1.0"
