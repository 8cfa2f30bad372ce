"""Necessary conditions for positive Littlewood-Richardson coefficients from
lower and upper derivations of skew shapes, with an exact LR-tableau
enumerator to check them against."""

from .ballot import BallotSequence, NoTilingError, Tiling, canonical_tiling, verify_tiling
from .bumping import BumpError, TiledTableau, bump_cell, bump_row, iterated_bump
from .derivations import (
    delete_rows,
    left_top_standardization,
    lower_derivation,
    top_left_standardization,
    truncate_columns,
    upper_derivation,
)
from .feasibility import Bound, FilterConfig, FilterReport, Verdict, Witness, filter_triple
from .oracle import (
    enumerate_lr_tableaux,
    lr_coefficient,
    maximal_content_tableau,
    minimal_content_tableau,
)
from .partitions import (
    CellRegion,
    ContainmentError,
    Partition,
    SkewShape,
    contains,
    dom_le,
    gdom_le,
    parse_partition,
    region_of,
    skew,
    transpose,
)
from .tableaux import SkewTableau, content, is_lattice, is_lr, is_semistandard, reverse_reading_word

__version__ = "0.1.0"
