"""Braid counting by geometric norm, via integer diagram coordinates.

The package decides which integer tuples encode braids, counts them
exhaustively per norm, and cross-validates the counts against the exact
closed forms available on 2 and 3 strands.
"""

__version__ = "0.1.0"

from .analysis import (
    BoundReport,
    RatioPoint,
    bounds_table,
    lower_bound,
    ratio_series,
    upper_bound,
    witness_a_for_s,
)
from .census import (
    CacheConflictError,
    CensusCache,
    CensusRecord,
    count_actual,
    count_for_s_vector,
    count_table,
)
from .closedform import (
    SeriesTable,
    TotientTable,
    f_half_totient,
    g2,
    g3_totient,
    g3_via_c,
    g3_via_gamma,
    series,
    totient_sieve,
)
from .coords import (
    CoordinateError,
    SVector,
    VirtualCoordinates,
    enumerate_a_tuples,
    enumerate_s_vectors,
    norm,
    parse_coords,
    sym_c,
    sym_h,
    sym_v,
    validate,
)
from .diagram import (
    Arc,
    ArcGraph,
    Partition,
    build_arc_graph,
    component_count,
    is_actual,
    tightness_check,
)
from .perms import (
    B3Regime,
    Translation,
    TranslatedCut,
    apply,
    b3_actual,
    c_pair,
    is_cyclic_translated_cut,
    is_cyclic_translation,
    orbit_count,
    theta,
    theta_is_cyclic,
)
from .render import RenderError, render_svg, write_svg

__all__ = [name for name in dir() if not name.startswith("_")]
