"""rainbowconn: exact rainbow-connection toolkit for small graphs."""

from .graphs import (
    MAX_VERTICES,
    BlockDecomposition,
    CanonicalCode,
    Graph,
    GraphError,
    are_isomorphic,
    block_decomposition,
    bridges,
    build_graph,
    canonical_code,
    diameter,
    distances_from,
    is_bridgeless,
    is_connected,
    is_two_connected,
    join,
    radius,
    relabel,
)
from .recognition import (
    MinorWitness,
    find_k4_minor,
    find_k23_minor,
    hamiltonian_cycles,
    is_mop,
    is_outerplanar,
    outer_cycle,
    validate_witness,
)
from .rainbow import (
    ColoringError,
    EdgeColoring,
    RcResult,
    check_coloring,
    exists_rainbow_coloring,
    formula_rc_cycle,
    formula_rc_fan,
    is_rainbow_connected,
    rainbow_path_exists,
    rc_exact,
    rc_oracle,
)
from .families import (
    MopConstruction,
    attach_vertex_to_adjacent_pair,
    bowtie,
    build_mop,
    complete,
    complete_bipartite,
    cycle,
    fan,
    path,
)
from .enumeration import (
    ChordSet,
    EnumerationStream,
    chords_cross,
    enumerate_bridgeless_outerplanar,
    enumerate_labeled_oracle,
    enumerate_two_connected_outerplanar,
    filter_stream,
)
from .verify import (
    GraphRecord,
    VerificationReport,
    render_report,
    run_verify,
    verify_diam2,
    verify_diam3,
    verify_formulas,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
