"""Berge cycles in uniform hypergraphs.

Exact search oracles for cycle-spectrum questions, a constructive extraction
engine for dense hamiltonian frames, and generators for the standard
sharpness constructions.  Vertices are ``0..n-1`` with ``n <= 64``; edges are
bitmask sets.
"""

from .constructions import (
    BadParameters,
    construction1,
    construction2,
    construction3,
    construction4,
    tight_cycle,
)
from .constructive import (
    BRANCHES,
    CompatGraph,
    ExtractionFailed,
    ExtractionTrace,
    HypothesesNotMet,
    MatchingFailed,
    NotAChord,
    NotSsc,
    OutOfRange,
    PreconditionViolated,
    SscDecomposition,
    TraceRecord,
    build_compat_graph,
    check_hypotheses,
    chord_to_cycle,
    extract_all,
    extract_length,
    find_k_chord,
    is_k_ssc,
    lift_graph_cycle,
    match_pairs_to_edges,
    shift_lemma_extract,
    shift_map,
    shift_set,
    ssc_decompose,
)
from .core import (
    BadUniformity,
    BergeError,
    BipartiteIncidence,
    DuplicateEdge,
    FormatError,
    Hypergraph,
    MAX_VERTICES,
    NonUniformEdge,
    SameVertex,
    SimpleGraph,
    VertexOutOfRange,
    codegree,
    degree,
    degree_threshold,
    from_text,
    incidence_graph,
    make_hypergraph,
    min_degree,
    shadow2,
    to_text,
)
from .oracle import (
    BergeCycle,
    BudgetExceeded,
    HamiltonianFrame,
    InvalidFrame,
    LengthOutOfRange,
    SpectrumReport,
    find_berge_cycle,
    find_hamiltonian_frame,
    graph_cycle_of_length,
    make_frame,
    parse_witness,
    spectrum,
    validate_berge_cycle,
    witness_str,
)

__all__ = [name for name in dir() if not name.startswith("_")]
