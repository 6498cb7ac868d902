"""Three-qubit hypergraph states: construction, entanglement measures and
LU / SLOCC / entangled-graph classification."""

from .hypergraph import (
    Hypergraph, HypergraphParseError, LUClass, edge_sum, enumerate_all,
    format_hypergraph, is_graph, lu_class_of, parse_hypergraph,
)
from .states import (
    apply_hyperedge_gate, boolean_function_of, build_state_boolean,
    build_state_gates, equal_up_to_global_sign,
)
from .linalg import (
    NumericError, jacobi_eigen_sym, reduced_density_one, reduced_density_pair, sqrt_psd,
)
from .measures import (
    Fingerprint, concurrence_one_rest, concurrence_pair, entropic_measure,
    fingerprint, fingerprint_of_state, schmidt_measure, spin_flip, three_tangle,
)
from .classify import (
    AuditReport, SLOCCClass, audit_all, entangled_graph_of,
    slocc_class_from_measures, slocc_class_structural,
)

__version__ = "0.1.0"
