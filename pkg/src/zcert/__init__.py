"""Exact degree-based graph indices, bound certification, and
Hamiltonicity sufficient-condition checking over graph6 corpora."""

from .graphs import Graph, Graph6Error, GraphError, from_edge_list, parse_graph6, to_graph6
from .invariants import (
    InvariantProfile,
    IsolatedVertexError,
    first_zagreb,
    forgotten_index,
    inverse_degree,
    min_max_degree,
    profile,
    radon_chain,
)
from .structure import (
    BipartitionCertificate,
    IndependenceCertificate,
    InstanceTooLargeError,
    NotBalancedBipartiteError,
    bipartition,
    chvatal_erdos_hamiltonian,
    chvatal_erdos_traceable,
    has_hamiltonian_cycle,
    has_hamiltonian_path,
    independence_number,
    is_regular_balanced_bipartite,
    moon_moser_condition,
    proof_edge_inequality,
    vertex_connectivity,
)
from .bounds import (
    BoundInputs,
    BoundReport,
    ConditionVerdict,
    Verdict,
    equality_classifier,
    eval_bounds,
    theorem1_report,
    theorem2_condition,
    theorem3_condition,
)
from .harness import (
    CampaignResult,
    CorpusSource,
    EnumerationSource,
    emit_report,
    enumerate_labeled_graphs,
    run_theorem1_campaign,
    run_theorem23_campaign,
    scan_graph6,
)

__all__ = [name for name in dir() if not name.startswith("_")]
