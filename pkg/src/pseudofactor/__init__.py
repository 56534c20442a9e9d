"""Pseudo [2,b]-factors at desk scale.

Exact minimization of edge/vertex components over all pseudo [2,b]-factors,
a proof-style exchange heuristic, bound-tight instance families, and a
verification harness for the ceiling max(0, alpha - floor(b*(delta-1)/2)).
"""

from .errors import CapacityError, FactorError, GraphParseError, ManifestError, ParseError
from .factor import (
    ComponentClass,
    FactorComponent,
    FactorSummary,
    PseudoFactor,
    factor_to_json_dict,
    factor_to_text,
    has_deg_range_spanning,
    is_2b_subgraph,
    spanning_in_range,
    validate_pseudo_factor,
)
from .generators import (
    FamilySpec,
    complete_graph,
    cycle_graph,
    gnp,
    join_sharpness,
    parse_manifest,
    path_graph,
    pendant_sharpness,
)
from .graph import (
    Graph,
    connected_components,
    endpoint_cycle,
    independence_number,
    load_dimacs,
    load_edge_list,
    load_graph_text,
    longest_path,
    maximum_independent_set,
    min_degree,
    read_graph_file,
    to_edge_list,
)
from .harness import (
    BoundReport,
    CorpusRun,
    run_corpus,
    theorem_bound,
    verify_instance,
    write_csv,
    write_jsonl,
)
from .heuristic import (
    ExchangeMove,
    HeuristicResult,
    SearchState,
    enumerate_moves,
    improve,
    initial_subgraph,
    posa_cover,
    solve,
)
from .oracle import OracleResult, min_small_components_exact, min_small_components_naive

__version__ = "0.1.0"
