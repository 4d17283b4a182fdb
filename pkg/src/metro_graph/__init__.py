"""Transit-network graph analysis.

Builds immutable station graphs, ranks stations by betweenness
centrality and closeness vitality, and links net passenger flows to the
surrounding resident population through a steady-state diffusion model
on the graph Laplacian.
"""

from .centrality import (
    BetweennessCentrality,
    BetweennessReport,
    ClosenessVitality,
    VitalityReport,
    WienerIndex,
    betweenness_all,
    closeness_vitality_all,
    pair_dependency,
    shortest_path_counts,
    wiener_index,
)
from .datasets import Zones123, load_zones123, zones123_bytes
from .diffusion import (
    FlowSignal,
    PopulationEstimate,
    PopulationEstimator,
    estimate_population,
    forward_flux,
    round_trip_residual,
)
from .errors import (
    DimensionMismatchError,
    DuplicateRecordError,
    DuplicateStationError,
    MalformedRowError,
    MetroGraphError,
    MissingStationError,
    OutOfRangeError,
    SelfLoopError,
    SolverDivergenceError,
    UnknownStationError,
)
from .export import ExportResult, export_signal
from .ingest import (
    FlowRecord,
    net_flow,
    parse_edges,
    parse_flows,
    parse_stations,
    serialize_edges,
    serialize_flows,
    serialize_stations,
)
from .network import Network, StationId, StationMeta, build_network
from .report import (
    ClosureImpact,
    ZoneAggregate,
    aggregate_by_zone,
    closure_impact,
    top_flows,
)

__version__ = "0.1.0"

__all__ = [
    "BetweennessCentrality",
    "BetweennessReport",
    "ClosenessVitality",
    "ClosureImpact",
    "DimensionMismatchError",
    "DuplicateRecordError",
    "DuplicateStationError",
    "ExportResult",
    "FlowRecord",
    "FlowSignal",
    "MalformedRowError",
    "MetroGraphError",
    "MissingStationError",
    "Network",
    "OutOfRangeError",
    "PopulationEstimate",
    "PopulationEstimator",
    "SelfLoopError",
    "SolverDivergenceError",
    "StationId",
    "StationMeta",
    "UnknownStationError",
    "VitalityReport",
    "WienerIndex",
    "ZoneAggregate",
    "Zones123",
    "aggregate_by_zone",
    "betweenness_all",
    "build_network",
    "closeness_vitality_all",
    "closure_impact",
    "estimate_population",
    "export_signal",
    "forward_flux",
    "load_zones123",
    "net_flow",
    "pair_dependency",
    "parse_edges",
    "parse_flows",
    "parse_stations",
    "round_trip_residual",
    "serialize_edges",
    "serialize_flows",
    "serialize_stations",
    "shortest_path_counts",
    "top_flows",
    "wiener_index",
    "zones123_bytes",
]
