"""Access to the bundled London Underground Zones 1-3 fixture."""

from __future__ import annotations

from importlib import resources
from typing import NamedTuple

from .ingest import FlowRecord, parse_edges, parse_flows, parse_stations
from .network import Network, StationMeta, build_network


class Zones123(NamedTuple):
    network: Network
    stations: list[StationMeta]
    edges: list[tuple[str, str]]
    flows: list[FlowRecord]


def _read(name: str) -> bytes:
    return (resources.files("metro_graph") / "data" / "zones123" / name).read_bytes()


def zones123_bytes() -> dict[str, bytes]:
    """Raw bytes of the bundled fixture files, keyed by filename."""
    return {
        name: _read(name)
        for name in ("stations.csv", "edges.csv", "flows_am_2016.csv")
    }


def load_zones123() -> Zones123:
    """Parse and assemble the bundled Zones 1-3 network and flows."""
    stations = parse_stations(_read("stations.csv"))
    edges = parse_edges(_read("edges.csv"))
    flows = parse_flows(_read("flows_am_2016.csv"))
    return Zones123(build_network(edges, stations), stations, edges, flows)
