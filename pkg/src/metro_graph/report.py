"""Aggregations and what-if reports surfaced by the CLI.

Zone aggregation mirrors fare-zone reporting: zones 1-3 get their own
rows and zones 4-10 collapse into one bucket.  Closure impact re-runs
the structural metrics on the network with one station deleted and
reports the deltas.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .centrality import betweenness_all, pair_dependency, wiener_index
from .diffusion import estimate_population
from .ingest import FlowRecord, net_flow
from .network import Network, StationId

ZONE_BUCKETS = ("1", "2", "3", "4-10")


@dataclass(frozen=True)
class ZoneAggregate:
    """Entry/exit/net-outflow totals for one fare-zone bucket."""

    zone: str
    entries: int
    exits: int

    @property
    def net_outflow(self) -> int:
        return self.exits - self.entries


def _bucket(zone: int) -> str:
    return str(zone) if zone <= 3 else "4-10"


def aggregate_by_zone(net: Network, records: list[FlowRecord]) -> list[ZoneAggregate]:
    """Sum flows into the four zone buckets plus a trailing Total row.

    All arithmetic is exact integer arithmetic; the Total row equals the
    column-wise sums of the bucket rows by construction.
    """
    entries = dict.fromkeys(ZONE_BUCKETS, 0)
    exits = dict.fromkeys(ZONE_BUCKETS, 0)
    for rec in records:
        zone = net.meta[net.id_of(rec.station)].zone
        entries[_bucket(zone)] += rec.entries
        exits[_bucket(zone)] += rec.exits
    rows = [ZoneAggregate(z, entries[z], exits[z]) for z in ZONE_BUCKETS]
    rows.append(ZoneAggregate("Total", sum(entries.values()), sum(exits.values())))
    return rows


@dataclass(frozen=True)
class ClosureImpact:
    """Structural impact of closing one station.

    ``delta_wiener`` is the change in the reachable-pair distance sum,
    ``pairs_lost`` the surviving-station pairs made unreachable, and
    ``betweenness_shift`` the ten surviving stations whose betweenness
    moves most (versus a baseline that discounts pairs involving the
    closed station, so an untouched path structure shows as zero shift).
    """

    closed: StationId
    closed_name: str
    delta_wiener: int
    pairs_lost: int
    betweenness_shift: list[tuple[StationId, str, float]]
    max_population_shift: float | None = None


def closure_impact(
    net: Network,
    station: str | StationId,
    records: list[FlowRecord] | None = None,
    k: float = 1.0,
) -> ClosureImpact:
    """What-if report for closing ``station``.

    When flow records are given, the population model is re-estimated on
    the reduced network and the largest per-station change is included.
    """
    v = net.id_of(station) if isinstance(station, str) else station
    net._check_vertex(v)
    sub = net.delete_vertex(v)

    w_before, unreachable_before = wiener_index(net)
    w_after, unreachable_after = wiener_index(sub)
    pairs_before = net.n * (net.n - 1) // 2 - unreachable_before
    # pairs involving v are reachable iff v is not isolated; don't count them
    reachable_with_v = int(np.sum(net.component_labels == net.component_labels[v])) - 1
    pairs_before_survivors = pairs_before - reachable_with_v
    pairs_after = sub.n * (sub.n - 1) // 2 - unreachable_after

    baseline = betweenness_all(net).values - pair_dependency(net, v)
    after = betweenness_all(sub).values
    parent = {pid: i for i, pid in enumerate(sub.parent_ids)}
    shifts = []
    for u in range(net.n):
        if u == v:
            continue
        delta = after[parent[net.parent_ids[u]]] - baseline[u]
        shifts.append((u, net.name_of(u), float(delta)))
    shifts.sort(key=lambda t: (-abs(t[2]), t[0]))

    max_shift = None
    if records is not None:
        phi_before = estimate_population(net, net_flow(records, net), k=k).phi
        surviving = [rec for rec in records if net.id_of(rec.station) != v]
        phi_after = estimate_population(sub, net_flow(surviving, sub), k=k).phi
        diffs = [
            abs(phi_after[parent[net.parent_ids[u]]] - phi_before[u])
            for u in range(net.n)
            if u != v
        ]
        max_shift = float(max(diffs)) if diffs else 0.0

    return ClosureImpact(
        closed=v,
        closed_name=net.name_of(v),
        delta_wiener=int(w_after - w_before),
        pairs_lost=pairs_before_survivors - pairs_after,
        betweenness_shift=shifts[:10],
        max_population_shift=max_shift,
    )


def top_flows(net: Network, records: list[FlowRecord], top: int):
    """The ``top`` largest net outflows and net inflows, as
    (id, name, entries, exits, net) tuples sorted outflow-first."""
    by_id = {net.id_of(r.station): r for r in records}
    rows = [
        (v, net.name_of(v), r.entries, r.exits, r.exits - r.entries)
        for v, r in by_id.items()
    ]
    outflow = sorted(rows, key=lambda t: (-t[4], t[0]))[:top]
    inflow = sorted(rows, key=lambda t: (t[4], t[0]))[:top]
    return outflow, inflow
