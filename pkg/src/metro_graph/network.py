"""Immutable undirected station graph with adjacency and Laplacian views.

A :class:`Network` is built once from an edge list and per-station
metadata and never mutated afterwards; every analysis in this package is
a pure function of one.  Vertices are dense integer station ids assigned
in first-appearance order of the metadata, so all derived reports index
the same way.
"""

from __future__ import annotations

import unicodedata
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import OutOfRangeError, SelfLoopError, UnknownStationError

StationId = int


def canonical_name(name: str) -> str:
    """Trim and NFC-normalize a station name for exact matching."""
    return unicodedata.normalize("NFC", name.strip())


@dataclass(frozen=True)
class StationMeta:
    """Display metadata for one station.

    Parameters
    ----------
    name : str
        Display name, unique within a network.
    zone : int
        Fare zone (1 = centre).  Stations straddling a zone boundary
        carry their lowest published zone.
    coord : tuple of float, optional
        (latitude, longitude) in degrees, used only by exports.
    """

    name: str
    zone: int
    coord: tuple[float, float] | None = None


@dataclass(frozen=True)
class Network:
    """Undirected, unweighted station graph.

    Instances are immutable: matrix views are cached lazily and safe to
    read from any number of threads.  ``parent_ids`` maps each vertex
    back to its station id in the network this one was derived from by
    :meth:`delete_vertex` (identity for freshly built networks).
    """

    n: int
    edges: tuple[tuple[StationId, StationId], ...]
    meta: tuple[StationMeta, ...]
    parent_ids: tuple[StationId, ...] = field(default=())

    def __post_init__(self):
        if not self.parent_ids:
            object.__setattr__(self, "parent_ids", tuple(range(self.n)))

    # -- lookups -------------------------------------------------------

    @cached_property
    def _name_to_id(self) -> dict[str, StationId]:
        return {m.name: i for i, m in enumerate(self.meta)}

    def id_of(self, name: str) -> StationId:
        """Resolve a station name (exact after trim/NFC) to its id."""
        try:
            return self._name_to_id[canonical_name(name)]
        except KeyError:
            raise UnknownStationError(f"unknown station: {name!r}") from None

    def name_of(self, v: StationId) -> str:
        self._check_vertex(v)
        return self.meta[v].name

    def _check_vertex(self, v: StationId) -> None:
        if not 0 <= v < self.n:
            raise OutOfRangeError(f"vertex {v} outside [0, {self.n})")

    # -- structural views ----------------------------------------------

    @cached_property
    def neighbors(self) -> tuple[tuple[StationId, ...], ...]:
        """Per-vertex neighbor lists, each sorted ascending."""
        adj: list[list[StationId]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> np.ndarray:
        """Integer vertex degrees."""
        deg = np.zeros(self.n, dtype=np.int64)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def adjacency(self) -> np.ndarray:
        """Dense symmetric binary adjacency matrix with zero diagonal."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.edges:
            a[i, j] = 1
            a[j, i] = 1
        return a

    def laplacian(self) -> np.ndarray:
        """Dense Laplacian ``D - A`` as float64 (rows sum to zero)."""
        lap = np.diag(self.degrees.astype(np.float64))
        for i, j in self.edges:
            lap[i, j] = -1.0
            lap[j, i] = -1.0
        return lap

    # -- connectivity ----------------------------------------------------

    @cached_property
    def component_labels(self) -> np.ndarray:
        """Component label per vertex; the component holding the lowest
        station id gets label 0, and labels ascend from there."""
        labels = np.full(self.n, -1, dtype=np.int64)
        current = 0
        for start in range(self.n):
            if labels[start] >= 0:
                continue
            labels[start] = current
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self.neighbors[u]:
                    if labels[w] < 0:
                        labels[w] = current
                        queue.append(w)
            current += 1
        return labels

    def connected_components(self) -> np.ndarray:
        """Deterministic component labelling (see :attr:`component_labels`)."""
        return self.component_labels

    @property
    def n_components(self) -> int:
        if self.n == 0:
            return 0
        return int(self.component_labels.max()) + 1

    # -- derivation ------------------------------------------------------

    def delete_vertex(self, v: StationId) -> "Network":
        """Return a new network with ``v`` and its incident edges removed.

        Surviving vertices are re-indexed densely; the result's
        ``parent_ids`` maps each new index back to the station id it had
        in this network's own parent frame.
        """
        self._check_vertex(v)
        keep = [u for u in range(self.n) if u != v]
        remap = {u: i for i, u in enumerate(keep)}
        new_edges = tuple(
            (remap[i], remap[j]) for i, j in self.edges if v not in (i, j)
        )
        return Network(
            n=self.n - 1,
            edges=new_edges,
            meta=tuple(self.meta[u] for u in keep),
            parent_ids=tuple(self.parent_ids[u] for u in keep),
        )


def build_network(
    edge_list: Iterable[tuple[str, str]],
    meta: Sequence[StationMeta],
) -> Network:
    """Assemble a :class:`Network` from named edges and station metadata.

    Station ids are assigned in the order ``meta`` lists them.  Reversed
    and repeated edge entries collapse to a single undirected edge;
    self-loops are rejected.

    Raises
    ------
    UnknownStationError
        If an edge references a name absent from ``meta``.
    SelfLoopError
        If an edge joins a station to itself.
    ValueError
        If ``edge_list`` is empty or ``meta`` holds duplicate names.
    """
    metas = tuple(
        StationMeta(canonical_name(m.name), m.zone, m.coord) for m in meta
    )
    ids: dict[str, StationId] = {}
    for m in metas:
        if m.name in ids:
            raise ValueError(f"duplicate station in metadata: {m.name!r}")
        ids[m.name] = len(ids)

    edges: set[tuple[StationId, StationId]] = set()
    seen_any = False
    for name_a, name_b in edge_list:
        seen_any = True
        a, b = canonical_name(name_a), canonical_name(name_b)
        for name in (a, b):
            if name not in ids:
                raise UnknownStationError(f"unknown station: {name!r}")
        if a == b:
            raise SelfLoopError(f"self-loop at station {a!r}")
        i, j = ids[a], ids[b]
        edges.add((min(i, j), max(i, j)))
    if not seen_any:
        raise ValueError("edge list is empty")

    return Network(n=len(metas), edges=tuple(sorted(edges)), meta=metas)
