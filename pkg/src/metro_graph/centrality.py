"""Vulnerability metrics: betweenness centrality and closeness vitality.

Betweenness is computed exactly with Brandes-style dependency
accumulation; path counts are kept as exact (arbitrary-precision) Python
integers so no count can overflow, and per-source contributions are
accumulated in ascending source order so results are bitwise
reproducible run to run.

Closeness vitality measures how much the sum of pairwise distances grows
when one station is removed.  Stations whose removal disconnects the
remaining graph are flagged instead of valued and always rank above
every finite entry.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .network import Network, StationId
from .validation import check_network


@dataclass(frozen=True)
class BetweennessReport:
    """Per-station betweenness values (raw, unnormalized)."""

    values: np.ndarray

    def top(self, k: int) -> list[tuple[StationId, float]]:
        """Top-k stations by value, ties broken by ascending station id."""
        order = sorted(range(len(self.values)), key=lambda i: (-self.values[i], i))
        return [(i, float(self.values[i])) for i in order[:k]]


@dataclass(frozen=True)
class VitalityReport:
    """Closeness vitality per station.

    ``values[v]`` is the finite change in the reachable-pair distance sum
    caused by removing ``v``, or NaN when ``disconnects[v]`` is set.
    ``pairs_lost[v]`` counts surviving-vertex pairs made unreachable.
    """

    values: np.ndarray
    disconnects: np.ndarray
    pairs_lost: np.ndarray

    def ranking(self) -> list[StationId]:
        """Station ids, most vital first.

        Disconnecting stations come before every finite value, ordered by
        pairs lost (descending); finite values follow in descending
        order.  Ties break by ascending station id.
        """
        flagged = [v for v in range(len(self.values)) if self.disconnects[v]]
        flagged.sort(key=lambda v: (-self.pairs_lost[v], v))
        finite = [v for v in range(len(self.values)) if not self.disconnects[v]]
        finite.sort(key=lambda v: (-self.values[v], v))
        return flagged + finite

    def top(self, k: int) -> list[StationId]:
        return self.ranking()[:k]


class WienerIndex(NamedTuple):
    """Sum of distances over reachable unordered pairs, plus the count of
    unreachable pairs."""

    total: int
    unreachable_pairs: int


def _bfs_counts(net: Network, source: StationId):
    """BFS yielding visit order, hop distances, exact path counts and
    predecessor lists.  Unreachable vertices keep distance -1."""
    n = net.n
    dist = [-1] * n
    sigma = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    dist[source] = 0
    sigma[source] = 1
    order: list[int] = []
    queue = deque([source])
    while queue:
        u = queue.popleft()
        order.append(u)
        du = dist[u]
        su = sigma[u]
        for w in net.neighbors[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
            if dist[w] == du + 1:
                sigma[w] += su
                preds[w].append(u)
    return order, dist, sigma, preds


def shortest_path_counts(net: Network, source: StationId):
    """Hop distances and shortest-path counts from one station.

    Returns
    -------
    dist : ndarray of float64
        ``dist[v]`` is the hop count from ``source`` to ``v``, or
        ``inf`` when ``v`` is unreachable.
    sigma : list of int
        Exact number of distinct shortest paths from ``source`` to each
        vertex (0 when unreachable, 1 for the source itself).
    """
    net._check_vertex(source)
    _, dist, sigma, _ = _bfs_counts(net, source)
    out = np.array([d if d >= 0 else np.inf for d in dist], dtype=np.float64)
    return out, sigma


def _dependency(net: Network, source: StationId) -> np.ndarray:
    """Brandes dependency of one source on every vertex: the sum over
    targets t of sigma(source,t|v) / sigma(source,t)."""
    order, _, sigma, preds = _bfs_counts(net, source)
    delta = np.zeros(net.n, dtype=np.float64)
    for w in reversed(order):
        coeff = (1.0 + delta[w]) / sigma[w]
        for u in preds[w]:
            delta[u] += sigma[u] * coeff
    delta[source] = 0.0
    return delta


def pair_dependency(net: Network, source: StationId) -> np.ndarray:
    """Betweenness contribution of all unordered pairs involving ``source``.

    Subtracting this from :func:`betweenness_all` values yields each
    vertex's betweenness over pairs that avoid ``source`` entirely, which
    is the baseline used by closure-impact reports.
    """
    net._check_vertex(source)
    return _dependency(net, source)


def betweenness_all(net: Network) -> BetweennessReport:
    """Exact betweenness centrality of every station.

    For each station n, sums sigma(k,m|n) / sigma(k,m) over unordered
    pairs {k, m} with n not an endpoint; pairs with no connecting path
    contribute nothing and no normalization is applied.
    """
    check_network(net)
    values = np.zeros(net.n, dtype=np.float64)
    for source in range(net.n):  # ascending order: reproducible accumulation
        values += _dependency(net, source)
    values *= 0.5  # ordered-pair accumulation counts each unordered pair twice
    return BetweennessReport(values=values)


def wiener_index(net: Network) -> WienerIndex:
    """Sum of hop distances over unordered reachable station pairs."""
    check_network(net)
    total = 0
    reachable_ordered = 0
    for source in range(net.n):
        _, dist, _, _ = _bfs_counts(net, source)
        for d in dist:
            if d > 0:
                total += d
                reachable_ordered += 1
    all_pairs = net.n * (net.n - 1) // 2
    return WienerIndex(total // 2, all_pairs - reachable_ordered // 2)


def _reachable_pairs(labels: np.ndarray, skip: StationId | None = None) -> int:
    """Unordered reachable pairs implied by component labels, optionally
    ignoring one vertex."""
    counts: dict[int, int] = {}
    for v, lab in enumerate(labels):
        if v != skip:
            counts[int(lab)] = counts.get(int(lab), 0) + 1
    return sum(c * (c - 1) // 2 for c in counts.values())


def closeness_vitality_all(net: Network) -> VitalityReport:
    """Closeness vitality of every station.

    Removing station v either leaves the survivors' connectivity intact,
    in which case the value is the (integer) drop in the reachable-pair
    distance sum, or it splits them apart, in which case v is flagged and
    ``pairs_lost`` records how many surviving pairs became unreachable.
    """
    check_network(net)
    base_labels = net.component_labels
    base_wiener, _ = wiener_index(net)
    values = np.full(net.n, np.nan, dtype=np.float64)
    disconnects = np.zeros(net.n, dtype=bool)
    pairs_lost = np.zeros(net.n, dtype=np.int64)

    for v in range(net.n):
        sub = net.delete_vertex(v)
        occupied_before = len({int(base_labels[u]) for u in range(net.n) if u != v})
        pairs_before = _reachable_pairs(base_labels, skip=v)
        w_sub, unreachable_sub = wiener_index(sub)
        pairs_after = sub.n * (sub.n - 1) // 2 - unreachable_sub
        lost = pairs_before - pairs_after
        if sub.n_components > occupied_before:
            disconnects[v] = True
            pairs_lost[v] = lost
        else:
            values[v] = float(base_wiener - w_sub)
    return VitalityReport(values=values, disconnects=disconnects, pairs_lost=pairs_lost)


# -- sklearn-style wrappers ----------------------------------------------


class BetweennessCentrality(BaseEstimator):
    """Estimator wrapper around :func:`betweenness_all`.

    Follows scikit-learn conventions (``fit`` / ``get_params`` /
    ``set_params``) so the metric slots into generic tooling.

    Attributes
    ----------
    values_ : ndarray
        Betweenness value per station, set by :meth:`fit`.
    """

    def fit(self, network: Network, y=None):
        self.values_ = betweenness_all(check_network(network)).values
        self.n_stations_ = network.n
        return self

    def fit_transform(self, network: Network, y=None) -> np.ndarray:
        return self.fit(network).values_

    def top(self, k: int) -> list[tuple[StationId, float]]:
        check_is_fitted(self, "values_")
        return BetweennessReport(self.values_).top(k)


class ClosenessVitality(BaseEstimator):
    """Estimator wrapper around :func:`closeness_vitality_all`.

    Attributes
    ----------
    values_ : ndarray
        Finite vitality per station (NaN where flagged).
    disconnects_ : ndarray of bool
        True where removal disconnects the surviving stations.
    pairs_lost_ : ndarray of int
        Surviving pairs made unreachable by each removal.
    """

    def fit(self, network: Network, y=None):
        report = closeness_vitality_all(check_network(network))
        self.values_ = report.values
        self.disconnects_ = report.disconnects
        self.pairs_lost_ = report.pairs_lost
        return self

    def fit_transform(self, network: Network, y=None) -> np.ndarray:
        return self.fit(network).values_

    def ranking(self) -> list[StationId]:
        check_is_fitted(self, "values_")
        return VitalityReport(self.values_, self.disconnects_, self.pairs_lost_).ranking()
