"""End-to-end acceptance gate.

Eight checks, each printing one PASS/FAIL line with its runtime:

1. Betweenness equals exhaustive geodesic enumeration on 500 small graphs.
2. Closeness vitality equals delete-and-recompute on 100 graphs, exactly.
3. Population estimates reproduce their input flows on graphs up to 200
   stations (relative error <= 1e-8, under 60 s).
4. The iterative population solve matches a dense pseudo-inverse
   (relative error <= 1e-8, under 10 s).
5. The bundled flow table reproduces the ten surveyed stations exactly
   and its zone buckets sum to the total row.
6. The bundled top-five outflow and inflow tables match the published
   ranking, in order.
7. The bundled betweenness top five covers the expected interchanges.
8. Modelled flux conserves passengers on every component across 1000
   random cases (|component sum| <= 1e-12 * ||phi||, under 5 s).
"""

import time

import numpy as np
import pytest

from metro_graph import (
    aggregate_by_zone,
    betweenness_all,
    closeness_vitality_all,
    estimate_population,
    forward_flux,
    top_flows,
)
from oracles import (
    brute_betweenness,
    dense_population_oracle,
    random_connected_net,
    random_net,
    vitality_oracle,
)

REAL_COUNTS = {
    "Bank": (17577, 69972),
    "Canary Wharf": (8850, 56256),
    "Oxford Circus": (3005, 44891),
    "Green Park": (2370, 30620),
    "Holborn": (1599, 25294),
    "Finsbury Park": (20773, 8070),
    "Canada Water": (31815, 14862),
    "Brixton": (24750, 4369),
    "Stratford": (43473, 22360),
    "Waterloo": (61129, 22861),
}


def _verdict(capsys, name: str, ok: bool, started: float, detail: str) -> None:
    elapsed = time.perf_counter() - started
    line = f"{'PASS' if ok else 'FAIL'}  {name}  ({elapsed:.2f}s)  {detail}"
    with capsys.disabled():
        print(line, flush=True)


def test_betweenness_matches_exhaustive_enumeration(capsys):
    started = time.perf_counter()
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(500):
        net = random_net(rng, 2, 7)
        err = float(np.abs(betweenness_all(net).values - brute_betweenness(net)).max())
        worst = max(worst, err)
    elapsed = time.perf_counter() - started
    ok = worst <= 1e-9 and elapsed < 30.0
    _verdict(
        capsys,
        "betweenness vs exhaustive enumeration (500 graphs, <=7 stations)",
        ok,
        started,
        f"worst abs error {worst:.2e}",
    )
    assert worst <= 1e-9
    assert elapsed < 30.0


def test_vitality_matches_delete_and_recompute(capsys):
    started = time.perf_counter()
    rng = np.random.default_rng(202)
    mismatches = 0
    for _ in range(100):
        net = random_net(rng, 2, 30)
        vals, disc, lost = vitality_oracle(net)
        rep = closeness_vitality_all(net)
        same = (
            np.array_equal(rep.disconnects, disc)
            and np.array_equal(rep.pairs_lost, lost)
            and np.array_equal(rep.values[~disc], vals[~disc])
        )
        mismatches += 0 if same else 1
    elapsed = time.perf_counter() - started
    ok = mismatches == 0 and elapsed < 30.0
    _verdict(
        capsys,
        "closeness vitality vs delete-and-recompute (100 graphs, <=30 stations)",
        ok,
        started,
        f"{mismatches} mismatched graphs",
    )
    assert mismatches == 0
    assert elapsed < 30.0


def test_population_round_trip_reproduces_flows(capsys):
    started = time.perf_counter()
    rng = np.random.default_rng(303)
    worst = 0.0
    for _ in range(50):
        net = random_connected_net(rng, 2, 200)
        phi = rng.normal(0.0, 1000.0, net.n)
        k = float(rng.uniform(0.5, 2.0))
        q = forward_flux(net, phi, k=k).q
        est = estimate_population(net, q, k=k)
        back = forward_flux(net, est.phi, k=k).q
        rel = float(np.linalg.norm(back - q) / max(np.linalg.norm(q), 1e-300))
        worst = max(worst, rel)
    elapsed = time.perf_counter() - started
    ok = worst <= 1e-8 and elapsed < 60.0
    _verdict(
        capsys,
        "population estimate reproduces measured flows (50 graphs, <=200 stations)",
        ok,
        started,
        f"worst relative error {worst:.2e}",
    )
    assert worst <= 1e-8
    assert elapsed < 60.0


def test_iterative_solve_matches_dense_pseudo_inverse(capsys):
    started = time.perf_counter()
    rng = np.random.default_rng(404)
    worst = 0.0
    for _ in range(20):
        net = random_net(rng, 2, 50)
        q = rng.normal(0.0, 500.0, net.n)
        est = estimate_population(net, q)
        phi_ref, raw_ref = dense_population_oracle(net, q)
        scale = max(1.0, float(np.abs(phi_ref).max()))
        err = max(
            float(np.abs(est.phi - phi_ref).max()),
            float(np.abs(est.raw_phi - raw_ref).max()),
        ) / scale
        worst = max(worst, err)
    elapsed = time.perf_counter() - started
    ok = worst <= 1e-8 and elapsed < 10.0
    _verdict(
        capsys,
        "iterative population solve vs dense pseudo-inverse (20 graphs, <=50 stations)",
        ok,
        started,
        f"worst relative error {worst:.2e}",
    )
    assert worst <= 1e-8
    assert elapsed < 10.0


def test_bundled_survey_counts_and_zone_totals(capsys, zones123):
    started = time.perf_counter()
    by_name = {r.station: r for r in zones123.flows}
    exact = all(
        (by_name[name].entries, by_name[name].exits) == counts
        for name, counts in REAL_COUNTS.items()
    )
    rows = aggregate_by_zone(zones123.network, zones123.flows)
    total = rows[-1]
    sums_consistent = (
        total.zone == "Total"
        and sum(r.entries for r in rows[:-1]) == total.entries
        and sum(r.exits for r in rows[:-1]) == total.exits
        and total.entries == sum(r.entries for r in zones123.flows)
        and total.exits == sum(r.exits for r in zones123.flows)
    )
    ok = exact and sums_consistent
    _verdict(
        capsys,
        "bundled survey counts exact and zone buckets sum to total",
        ok,
        started,
        f"10/10 surveyed stations exact: {exact}; buckets sum to total: {sums_consistent}",
    )
    assert exact
    assert sums_consistent


def test_bundled_top_five_flow_tables(capsys, zones123):
    started = time.perf_counter()
    outflow, inflow = top_flows(zones123.network, zones123.flows, 5)
    got_out = [name for _, name, _, _, _ in outflow]
    got_in = [name for _, name, _, _, _ in inflow]
    want_out = ["Bank", "Canary Wharf", "Oxford Circus", "Green Park", "Holborn"]
    want_in = ["Waterloo", "Stratford", "Brixton", "Canada Water", "Finsbury Park"]
    ok = got_out == want_out and got_in == want_in
    _verdict(
        capsys,
        "bundled top-five outflow and inflow tables in published order",
        ok,
        started,
        f"outflow {got_out == want_out}, inflow {got_in == want_in}",
    )
    assert got_out == want_out
    assert got_in == want_in


def test_bundled_betweenness_covers_major_interchanges(capsys, zones123):
    started = time.perf_counter()
    expected = {"Green Park", "Earl's Court", "Waterloo", "Baker Street", "Westminster"}
    top = {
        zones123.network.name_of(v)
        for v, _ in betweenness_all(zones123.network).top(5)
    }
    overlap = len(top & expected)
    ok = overlap >= 3
    _verdict(
        capsys,
        "bundled betweenness top five covers the major interchanges",
        ok,
        started,
        f"overlap {overlap}/5",
    )
    assert overlap >= 3


def test_flux_conservation_across_random_cases(capsys):
    started = time.perf_counter()
    rng = np.random.default_rng(808)
    worst_ratio = 0.0
    failures = 0
    for _ in range(1000):
        net = random_net(rng, 1, 50)
        scale = 10.0 ** rng.uniform(-2, 6)
        phi = rng.normal(0.0, scale, net.n)
        k = float(rng.uniform(0.5, 2.0))
        sums = forward_flux(net, phi, k=k).component_sums
        norm = float(np.linalg.norm(phi))
        bound = 1e-12 * norm
        largest = float(np.abs(sums).max()) if sums.size else 0.0
        if norm == 0.0:
            failures += 0 if largest == 0.0 else 1
        else:
            worst_ratio = max(worst_ratio, largest / norm)
            failures += 0 if largest <= bound else 1
    elapsed = time.perf_counter() - started
    ok = failures == 0 and elapsed < 5.0
    _verdict(
        capsys,
        "flux conserves passengers per component (1000 cases)",
        ok,
        started,
        f"worst |sum|/||phi|| {worst_ratio:.2e}, {failures} violations",
    )
    assert failures == 0
    assert elapsed < 5.0
