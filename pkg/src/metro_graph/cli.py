"""Command-line front end.

    metro-graph centrality --stations F --edges F [--top N] [--format ... --out PATH]
    metro-graph vitality   --stations F --edges F [--top N]
    metro-graph netflow    --stations F --edges F --flows F (--by-zone | --top N)
    metro-graph population --stations F --edges F --flows F [--k X] [--format ... --out PATH]
    metro-graph closure    --stations F --edges F [--flows F] --station NAME
    metro-graph export     --stations F --edges F [--flows F] --signal S --format FMT --out PATH

Exit codes: 0 success, 2 input error, 3 numerical failure.  The
environment variable ``METRO_GRAPH_THREADS`` caps internal (BLAS-level)
parallelism; 0 or unset means automatic.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from .centrality import betweenness_all, closeness_vitality_all
from .diffusion import estimate_population
from .errors import MetroGraphError, SolverDivergenceError
from .export import FORMATS, export_signal
from .ingest import net_flow, parse_edges, parse_flows, parse_stations
from .network import Network, build_network
from .report import aggregate_by_zone, closure_impact, top_flows

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERICAL = 3

SIGNALS = ("betweenness", "vitality", "netflow", "population", "zone", "degree")


def _thousands(x) -> str:
    return f"{x:,}"


def _print_table(headers: list[str], rows: list[tuple], out) -> None:
    cells = [headers] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    for r, row in enumerate(cells):
        line = "  ".join(
            row[i].ljust(widths[i]) if i == 0 else row[i].rjust(widths[i])
            for i in range(len(row))
        )
        print(line.rstrip(), file=out)
        if r == 0:
            print("  ".join("-" * w for w in widths), file=out)


def _load_network(args) -> Network:
    stations = parse_stations(Path(args.stations).read_bytes())
    edges = parse_edges(Path(args.edges).read_bytes())
    return build_network(edges, stations)


def _load_flows(args) -> list:
    return parse_flows(Path(args.flows).read_bytes())


def _write_export(net, signal, args, out) -> None:
    result = export_signal(net, signal, args.format)
    Path(args.out).write_bytes(result.data)
    note = f"wrote {args.format} signal to {args.out}"
    if result.omitted:
        note += f" ({result.omitted} stations without coordinates omitted)"
    print(note, file=out)


def cmd_centrality(args, out) -> int:
    net = _load_network(args)
    report = betweenness_all(net)
    rows = [
        (net.name_of(v), net.meta[v].zone, f"{val:,.2f}")
        for v, val in report.top(args.top)
    ]
    print(f"Top {args.top} stations by betweenness centrality", file=out)
    _print_table(["Station", "Zone", "Betweenness"], rows, out)
    if args.out:
        _write_export(net, report.values, args, out)
    return EXIT_OK


def cmd_vitality(args, out) -> int:
    net = _load_network(args)
    report = closeness_vitality_all(net)
    rows = []
    for v in report.top(args.top):
        if report.disconnects[v]:
            value = f"disconnects ({_thousands(int(report.pairs_lost[v]))} pairs lost)"
        else:
            value = _thousands(int(report.values[v]))
        rows.append((net.name_of(v), net.meta[v].zone, value))
    print(f"Top {args.top} stations by closeness vitality", file=out)
    _print_table(["Station", "Zone", "Vitality"], rows, out)
    return EXIT_OK


def cmd_netflow(args, out) -> int:
    net = _load_network(args)
    records = _load_flows(args)
    net_flow(records, net, period=args.period)  # validates full coverage
    if args.by_zone:
        rows = [
            (agg.zone, _thousands(agg.entries), _thousands(agg.exits), _thousands(agg.net_outflow))
            for agg in aggregate_by_zone(net, records)
        ]
        print("Passenger flows by fare zone", file=out)
        _print_table(["Zone", "Entries", "Exits", "Net outflow"], rows, out)
    else:
        outflow, inflow = top_flows(net, records, args.top)
        print(f"Top {args.top} stations by net outflow", file=out)
        _print_table(
            ["Station", "Entries", "Exits", "Net outflow"],
            [(n, _thousands(en), _thousands(ex), _thousands(q)) for _, n, en, ex, q in outflow],
            out,
        )
        print(file=out)
        print(f"Top {args.top} stations by net inflow", file=out)
        _print_table(
            ["Station", "Entries", "Exits", "Net outflow"],
            [(n, _thousands(en), _thousands(ex), _thousands(q)) for _, n, en, ex, q in inflow],
            out,
        )
    return EXIT_OK


def cmd_population(args, out) -> int:
    net = _load_network(args)
    records = _load_flows(args)
    flow = net_flow(records, net, period=args.period)
    est = estimate_population(net, flow, k=args.k)
    order = sorted(range(net.n), key=lambda v: (-est.phi[v], v))
    if args.top > 0:
        order = order[: args.top]
    rows = [
        (net.name_of(v), net.meta[v].zone, f"{est.phi[v]:,.1f}")
        for v in order
    ]
    print(f"Relative population implied by net flows (k={args.k:g})", file=out)
    _print_table(["Station", "Zone", "Relative population"], rows, out)
    labels = net.component_labels
    for c, mean in enumerate(est.projected_out):
        size = int((labels == c).sum())
        print(
            f"component {c}: projected-out net outflow {mean * size:,.0f} "
            f"({mean:,.1f} per station)",
            file=out,
        )
    print(f"solver relative residual: {est.residual:.3e}", file=out)
    if args.out:
        _write_export(net, est.phi, args, out)
    return EXIT_OK


def cmd_closure(args, out) -> int:
    net = _load_network(args)
    records = _load_flows(args) if args.flows else None
    impact = closure_impact(net, args.station, records, k=args.k)
    print(f"Impact of closing {impact.closed_name}", file=out)
    print(f"  distance-sum change: {_thousands(impact.delta_wiener)}", file=out)
    print(f"  station pairs disconnected: {_thousands(impact.pairs_lost)}", file=out)
    if impact.max_population_shift is not None:
        print(
            f"  largest population-estimate shift: {impact.max_population_shift:,.1f}",
            file=out,
        )
    print("  largest betweenness shifts:", file=out)
    _print_table(
        ["Station", "Delta betweenness"],
        [(name, f"{delta:+,.2f}") for _, name, delta in impact.betweenness_shift],
        out,
    )
    return EXIT_OK


def cmd_export(args, out) -> int:
    net = _load_network(args)
    if args.signal in ("netflow", "population"):
        if not args.flows:
            raise MetroGraphError(f"--signal {args.signal} requires --flows")
        flow = net_flow(_load_flows(args), net, period=args.period)
        signal = flow.q if args.signal == "netflow" else estimate_population(net, flow, k=args.k).phi
    elif args.signal == "betweenness":
        signal = betweenness_all(net).values
    elif args.signal == "vitality":
        report = closeness_vitality_all(net)
        # flagged stations exported as the worst finite value plus pairs lost
        finite_max = float(np.nanmax(report.values)) if np.isfinite(report.values).any() else 0.0
        signal = np.where(report.disconnects, finite_max + report.pairs_lost, report.values)
    elif args.signal == "zone":
        signal = [m.zone for m in net.meta]
    else:
        signal = net.degrees
    _write_export(net, signal, args, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metro-graph",
        description="Transit-network vulnerability metrics and flow-based population estimates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, flows_required=False, flows_optional=False):
        p.add_argument("--stations", required=True, help="stations.csv path")
        p.add_argument("--edges", required=True, help="edges.csv path")
        if flows_required:
            p.add_argument("--flows", required=True, help="flows.csv path")
        elif flows_optional:
            p.add_argument("--flows", help="flows.csv path")
        p.add_argument("--period", default="AM peak", help="label for the flow window")

    p = sub.add_parser("centrality", help="betweenness centrality ranking")
    add_common(p)
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--out", help="export full per-station signal to this path")
    p.set_defaults(func=cmd_centrality)

    p = sub.add_parser("vitality", help="closeness vitality ranking")
    add_common(p)
    p.add_argument("--top", type=int, default=10)
    p.set_defaults(func=cmd_vitality)

    p = sub.add_parser("netflow", help="net passenger flow tables")
    add_common(p, flows_required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--by-zone", action="store_true", help="aggregate by fare zone")
    group.add_argument("--top", type=int, default=5)
    p.set_defaults(func=cmd_netflow, by_zone=False)

    p = sub.add_parser("population", help="relative population estimate")
    p.add_argument("--top", type=int, default=0, help="print only the N most populous (0 = all)")
    add_common(p, flows_required=True)
    p.add_argument("--k", type=float, default=1.0, help="diffusivity coefficient")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--out", help="export the population signal to this path")
    p.set_defaults(func=cmd_population)

    p = sub.add_parser("closure", help="what-if report for closing one station")
    add_common(p, flows_optional=True)
    p.add_argument("--station", required=True, help="station name to close")
    p.add_argument("--k", type=float, default=1.0)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("export", help="export a computed signal for plotting")
    add_common(p, flows_optional=True)
    p.add_argument("--signal", choices=SIGNALS, required=True)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--format", choices=FORMATS, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export)

    return parser


def _thread_cap() -> int | None:
    raw = os.environ.get("METRO_GRAPH_THREADS", "0")
    try:
        cap = int(raw)
    except ValueError:
        raise MetroGraphError(f"METRO_GRAPH_THREADS must be an integer, got {raw!r}")
    if cap < 0:
        raise MetroGraphError(f"METRO_GRAPH_THREADS must be >= 0, got {cap}")
    return cap if cap > 0 else None


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        from threadpoolctl import threadpool_limits

        with threadpool_limits(limits=_thread_cap()):
            return args.func(args, out)
    except SolverDivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (MetroGraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
