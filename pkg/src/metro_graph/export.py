"""Plot-ready exports of per-station signals (CSV, DOT, GeoJSON)."""

from __future__ import annotations

import csv
import io
import json
from typing import NamedTuple

from .network import Network
from .validation import check_signal

FORMATS = ("csv", "dot", "geojson")


class ExportResult(NamedTuple):
    """Encoded payload plus the number of stations omitted (GeoJSON only,
    stations without coordinates)."""

    data: bytes
    omitted: int


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_signal(net: Network, signal, fmt: str) -> ExportResult:
    """Encode a per-station signal for external plotting tools.

    ``csv`` emits ``name,zone,value`` rows; ``dot`` a Graphviz graph with
    a ``value`` attribute per vertex; ``geojson`` a FeatureCollection of
    station points carrying ``value`` properties (stations without
    coordinates are left out and counted in the result).
    """
    values = [float(x) for x in check_signal(signal, net, "signal")]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "zone", "value"])
        for v in range(net.n):
            m = net.meta[v]
            writer.writerow([m.name, m.zone, repr(values[v])])
        return ExportResult(buf.getvalue().encode("utf-8"), 0)

    if fmt == "dot":
        lines = ["graph metro {"]
        for v in range(net.n):
            m = net.meta[v]
            lines.append(
                f"  {v} [label={_dot_quote(m.name)}, zone={m.zone}, value={values[v]!r}];"
            )
        for i, j in net.edges:
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return ExportResult(("\n".join(lines) + "\n").encode("utf-8"), 0)

    if fmt == "geojson":
        features = []
        omitted = 0
        for v in range(net.n):
            m = net.meta[v]
            if m.coord is None:
                omitted += 1
                continue
            lat, lon = m.coord
            features.append(
                {
                    "type": "Feature",
                    "geometry": {"type": "Point", "coordinates": [lon, lat]},
                    "properties": {"name": m.name, "zone": m.zone, "value": values[v]},
                }
            )
        doc = {
            "type": "FeatureCollection",
            "features": features,
            "omitted_without_coordinates": omitted,
        }
        return ExportResult(json.dumps(doc, ensure_ascii=False).encode("utf-8"), omitted)

    raise ValueError(f"unknown export format {fmt!r}, expected one of {FORMATS}")
