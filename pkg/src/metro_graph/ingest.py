"""CSV parsing for stations, edges and passenger counts.

All three formats are UTF-8 CSV with an explicit header row; LF and CRLF
both work and lines starting with ``#`` are skipped.  Station names are
matched exactly after trimming and Unicode NFC normalization; anything
that does not resolve fails loudly rather than fuzzily.

    stations.csv  name,zone,lat,lon      (zone 1-10; lat/lon may be empty)
    edges.csv     station_a,station_b,line   (line is informational)
    flows.csv     station,entries,exits      (window passenger counts)
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import (
    DuplicateRecordError,
    DuplicateStationError,
    MalformedRowError,
    MissingStationError,
)
from .network import Network, StationMeta, canonical_name
from .diffusion import FlowSignal

# Separators tolerated inside numeric fields: comma, thin space, narrow
# no-break space, no-break space, plain space.
_THOUSANDS = str.maketrans("", "", ",    ")


@dataclass(frozen=True)
class FlowRecord:
    """Entry and exit counts for one station over the window."""

    station: str
    entries: int
    exits: int


def _rows(data: bytes | str, expected_header: list[str], what: str):
    """Yield (line_number, cells) for data rows, after validating the header."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    numbered = [
        (i + 1, line)
        for i, line in enumerate(text.splitlines())
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not numbered:
        raise MalformedRowError(f"{what}: no header row found")
    reader = csv.reader(io.StringIO("\n".join(line for _, line in numbered)))
    rows = list(reader)
    header = [cell.strip().lower() for cell in rows[0]]
    if header != expected_header:
        raise MalformedRowError(
            f"{what}: expected header {','.join(expected_header)!r}, "
            f"got {','.join(header)!r}"
        )
    for (lineno, _), cells in zip(numbered[1:], rows[1:]):
        yield lineno, cells


def _count(cell: str, what: str, lineno: int) -> int:
    cleaned = cell.strip().translate(_THOUSANDS)
    try:
        value = int(cleaned)
    except ValueError:
        raise MalformedRowError(f"{what} line {lineno}: bad count {cell!r}") from None
    if value < 0:
        raise MalformedRowError(f"{what} line {lineno}: negative count {cell!r}")
    return value


def parse_stations(data: bytes | str) -> list[StationMeta]:
    """Parse a stations file into :class:`StationMeta` entries."""
    metas: list[StationMeta] = []
    seen: set[str] = set()
    for lineno, cells in _rows(data, ["name", "zone", "lat", "lon"], "stations"):
        if len(cells) != 4:
            raise MalformedRowError(
                f"stations line {lineno}: expected 4 columns, got {len(cells)}"
            )
        name = canonical_name(cells[0])
        if not name:
            raise MalformedRowError(f"stations line {lineno}: empty name")
        if name in seen:
            raise DuplicateStationError(f"duplicate station {name!r} (line {lineno})")
        seen.add(name)
        try:
            zone = int(cells[1].strip())
        except ValueError:
            raise MalformedRowError(
                f"stations line {lineno}: bad zone {cells[1]!r}"
            ) from None
        if not 1 <= zone <= 10:
            raise MalformedRowError(f"stations line {lineno}: zone {zone} outside 1-10")
        lat_s, lon_s = cells[2].strip(), cells[3].strip()
        if lat_s or lon_s:
            if not (lat_s and lon_s):
                raise MalformedRowError(
                    f"stations line {lineno}: lat/lon must both be set or both empty"
                )
            try:
                coord = (float(lat_s), float(lon_s))
            except ValueError:
                raise MalformedRowError(
                    f"stations line {lineno}: bad coordinates {lat_s!r},{lon_s!r}"
                ) from None
        else:
            coord = None
        metas.append(StationMeta(name=name, zone=zone, coord=coord))
    return metas


def parse_edges(data: bytes | str) -> list[tuple[str, str]]:
    """Parse an edges file into name pairs, preserving file order.

    Deduplication and self-loop rejection happen in
    :func:`~metro_graph.network.build_network`.
    """
    pairs: list[tuple[str, str]] = []
    for lineno, cells in _rows(data, ["station_a", "station_b", "line"], "edges"):
        if len(cells) != 3:
            raise MalformedRowError(
                f"edges line {lineno}: expected 3 columns, got {len(cells)}"
            )
        a, b = canonical_name(cells[0]), canonical_name(cells[1])
        if not a or not b:
            raise MalformedRowError(f"edges line {lineno}: empty station name")
        pairs.append((a, b))
    return pairs


def parse_flows(data: bytes | str) -> list[FlowRecord]:
    """Parse a flows file into :class:`FlowRecord` entries."""
    records: list[FlowRecord] = []
    for lineno, cells in _rows(data, ["station", "entries", "exits"], "flows"):
        if len(cells) != 3:
            raise MalformedRowError(
                f"flows line {lineno}: expected 3 columns, got {len(cells)}"
            )
        name = canonical_name(cells[0])
        if not name:
            raise MalformedRowError(f"flows line {lineno}: empty station name")
        records.append(
            FlowRecord(
                station=name,
                entries=_count(cells[1], "flows", lineno),
                exits=_count(cells[2], "flows", lineno),
            )
        )
    return records


def net_flow(records: list[FlowRecord], net: Network, period: str = "") -> FlowSignal:
    """Per-station net outflow (exits minus entries) as a flow signal.

    Every record must resolve to a vertex and every vertex must have
    exactly one record.  Sums are taken in integer arithmetic before
    conversion to float.
    """
    q_int = [0] * net.n
    seen: set[int] = set()
    for rec in records:
        v = net.id_of(rec.station)  # raises UnknownStationError
        if v in seen:
            raise DuplicateRecordError(f"duplicate flow record for {rec.station!r}")
        seen.add(v)
        q_int[v] = rec.exits - rec.entries
    if len(seen) != net.n:
        missing = sorted(net.name_of(v) for v in range(net.n) if v not in seen)
        raise MissingStationError(
            f"{len(missing)} stations lack flow records, first: {missing[:5]}"
        )
    labels = net.component_labels
    comp_sums = [0] * net.n_components
    for v, val in enumerate(q_int):
        comp_sums[labels[v]] += val
    return FlowSignal(
        q=np.array(q_int, dtype=np.float64),
        period=period,
        component_sums=np.array(comp_sums, dtype=np.float64),
    )


# -- serialization (inverse of the parsers) --------------------------------


def _unserializable(cell: str) -> bool:
    # Any character str.splitlines() treats as a boundary (\n, \r, \v,
    # \f, \x1c-\x1e, \x85,  ,  ) would shear the row apart in
    # the line-based parser; NUL cannot be written by the csv module.
    return cell.splitlines() != ([cell] if cell else []) or "\x00" in cell


def _csv_lines(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    # A leading "#" must be quoted or the row would re-parse as a comment.
    quoting = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_ALL)
    writer.writerow(header)
    for row in rows:
        cells = [str(c) for c in row]
        if any(_unserializable(c) for c in cells):
            raise ValueError(f"field with line break cannot be serialized: {row!r}")
        (quoting if cells[0].startswith("#") else writer).writerow(row)
    return buf.getvalue()


def serialize_stations(metas: list[StationMeta]) -> str:
    rows = [
        (
            m.name,
            m.zone,
            repr(m.coord[0]) if m.coord else "",
            repr(m.coord[1]) if m.coord else "",
        )
        for m in metas
    ]
    return _csv_lines(["name", "zone", "lat", "lon"], rows)


def serialize_edges(pairs: list[tuple[str, str]], line: str = "") -> str:
    return _csv_lines(["station_a", "station_b", "line"], [(a, b, line) for a, b in pairs])


def serialize_flows(records: list[FlowRecord]) -> str:
    rows = [(r.station, r.entries, r.exits) for r in records]
    return _csv_lines(["station", "entries", "exits"], rows)
