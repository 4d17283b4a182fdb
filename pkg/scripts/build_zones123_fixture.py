#!/usr/bin/env python3
"""Rebuild the bundled Zones 1-3 fixture CSVs.

The network is the London Underground as operated in 2016, restricted to
stations whose lowest published fare zone is 1, 2 or 3; edges join
stations served consecutively by one line, and only edges with both
endpoints in the roster are kept.  Interchanges collapse to one vertex
per station name (so the two Edgware Road stations and the two
Hammersmith stations merge).  Coordinates are approximate and serve
visualization only.

Flow counts: ten stations carry the 2016 TFL RODS morning-peak entry and
exit averages; every other station gets deterministic synthetic counts,
bounded so the ten real rows keep the extreme net flows.  See the data
README for details.

Run from the repository root:  python3 scripts/build_zones123_fixture.py
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "metro_graph" / "data" / "zones123"

# Station sequences per line (2016 service), truncated at the last station
# inside Zones 1-3.  Consecutive names form one edge each.
LINES: dict[str, list[list[str]]] = {
    "Bakerloo": [
        [
            "Stonebridge Park", "Harlesden", "Willesden Junction", "Kensal Green",
            "Queen's Park", "Kilburn Park", "Maida Vale", "Warwick Avenue",
            "Paddington", "Edgware Road", "Marylebone", "Baker Street",
            "Regent's Park", "Oxford Circus", "Piccadilly Circus", "Charing Cross",
            "Embankment", "Waterloo", "Lambeth North", "Elephant & Castle",
        ],
    ],
    "Central": [
        ["Ealing Broadway", "West Acton", "North Acton"],
        ["Hanger Lane", "North Acton"],
        [
            "North Acton", "East Acton", "White City", "Shepherd's Bush",
            "Holland Park", "Notting Hill Gate", "Queensway", "Lancaster Gate",
            "Marble Arch", "Bond Street", "Oxford Circus", "Tottenham Court Road",
            "Holborn", "Chancery Lane", "St. Paul's", "Bank", "Liverpool Street",
            "Bethnal Green", "Mile End", "Stratford", "Leyton", "Leytonstone",
        ],
    ],
    "Circle": [
        [
            "Hammersmith", "Goldhawk Road", "Shepherd's Bush Market", "Wood Lane",
            "Latimer Road", "Ladbroke Grove", "Westbourne Park", "Royal Oak",
            "Paddington",
        ],
        [
            "Paddington", "Edgware Road", "Baker Street", "Great Portland Street",
            "Euston Square", "King's Cross St. Pancras", "Farringdon", "Barbican",
            "Moorgate", "Liverpool Street", "Aldgate", "Tower Hill", "Monument",
            "Cannon Street", "Mansion House", "Blackfriars", "Temple", "Embankment",
            "Westminster", "St. James's Park", "Victoria", "Sloane Square",
            "South Kensington", "Gloucester Road", "High Street Kensington",
            "Notting Hill Gate", "Bayswater", "Paddington",
        ],
    ],
    "District": [
        ["Kew Gardens", "Gunnersbury", "Turnham Green"],
        ["Ealing Broadway", "Ealing Common", "Acton Town", "Chiswick Park", "Turnham Green"],
        [
            "Turnham Green", "Stamford Brook", "Ravenscourt Park", "Hammersmith",
            "Barons Court", "West Kensington", "Earl's Court", "Gloucester Road",
            "South Kensington", "Sloane Square", "Victoria", "St. James's Park",
            "Westminster", "Embankment", "Temple", "Blackfriars", "Mansion House",
            "Cannon Street", "Monument", "Tower Hill", "Aldgate East", "Whitechapel",
            "Stepney Green", "Mile End", "Bow Road", "Bromley-by-Bow", "West Ham",
            "Plaistow", "Upton Park", "East Ham",
        ],
        [
            "Wimbledon", "Wimbledon Park", "Southfields", "East Putney",
            "Putney Bridge", "Parsons Green", "Fulham Broadway", "West Brompton",
            "Earl's Court",
        ],
        ["Kensington (Olympia)", "Earl's Court"],
        [
            "Earl's Court", "High Street Kensington", "Notting Hill Gate",
            "Bayswater", "Paddington", "Edgware Road",
        ],
    ],
    "Hammersmith & City": [
        [
            "Hammersmith", "Goldhawk Road", "Shepherd's Bush Market", "Wood Lane",
            "Latimer Road", "Ladbroke Grove", "Westbourne Park", "Royal Oak",
            "Paddington", "Edgware Road", "Baker Street", "Great Portland Street",
            "Euston Square", "King's Cross St. Pancras", "Farringdon", "Barbican",
            "Moorgate", "Liverpool Street", "Aldgate East", "Whitechapel",
            "Stepney Green", "Mile End", "Bow Road", "Bromley-by-Bow", "West Ham",
            "Plaistow", "Upton Park", "East Ham",
        ],
    ],
    "Jubilee": [
        [
            "Neasden", "Dollis Hill", "Willesden Green", "Kilburn", "West Hampstead",
            "Finchley Road", "Swiss Cottage", "St. John's Wood", "Baker Street",
            "Bond Street", "Green Park", "Westminster", "Waterloo", "Southwark",
            "London Bridge", "Bermondsey", "Canada Water", "Canary Wharf",
            "North Greenwich", "Canning Town", "West Ham", "Stratford",
        ],
    ],
    "Metropolitan": [
        [
            "Aldgate", "Liverpool Street", "Moorgate", "Barbican", "Farringdon",
            "King's Cross St. Pancras", "Euston Square", "Great Portland Street",
            "Baker Street", "Finchley Road",
        ],
    ],
    "Northern": [
        [
            "South Wimbledon", "Colliers Wood", "Tooting Broadway", "Tooting Bec",
            "Balham", "Clapham South", "Clapham Common", "Clapham North",
            "Stockwell", "Oval", "Kennington",
        ],
        [
            "Kennington", "Elephant & Castle", "Borough", "London Bridge", "Bank",
            "Moorgate", "Old Street", "Angel", "King's Cross St. Pancras", "Euston",
            "Camden Town",
        ],
        [
            "Kennington", "Waterloo", "Embankment", "Charing Cross",
            "Leicester Square", "Tottenham Court Road", "Goodge Street",
            "Warren Street", "Euston", "Mornington Crescent", "Camden Town",
        ],
        [
            "Camden Town", "Chalk Farm", "Belsize Park", "Hampstead",
            "Golders Green", "Brent Cross", "Hendon Central",
        ],
        [
            "Camden Town", "Kentish Town", "Tufnell Park", "Archway", "Highgate",
            "East Finchley",
        ],
    ],
    "Piccadilly": [
        ["Northfields", "South Ealing", "Acton Town"],
        ["Park Royal", "North Ealing", "Ealing Common", "Acton Town"],
        [
            "Acton Town", "Turnham Green", "Hammersmith", "Barons Court",
            "Earl's Court", "Gloucester Road", "South Kensington", "Knightsbridge",
            "Hyde Park Corner", "Green Park", "Piccadilly Circus", "Leicester Square",
            "Covent Garden", "Holborn", "Russell Square", "King's Cross St. Pancras",
            "Caledonian Road", "Holloway Road", "Arsenal", "Finsbury Park",
            "Manor House", "Turnpike Lane", "Wood Green", "Bounds Green",
        ],
    ],
    "Victoria": [
        [
            "Brixton", "Stockwell", "Vauxhall", "Pimlico", "Victoria", "Green Park",
            "Oxford Circus", "Warren Street", "Euston", "King's Cross St. Pancras",
            "Highbury & Islington", "Finsbury Park", "Seven Sisters",
            "Tottenham Hale", "Blackhorse Road", "Walthamstow Central",
        ],
    ],
    "Waterloo & City": [
        ["Waterloo", "Bank"],
    ],
}

# Lowest published 2016 fare zone per station.
ZONES: dict[str, int] = {
    "Aldgate": 1, "Aldgate East": 1, "Angel": 1, "Baker Street": 1, "Bank": 1,
    "Barbican": 1, "Bayswater": 1, "Blackfriars": 1, "Bond Street": 1,
    "Borough": 1, "Cannon Street": 1, "Chancery Lane": 1, "Charing Cross": 1,
    "Covent Garden": 1, "Earl's Court": 1, "Edgware Road": 1,
    "Elephant & Castle": 1, "Embankment": 1, "Euston": 1, "Euston Square": 1,
    "Farringdon": 1, "Gloucester Road": 1, "Goodge Street": 1,
    "Great Portland Street": 1, "Green Park": 1, "High Street Kensington": 1,
    "Holborn": 1, "Hyde Park Corner": 1, "King's Cross St. Pancras": 1,
    "Knightsbridge": 1, "Lambeth North": 1, "Lancaster Gate": 1,
    "Leicester Square": 1, "Liverpool Street": 1, "London Bridge": 1,
    "Mansion House": 1, "Marble Arch": 1, "Marylebone": 1, "Monument": 1,
    "Moorgate": 1, "Notting Hill Gate": 1, "Old Street": 1, "Oxford Circus": 1,
    "Paddington": 1, "Piccadilly Circus": 1, "Pimlico": 1, "Queensway": 1,
    "Regent's Park": 1, "Russell Square": 1, "Sloane Square": 1,
    "South Kensington": 1, "Southwark": 1, "St. James's Park": 1,
    "St. Paul's": 1, "Temple": 1, "Tottenham Court Road": 1, "Tower Hill": 1,
    "Vauxhall": 1, "Victoria": 1, "Warren Street": 1, "Waterloo": 1,
    "Westminster": 1,
    "Archway": 2, "Arsenal": 2, "Barons Court": 2, "Belsize Park": 2,
    "Bermondsey": 2, "Bethnal Green": 2, "Bow Road": 2, "Brixton": 2,
    "Bromley-by-Bow": 2, "Caledonian Road": 2, "Camden Town": 2,
    "Canada Water": 2, "Canary Wharf": 2, "Canning Town": 2, "Chalk Farm": 2,
    "Clapham Common": 2, "Clapham North": 2, "Clapham South": 2,
    "East Acton": 2, "East Putney": 2, "Finchley Road": 2, "Finsbury Park": 2,
    "Fulham Broadway": 2, "Goldhawk Road": 2, "Hammersmith": 2, "Hampstead": 2,
    "Highbury & Islington": 2, "Holland Park": 2, "Holloway Road": 2,
    "Kennington": 2, "Kensal Green": 2, "Kensington (Olympia)": 2,
    "Kentish Town": 2, "Kilburn": 2, "Kilburn Park": 2, "Ladbroke Grove": 2,
    "Latimer Road": 2, "Maida Vale": 2, "Manor House": 2, "Mile End": 2,
    "Mornington Crescent": 2, "North Acton": 2, "North Greenwich": 2, "Oval": 2,
    "Parsons Green": 2, "Putney Bridge": 2, "Queen's Park": 2,
    "Ravenscourt Park": 2, "Royal Oak": 2, "Shepherd's Bush": 2,
    "Shepherd's Bush Market": 2, "St. John's Wood": 2, "Stamford Brook": 2,
    "Stepney Green": 2, "Stockwell": 2, "Stratford": 2, "Swiss Cottage": 2,
    "Tufnell Park": 2, "Turnham Green": 2, "Warwick Avenue": 2,
    "West Brompton": 2, "West Ham": 2, "West Hampstead": 2,
    "West Kensington": 2, "Westbourne Park": 2, "White City": 2,
    "Whitechapel": 2, "Willesden Green": 2, "Willesden Junction": 2,
    "Wood Lane": 2,
    "Acton Town": 3, "Balham": 3, "Blackhorse Road": 3, "Bounds Green": 3,
    "Brent Cross": 3, "Chiswick Park": 3, "Colliers Wood": 3, "Dollis Hill": 3,
    "Ealing Broadway": 3, "Ealing Common": 3, "East Finchley": 3, "East Ham": 3,
    "Golders Green": 3, "Gunnersbury": 3, "Hanger Lane": 3, "Harlesden": 3,
    "Hendon Central": 3, "Highgate": 3, "Kew Gardens": 3, "Leyton": 3,
    "Leytonstone": 3, "Neasden": 3, "North Ealing": 3, "Northfields": 3,
    "Park Royal": 3, "Plaistow": 3, "Seven Sisters": 3, "South Ealing": 3,
    "South Wimbledon": 3, "Southfields": 3, "Stonebridge Park": 3,
    "Tooting Bec": 3, "Tooting Broadway": 3, "Tottenham Hale": 3,
    "Turnpike Lane": 3, "Upton Park": 3, "Walthamstow Central": 3,
    "West Acton": 3, "Wimbledon": 3, "Wimbledon Park": 3, "Wood Green": 3,
    "Upton Park": 3,
}

# Approximate WGS84 coordinates (visualization only).
COORDS: dict[str, tuple[float, float]] = {
    "Acton Town": (51.5028, -0.2801), "Aldgate": (51.5143, -0.0755),
    "Aldgate East": (51.5152, -0.0722), "Angel": (51.5322, -0.1058),
    "Archway": (51.5653, -0.1353), "Arsenal": (51.5586, -0.1059),
    "Baker Street": (51.5226, -0.1571), "Balham": (51.4431, -0.1525),
    "Bank": (51.5133, -0.0886), "Barbican": (51.5204, -0.0979),
    "Barons Court": (51.4905, -0.2139), "Bayswater": (51.5121, -0.1879),
    "Belsize Park": (51.5504, -0.1642), "Bermondsey": (51.4979, -0.0637),
    "Bethnal Green": (51.5270, -0.0549), "Blackfriars": (51.5120, -0.1031),
    "Blackhorse Road": (51.5867, -0.0412), "Bond Street": (51.5142, -0.1494),
    "Borough": (51.5011, -0.0943), "Bounds Green": (51.6070, -0.1243),
    "Bow Road": (51.5269, -0.0247), "Brent Cross": (51.5766, -0.2136),
    "Brixton": (51.4627, -0.1145), "Bromley-by-Bow": (51.5248, -0.0119),
    "Caledonian Road": (51.5481, -0.1188), "Camden Town": (51.5392, -0.1426),
    "Canada Water": (51.4982, -0.0502), "Canary Wharf": (51.5036, -0.0199),
    "Canning Town": (51.5147, 0.0082), "Cannon Street": (51.5113, -0.0904),
    "Chalk Farm": (51.5441, -0.1538), "Chancery Lane": (51.5185, -0.1111),
    "Charing Cross": (51.5074, -0.1278), "Chiswick Park": (51.4946, -0.2678),
    "Clapham Common": (51.4618, -0.1384), "Clapham North": (51.4649, -0.1299),
    "Clapham South": (51.4527, -0.1474), "Colliers Wood": (51.4180, -0.1778),
    "Covent Garden": (51.5129, -0.1243), "Dollis Hill": (51.5520, -0.2387),
    "Ealing Broadway": (51.5152, -0.3017), "Ealing Common": (51.5101, -0.2882),
    "Earl's Court": (51.4912, -0.1947), "East Acton": (51.5168, -0.2474),
    "East Finchley": (51.5874, -0.1650), "East Ham": (51.5390, 0.0518),
    "East Putney": (51.4586, -0.2112), "Edgware Road": (51.5203, -0.1700),
    "Elephant & Castle": (51.4943, -0.1001), "Embankment": (51.5073, -0.1223),
    "Euston": (51.5282, -0.1337), "Euston Square": (51.5258, -0.1357),
    "Farringdon": (51.5203, -0.1053), "Finchley Road": (51.5472, -0.1803),
    "Finsbury Park": (51.5642, -0.1065), "Fulham Broadway": (51.4804, -0.1950),
    "Gloucester Road": (51.4945, -0.1829), "Goldhawk Road": (51.5018, -0.2267),
    "Golders Green": (51.5724, -0.1941), "Goodge Street": (51.5205, -0.1347),
    "Great Portland Street": (51.5238, -0.1439), "Green Park": (51.5067, -0.1428),
    "Gunnersbury": (51.4915, -0.2754), "Hammersmith": (51.4936, -0.2251),
    "Hampstead": (51.5567, -0.1780), "Hanger Lane": (51.5302, -0.2933),
    "Harlesden": (51.5362, -0.2575), "Hendon Central": (51.5830, -0.2264),
    "High Street Kensington": (51.5009, -0.1925), "Highbury & Islington": (51.5465, -0.1038),
    "Highgate": (51.5777, -0.1458), "Holborn": (51.5174, -0.1201),
    "Holland Park": (51.5075, -0.2058), "Holloway Road": (51.5526, -0.1132),
    "Hyde Park Corner": (51.5027, -0.1527), "Kennington": (51.4884, -0.1053),
    "Kensal Green": (51.5304, -0.2250), "Kensington (Olympia)": (51.4983, -0.2106),
    "Kentish Town": (51.5507, -0.1402), "Kew Gardens": (51.4772, -0.2852),
    "Kilburn": (51.5471, -0.2047), "Kilburn Park": (51.5351, -0.1939),
    "King's Cross St. Pancras": (51.5308, -0.1238), "Knightsbridge": (51.5015, -0.1607),
    "Ladbroke Grove": (51.5172, -0.2107), "Lambeth North": (51.4991, -0.1115),
    "Lancaster Gate": (51.5119, -0.1756), "Latimer Road": (51.5139, -0.2172),
    "Leicester Square": (51.5113, -0.1281), "Leyton": (51.5566, -0.0053),
    "Leytonstone": (51.5683, 0.0083), "Liverpool Street": (51.5178, -0.0823),
    "London Bridge": (51.5049, -0.0863), "Maida Vale": (51.5299, -0.1856),
    "Manor House": (51.5706, -0.0960), "Mansion House": (51.5122, -0.0941),
    "Marble Arch": (51.5136, -0.1586), "Marylebone": (51.5225, -0.1631),
    "Mile End": (51.5249, -0.0332), "Monument": (51.5108, -0.0863),
    "Moorgate": (51.5186, -0.0886), "Mornington Crescent": (51.5342, -0.1387),
    "Neasden": (51.5542, -0.2503), "North Acton": (51.5237, -0.2597),
    "North Ealing": (51.5175, -0.2887), "North Greenwich": (51.5005, 0.0039),
    "Northfields": (51.4995, -0.3142), "Notting Hill Gate": (51.5094, -0.1967),
    "Old Street": (51.5256, -0.0875), "Oval": (51.4819, -0.1126),
    "Oxford Circus": (51.5152, -0.1418), "Paddington": (51.5154, -0.1755),
    "Park Royal": (51.5270, -0.2841), "Parsons Green": (51.4753, -0.2011),
    "Piccadilly Circus": (51.5098, -0.1342), "Pimlico": (51.4893, -0.1334),
    "Plaistow": (51.5313, 0.0172), "Putney Bridge": (51.4682, -0.2089),
    "Queen's Park": (51.5341, -0.2047), "Queensway": (51.5107, -0.1877),
    "Ravenscourt Park": (51.4942, -0.2359), "Regent's Park": (51.5234, -0.1466),
    "Royal Oak": (51.5190, -0.1881), "Russell Square": (51.5230, -0.1244),
    "Seven Sisters": (51.5830, -0.0749), "Shepherd's Bush": (51.5046, -0.2187),
    "Shepherd's Bush Market": (51.5056, -0.2265), "Sloane Square": (51.4924, -0.1565),
    "South Ealing": (51.5011, -0.3072), "South Kensington": (51.4941, -0.1738),
    "South Wimbledon": (51.4154, -0.1919), "Southfields": (51.4451, -0.2066),
    "Southwark": (51.5036, -0.1052), "St. James's Park": (51.4994, -0.1335),
    "St. John's Wood": (51.5347, -0.1740), "St. Paul's": (51.5146, -0.0973),
    "Stamford Brook": (51.4949, -0.2455), "Stepney Green": (51.5221, -0.0470),
    "Stockwell": (51.4723, -0.1229), "Stonebridge Park": (51.5439, -0.2759),
    "Stratford": (51.5416, -0.0042), "Swiss Cottage": (51.5432, -0.1738),
    "Temple": (51.5111, -0.1141), "Tooting Bec": (51.4361, -0.1598),
    "Tooting Broadway": (51.4275, -0.1680), "Tottenham Court Road": (51.5165, -0.1308),
    "Tottenham Hale": (51.5882, -0.0594), "Tower Hill": (51.5098, -0.0766),
    "Tufnell Park": (51.5567, -0.1374), "Turnham Green": (51.4951, -0.2547),
    "Turnpike Lane": (51.5903, -0.1028), "Upton Park": (51.5352, 0.0343),
    "Vauxhall": (51.4861, -0.1253), "Victoria": (51.4965, -0.1447),
    "Walthamstow Central": (51.5830, -0.0197), "Warren Street": (51.5247, -0.1384),
    "Warwick Avenue": (51.5235, -0.1835), "Waterloo": (51.5036, -0.1143),
    "West Acton": (51.5179, -0.2809), "West Brompton": (51.4872, -0.1953),
    "West Ham": (51.5282, 0.0056), "West Hampstead": (51.5469, -0.1906),
    "West Kensington": (51.4907, -0.2065), "Westbourne Park": (51.5210, -0.2011),
    "Westminster": (51.5010, -0.1254), "White City": (51.5120, -0.2239),
    "Whitechapel": (51.5194, -0.0599), "Willesden Green": (51.5492, -0.2215),
    "Willesden Junction": (51.5322, -0.2478), "Wimbledon": (51.4214, -0.2064),
    "Wimbledon Park": (51.4343, -0.1992), "Wood Green": (51.5975, -0.1097),
    "Wood Lane": (51.5098, -0.2241), "Bethnal Green": (51.5270, -0.0549),
}

# 2016 TFL RODS AM-peak daily averages for the ten extreme-net-flow
# stations; everything else below is synthesized.
REAL_FLOWS: dict[str, tuple[int, int]] = {
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

# Main-line rail termini: heavy two-way traffic, mild net inflow.
TERMINI = (
    "Euston", "King's Cross St. Pancras", "Victoria", "London Bridge",
    "Liverpool Street", "Paddington", "Marylebone",
)

# West End employment and leisure core: strong morning net outflow, so
# the implied-population minimum spans both the City and the West End.
WEST_END = (
    "Bond Street", "Marble Arch", "Tottenham Court Road",
    "Piccadilly Circus", "Leicester Square", "Covent Garden",
    "Charing Cross", "Hyde Park Corner", "Knightsbridge",
)

# City employment cluster around Bank: strong outflow, one notch below
# the West End band.
CITY = ("St. Paul's", "Moorgate", "Monument", "Cannon Street")

# Hand-set counts: Whitehall employment at Westminster, mainline-rail
# transfer inflow at Blackfriars and Victoria, low own demand at three
# interchange or side-street stations.
PINNED = {
    "Westminster": (4000, 20000),
    "St. James's Park": (1500, 9500),
    "Embankment": (6500, 2500),
    "Temple": (2700, 1400),
    "Goodge Street": (3500, 2000),
    "Blackfriars": (8000, 3000),
    "Victoria": (38000, 35500),
}


def synthetic_flow(name: str, zone: int, rng: np.random.Generator) -> tuple[int, int]:
    """Synthetic (entries, exits); net outflow stays strictly inside the
    real extremes (-12,703 and +23,695)."""
    if name in PINNED:
        return PINNED[name]
    if name in TERMINI:
        entries = int(rng.integers(22000, 45000))
        net = -int(rng.integers(2500, 5000))
    elif name in WEST_END:
        entries = int(rng.integers(1500, 6000))
        net = int(rng.integers(18000, 19500))
    elif name in CITY:
        entries = int(rng.integers(1500, 6000))
        net = int(rng.integers(10000, 13000))
    elif zone == 1:
        entries = int(rng.integers(1200, 6000))
        net = int(rng.integers(1500, 4500))
    elif zone == 2:
        exits = int(rng.integers(800, 5000))
        net = -int(rng.integers(800, 5000))
        return exits - net, exits
    else:
        exits = int(rng.integers(400, 3500))
        net = -int(rng.integers(1000, 6000))
        return exits - net, exits
    return entries, entries + net


def main() -> None:
    stations = sorted(ZONES)
    edges: list[tuple[str, str, str]] = []
    seen: set[frozenset[str]] = set()
    for line, segments in LINES.items():
        for seg in segments:
            for a, b in zip(seg, seg[1:]):
                for name in (a, b):
                    if name not in ZONES:
                        raise SystemExit(f"station missing a zone: {name}")
                key = frozenset((a, b))
                if key not in seen:
                    seen.add(key)
                    edges.append((a, b, line))

    used = {name for a, b, _ in edges for name in (a, b)}
    unused = set(stations) - used
    if unused:
        raise SystemExit(f"stations without edges: {sorted(unused)}")

    OUT_DIR.mkdir(parents=True, exist_ok=True)

    with open(OUT_DIR / "stations.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        fh.write("# London Underground stations, fare zones 1-3 (2016 network)\n")
        fh.write("# zone = lowest published fare zone; coordinates approximate\n")
        w.writerow(["name", "zone", "lat", "lon"])
        for name in stations:
            lat, lon = COORDS[name]
            w.writerow([name, ZONES[name], f"{lat:.4f}", f"{lon:.4f}"])

    with open(OUT_DIR / "edges.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        fh.write("# Adjacent-station links, deduplicated; line = first line seen\n")
        w.writerow(["station_a", "station_b", "line"])
        for a, b, line in sorted(edges):
            w.writerow([a, b, line])

    rng = np.random.default_rng(20160901)
    with open(OUT_DIR / "flows_am_2016.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        fh.write("# AM-peak daily average entries/exits; ten stations carry 2016\n")
        fh.write("# TFL RODS values, the rest are synthetic (see README.md)\n")
        w.writerow(["station", "entries", "exits"])
        for name in stations:
            entries, exits = REAL_FLOWS.get(name) or synthetic_flow(
                name, ZONES[name], rng
            )
            w.writerow([name, entries, exits])

    print(f"{len(stations)} stations, {len(edges)} edges -> {OUT_DIR}")


if __name__ == "__main__":
    main()
