"""Exception hierarchy shared across the package.

Input and data errors derive from :class:`MetroGraphError`; numerical
failures get their own branch so the CLI can map them to distinct exit
codes (2 for input problems, 3 for solver failures).
"""


class MetroGraphError(Exception):
    """Base class for all errors raised by this package."""


class UnknownStationError(MetroGraphError, KeyError):
    """A station name does not resolve to any vertex of the network."""

    def __str__(self):  # KeyError quotes its args; keep the plain message
        return Exception.__str__(self)


class SelfLoopError(MetroGraphError):
    """An edge connects a station to itself."""


class OutOfRangeError(MetroGraphError, IndexError):
    """A vertex index is outside [0, n)."""


class DimensionMismatchError(MetroGraphError, ValueError):
    """A per-vertex signal does not match the network's vertex count."""


class MalformedRowError(MetroGraphError, ValueError):
    """A CSV row has the wrong shape or an unparseable field."""


class DuplicateStationError(MetroGraphError):
    """The same station name appears twice in a stations file."""


class DuplicateRecordError(MetroGraphError):
    """The same station appears twice in a flow file."""


class MissingStationError(MetroGraphError):
    """A network vertex has no matching flow record."""


class SolverDivergenceError(MetroGraphError):
    """The linear solver failed to reach its tolerance within budget."""
