"""Input validation helpers shared by functions and estimators."""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError
from .network import Network


def check_signal(values, net: Network, name: str = "signal") -> np.ndarray:
    """Coerce a per-vertex signal to a finite float64 vector of length n."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1 or arr.shape[0] != net.n:
        raise DimensionMismatchError(
            f"{name} has shape {arr.shape}, expected ({net.n},)"
        )
    if not np.all(np.isfinite(arr)):
        raise DimensionMismatchError(f"{name} contains non-finite entries")
    return arr


def check_diffusivity(k: float) -> float:
    k = float(k)
    if not k > 0:
        raise ValueError(f"diffusivity k must be positive, got {k}")
    return k


def check_network(net) -> Network:
    if not isinstance(net, Network):
        raise TypeError(f"expected a Network, got {type(net).__name__}")
    return net
