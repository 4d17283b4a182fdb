"""Steady-state diffusion model of morning-rush passenger flow.

The net outflow vector q and the per-station resident population phi are
linked through the graph Laplacian by the Fick law: flow runs from
populous areas toward sparse ones, proportionally to the population
difference across each link.  The forward map is ``q = -k L phi``; the
inverse map recovers phi from measured flows by solving the singular
system on the zero-mean subspace of each connected component, which is
exactly the Laplacian pseudo-inverse applied to ``-q / k``.

The pseudo-inverse is never formed: each component's system is solved by
conjugate gradient after projecting the right-hand side onto the
zero-mean subspace (deflating the constant nullspace), so cost per
iteration stays proportional to the edge count.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .errors import SolverDivergenceError
from .network import Network
from .validation import check_diffusivity, check_network, check_signal

DEFAULT_TOL = 1e-10
MAXITER_FACTOR = 20
_NORM_GUARD = 1e-300


@dataclass(frozen=True)
class FlowSignal:
    """Net passenger outflow per station over one measurement window.

    ``q[i]`` is passengers exiting minus passengers entering station i.
    ``component_sums`` records the (generally nonzero) total per
    connected component; a nonzero total is flow the model cannot
    explain, e.g. passengers arriving through other transport services.
    """

    q: np.ndarray
    period: str = ""
    component_sums: np.ndarray | None = None


@dataclass(frozen=True)
class PopulationEstimate:
    """Relative population around each station, inferred from flows.

    ``raw_phi`` is the zero-mean (per component) pseudo-inverse solution;
    ``phi`` shifts each component so its lowest station sits at 0.
    ``projected_out[c]`` is the mean outflow removed from component c
    before solving, and ``residual`` the relative solve residual.
    """

    phi: np.ndarray
    raw_phi: np.ndarray
    residual: float
    projected_out: np.ndarray


def _laplacian_csr(net: Network) -> sp.csr_array:
    n = net.n
    if not net.edges:
        return sp.csr_array((n, n), dtype=np.float64)
    ij = np.asarray(net.edges, dtype=np.int64)
    rows = np.concatenate([ij[:, 0], ij[:, 1]])
    cols = np.concatenate([ij[:, 1], ij[:, 0]])
    data = np.full(rows.shape[0], -1.0)
    lap = sp.coo_array((data, (rows, cols)), shape=(n, n)).tocsr()
    lap.setdiag(net.degrees.astype(np.float64))
    return lap.tocsr()


def forward_flux(net: Network, phi, k: float = 1.0, period: str = "") -> FlowSignal:
    """Net outflow implied by a population vector: ``q = -k L phi``.

    The result sums to zero over every connected component (up to
    roundoff), since the Laplacian annihilates constants.
    """
    check_network(net)
    k = check_diffusivity(k)
    phi = check_signal(phi, net, "phi")
    q = -k * (_laplacian_csr(net) @ phi)
    q += 0.0  # fold -0.0 into +0.0 for clean exports
    labels = net.component_labels
    sums = np.array(
        [q[labels == c].sum() for c in range(net.n_components)], dtype=np.float64
    )
    return FlowSignal(q=q, period=period, component_sums=sums)


def _as_flow_vector(flow, net: Network) -> np.ndarray:
    q = flow.q if isinstance(flow, FlowSignal) else flow
    return check_signal(q, net, "q")


def _solve_component(lap_sub, b: np.ndarray, tol: float, maxiter: int) -> np.ndarray:
    """CG solve of ``L x = b`` for zero-mean b, refined until the true
    relative residual meets tol.  Returns the zero-mean solution."""
    bnorm = np.linalg.norm(b)
    if bnorm == 0.0:
        return np.zeros_like(b)
    x = np.zeros_like(b)
    rhs = b
    for _ in range(3):  # initial solve plus up to two refinement passes
        dx, info = spla.cg(lap_sub, rhs, rtol=tol, atol=0.0, maxiter=maxiter)
        if info > 0:
            raise SolverDivergenceError(
                f"conjugate gradient missed tolerance {tol:g} within {maxiter} iterations"
            )
        x = x + dx
        x -= x.mean()  # deflate roundoff drift along the constant nullspace
        rhs = b - lap_sub @ x
        if np.linalg.norm(rhs) <= tol * bnorm:
            return x
    raise SolverDivergenceError(
        f"residual stalled above tolerance {tol:g} after iterative refinement"
    )


def estimate_population(
    net: Network,
    flow,
    k: float = 1.0,
    tol: float = DEFAULT_TOL,
    maxiter: int | None = None,
) -> PopulationEstimate:
    """Infer relative population from net outflow: ``phi = -(1/k) L^+ q``.

    Each connected component is handled independently: the component mean
    of q is projected out (and reported), the remaining consistent system
    is solved by deflated conjugate gradient, and the solution is shifted
    so the component minimum is 0.

    Parameters
    ----------
    flow : FlowSignal or array-like
        Measured net outflow per station.
    k : float
        Diffusivity; estimates scale as 1/k.
    tol : float
        Relative residual target for the solve.
    maxiter : int, optional
        Iteration cap per component; defaults to 20x the component size.

    Raises
    ------
    SolverDivergenceError
        If the tolerance is not met within the iteration budget.
    """
    check_network(net)
    k = check_diffusivity(k)
    q = _as_flow_vector(flow, net)
    labels = net.component_labels
    lap = _laplacian_csr(net)

    raw = np.zeros(net.n, dtype=np.float64)
    projected_out = np.zeros(net.n_components, dtype=np.float64)
    for c in range(net.n_components):
        idx = np.flatnonzero(labels == c)
        qc = q[idx]
        projected_out[c] = qc.mean()
        b = -(qc - projected_out[c]) / k
        lap_sub = lap[np.ix_(idx, idx)] if len(idx) < net.n else lap
        cap = maxiter if maxiter is not None else MAXITER_FACTOR * len(idx)
        raw[idx] = _solve_component(lap_sub, b, tol, cap)

    phi = raw.copy()
    for c in range(net.n_components):
        idx = np.flatnonzero(labels == c)
        phi[idx] -= phi[idx].min()

    q_projected = q - projected_out[labels]
    residual_num = np.linalg.norm(-k * (lap @ raw) - q_projected)
    residual = float(residual_num / max(np.linalg.norm(q_projected), _NORM_GUARD))
    return PopulationEstimate(
        phi=phi, raw_phi=raw, residual=residual, projected_out=projected_out
    )


def round_trip_residual(net: Network, flow, est: PopulationEstimate, k: float = 1.0) -> float:
    """Relative mismatch between the flow implied by an estimate and the
    zero-mean part of the measured flow."""
    check_network(net)
    k = check_diffusivity(k)
    q = _as_flow_vector(flow, net)
    labels = net.component_labels
    means = np.array(
        [q[labels == c].mean() for c in range(net.n_components)], dtype=np.float64
    )
    q_projected = q - means[labels]
    modelled = -k * (_laplacian_csr(net) @ est.raw_phi)
    num = np.linalg.norm(modelled - q_projected)
    return float(num / max(np.linalg.norm(q_projected), _NORM_GUARD))


class PopulationEstimator(BaseEstimator):
    """Scikit-learn style front end for the inverse diffusion model.

    ``fit`` binds the estimator to a network (precomputing its Laplacian
    and component structure); ``predict`` then maps any flow vector to a
    per-station relative population.

    Parameters
    ----------
    k : float
        Diffusivity coefficient (> 0), default 1.
    tol : float
        Relative residual target for the solver.
    """

    def __init__(self, k: float = 1.0, tol: float = DEFAULT_TOL):
        self.k = k
        self.tol = tol

    def fit(self, network: Network, y=None):
        check_diffusivity(self.k)
        self.network_ = check_network(network)
        self.n_stations_ = network.n
        return self

    def predict(self, flow) -> np.ndarray:
        """Relative population (min 0 per component) for a flow vector."""
        check_is_fitted(self, "network_")
        return self.estimate(flow).phi

    def estimate(self, flow) -> PopulationEstimate:
        """Full estimate with solve diagnostics."""
        check_is_fitted(self, "network_")
        return estimate_population(self.network_, flow, k=self.k, tol=self.tol)

    def flux(self, phi) -> FlowSignal:
        """Forward model: flow implied by a population vector."""
        check_is_fitted(self, "network_")
        return forward_flux(self.network_, phi, k=self.k)
