"""Stochastic online mirror descent on a capped simplex.

The learner maintains a strictly positive iterate x on
V = {x : 0 <= x_i <= caps_i, sum(x) <= 1} with caps_i = min(1, costs_i/scale),
updates multiplicatively on gain subgradients, and projects back onto V in the
unnormalized-KL geometry. ``play`` maps the iterate to the cost-scaled playing
vector y in [0,1]^d with <costs, y> <= scale.
"""

from dataclasses import dataclass

import numpy as np

from .kernels import omd_step, project_capped

EPS_FEAS = 1e-9
POSITIVITY_FLOOR = 1e-300
DEFAULT_ETA = 0.5

# relative slack for the gradient boundedness check; anything beyond this is
# an adapter bug, not float noise
_GRAD_TOL = 1e-9


@dataclass
class CappedSimplexPoint:
    coords: np.ndarray
    caps: np.ndarray

    def validate(self):
        if np.any(self.coords <= 0):
            raise ValueError("coordinates must be strictly positive")
        if np.any(self.coords > self.caps * (1 + EPS_FEAS)):
            raise ValueError("coordinate exceeds its cap")
        if float(self.coords.sum()) > 1 + EPS_FEAS:
            raise ValueError("coordinate sum exceeds 1")


@dataclass
class OcoState:
    point: CappedSimplexPoint
    eta: float
    dim: int
    scale: float
    costs: np.ndarray


def init_state(dim, costs, scale, eta=DEFAULT_ETA):
    """Uniform start: coords_i = min(1/dim, caps_i*(1-eps)), strictly feasible."""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    costs = np.asarray(costs, dtype=np.float64)
    if costs.shape != (dim,):
        raise ValueError(f"costs must have shape ({dim},), got {costs.shape}")
    if np.any(costs <= 0):
        raise ValueError("all costs must be positive")
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")
    if not 0 < eta <= 1:
        raise ValueError(f"eta must lie in (0, 1], got {eta}")

    caps = np.minimum(1.0, costs / scale)
    coords = np.minimum(1.0 / dim, caps * (1 - EPS_FEAS))
    point = CappedSimplexPoint(coords=coords, caps=caps)
    point.validate()
    return OcoState(point=point, eta=float(eta), dim=dim, scale=float(scale), costs=costs)


def ukl(p, q):
    """Unnormalized KL divergence sum(p*ln(p/q) - p + q), with 0*log(0) = 0."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    if np.any(q <= 0):
        raise ValueError("q must be strictly positive")
    if np.any(p < 0):
        raise ValueError("p must be nonnegative")
    terms = np.where(p > 0, p * np.log(np.where(p > 0, p, 1.0) / q), 0.0)
    return float(terms.sum() - p.sum() + q.sum())


def bregman_project(point, caps):
    """uKL projection of a positive vector onto the capped simplex."""
    point = np.asarray(point, dtype=np.float64)
    caps = np.asarray(caps, dtype=np.float64)
    if np.any(point <= 0):
        raise ValueError("point must be strictly positive")
    if np.any(caps <= 0):
        raise ValueError("caps must be strictly positive")
    return CappedSimplexPoint(coords=project_capped(point, caps), caps=caps.copy())


def step(state, grad):
    """Feed a stochastic gain subgradient (in playing-space units) and advance.

    grad_i * scale / costs_i must lie in [0, 1]; a violation signals a bug in
    the problem adapter feeding the learner.
    """
    grad = np.asarray(grad, dtype=np.float64)
    gscaled = grad * (state.scale / state.costs)
    if np.any(gscaled < -_GRAD_TOL) or np.any(gscaled > 1 + _GRAD_TOL):
        bad = int(np.argmax(np.abs(gscaled - 0.5)))
        raise ValueError(
            f"gradient out of bounds at coordinate {bad}: scaled value "
            f"{gscaled[bad]!r} outside [0, 1] (problem adapter bug)"
        )
    coords = omd_step(state.point.coords, state.point.caps, gscaled, state.eta)
    return OcoState(
        point=CappedSimplexPoint(coords=coords, caps=state.point.caps),
        eta=state.eta,
        dim=state.dim,
        scale=state.scale,
        costs=state.costs,
    )


def play(state):
    """Map the iterate to sampling weights y_i = coords_i * scale / costs_i."""
    y = state.point.coords * (state.scale / state.costs)
    return np.clip(y, 0.0, 1.0)


def iterate_rows(state, t):
    """Diagnostic rows (t, i, coord_i) for CSV emission by the harness."""
    return [(t, i, float(c)) for i, c in enumerate(state.point.coords)]
