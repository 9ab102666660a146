"""Zero-one-inflated beta (BEINF) distribution in mean/precision form.

The distribution places point masses pi at 0 and lam at 1 and spreads the
remaining 1 - pi - lam over (0, 1) as a beta density parametrized by its
mean mu and precision gamma, with shape parameters a = mu * gamma and
b = (1 - mu) * gamma. Larger gamma concentrates the density around mu
(gamma = mu(1-mu)/sigma^2 - 1 in terms of the interior variance).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import expit, gammaln


@dataclass(frozen=True)
class BeinfParams:
    """Parameters of a zero-one-inflated beta distribution.

    mu is the mean of the continuous component in (0, 1), gamma > 0 its
    precision, pi and lam the point masses at 0 and 1 (pi + lam < 1).
    """

    mu: float
    gamma: float
    pi: float = 0.0
    lam: float = 0.0

    def __post_init__(self):
        if not (0.0 < self.mu < 1.0):
            raise ValueError(f"mu must lie in (0,1), got {self.mu}")
        if not self.gamma > 0.0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if self.pi < 0.0 or self.lam < 0.0 or self.pi + self.lam >= 1.0:
            raise ValueError(f"need pi, lam >= 0 and pi + lam < 1, got pi={self.pi}, lam={self.lam}")

    @property
    def alpha(self) -> float:
        return self.mu * self.gamma

    @property
    def beta(self) -> float:
        return (1.0 - self.mu) * self.gamma


def log_density(y: float, params: BeinfParams) -> float:
    """Log-density of the BEINF distribution at y in [0, 1].

    Boundary points return log(pi) / log(lam); with a zero mass this is
    -inf by contract, not an error. Interior points evaluate
    log(1 - pi - lam) plus the beta log-density computed via log-gamma
    functions (stable at large gamma).
    """
    if not (0.0 <= y <= 1.0) or not math.isfinite(y):
        raise ValueError(f"y must lie in [0,1], got {y}")
    if y == 0.0:
        return math.log(params.pi) if params.pi > 0.0 else -math.inf
    if y == 1.0:
        return math.log(params.lam) if params.lam > 0.0 else -math.inf
    a, b = params.alpha, params.beta
    log_beta = (
        gammaln(params.gamma)
        - gammaln(a)
        - gammaln(b)
        + (a - 1.0) * math.log(y)
        + (b - 1.0) * math.log1p(-y)
    )
    return math.log1p(-(params.pi + params.lam)) + float(log_beta)


def precision_from_moments(mu: float, sigma2: float) -> float:
    """Precision gamma = mu(1-mu)/sigma^2 - 1 from the interior mean and variance.

    sigma2 must lie strictly between 0 and mu(1-mu) (the variance attained
    in the gamma -> 0 limit).
    """
    if not (0.0 < mu < 1.0):
        raise ValueError(f"mu must lie in (0,1), got {mu}")
    bound = mu * (1.0 - mu)
    if not (0.0 < sigma2 < bound):
        raise ValueError(f"sigma2 must lie in (0, {bound}), got {sigma2}")
    return bound / sigma2 - 1.0


def mean_from_predictor(eta):
    """Inverse-logit link: mu = 1 / (1 + exp(-eta)), saturating at extremes."""
    out = expit(np.asarray(eta, dtype=float))
    return float(out) if out.ndim == 0 else out


def sample(params: BeinfParams, rng: np.random.Generator, size=None):
    """Draw from the BEINF distribution: 0 w.p. pi, 1 w.p. lam, else beta."""
    if size is None:
        u = rng.random()
        if u < params.pi:
            return 0.0
        if u < params.pi + params.lam:
            return 1.0
        return float(rng.beta(params.alpha, params.beta))
    u = rng.random(size)
    out = rng.beta(params.alpha, params.beta, size=size)
    out[u < params.pi + params.lam] = 1.0
    out[u < params.pi] = 0.0
    return out
