"""Decimal odds -> margin-corrected implied probabilities.

The bookmaker's posted odds embed a margin (overround): the inverse odds
sum to more than one. Normalizing the inverse odds removes the margin
multiplicatively and yields a proper probability distribution over
home/draw/away.
"""

from __future__ import annotations

import numpy as np


def implied_probs(odds_home, odds_draw, odds_away):
    """Margin-corrected implied probabilities for a 1X2 odds triple.

    Each probability is (1/O_j) / sum_k(1/O_k). Accepts scalars or
    equally shaped arrays; returns three arrays (or floats for scalar
    input) that sum to one.

    Raises ValueError if any odds value is <= 1.
    """
    oh = np.asarray(odds_home, dtype=float)
    od = np.asarray(odds_draw, dtype=float)
    oa = np.asarray(odds_away, dtype=float)
    if np.any(oh <= 1.0) or np.any(od <= 1.0) or np.any(oa <= 1.0):
        raise ValueError("decimal odds must be strictly greater than 1")
    inv_h, inv_d, inv_a = 1.0 / oh, 1.0 / od, 1.0 / oa
    booksum = inv_h + inv_d + inv_a
    p_h, p_d, p_a = inv_h / booksum, inv_d / booksum, inv_a / booksum
    if p_h.ndim == 0:
        return float(p_h), float(p_d), float(p_a)
    return p_h, p_d, p_a


def margin(odds_home, odds_draw, odds_away):
    """Bookmaker margin: sum of inverse odds minus one (0 for fair odds)."""
    oh = np.asarray(odds_home, dtype=float)
    od = np.asarray(odds_draw, dtype=float)
    oa = np.asarray(odds_away, dtype=float)
    if np.any(oh <= 1.0) or np.any(od <= 1.0) or np.any(oa <= 1.0):
        raise ValueError("decimal odds must be strictly greater than 1")
    out = 1.0 / oh + 1.0 / od + 1.0 / oa - 1.0
    return float(out) if out.ndim == 0 else out
