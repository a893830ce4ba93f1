"""Closed-form global bounds on the stability threshold and on the
critical temperature.

Upper bounds on the top eigenvalue k(P, T) of the stability operator (hence
lower bounds on the critical coupling): the spectral-radius estimate
``k_star`` and its measure-free weakening ``k_sharp``.  Inverting these in
temperature yields the explicit critical-temperature bounds ``tc_sharp``
(rigorous upper), ``tc_flat`` (rigorous lower, defined above a coupling
threshold), and the conjectured asymptotically sharp upper bound
``tc_tilde``.  The strong-coupling asymptotic inverse ``tc_asymptotic``
uses the gamma-family ingredients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import ValidationError
from .gamma_model import expected_gamma, g_top
from .measure import SpectralMeasure
from .numerics import riemann_zeta
from . import stability

#: rank of the gamma-family truncation used for the conjectured bound; the
#: top eigenvalue has ten stable digits well before this order.
GAMMA_LIMIT_RANK = 256


@dataclass(frozen=True)
class BoundConstants:
    """Constants of the spectral-radius estimate.

    ``b`` is recomputed from the zeta evaluations at import-free call time,
    never hard-coded; ``epsilon`` is inherited from the companion operator
    analysis and exposed for inspection but not tuned here.
    """

    epsilon: float
    b: float


@lru_cache(maxsize=8)
def bound_constants(epsilon: float = 0.65) -> BoundConstants:
    b = 2.0 * math.sqrt(
        (2.0 ** (1.0 + epsilon) - 1.0) * riemann_zeta(1.0 + epsilon) * riemann_zeta(5.0 - epsilon)
    )
    return BoundConstants(epsilon=epsilon, b=b)


def _varpi_squared(m: SpectralMeasure, t: float) -> float:
    """Second moment of the dimensionless frequency w / (2 pi T)."""
    if not t > 0.0:
        raise ValidationError(f"temperature must be positive, got {t}")
    return m.moment(2) / (2.0 * math.pi * t) ** 2


def k_star(m: SpectralMeasure, t: float) -> float:
    """Upper bound on the stability eigenvalue: the rank-one average plus
    the zeta-weighted tail estimate.  Dominates every finite-rank value."""
    return m.kernel_average(1, t).value + bound_constants().b * _varpi_squared(m, t)


def k_sharp(m: SpectralMeasure, t: float) -> float:
    """Weaker upper bound obtained by averaging inside the rank-one term
    (concavity), so only the second moment of the measure enters.  Ties
    ``k_star`` exactly for a single-atom measure."""
    v = _varpi_squared(m, t)
    return v / (v + 1.0) + bound_constants().b * v


def tc_sharp(m: SpectralMeasure, lam: float) -> float:
    """Rigorous upper bound on the critical temperature, for every coupling.

    Exact inverse of ``lam * k_sharp(m, T) = 1`` in T; the prefactor is the
    root-mean-square frequency over 2 pi, forced by dimensional analysis.
    The tests verify the defining identity itself rather than a particular
    algebraic rearrangement of it.
    """
    if not lam > 0.0:
        raise ValidationError(f"coupling must be positive, got {lam}")
    b = bound_constants().b
    core = lam * (1.0 + b) - 1.0
    inv_v = 0.5 * (core + math.sqrt(core * core + 4.0 * b * lam))
    return math.sqrt(m.moment(2)) / (2.0 * math.pi) * math.sqrt(inv_v)


def tc_flat(m: SpectralMeasure, lam: float):
    """Rigorous lower bound on the critical temperature, defined for
    couplings above the support-edge threshold; ``None`` below it."""
    if not lam > 0.0:
        raise ValidationError(f"coupling must be positive, got {lam}")
    gap = lam * m.moment(2) - m.omega_max ** 2
    if gap <= 0.0:
        return None
    return math.sqrt(gap) / (2.0 * math.pi)


def tc_tilde(m: SpectralMeasure, lam: float) -> float:
    """Conjectured upper bound on the critical temperature, asymptotically
    sharp at strong coupling: (1/2 pi) sqrt(g2 <w^2> lam) with g2 the
    strong-coupling spectral constant.  Never rigorous at finite coupling,
    and never used as a bracket endpoint on the rigorous side."""
    if not lam > 0.0:
        raise ValidationError(f"coupling must be positive, got {lam}")
    g2 = g_top(2.0, GAMMA_LIMIT_RANK).value
    return math.sqrt(g2 * m.moment(2) * lam) / (2.0 * math.pi)


class LambdaStarBounds(NamedTuple):
    """Upper estimates for the coupling above which the critical temperature
    is rigorously well-defined.  ``strong`` inverts the rank-four bound at
    the monotonicity threshold temperature; ``easy`` needs only the support
    edge and the second moment.  Neither dominates the other."""

    strong: float
    easy: float


def t_star_threshold(m: SpectralMeasure) -> float:
    """Temperature above which monotone decrease of the stability eigenvalue
    in T is guaranteed: support edge over 2 sqrt(2) pi."""
    return m.omega_max / (2.0 * math.sqrt(2.0) * math.pi)


def lambda_star_bounds(m: SpectralMeasure) -> LambdaStarBounds:
    strong = 1.0 / stability.k_closed_form(m, t_star_threshold(m), 4).k_value
    easy = 1.5 * m.omega_max ** 2 / m.moment(2)
    return LambdaStarBounds(strong=strong, easy=easy)


def tc_asymptotic(m: SpectralMeasure, lam: float, n: int) -> float:
    """Two-coefficient strong-coupling inverse of the rank-N bound.

    Uses the gamma-family constants at exponents two and four together with
    the second and fourth moments of the measure.  Tends to
    (1/2 pi) sqrt(g_N(2) <w^2> lam) from below as the coupling grows.
    """
    if not lam > 0.0:
        raise ValidationError(f"coupling must be positive, got {lam}")
    g2 = g_top(2.0, n).value
    g4_exp = expected_gamma(4.0, 2.0, n)
    w2 = m.moment(2)
    w4 = m.moment(4)
    arg = 1.0 - 4.0 * g4_exp * w4 / (g2 * g2 * w2 * w2 * lam)
    if arg < 0.0:
        threshold = 4.0 * g4_exp * w4 / (g2 * g2 * w2 * w2)
        raise ValidationError(
            f"coupling {lam:.6g} below the asymptotic-inverse threshold {threshold:.6g}"
        )
    denom = 2.0 * math.pi ** 2 * (g2 * w2 / (g4_exp * w4)) * (1.0 - math.sqrt(arg))
    return 1.0 / math.sqrt(denom)
