"""The gamma-family operator: truncations, top eigenpairs, cross
expectations, and the Dirichlet-coefficient machinery.

This is the temperature-free companion of the phonon stability operator:
its kernels are inverse powers 1/k^gamma instead of Matsubara kernel
averages.  At gamma = 2 it governs the strong-coupling asymptotics of the
critical temperature; the gamma = 4 expectation in the gamma = 2 optimizer
supplies the next-to-leading coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ValidationError
from .numerics import EigenPair, sym_eig_top


@dataclass(frozen=True)
class GammaOperator:
    """Rank-N truncation of the gamma-family interaction matrix."""

    gamma: float
    order: int
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix.setflags(write=False)


def _build_matrix(gamma: float, n: int) -> np.ndarray:
    idx = np.arange(n)
    inv_sqrt = 1.0 / np.sqrt(2.0 * idx + 1.0)
    # kernel[j] = 1/j^gamma for j >= 1; kernel[0] = 0 encodes the vanishing
    # same-index exchange term, so |n - m| may be indexed directly.
    kernel = np.zeros(2 * n, dtype=float)
    kernel[1:] = np.arange(1, 2 * n, dtype=float) ** (-gamma)
    diff = np.abs(idx[:, None] - idx[None, :])
    summ = idx[:, None] + idx[None, :] + 1
    m = (kernel[diff] + kernel[summ]) * np.outer(inv_sqrt, inv_sqrt)
    # diagonal drag: -(1/(2n+1)) * sum_{k=1}^{n} 2/k^gamma
    prefix = np.concatenate(([0.0], np.cumsum(kernel[1:n])))  # sums over k <= row index
    m[idx, idx] -= 2.0 * prefix / (2.0 * idx + 1.0)
    return m


def assemble_gamma(gamma: float, n: int) -> GammaOperator:
    """Assemble the N x N truncation for exponent ``gamma > 0``."""
    if not gamma > 0.0:
        raise ValidationError(f"gamma must be positive, got {gamma}")
    if n < 1:
        raise ValidationError(f"order must be >= 1, got {n}")
    return GammaOperator(gamma=float(gamma), order=int(n), matrix=_build_matrix(gamma, n))


@lru_cache(maxsize=64)
def _top_pair(gamma: float, n: int) -> EigenPair:
    return sym_eig_top(assemble_gamma(gamma, n).matrix)


def g_top(gamma: float, n: int) -> EigenPair:
    """Top eigenpair of the rank-N truncation.

    The eigenvalue is >= 1, with equality only at N = 1; the sign-normalized
    eigenvector is componentwise positive.  Results are memoized: they are
    measure-independent and reused heavily by the bound evaluations.
    """
    if not gamma > 0.0:
        raise ValidationError(f"gamma must be positive, got {gamma}")
    return _top_pair(float(gamma), int(n))


@lru_cache(maxsize=64)
def expected_gamma(gamma_prime: float, gamma: float, n: int) -> float:
    """Expectation of the gamma_prime truncation in the top eigenvector of
    the gamma truncation (a Rayleigh quotient, so normalization of the
    eigenvector is irrelevant).  Strictly positive."""
    if not gamma_prime > 0.0:
        raise ValidationError(f"gamma_prime must be positive, got {gamma_prime}")
    vec = g_top(gamma, n).vector
    mat = assemble_gamma(gamma_prime, n).matrix
    return float(vec @ mat @ vec)


def theta_profile(eigvec: np.ndarray) -> np.ndarray:
    """Angle profile theta_n = xi_n / sqrt(2n + 1) of an eigenvector; for a
    top eigenvector this sequence is positive and nonincreasing."""
    v = np.asarray(eigvec, dtype=float)
    return v / np.sqrt(2.0 * np.arange(v.size) + 1.0)


def dirichlet_coefficients(theta, n: int) -> np.ndarray:
    """Coefficients c_1 .. c_{2N-1} of the Dirichlet-series expansion of the
    angle-space quadratic form.

    For a nonnegative ``theta`` the convolution and odd-square contributions
    are nonnegative; when ``theta`` is also nonincreasing the shifted-
    difference contribution is nonnegative too, hence every c_k >= 0.
    Returned array index 0 holds c_1.
    """
    th = np.asarray(theta, dtype=float)
    if th.ndim != 1 or th.size != n:
        raise ValidationError(f"theta length {th.size} does not match order {n}")
    coeffs = np.zeros(2 * n - 1, dtype=float)
    for k in range(1, 2 * n):
        c = 0.0
        if k <= n - 1:
            # difference-index kernel plus diagonal drag at shift k
            tail = th[k:]                      # theta_j for j = k .. N-1
            c += float(np.sum(2.0 * (th[: n - k] - tail) * tail))
        # summed-index kernel at j + j' + 1 = k: each unordered off-diagonal
        # pair once with weight 2, plus the diagonal square at odd k
        lo = max(0, k - n)
        if lo < k // 2:
            j = np.arange(lo, k // 2)
            c += float(np.sum(2.0 * th[k - 1 - j] * th[j]))
        if k % 2 == 1:
            c += float(th[(k - 1) // 2] ** 2)
        coeffs[k - 1] = c
    return coeffs


def dirichlet_series(coeffs: np.ndarray, gamma: float) -> float:
    """Evaluate sum_k c_k / k^gamma for coefficients indexed from k = 1."""
    k = np.arange(1, len(coeffs) + 1, dtype=float)
    return float(np.sum(coeffs * k ** (-gamma)))


def hat_quadratic_form(theta, gamma: float) -> float:
    """Direct double-sum evaluation of the angle-space quadratic form:

        - sum_n (sum_{k<=n} 2/k^gamma) theta_n^2
        + sum_{n,m} theta_n [ (1-delta)/|n-m|^gamma + 1/(n+m+1)^gamma ] theta_m

    Used as the independent cross-check of the Dirichlet expansion.
    """
    th = np.asarray(theta, dtype=float)
    n = th.size
    idx = np.arange(n)
    kernel = np.zeros(2 * n, dtype=float)
    kernel[1:] = np.arange(1, 2 * n, dtype=float) ** (-gamma)
    diff = np.abs(idx[:, None] - idx[None, :])
    summ = idx[:, None] + idx[None, :] + 1
    quad = float(th @ (kernel[diff] + kernel[summ]) @ th)
    prefix = np.concatenate(([0.0], np.cumsum(kernel[1:n])))
    quad -= float(np.sum(2.0 * prefix * th * th))
    return quad


def diagonal_weighted_norm(theta) -> float:
    """The weighted norm sum_n (2n+1) theta_n^2 pairing the angle space."""
    th = np.asarray(theta, dtype=float)
    return float(np.sum((2.0 * np.arange(th.size) + 1.0) * th * th))


def constant_profile_bound(n: int, gamma: float) -> float:
    """Value of the weighted Rayleigh quotient on the constant profile:
    (1/N^2) sum_{k=1}^{2N-1} min(k, 2N-k) / k^gamma.  Conjectured to be the
    global minimum over nonincreasing nonnegative profiles."""
    k = np.arange(1, 2 * n, dtype=float)
    return float(np.sum(np.minimum(k, 2 * n - k) * k ** (-gamma)) / (n * n))
