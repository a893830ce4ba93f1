"""The truncated stability operator of the linearized gap equations.

For a measure P and temperature T the rank-N truncation is a real symmetric
N x N matrix whose entries are combinations of the kernel averages
<<1>> .. <<2N-1>> only: off the diagonal

    K[n, m] = ( <<|n-m|>> + <<n+m+1>> ) / sqrt((2n+1)(2m+1)),

and on the diagonal the same-site exchange term is replaced by the drag

    K[n, n] = <<2n+1>>/(2n+1) - (2/(2n+1)) * sum_{k<=n} <<k>>.

Its top eigenvalue k_N(P, T) increases with N toward the stability
threshold k(P, T); the reciprocal 1/k_N is a decreasing chain of upper
bounds on the critical coupling.  Ranks one through four admit closed
forms (linear, quadratic, trigonometric-cubic, resolvent-quartic), which
this module evaluates independently of the dense eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import NumericalError, ValidationError
from .measure import SpectralMeasure
from .numerics import DEFAULT_TOL, integrate_adaptive, power_iteration_positive, sym_eig_top

# Kernel averages become limit-degenerate once every dimensionless frequency
# exceeds this; the zero-temperature limit matrix is exact there to double
# precision and avoids cancellation in the quadratures.
_WMAX_OVER_T_LIMIT = 1e8 * 2.0 * math.pi


@dataclass(frozen=True)
class EliashbergOperator:
    """Assembled rank-N truncation with its cached kernel averages."""

    measure: SpectralMeasure
    temperature: float
    order: int
    matrix: np.ndarray
    kernel: np.ndarray  # kernel[j] = <<j>>, j = 1 .. 2N-1; kernel[0] = 0

    def __post_init__(self):
        self.matrix.setflags(write=False)
        self.kernel.setflags(write=False)


@dataclass(frozen=True)
class KBound:
    """Top eigenvalue of a rank-N truncation and the coupling bound 1/k."""

    n: int
    k_value: float
    lambda_upper: float
    eigvec: np.ndarray


class ZeroTemperatureLimit(NamedTuple):
    k0: float            # limit of the rank-N top eigenvalue as T -> 0
    lambda_floor: float  # 1/k0: couplings below this are unreachable at rank N


def _assemble_from_kernel(kernel: np.ndarray, n: int) -> np.ndarray:
    idx = np.arange(n)
    inv_sqrt = 1.0 / np.sqrt(2.0 * idx + 1.0)
    diff = np.abs(idx[:, None] - idx[None, :])
    summ = idx[:, None] + idx[None, :] + 1
    m = (kernel[diff] + kernel[summ]) * np.outer(inv_sqrt, inv_sqrt)
    prefix = np.concatenate(([0.0], np.cumsum(kernel[1:n])))
    m[idx, idx] -= 2.0 * prefix / (2.0 * idx + 1.0)
    return m


def _limit_matrix(n: int) -> np.ndarray:
    """Zero-temperature limit: -I + 2 u u^T with u_n = 1/sqrt(2n+1)."""
    u = 1.0 / np.sqrt(2.0 * np.arange(n) + 1.0)
    return -np.eye(n) + 2.0 * np.outer(u, u)


def assemble_k(m: SpectralMeasure, t: float, n: int) -> EliashbergOperator:
    """Assemble the rank-N truncation at temperature ``t``.

    The 2N-1 kernel averages are computed once and cached on the result;
    every matrix entry is a combination of them.  Symmetry is exact by
    construction.
    """
    if n < 1:
        raise ValidationError(f"order must be >= 1, got {n}")
    if not t > 0.0:
        raise ValidationError(f"temperature must be positive, got {t}")
    min_omega = float(np.min(m.omegas[m.weights > 0])) if m.kind != "tabulated" else float(m.omegas[0])
    if min_omega > 0.0 and min_omega / t > _WMAX_OVER_T_LIMIT:
        kernel = np.zeros(2 * n, dtype=float)
        kernel[1:] = 1.0
        matrix = _limit_matrix(n)
        return EliashbergOperator(measure=m, temperature=t, order=n, matrix=matrix, kernel=kernel)
    kernel = m.kernel_values(t, 2 * n - 1)
    return EliashbergOperator(
        measure=m, temperature=t, order=n, matrix=_assemble_from_kernel(kernel, n), kernel=kernel
    )


def _positive_eigvec(matrix: np.ndarray, eigenvalue: float) -> np.ndarray:
    """Eigenvector for a known top eigenvalue, by inverse iteration with a
    scale-proportional regularizing offset; sign-fixed into the positive
    cone (the top eigenvector of these truncations is strictly positive)."""
    n = matrix.shape[0]
    if n == 1:
        return np.array([1.0])
    scale = max(abs(eigenvalue), float(np.max(np.abs(matrix))), 1e-300)
    shifted = matrix - (eigenvalue + 1e-9 * scale) * np.eye(n)
    x = np.ones(n) / math.sqrt(n)
    for _ in range(4):
        try:
            y = np.linalg.solve(shifted, x)
        except np.linalg.LinAlgError:
            y, *_ = np.linalg.lstsq(shifted, x, rcond=None)
        norm = np.linalg.norm(y)
        if norm == 0.0 or not np.all(np.isfinite(y)):
            break
        x = y / norm
        if np.linalg.norm(matrix @ x - eigenvalue * x) <= 1e-12 * scale:
            break
    if np.linalg.norm(matrix @ x - eigenvalue * x) > 1e-9 * scale:
        raise NumericalError("inverse iteration failed to pin the top eigenvector")
    if x[int(np.argmax(np.abs(x)))] < 0.0:
        x = -x
    return x


def k_numeric(m: SpectralMeasure, t: float, n: int) -> KBound:
    """Top eigenvalue of the rank-N truncation by dense eigensolve.

    The eigenvector is componentwise positive after sign normalization.
    """
    op = assemble_k(m, t, n)
    pair = sym_eig_top(op.matrix)
    return KBound(n=n, k_value=pair.value, lambda_upper=1.0 / pair.value, eigvec=pair.vector)


@lru_cache(maxsize=None)
def k_limit_T0(n: int) -> ZeroTemperatureLimit:
    """Measure-independent zero-temperature limit of the rank-N eigenvalue:
    k0 = -1 + 2 * sum_{k=0}^{N-1} 1/(2k+1), and the coupling floor 1/k0.

    Evaluated in exact rational arithmetic and rounded once, so small ranks
    come out as the exact fractions (5/3 and 3/5 at rank two, 247/105 at
    rank four).
    """
    if n < 1:
        raise ValidationError(f"order must be >= 1, got {n}")
    k0 = Fraction(-1) + 2 * sum(Fraction(1, 2 * k + 1) for k in range(n))
    return ZeroTemperatureLimit(k0=float(k0), lambda_floor=float(1 / k0))


# -- closed forms for ranks one to four --------------------------------------


def _clamped_arccos(x: float, slack: float = 1e-12) -> float:
    if x > 1.0:
        if x > 1.0 + slack:
            raise NumericalError(
                f"arccos argument {x!r} outside [-1, 1] beyond tolerance; the "
                "spectrum is too degenerate for the closed form in double "
                "precision (extreme dimensionless frequency) -- use the "
                "eigensolver route"
            )
        x = 1.0
    elif x < -1.0:
        if x < -1.0 - slack:
            raise NumericalError(
                f"arccos argument {x!r} outside [-1, 1] beyond tolerance; the "
                "spectrum is too degenerate for the closed form in double "
                "precision (extreme dimensionless frequency) -- use the "
                "eigensolver route"
            )
        x = -1.0
    return math.acos(x)


def _top_root_rank3(mat: np.ndarray) -> float:
    tr = float(np.trace(mat))
    # trace of the adjugate = sum of principal 2x2 minors
    tr_adj = 0.0
    for i, j in ((0, 1), (0, 2), (1, 2)):
        tr_adj += mat[i, i] * mat[j, j] - mat[i, j] * mat[j, i]
    det = float(np.linalg.det(mat))
    p = tr * tr / 3.0 - tr_adj
    if p <= 0.0:
        # all eigenvalues coincide; cannot happen with positive couplings,
        # but keep the algebraically exact answer
        return tr / 3.0
    q = 2.0 * tr ** 3 / 27.0 - tr * tr_adj / 3.0 + det
    angle = _clamped_arccos(0.5 * q * math.sqrt(27.0 / p ** 3))
    return (tr + 6.0 * math.sqrt(p / 3.0) * math.cos(angle / 3.0)) / 3.0


def _top_root_rank4(mat: np.ndarray) -> float:
    tr1 = float(np.trace(mat))
    m2 = mat @ mat
    tr2 = float(np.trace(m2))
    tr3 = float(np.trace(m2 @ mat))
    a = -tr1
    b = 0.5 * (tr1 * tr1 - tr2)
    c = -(tr1 ** 3 - 3.0 * tr2 * tr1 + 2.0 * tr3) / 6.0
    d = float(np.linalg.det(mat))
    x = 2.0 * b ** 3 - 9.0 * a * b * c + 27.0 * c * c + 27.0 * a * a * d - 72.0 * b * d
    y = b * b - 3.0 * a * c + 12.0 * d
    if y <= 0.0:
        raise NumericalError(f"resolvent-cubic discriminant quantity is nonpositive: {y!r}")
    angle = _clamped_arccos(x / (2.0 * math.sqrt(y ** 3)))
    z = (math.sqrt(y) * math.cos(angle / 3.0) - b + 0.375 * a * a) / 3.0
    if z <= 0.0:
        raise NumericalError(f"resolvent-cubic root is nonpositive: {z!r}")
    # z/2 is the largest zero of the resolvent cubic; the largest quartic
    # root pairs sqrt(z/2) with the radical whose depressed-quartic linear
    # coefficient (a^3 - 4ab + 8c)/8 enters with a minus sign -- the
    # opposite choice breaks the sign-parity constraint among the three
    # square roots and is not a root at all.
    inner = (
        0.1875 * a * a
        - 0.5 * b
        - 0.5 * z
        - (a ** 3 - 4.0 * a * b + 8.0 * c) / (16.0 * math.sqrt(2.0 * z))
    )
    if inner < 0.0:
        if inner < -1e-10 * max(1.0, a * a):
            raise NumericalError(f"quartic radical argument is negative: {inner!r}")
        inner = 0.0
    return math.sqrt(0.5 * z) + math.sqrt(inner) - 0.25 * a


def k_closed_form(m: SpectralMeasure, t: float, n: int) -> KBound:
    """Top eigenvalue of the rank-N truncation, N in {1, 2, 3, 4}, by the
    explicit spectral formulas (linear / quadratic / trigonometric cubic /
    quartic via its resolvent cubic).  Agrees with the dense eigensolver to
    ten digits relative; the two routes check each other in the test suite.

    The rank-four resolvent degenerates in double precision once the lower
    eigenvalues cluster toward the zero-temperature limit (dimensionless
    frequency beyond roughly 5e2); it then raises a named numerical error
    rather than returning a noise-dominated root.  Ranks one to three are
    stable at every temperature, as is the eigensolver route.
    """
    if n not in (1, 2, 3, 4):
        raise ValidationError(f"closed forms exist for ranks 1..4 only, got {n}")
    op = assemble_k(m, t, n)
    mat = op.matrix
    if n == 1:
        value = float(mat[0, 0])
        return KBound(n=1, k_value=value, lambda_upper=1.0 / value, eigvec=np.array([1.0]))
    if n == 2:
        tr = float(mat[0, 0] + mat[1, 1])
        det = float(mat[0, 0] * mat[1, 1] - mat[0, 1] * mat[1, 0])
        value = 0.5 * (tr + math.sqrt(tr * tr - 4.0 * det))
    elif n == 3:
        value = _top_root_rank3(mat)
    else:
        value = _top_root_rank4(mat)
    vec = _positive_eigvec(mat, value)
    return KBound(n=n, k_value=value, lambda_upper=1.0 / value, eigvec=vec)


def lambda2_closed(m: SpectralMeasure, t: float) -> float:
    """Rank-two coupling bound 1/k_2 in its explicit average form

        6 / ( <<1>+<3>> + sqrt( <<1>+<3>>^2 + 12 (<<1>+<2>>^2 + <<1>>(2<<1>>-<<3>>)) ) ).
    """
    kv = m.kernel_values(t, 3)
    s13 = kv[1] + kv[3]
    s12 = kv[1] + kv[2]
    radical = s13 * s13 + 12.0 * (s12 * s12 + kv[1] * (2.0 * kv[1] - kv[3]))
    return 6.0 / (s13 + math.sqrt(radical))


# -- fixed-point operator -----------------------------------------------------


def c_spectral_radius(
    m: SpectralMeasure,
    t: float,
    lam: float,
    n: int,
    tol: float = 1e-10,
) -> float:
    """Spectral radius of the rank-N fixed-point operator at coupling ``lam``.

    The operator is the diagonal resolvent of the drag part applied to the
    (entrywise positive) exchange part; its radius is < 1 exactly on the
    stable side lam < 1/k_N, equals 1 at the threshold, and exceeds 1 beyond
    it.  Evaluated by positive-cone power iteration.
    """
    if not lam > 0.0:
        raise ValidationError(f"coupling must be positive, got {lam}")
    op = assemble_k(m, t, n)
    idx = np.arange(n)
    inv_sqrt = 1.0 / np.sqrt(2.0 * idx + 1.0)
    diff = np.abs(idx[:, None] - idx[None, :])
    summ = idx[:, None] + idx[None, :] + 1
    exchange = (op.kernel[diff] + op.kernel[summ]) * np.outer(inv_sqrt, inv_sqrt)
    prefix = np.concatenate(([0.0], np.cumsum(op.kernel[1:n])))
    drag = 2.0 * prefix / (2.0 * idx + 1.0)
    resolvent = 1.0 / (1.0 / lam + drag)

    def apply(x: np.ndarray) -> np.ndarray:
        return resolvent * (exchange @ x)

    return power_iteration_positive(apply, n, tol=tol)


# -- temperature-derivative identity ------------------------------------------


@dataclass(frozen=True)
class DerivativeCheck:
    """Two independent evaluations of d/d(T^2) of the combination
    3<<1>> + 2<<2>> - <<3>> and their relative discrepancy."""

    finite_difference: float
    closed_form: float
    residual: float


_DERIV_COEFFS = (4392.0, 3888.0, 1370.0, 148.0, 2.0)


def _deriv_combination(m: SpectralMeasure, t: float) -> float:
    kv = m.kernel_values(t, 3)
    return 3.0 * kv[1] + 2.0 * kv[2] - kv[3]


def _deriv_closed_integrand(omega: np.ndarray, s: float) -> np.ndarray:
    """Rational closed form of d/ds of the kernel combination at one
    frequency, with s the squared first Matsubara offset (2 pi T)^2."""
    x = omega * omega
    numer = np.zeros_like(x)
    for i, coeff in enumerate(_DERIV_COEFFS, start=1):
        numer += coeff * x ** i * s ** (5 - i)
    denom = ((s + x) * (4.0 * s + x) * (9.0 * s + x)) ** 2
    return -numer / denom


def dk_dT2_identity_check(m: SpectralMeasure, t: float) -> DerivativeCheck:
    """Check the closed rational form of the temperature derivative.

    The combination 3<<1>> + 2<<2>> - <<3>> is differentiated with respect
    to T^2 both by central finite differences and through the closed
    rational integrand (whose numerator coefficients are the integers
    4392, 3888, 1370, 148, 2).  The closed integrand is strictly negative,
    which is what makes the rank-two coupling bound invertible at every
    temperature.  The chain-rule factor between d/d(T^2) and the squared
    Matsubara offset s = 4 pi^2 T^2 is included explicitly.
    """
    if not t > 0.0:
        raise ValidationError(f"temperature must be positive, got {t}")
    u = t * t
    h = 1e-5 * u
    fd = (_deriv_combination(m, math.sqrt(u + h)) - _deriv_combination(m, math.sqrt(u - h))) / (
        2.0 * h
    )
    s = 4.0 * math.pi ** 2 * u
    jacobian = 4.0 * math.pi ** 2  # ds/d(T^2)

    if m.kind in ("einstein", "discrete"):
        closed = jacobian * float(
            np.sum(m.weights * _deriv_closed_integrand(m.omegas, s))
        )
    else:
        acc = 0.0
        for a, b, alpha, beta in m._segments():
            acc += integrate_adaptive(
                lambda w: (alpha + beta * w) * float(_deriv_closed_integrand(np.array([w]), s)[0]),
                a,
                b,
                DEFAULT_TOL.quad_tol,
            )
        closed = jacobian * acc
    residual = abs(fd - closed) / max(abs(closed), 1e-300)
    return DerivativeCheck(finite_difference=fd, closed_form=closed, residual=residual)
