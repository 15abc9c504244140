"""Zero-temperature amplitude-damping channel on a truncated Fock space.

The channel acts as rho -> sum_k Y_k rho Y_k^dag with ladder-lowering Kraus
operators Y_k; eta = exp(-gamma t) is the per-photon survival factor.  On the
truncated space the Kraus family is exactly complete (each row's binomial sum
closes), so the map is trace preserving to rounding error for any input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameter
from .numerics import log_binomial


@dataclass(frozen=True)
class ChannelParams:
    """Damping rate and time, reduced to the survival factor eta = exp(-gamma t)."""

    gamma: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and self.gamma >= 0.0):
            raise InvalidParameter(f"gamma must be a finite nonnegative rate, got {self.gamma}")
        if not (math.isfinite(self.t) and self.t >= 0.0):
            raise InvalidParameter(f"t must be a finite nonnegative time, got {self.t}")

    @property
    def eta(self) -> float:
        return math.exp(-self.gamma * self.t)


def _check_eta(eta: float) -> None:
    if not (0.0 < eta <= 1.0):
        raise InvalidParameter(f"eta must lie in (0, 1], got {eta}")


def _kraus_coefficients(k: int, eta: float, dim: int) -> np.ndarray:
    """<n-k|Y_k|n> for n = k..dim-1 (length dim-k)."""
    if eta == 1.0:
        return np.ones(dim) if k == 0 else np.zeros(dim - k)
    n = np.arange(k, dim)
    logs = np.array([0.5 * log_binomial(v, k) for v in n])
    logs += 0.5 * (n - k) * math.log(eta) + 0.5 * k * math.log1p(-eta)
    return np.exp(logs)


def kraus_operator(k: int, eta: float, dim: int) -> np.ndarray:
    """Kraus operator Y_k as a dense dim x dim complex matrix.

    Nonzero entries sit on the k-th superdiagonal: sqrt(C(n,k)) eta^((n-k)/2)
    (1-eta)^(k/2) at (n-k, n).  Binomials are taken in log-domain.
    """
    if not 0 <= k < dim:
        raise InvalidParameter(f"need 0 <= k < dim, got k={k}, dim={dim}")
    _check_eta(eta)
    out = np.zeros((dim, dim), dtype=complex)
    coeff = _kraus_coefficients(k, eta, dim)
    idx = np.arange(dim - k)
    out[idx, idx + k] = coeff
    return out


def evolve(op: np.ndarray, eta: float, k_max: int | None = None) -> np.ndarray:
    """Apply the damping map sum_k Y_k op Y_k^dag.

    Exact on the truncated space when k runs over the full range (the
    default).  Linear in op, so non-Hermitian dyads |a><b| evolve by the
    same call; this is precisely how the cat's cross term is propagated.
    """
    op = np.asarray(op, dtype=complex)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise InvalidParameter(f"op must be a square matrix, got shape {op.shape}")
    _check_eta(eta)
    dim = op.shape[0]
    if k_max is None:
        k_max = dim
    if not 0 <= k_max <= dim:
        raise InvalidParameter(f"need 0 <= k_max <= dim, got {k_max}")
    out = np.zeros_like(op)
    for k in range(k_max):
        c = _kraus_coefficients(k, eta, dim)
        if not c.any():
            continue
        # Y_k op Y_k^dag restricted to the occupied block, without building Y_k
        out[: dim - k, : dim - k] += np.outer(c, c.conj()) * op[k:, k:]
    return out


def completeness_defect(eta: float, dim: int, guard: int = 0) -> float:
    """Max-norm of (sum_k Y_k^dag Y_k - I) on the first dim-guard rows.

    Analytically zero (binomial theorem); any residue is rounding noise.
    """
    _check_eta(eta)
    if dim <= 0:
        raise InvalidParameter(f"dim must be positive, got {dim}")
    if not 0 <= guard < dim:
        raise InvalidParameter(f"need 0 <= guard < dim, got {guard}")
    acc = np.zeros((dim, dim), dtype=complex)
    for k in range(dim):
        y = kraus_operator(k, eta, dim)
        acc += y.conj().T @ y
    acc -= np.eye(dim)
    rows = dim - guard
    return float(np.max(np.abs(acc[:rows, :])))


def density_defects(rho: np.ndarray) -> tuple[float, float, float]:
    """(hermiticity defect, trace defect, minimum eigenvalue) of a candidate density matrix."""
    rho = np.asarray(rho, dtype=complex)
    herm = float(np.max(np.abs(rho - rho.conj().T)))
    trace = abs(complex(np.trace(rho)) - 1.0)
    min_eig = float(np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))))
    return herm, float(trace), min_eig


def assert_density_matrix(
    rho: np.ndarray,
    herm_tol: float = 1e-10,
    trace_tol: float = 1e-9,
    eig_tol: float = -1e-9,
) -> None:
    """Raise InvalidParameter unless rho is Hermitian, unit-trace, and PSD within tolerance."""
    herm, trace, min_eig = density_defects(rho)
    if herm > herm_tol or trace > trace_tol or min_eig < eig_tol:
        raise InvalidParameter(
            f"not a density matrix: hermiticity defect {herm:.3e}, "
            f"trace defect {trace:.3e}, min eigenvalue {min_eig:.3e}"
        )
