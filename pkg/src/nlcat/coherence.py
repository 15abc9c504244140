"""Quantum visibility of two-component cat states under amplitude damping.

Two routes compute the same quantity:

* visibility_deformed: the closed series ratio in the measured photon
  number n, built directly from the deformed factorials (fast path);
* visibility_numeric: Kraus evolution of the cat's dyad components on the
  truncated Fock space (the oracle of record).

Both are free of normalization constants; they cancel between numerator
and denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import evolve
from .deformation import (
    EXP_FLOOR,
    EXP_GUARD,
    DeformationSpec,
    deformed_number_table,
)
from .errors import (
    DegenerateDenominator,
    InvalidParameter,
    NegativeDeformedFactorial,
    NonConvergent,
)
from .fock import DEFAULT_FLOOR, f_coherent
from .numerics import CompensatedSum

SERIES_CAP = 512


@dataclass(frozen=True)
class VisibilitySample:
    """Visibility at one (n, gamma_t) point with its measurement diagnostics."""

    n: int
    gamma_t: float
    value: float
    p_plus: float
    p_minus: float
    c_abs: float


def visibility_undeformed(alpha: float, eta: float) -> float:
    """exp(-2 alpha^2 (1 - eta)); independent of the measured photon number."""
    if not (0.0 < eta <= 1.0):
        raise InvalidParameter(f"eta must lie in (0, 1], got {eta}")
    return math.exp(-2.0 * alpha * alpha * (1.0 - eta))


def visibility_deformed(
    spec: DeformationSpec,
    zeta: float,
    n: int,
    eta: float,
) -> float:
    """Deformed visibility at photon number n via the factorial series.

    With y = zeta^2 (1 - eta), both series run over k with terms
    ((n+k)!/k!) * (+-y)^k / [n+k]_f!; the ratio |alternating| / positive is
    the visibility.  Terms follow the stable recursion
    t_k = t_{k-1} * (n+k) y / (k [n+k]), so no factorial ever materializes.
    """
    if n < 0:
        raise InvalidParameter(f"n must be nonnegative, got {n}")
    if not (0.0 < eta <= 1.0):
        raise InvalidParameter(f"eta must lie in (0, 1], got {eta}")
    y = zeta * zeta * (1.0 - eta)
    if y == 0.0:
        return 1.0
    table = deformed_number_table(spec, n + SERIES_CAP)
    num = CompensatedSum(1.0)
    den = CompensatedSum(1.0)
    term = 1.0
    tail = []
    for k in range(1, SERIES_CAP + 1):
        m = n + k
        dn = table[m]
        if dn <= 0.0:
            # the same rule as state construction: a dead level is tolerable
            # only once the series no longer carries weight there
            if abs(term) >= EXP_FLOOR * den.total:
                raise NegativeDeformedFactorial(
                    f"[{m}]_f! is nonpositive inside the visibility series"
                )
            break
        term *= (m * y) / (k * dn)
        if not math.isfinite(term):
            raise NonConvergent(f"visibility series diverged near term {k}")
        num.add(term if k % 2 == 0 else -term)
        den.add(term)
        tail.append(abs(term))
        if term == 0.0:
            break
    else:
        if any(t >= EXP_FLOOR * den.total for t in tail[-EXP_GUARD:]):
            raise NonConvergent(
                f"visibility series did not settle within {SERIES_CAP} terms"
            )
    d = den.total
    if d < 1e-300:
        raise DegenerateDenominator("visibility denominator underflowed")
    return abs(num.total) / d


def visibility_numeric(
    spec: DeformationSpec,
    zeta: float,
    n: int,
    eta: float,
    dim: int = 64,
    floor: float = DEFAULT_FLOOR,
) -> VisibilitySample:
    """Visibility from Kraus evolution of the cat's dyad components.

    Builds |z><z|, |-z><-z| and the cross dyad |z><-z| from the f-coherent
    state, evolves each through the damping channel, and reads the photon
    number diagonal.  Normalization constants cancel in the ratio.
    """
    if n < 0 or n >= dim:
        raise InvalidParameter(f"need 0 <= n < dim, got n={n}, dim={dim}")
    if not (0.0 < eta <= 1.0):
        raise InvalidParameter(f"eta must lie in (0, 1], got {eta}")
    plus = f_coherent(spec, zeta, max_dim=dim, floor=floor)
    minus = f_coherent(spec, -zeta, max_dim=dim, floor=floor)
    cp = plus.padded(dim)
    cm = minus.padded(dim)
    p_plus = evolve(np.outer(cp, cp.conj()), eta)[n, n].real
    p_minus = evolve(np.outer(cm, cm.conj()), eta)[n, n].real
    cross = evolve(np.outer(cp, cm.conj()), eta)
    c_abs = abs(coherence_function(cross, n))
    if p_plus * p_minus < 1e-300:
        raise DegenerateDenominator(
            f"no measurement support at n={n}: P+ P- = {p_plus * p_minus:.3e}"
        )
    return VisibilitySample(
        n=n,
        gamma_t=-math.log(eta),
        value=c_abs / math.sqrt(p_plus * p_minus),
        p_plus=p_plus,
        p_minus=p_minus,
        c_abs=c_abs,
    )


def coherence_function(evolved_cross_dyad: np.ndarray, n: int) -> complex:
    """C(n) = <n| rho_cross |n>, the photon-number diagonal of the cross dyad."""
    dyad = np.asarray(evolved_cross_dyad)
    if n < 0 or n >= dyad.shape[0]:
        raise InvalidParameter(f"n={n} outside the dyad dimension {dyad.shape[0]}")
    return complex(dyad[n, n])
