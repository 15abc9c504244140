"""Truncated Fock-space states: coherent, f-coherent, and even cat states.

Amplitudes are stored as complex vectors indexed by photon number.  For the
real displacement parameters used throughout, constructors produce real
amplitudes; the complex carrier exists for downstream operator algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .deformation import DeformationSpec, deformed_number_table
from .errors import (
    InvalidParameter,
    NegativeDeformedFactorial,
    NonNormalizable,
    TruncationTooSmall,
    DegenerateSuperposition,
)

DEFAULT_FLOOR = 1e-15
DEFAULT_MAX_DIM = 256

_NORM_ATOL = 1e-9
_TAIL_LIMIT = 1e-9


@dataclass(frozen=True)
class FockState:
    """Normalized truncated Fock-basis vector with tail bookkeeping.

    tail_mass estimates the probability discarded by the truncation; accepted
    states keep it below 1e-9.  Instances are immutable and safe to share.
    """

    amplitudes: np.ndarray
    tail_mass: float = 0.0

    def __post_init__(self):
        amp = np.array(self.amplitudes, dtype=complex)
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)

    @property
    def dim(self) -> int:
        return len(self.amplitudes)

    def norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def padded(self, dim: int) -> np.ndarray:
        """Amplitudes embedded into a larger Fock space."""
        if dim < self.dim:
            raise InvalidParameter(
                f"cannot embed a dim-{self.dim} state into dim {dim}"
            )
        out = np.zeros(dim, dtype=complex)
        out[: self.dim] = self.amplitudes
        return out


def coherent(alpha: float, dim: int) -> FockState:
    """Coherent state on a fixed window, renormalized over the truncation.

    Raises TruncationTooSmall (with a sufficient-dimension estimate) if the
    Poissonian weight beyond the window exceeds 1e-9.
    """
    if dim <= 0:
        raise InvalidParameter(f"dim must be positive, got {dim}")
    if not math.isfinite(alpha):
        raise InvalidParameter(f"alpha must be finite, got {alpha}")
    a2 = alpha * alpha
    terms = np.empty(dim)
    terms[0] = 1.0
    for n in range(1, dim):
        terms[n] = terms[n - 1] * a2 / n
    body = float(terms.sum())

    # walk the Poisson tail beyond the window until it is negligible
    tail = 0.0
    t = terms[-1]
    n = dim
    suffix = []
    while True:
        t = t * a2 / n
        if not t > 0.0 or (t < 1e-22 * body and n > a2):
            break
        suffix.append(t)
        tail += t
        n += 1
        if n > dim + 100000:
            raise NonNormalizable("coherent tail walk failed to terminate")
    total = body + tail
    if tail / total >= _TAIL_LIMIT:
        # smallest window whose remaining tail is acceptable
        cum = np.cumsum(suffix[::-1])[::-1]
        required = dim + len(suffix)
        for i, rest in enumerate(cum):
            if rest / total < _TAIL_LIMIT:
                required = dim + i
                break
        raise TruncationTooSmall(
            f"dim {dim} keeps only {1 - tail / total:.6f} of the coherent state "
            f"(alpha^2 = {a2:.6g}); need roughly dim {required}",
            required_dim=required,
        )
    amp = np.sqrt(terms / body)
    if alpha < 0:
        amp = amp * (-1.0) ** np.arange(dim)
    return FockState(amp, tail_mass=tail / total)


def f_coherent(
    spec: DeformationSpec,
    zeta: float,
    max_dim: int = DEFAULT_MAX_DIM,
    floor: float = DEFAULT_FLOOR,
) -> FockState:
    """f-deformed coherent state with adaptive truncation.

    Unnormalized weights follow t_n = t_{n-1} * zeta^2 / [n] with ladder
    weights [n] from the deformation.  The whole table up to max_dim is
    evaluated before choosing the support: Laguerre deformations routinely
    dip below any floor for a few levels and then revive with significant
    weight, so no early exit on small terms is permitted.
    """
    if max_dim <= 0:
        raise InvalidParameter(f"max_dim must be positive, got {max_dim}")
    if not math.isfinite(zeta):
        raise InvalidParameter(f"zeta must be finite, got {zeta}")
    if not 0.0 < floor < 1.0:
        raise InvalidParameter(f"floor must be in (0, 1), got {floor}")
    z2 = zeta * zeta
    dn = deformed_number_table(spec, max_dim - 1)

    terms = [1.0]
    running = 1.0
    for n in range(1, max_dim):
        d = dn[n]
        if d <= 0.0:
            # nonpositive deformed factorial from here on; tolerable only
            # where the state no longer carries weight
            if terms[-1] >= floor * running:
                raise NegativeDeformedFactorial(
                    f"[{n}]_f! is nonpositive while the level-{n - 1} weight "
                    f"({terms[-1]:.3e}) is above the floor"
                )
            break
        t = terms[-1] * z2 / d
        if not math.isfinite(t):
            raise TruncationTooSmall(
                f"state weights overflow at level {n}; series looks divergent"
            )
        terms.append(t)
        running += t
    terms = np.asarray(terms)
    total = float(terms.sum())
    if total <= 0.0:
        raise NonNormalizable("normalization sum is nonpositive")

    if len(terms) == max_dim and np.any(terms[-3:] >= floor * total):
        raise TruncationTooSmall(
            f"max_dim {max_dim} reached before the term floor; state not converged"
        )

    keep = int(np.max(np.nonzero(terms >= floor * total))) + 1
    kept = terms[:keep]
    dropped = total - float(kept.sum())
    amp = np.sqrt(kept / kept.sum())
    if zeta < 0:
        amp = amp * (-1.0) ** np.arange(keep)
    return FockState(amp, tail_mass=dropped / total)


def overlap(a: FockState, b: FockState) -> complex:
    """<a|b> = sum conj(a_n) b_n, embedding the smaller state if needed."""
    dim = max(a.dim, b.dim)
    return complex(np.vdot(a.padded(dim), b.padded(dim)))


def even_cat(plus: FockState, minus: FockState) -> FockState:
    """Normalized symmetric superposition (|plus> + |minus>)/sqrt(2 + 2 Re<plus|minus>)."""
    for s in (plus, minus):
        if abs(s.norm() - 1.0) > _NORM_ATOL:
            raise InvalidParameter("even_cat requires normalized components")
    denom = 2.0 + 2.0 * overlap(plus, minus).real
    if denom < 1e-12:
        raise DegenerateSuperposition(
            f"components are nearly opposite (2 + 2 Re overlap = {denom:.3e})"
        )
    dim = max(plus.dim, minus.dim)
    amp = (plus.padded(dim) + minus.padded(dim)) / math.sqrt(denom)
    return FockState(amp, tail_mass=max(plus.tail_mass, minus.tail_mass))


def number_distribution(state: FockState) -> np.ndarray:
    """P(n) = |c_n|^2 for the (normalized) state."""
    return np.abs(state.amplitudes) ** 2


def separation(
    spec: DeformationSpec,
    zeta: float,
    max_dim: int = DEFAULT_MAX_DIM,
    floor: float = DEFAULT_FLOOR,
) -> float:
    """Component separation d = <zeta,f|(a + a^dag)|zeta,f>.

    Computed as 2 Re sum_n sqrt(n+1) conj(c_n) c_{n+1} over the truncated
    normalized amplitudes, which is the same quantity evaluated on the state
    actually used downstream.  Identity deformation gives 2*zeta up to the
    truncation defect.
    """
    state = f_coherent(spec, zeta, max_dim=max_dim, floor=floor)
    c = state.amplitudes
    if state.dim < 2:
        return 0.0
    n = np.arange(state.dim - 1)
    return 2.0 * float(np.sum(np.sqrt(n + 1) * np.conj(c[:-1]) * c[1:]).real)
