"""Separation scans over deformation parameters and calibration of xi.

Scans record every construction failure as a gap instead of a value, so
curves stay honest across the deformation's singular points.  Calibration
pins the smallest xi > 0 where the separation meets a target, by a coarse
scan followed by bisection inside the first gap-free bracketing interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .deformation import DeformationSpec
from .errors import DomainError, InvalidParameter, NoCrossing, SingularBracket
from .fock import DEFAULT_FLOOR, DEFAULT_MAX_DIM, separation

FAMILIES = ("q", "laguerre")

COARSE_STEP = 1e-3
REL_TOL = 1e-9
MAX_BISECT = 200


@dataclass(frozen=True)
class ScanCurve:
    """Ordered (param, value) samples; a None value marks a gap."""

    params: tuple[float, ...]
    values: tuple[float | None, ...]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.params) != len(self.values):
            raise InvalidParameter("params and values must have equal length")
        if any(b <= a for a, b in zip(self.params, self.params[1:])):
            raise InvalidParameter("scan params must be strictly increasing")


def _grid(p_min: float, p_max: float, step: float) -> list[float]:
    if not (p_min < p_max):
        raise InvalidParameter(f"need p_min < p_max, got [{p_min}, {p_max}]")
    if not (step > 0.0):
        raise InvalidParameter(f"step must be positive, got {step}")
    count = int(math.floor((p_max - p_min) / step + 1e-9)) + 1
    return [p_min + i * step for i in range(count)]


def _spec_for(family: str, param: float) -> DeformationSpec:
    if family == "q":
        return DeformationSpec.q_deform(param)
    if family == "laguerre":
        return DeformationSpec.laguerre(param)
    raise InvalidParameter(f"unknown deformation family {family!r}")


def scan_separation(
    family: str,
    zeta: float,
    p_min: float,
    p_max: float,
    step: float,
    max_dim: int = DEFAULT_MAX_DIM,
    floor: float = DEFAULT_FLOOR,
) -> ScanCurve:
    """Sample d(param) on a regular grid; construction errors become gaps."""
    params = _grid(p_min, p_max, step)
    values: list[float | None] = []
    for p in params:
        try:
            values.append(separation(_spec_for(family, p), zeta, max_dim=max_dim, floor=floor))
        except DomainError:
            values.append(None)
    return ScanCurve(
        params=tuple(params),
        values=tuple(values),
        meta={
            "family": family,
            "zeta": zeta,
            "step": step,
            "undeformed_reference": 2.0 * zeta,
        },
    )


def _first_clean_bracket(
    points: list[tuple[float, float | None]]
) -> tuple[tuple[float, float], tuple[float, float]]:
    """First adjacent pair with a sign change and no gap on either side.

    Raises SingularBracket when sign changes exist but every one straddles
    a gap; NoCrossing when there is no sign change at all.
    """
    touched_gap = False
    last_valid: tuple[float, float] | None = None
    gap_since_valid = False
    for x, g in points:
        if g is None:
            gap_since_valid = True
            continue
        if last_valid is not None and last_valid[1] * g < 0.0:
            if gap_since_valid:
                touched_gap = True
            else:
                return last_valid, (x, g)
        last_valid = (x, g)
        gap_since_valid = False
    if touched_gap:
        raise SingularBracket(
            "every sign change in the scan straddles a construction gap"
        )
    raise NoCrossing("no bracketing interval found in the scan window")


def calibrate_xi(
    zeta: float,
    d_target: float,
    xi_max: float = 1.0,
    max_dim: int = DEFAULT_MAX_DIM,
    floor: float = DEFAULT_FLOOR,
) -> float:
    """Smallest xi > 0 with d(xi) = d_target, to 1e-9 relative.

    Coarse scan at step 1e-3, then bisection inside the first gap-free
    bracketing interval.  Deterministic: fixed grid, fixed iteration cap.
    """
    if not (d_target > 0.0):
        raise InvalidParameter(f"d_target must be positive, got {d_target}")
    if not (xi_max > 0.0):
        raise InvalidParameter(f"xi_max must be positive, got {xi_max}")

    def g(xi: float) -> float | None:
        try:
            return separation(
                DeformationSpec.laguerre(xi), zeta, max_dim=max_dim, floor=floor
            ) - d_target
        except DomainError:
            return None

    tol = REL_TOL * d_target
    points: list[tuple[float, float | None]] = []
    for xi in _grid(0.0, xi_max, COARSE_STEP):
        gx = g(xi)
        if gx is not None and xi > 0.0 and abs(gx) < tol:
            return xi
        points.append((xi, gx))

    (a, ga), (b, gb) = _first_clean_bracket(points)
    for _ in range(MAX_BISECT):
        mid = 0.5 * (a + b)
        gm = g(mid)
        if gm is None:
            raise SingularBracket(
                f"construction gap opened inside the bracket at xi={mid:.9g}"
            )
        if abs(gm) < tol:
            return mid
        if ga * gm < 0.0:
            b, gb = mid, gm
        else:
            a, ga = mid, gm
    return 0.5 * (a + b)
