"""Deformation functions f(n), deformed factorials, and the deformed exponential.

Two concrete deformations are supported next to the identity:

* q-deformation      f(n) = sqrt([n]_q / n),  [n]_q = (q^n - q^-n)/(q - q^-1)
* Laguerre (L-) type f(n) = L^1_n(xi^2) / ((n+1) L^0_n(xi^2))

The ladder weight of level n is the deformed number [n] = n f(n)^2 (so the
q-deformation reproduces the basic number [n]_q exactly), and the deformed
factorial is [n]_f! = f(0)^2 * prod_{k=1..n} k f(k)^2, which reduces to n!
for the identity.  All factorial-like quantities are kept in signed
log-domain; in linear scale they overflow by n ~ 170.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameter, NonConvergent, SingularDeformation
from .numerics import CompensatedSum

# Laguerre denominator guard: below this the deformation value is garbage.
SINGULAR_RTOL = 1e-12

# Series truncation: stop once |term| < EXP_FLOOR * |partial sum| for
# EXP_GUARD consecutive terms; give up at EXP_CAP terms.  The consecutive
# guard exists because alternating deformed series can have a single
# accidentally small term.
EXP_FLOOR = 1e-15
EXP_GUARD = 3
EXP_CAP = 512


@dataclass(frozen=True)
class DeformationSpec:
    """Which deformation is in force and its parameter.

    Use the factory methods; the constructor validates but does not guess.
    """

    kind: str
    q: float = 1.0
    xi: float = 0.0

    def __post_init__(self):
        if self.kind not in ("identity", "q", "laguerre"):
            raise InvalidParameter(f"unknown deformation kind {self.kind!r}")
        if self.kind == "q":
            if not math.isfinite(self.q) or self.q <= 0.0:
                raise InvalidParameter(f"q must be a finite positive real, got {self.q}")
        if self.kind == "laguerre":
            if not math.isfinite(self.xi) or self.xi < 0.0:
                raise InvalidParameter(f"xi must be a finite nonnegative real, got {self.xi}")

    @classmethod
    def identity(cls) -> "DeformationSpec":
        return cls(kind="identity")

    @classmethod
    def q_deform(cls, q: float) -> "DeformationSpec":
        return cls(kind="q", q=float(q))

    @classmethod
    def laguerre(cls, xi: float) -> "DeformationSpec":
        return cls(kind="laguerre", xi=float(xi))

    def describe(self) -> str:
        if self.kind == "q":
            return f"q-deformation q={self.q:.12g}"
        if self.kind == "laguerre":
            return f"laguerre-deformation xi={self.xi:.12g}"
        return "identity"


@dataclass(frozen=True)
class SignedLogValue:
    """A real number stored as (sign, log|value|); sign 0 means exact zero."""

    sign: int
    log_magnitude: float

    @classmethod
    def from_real(cls, x: float) -> "SignedLogValue":
        if x == 0.0:
            return cls(0, 0.0)
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    def to_real(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude)

    def combine(self, other: "SignedLogValue") -> "SignedLogValue":
        """Product in log-domain: signs multiply, log-magnitudes add."""
        if self.sign == 0 or other.sign == 0:
            return SignedLogValue(0, 0.0)
        return SignedLogValue(self.sign * other.sign,
                              self.log_magnitude + other.log_magnitude)


def laguerre(m: int, n: int, x: float) -> float:
    """Associated Laguerre polynomial L^m_n(x) by the three-term recurrence in n."""
    if m < 0 or n < 0:
        raise InvalidParameter(f"laguerre orders must be nonnegative, got m={m}, n={n}")
    if n == 0:
        return 1.0
    prev = 1.0
    cur = m + 1.0 - x
    for j in range(1, n):
        prev, cur = cur, ((2 * j + m + 1 - x) * cur - (j + m) * prev) / (j + 1)
    return cur


def _laguerre_tables(nmax: int, x: float) -> tuple[np.ndarray, np.ndarray]:
    """L^0_n(x) and L^1_n(x) for n = 0..nmax."""
    L0 = np.empty(nmax + 1)
    L1 = np.empty(nmax + 1)
    L0[0] = L1[0] = 1.0
    if nmax >= 1:
        L0[1] = 1.0 - x
        L1[1] = 2.0 - x
    for n in range(1, nmax):
        L0[n + 1] = ((2 * n + 1 - x) * L0[n] - n * L0[n - 1]) / (n + 1)
        L1[n + 1] = ((2 * n + 2 - x) * L1[n] - (n + 1) * L1[n - 1]) / (n + 1)
    return L0, L1


def _laguerre_f(spec: DeformationSpec, L0n: float, L1n: float, n: int) -> float:
    if abs(L0n) < SINGULAR_RTOL * max(1.0, abs(L1n)):
        raise SingularDeformation(
            f"L^0_{n}({spec.xi**2:.12g}) vanishes; f({n}) is singular at xi={spec.xi:.12g}"
        )
    return L1n / ((n + 1) * L0n)


def f_value(spec: DeformationSpec, n: int) -> float:
    """The deformation value f(n); f(0) = 1 for every supported deformation."""
    if n < 0:
        raise InvalidParameter(f"n must be nonnegative, got {n}")
    if n == 0 or spec.kind == "identity":
        return 1.0
    if spec.kind == "q":
        if spec.q == 1.0:
            # (q^n - q^-n)/(q - q^-1) -> n as q -> 1; the raw formula is 0/0.
            return 1.0
        theta = abs(math.log(spec.q))
        return math.sqrt(math.sinh(n * theta) / (n * math.sinh(theta)))
    x = spec.xi * spec.xi
    return _laguerre_f(spec, laguerre(0, n, x), laguerre(1, n, x), n)


def deformed_number(spec: DeformationSpec, n: int) -> float:
    """Ladder weight [n] = n * f(n)^2; the identity gives [n] = n."""
    f = f_value(spec, n)
    return n * f * f


def deformed_number_table(spec: DeformationSpec, nmax: int) -> np.ndarray:
    """[n] for n = 0..nmax in one pass (the Laguerre recurrence is shared).

    Raises SingularDeformation as soon as any required f(n) sits on a pole.
    """
    n = np.arange(nmax + 1, dtype=float)
    if spec.kind == "identity":
        return n
    if spec.kind == "q":
        if spec.q == 1.0:
            return n
        theta = abs(math.log(spec.q))
        out = n.copy()
        out[1:] = np.sinh(n[1:] * theta) / math.sinh(theta)
        return out
    x = spec.xi * spec.xi
    L0, L1 = _laguerre_tables(nmax, x)
    out = np.zeros(nmax + 1)
    for k in range(1, nmax + 1):
        f = _laguerre_f(spec, L0[k], L1[k], k)
        out[k] = k * f * f
    return out


def deformed_factorial(spec: DeformationSpec, n: int) -> SignedLogValue:
    """[n]_f! = f(0)^2 * prod_{k=1..n} [k] in signed log form; [0]_f! = 1."""
    if n < 0:
        raise InvalidParameter(f"n must be nonnegative, got {n}")
    acc = SignedLogValue.from_real(f_value(spec, 0) ** 2)
    if n == 0:
        return acc
    table = deformed_number_table(spec, n)
    for k in range(1, n + 1):
        acc = acc.combine(SignedLogValue.from_real(table[k]))
    return acc


def exp_f(spec: DeformationSpec, x: float) -> float:
    """Deformed exponential sum_n x^n / [n]_f!.

    Reduces to exp(x) for the identity; for genuine deformations it is
    non-extensive: exp_f(x) * exp_f(y) != exp_f(x + y).

    The whole series is accumulated up to the hard cap; convergence then
    requires the last EXP_GUARD terms to sit below EXP_FLOOR relative to
    the sum.  Early exit on small terms is deliberately avoided: Laguerre
    deformations can dip below any floor for a few levels and then revive
    with non-negligible weight.
    """
    if not math.isfinite(x):
        raise InvalidParameter(f"x must be finite, got {x}")
    table = deformed_number_table(spec, EXP_CAP)
    acc = CompensatedSum(1.0)
    term = 1.0
    tail = []
    for n in range(1, EXP_CAP + 1):
        dn = table[n]
        if dn == 0.0:
            raise NonConvergent(
                f"deformed number [{n}] vanishes; exp_f series has no finite limit"
            )
        term *= x / dn
        if not math.isfinite(term):
            raise NonConvergent(f"exp_f series diverged near term {n}")
        acc.add(term)
        tail.append(abs(term))
        if term == 0.0:
            break
    total = acc.total
    if any(t >= EXP_FLOOR * abs(total) for t in tail[-EXP_GUARD:]):
        raise NonConvergent(
            f"exp_f series did not settle within {EXP_CAP} terms "
            f"(last |term| {tail[-1]:.3e} vs sum {total:.3e})"
        )
    return total
