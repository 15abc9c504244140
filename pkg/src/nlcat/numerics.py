"""Small numerical utilities: compensated summation and log-domain binomials."""

import math


class CompensatedSum:
    """Neumaier-compensated accumulator.

    Alternating series with large terms and a small result (visibility
    numerators) lose digits under naive summation; the compensation keeps
    the error at one ulp of the true sum.
    """

    __slots__ = ("_sum", "_comp")

    def __init__(self, value: float = 0.0):
        self._sum = value
        self._comp = 0.0

    def add(self, term: float) -> None:
        t = self._sum + term
        if abs(self._sum) >= abs(term):
            self._comp += (self._sum - t) + term
        else:
            self._comp += (term - t) + self._sum
        self._sum = t

    @property
    def total(self) -> float:
        return self._sum + self._comp


def log_binomial(n: int, k: int) -> float:
    """log C(n, k) via lgamma; C(255, 127) overflows any integer path."""
    if k < 0 or k > n:
        return -math.inf
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
