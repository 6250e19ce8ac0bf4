"""Dilated Chebyshev polynomials of the second kind and derived quantities.

The family is fixed by the initial values ``u_0(x) = 1``, ``u_1(x) = x``
together with the three-term recursion ``x*u_n(x) = u_{n+1}(x) + u_{n-1}(x)``.
Values at an integer ``N >= 2`` are the quantum dimensions of the level-n
irreducible corepresentations of the free orthogonal quantum group, and the
ratios ``u_n(t)/u_n(N)`` for ``t`` in ``[t0, N]`` are the eigenvalues of the
central multiplier net attached to point-evaluation states on the character
algebra.

All evaluation goes through the recursion.  For ``t > 2`` the closed form

    u_n(t) = (q(t)**(n+1) - q(t)**-(n+1)) / (q(t) - 1/q(t)),
    q(t) = (t + sqrt(t*t - 4)) / 2

holds and the test suite uses it as a cross-check, but it degenerates at
``t = 2`` (where ``q = 1``), so it is never the evaluation path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest

import numpy as np

from ._util import as_int, as_nonneg_int
from .errors import DomainError

#: Default decay anchor: midpoint of the admissible interval (2, 3), chosen so
#: that q(t0) = 2 and the decay constant is exactly 4/3.
DEFAULT_T0 = 2.5


def _check_t0(t0: float) -> float:
    t0 = float(t0)
    if not 2.0 < t0 < 3.0:
        raise DomainError(f"t0 must lie in the open interval (2, 3), got {t0}")
    return t0


@dataclass(frozen=True)
class ChebyParams:
    """Dimension parameter N and decay anchor t0 for one multiplier family."""

    N: int
    t0: float = DEFAULT_T0

    def __post_init__(self):
        object.__setattr__(self, "N", as_int(self.N, "N"))
        if self.N < 2:
            raise DomainError(f"N must be >= 2, got {self.N}")
        object.__setattr__(self, "t0", _check_t0(self.t0))

    @property
    def q_N(self) -> float:
        """q(N), the larger root of q + 1/q = N."""
        return q_of(self.N)

    @property
    def decay_c(self) -> float:
        """The decay constant attached to t0."""
        return decay_constant(self.t0)


def cheby_u(n, x):
    """Evaluate u_n(x) by the three-term recursion.

    Integer ``x`` gives exact (arbitrary-precision) integer arithmetic, float
    ``x`` gives float arithmetic, and float ndarrays evaluate pointwise.
    """
    n = as_nonneg_int(n, "n")
    one = x * 0 + 1  # multiplicative unit in the arithmetic of x
    if n == 0:
        return one
    prev, cur = one, x
    for _ in range(n - 1):
        prev, cur = cur, x * cur - prev
    return cur


def cheby_u_grid(n_max, xs) -> np.ndarray:
    """Rows u_0(xs) .. u_{n_max}(xs) for an array of evaluation points."""
    n_max = as_nonneg_int(n_max, "n_max")
    xs = np.asarray(xs, dtype=float)
    out = np.empty((n_max + 1,) + xs.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = xs
    for n in range(1, n_max):
        out[n + 1] = xs * out[n] - out[n - 1]
    return out


def cheby_coeffs(n) -> list[int]:
    """Exact integer coefficient vector of u_n; index i holds the x**i term.

    u_n is monic of degree n.
    """
    n = as_nonneg_int(n, "n")
    prev, cur = [1], [0, 1]
    if n == 0:
        return prev
    for _ in range(n - 1):
        shifted = [0] + cur  # multiply by x
        prev, cur = cur, [a - b for a, b in zip_longest(shifted, prev, fillvalue=0)]
    return cur


def q_of(t) -> float:
    """The larger root q >= 1 of q + 1/q = t, i.e. (t + sqrt(t^2 - 4))/2."""
    t = float(t)
    if t < 2.0:
        raise DomainError(f"q(t) requires t >= 2, got {t}")
    return (t + math.sqrt(t * t - 4.0)) / 2.0


@lru_cache(maxsize=None)
def _dim_orth(n: int, N: int) -> int:
    prev, cur = 1, N
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, N * cur - prev
    return cur


def dim_orth(n, N) -> int:
    """Exact dimension u_n(N) of the level-n orthogonal irreducible.

    Computed by the integer recursion; equals n+1 for N = 2.  Dimensions grow
    like q(N)**n, so the result is an arbitrary-precision integer.
    """
    n = as_nonneg_int(n, "n")
    N = as_int(N, "N")
    if N < 2:
        raise DomainError(f"N must be >= 2, got {N}")
    return _dim_orth(n, N)


@lru_cache(maxsize=None)
def _ratio(n: int, t: float, N: int) -> float:
    return cheby_u(n, t) / cheby_u(n, float(N))


def coeff_ratio(n, t, N, t0=DEFAULT_T0) -> float:
    """Multiplier eigenvalue u_n(t)/u_n(N) for t in [t0, N].

    Lies in (0, 1] and equals 1 exactly when t = N or n = 0.
    """
    n = as_nonneg_int(n, "n")
    N = as_int(N, "N")
    if N < 3:
        raise DomainError(f"N must be >= 3, got {N}")
    t0 = _check_t0(t0)
    t = float(t)
    if not t0 <= t <= N:
        raise DomainError(f"t must lie in [{t0}, {N}], got {t}")
    return _ratio(n, t, N)


def decay_constant(t0) -> float:
    """(1 - q(t0)^-2)^-1, the uniform constant of the geometric coefficient bound.

    Defined for 2 < t0 < 3; diverges as t0 -> 2 and is always > 1.
    """
    t0 = _check_t0(t0)
    q = q_of(t0)
    return 1.0 / (1.0 - q**-2)
