"""Central multiplier nets: coefficients, decay bounds, truncation certificates.

A central multiplier acts as a scalar on each irreducible level.  For the free
orthogonal quantum group the net indexed by t in [t0, N] has eigenvalue
``u_n(t)/u_n(N)`` at level n; for the free unitary quantum group the
eigenvalue at a word g is

    a_t(g) = r(t)**(number of nonzero circle exponents of g)
             * prod over blocks k of u_k(t)/u_k(N),

with ``r(t) = (1 - q(t)^-2)/(1 - q(N)^-2)``.  Both families are unital,
bounded by 1 in absolute value, and decay geometrically:
``coefficient <= C_t0 * (t/N)**level`` with ``C_t0 = (1 - q(t0)^-2)^-1``.

Combining the geometric decay with a rapid-decay (Haagerup-type) inequality
gives computable operator-norm certificates for truncating the net to finitely
many levels: the L2->Linf norm of a net with level coefficients ``a_n`` is at
most ``pi * K * k_a / sqrt(6)`` where ``K`` is the rapid-decay constant and
``k_a = sup (n+1)^2 |a_n|``.  The rapid-decay constants are quantum-group
data that this package does not derive; callers must supply them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from types import MappingProxyType

from ._util import as_int, as_nonneg_int
from .chebyshev import DEFAULT_T0, _check_t0, cheby_u, coeff_ratio, decay_constant, dim_orth, q_of
from .errors import DomainError, ResourceCapError
from .free_unitary import AlternatingForm, all_words, alternating_form, dim_unitary, involution, word_parse

#: Default cap on the number of entries of a unitary coefficient table; the
#: label set doubles per level, so tables are refused rather than silently
#: truncated beyond this size.
DEFAULT_ENTRY_CAP = 2**20

#: Comparison slack absorbing double-precision rounding in bound checks.
BOUND_SLACK = 1e-12


class Group(enum.Enum):
    """Which of the two quantum-group families a table belongs to."""

    ORTH = "o"
    UNIT = "u"

    @classmethod
    def coerce(cls, value) -> "Group":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        table = {
            "o": cls.ORTH,
            "orth": cls.ORTH,
            "orthogonal": cls.ORTH,
            "u": cls.UNIT,
            "unit": cls.UNIT,
            "unitary": cls.UNIT,
        }
        if key not in table:
            raise DomainError(f"unknown group {value!r}; expected 'o' or 'u'")
        return table[key]

    @property
    def trivial_label(self):
        return 0 if self is Group.ORTH else ""


def _level(label) -> int:
    return len(label) if isinstance(label, str) else as_nonneg_int(label, "label")


@dataclass(frozen=True)
class CentralStateO(object):
    """Point-evaluation state at t on the orthogonal character algebra.

    The character algebra of the full C*-algebra is continuous functions on
    [-N, N], so any t with |t| <= N gives a state; it sends the level-n
    character to u_n(t), and |u_n(t)| <= u_n(N) throughout the interval.
    """

    t: float
    N: int

    def __post_init__(self):
        object.__setattr__(self, "N", as_int(self.N, "N"))
        if self.N < 3:
            raise DomainError(f"N must be >= 3, got {self.N}")
        object.__setattr__(self, "t", float(self.t))
        if abs(self.t) > self.N:
            raise DomainError(f"t must lie in [-{self.N}, {self.N}], got {self.t}")

    def char_value(self, n) -> float:
        """Value u_n(t) of the state on the level-n character."""
        return cheby_u(n, self.t)


def central_coeff_orth(n, state: CentralStateO) -> float:
    """Level-n eigenvalue u_n(t)/u_n(N) of the central multiplier at the state."""
    return state.char_value(n) / cheby_u(n, float(state.N))


@dataclass(frozen=True)
class MultiplierCoeffs:
    """Finite coefficient table of a central multiplier net.

    ``entries`` maps labels (levels for the orthogonal family, words for the
    unitary one) to eigenvalues in (0, 1]; the trivial label, when present,
    carries exactly 1.  ``truncated`` distinguishes a genuinely finite net
    (a truncation, zero beyond the stored levels) from a stored window of the
    full net, whose unstored levels are dominated by the geometric envelope
    ``decay_constant(t0) * (t/N)**level``.
    """

    group: Group
    entries: dict
    t: float
    N: int
    t0: float = DEFAULT_T0
    r: float | None = None
    truncated: bool = True

    def __post_init__(self):
        object.__setattr__(self, "group", Group.coerce(self.group))
        object.__setattr__(self, "N", as_int(self.N, "N"))
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "t0", _check_t0(self.t0))
        if self.group is Group.UNIT and self.r is None:
            object.__setattr__(self, "r", r_of(self.t, self.N, self.t0))
        for label, value in self.entries.items():
            if not 0.0 < value <= 1.0 + BOUND_SLACK:
                raise DomainError(f"coefficient at {label!r} is {value}, outside (0, 1]")
        trivial = self.entries.get(self.group.trivial_label)
        if trivial is not None and trivial != 1.0:
            raise DomainError(f"trivial-label coefficient must be exactly 1, got {trivial}")
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    def level_maxima(self) -> dict[int, float]:
        """Largest stored |coefficient| per level."""
        out: dict[int, float] = {}
        for label, value in self.entries.items():
            n = _level(label)
            out[n] = max(out.get(n, 0.0), abs(value))
        return out

    @property
    def envelope(self) -> tuple[float, float]:
        """(C, ratio) of the dominating bound C * ratio**level."""
        return decay_constant(self.t0), self.t / self.N


def net_l2_norm(coeffs: MultiplierCoeffs) -> float:
    """L2 operator norm of the table: the supremum of |coefficient|.

    For the nets built here the coefficient families are dominated by a
    decreasing envelope, so the supremum over stored labels is the exact
    operator norm; an empty table has norm 0.
    """
    return max((abs(v) for v in coeffs.entries.values()), default=0.0)


def r_of(t, N, t0=DEFAULT_T0) -> float:
    """Circle damping factor (1 - q(t)^-2)/(1 - q(N)^-2) for t in [t0, N].

    Lies in (0, 1], equals 1 exactly at t = N, and is strictly increasing.
    """
    N = as_int(N, "N")
    if N < 3:
        raise DomainError(f"N must be >= 3, got {N}")
    t0 = _check_t0(t0)
    t = float(t)
    if not t0 <= t <= N:
        raise DomainError(f"t must lie in [{t0}, {N}], got {t}")
    return (1.0 - q_of(t) ** -2) / (1.0 - q_of(N) ** -2)


def a_coeff_from_form(form: AlternatingForm, t, N, t0=DEFAULT_T0) -> float:
    """Unitary eigenvalue of the net at a word given its alternating form.

    The block ratios multiply in sorted order so that reversing the word
    (whose form has the reversed block sequence) reproduces bit-identical
    floats.
    """
    value = r_of(t, N, t0) ** form.eps_weight
    for k in sorted(form.blocks):
        value *= coeff_ratio(k, t, N, t0)
    return value


def a_coeff(w: str, t, N, t0=DEFAULT_T0) -> float:
    """Eigenvalue a_t(w) of the unitary central multiplier net at the word w.

    Satisfies 0 < a_t(w) <= decay_constant(t0) * (t/N)**len(w), is invariant
    under the word involution, and increases strictly in t with value 1 at
    t = N.
    """
    return a_coeff_from_form(alternating_form(word_parse(w)), t, N, t0)


def tail_sup(coef, ratio, from_level) -> float:
    """sup over n >= from_level of (n+1)^2 * coef * ratio**n, by certified scan.

    The scan walks n upward keeping the running maximum and stops as soon as
    (n+2)^2 * ratio < (n+1)^2, from which point the sequence is strictly
    decreasing forever.  Returns inf when ratio >= 1 (and coef > 0).
    """
    from_level = as_nonneg_int(from_level, "from_level")
    coef = float(coef)
    ratio = float(ratio)
    if coef < 0.0 or ratio < 0.0:
        raise DomainError("tail_sup needs coef >= 0 and ratio >= 0")
    if coef == 0.0:
        return 0.0
    if ratio >= 1.0:
        return math.inf
    best = 0.0
    n = from_level
    while True:
        best = max(best, (n + 1) ** 2 * coef * ratio**n)
        if (n + 2) ** 2 * ratio < (n + 1) ** 2:
            return best
        n += 1


def k_a(coeffs: MultiplierCoeffs, from_level=0) -> float:
    """Polynomially weighted supremum sup (n+1)^2 * max|coefficient at level n|.

    Stored levels contribute their actual maxima; for a non-truncated table
    the levels beyond the stored horizon contribute through the geometric
    envelope.  This is the quantity the rapid-decay inequality turns into an
    L2->Linf norm bound.
    """
    from_level = as_nonneg_int(from_level, "from_level")
    best = 0.0
    top = -1
    for n, value in coeffs.level_maxima().items():
        top = max(top, n)
        if n >= from_level:
            best = max(best, (n + 1) ** 2 * value)
    if not coeffs.truncated:
        c, ratio = coeffs.envelope
        best = max(best, tail_sup(c, ratio, max(from_level, top + 1)))
    return best


def ultra_bound(ka, rd_constant) -> float:
    """L2->Linf norm certificate pi * rd_constant * ka / sqrt(6)."""
    ka = float(ka)
    rd_constant = float(rd_constant)
    if ka < 0.0:
        raise DomainError(f"ka must be >= 0, got {ka}")
    if rd_constant <= 0.0:
        raise DomainError(f"rd_constant must be > 0, got {rd_constant}")
    return math.pi * rd_constant * ka / math.sqrt(6.0)


@dataclass(frozen=True)
class BoundParams:
    """Rapid-decay constants and the decay anchor.

    D is the orthogonal rapid-decay constant, R the unitary one.  Neither has
    a default: they are quantum-group data the caller must supply.
    """

    D: float | None = None
    R: float | None = None
    t0: float = DEFAULT_T0

    def __post_init__(self):
        for name in ("D", "R"):
            value = getattr(self, name)
            if value is not None:
                value = float(value)
                if value <= 0.0:
                    raise DomainError(f"{name} must be > 0, got {value}")
                object.__setattr__(self, name, value)
        object.__setattr__(self, "t0", _check_t0(self.t0))

    def require(self, group: Group) -> float:
        constant = self.D if group is Group.ORTH else self.R
        if constant is None:
            name = "D" if group is Group.ORTH else "R"
            raise DomainError(f"the {name} rapid-decay constant is required and has no default")
        return constant


@dataclass(frozen=True)
class TruncationCertificate:
    """A truncation order together with its certified operator-norm tail bound."""

    t: float
    m: int
    tail_bound: float
    target_eps: float

    @property
    def satisfied(self) -> bool:
        return self.tail_bound <= self.target_eps


def _check_tail_args(t, m, N, bounds: BoundParams):
    N = as_int(N, "N")
    if N < 3:
        raise DomainError(f"N must be >= 3, got {N}")
    m = as_nonneg_int(m, "m")
    t = float(t)
    if not bounds.t0 <= t < N:
        raise DomainError(
            f"t must lie in [{bounds.t0}, {N}) for a finite tail bound, got {t}"
        )
    return t, m, N


def tail_bound_orth(t, m, N, bounds: BoundParams) -> float:
    """Certified bound on the norm of the orthogonal net minus its order-m truncation.

    Equals pi*D/sqrt(6) * sup over n > m of (n+1)^2 * C_t0 * (t/N)**n; it is
    monotone non-increasing in m and converges to 0.
    """
    t, m, N = _check_tail_args(t, m, N, bounds)
    ka_tail = tail_sup(decay_constant(bounds.t0), t / N, m + 1)
    return ultra_bound(ka_tail, bounds.require(Group.ORTH))


def tail_bound_unitary(t, m, N, bounds: BoundParams) -> float:
    """Certified bound on the norm of the unitary net minus its order-m truncation."""
    t, m, N = _check_tail_args(t, m, N, bounds)
    ka_tail = tail_sup(decay_constant(bounds.t0), t / N, m + 1)
    return ultra_bound(ka_tail, bounds.require(Group.UNIT))


def choose_truncation(t, eps, N, group, bounds: BoundParams) -> TruncationCertificate:
    """Smallest truncation order whose tail bound is at most eps.

    The bound decreases to 0 in the order, so the scan terminates; the
    returned certificate carries the bound value actually achieved.
    """
    eps = float(eps)
    if eps <= 0.0:
        raise DomainError(f"eps must be > 0, got {eps}")
    group = Group.coerce(group)
    bound_fn = tail_bound_orth if group is Group.ORTH else tail_bound_unitary
    m = 0
    while True:
        bound = bound_fn(t, m, N, bounds)
        if bound <= eps:
            return TruncationCertificate(t=float(t), m=m, tail_bound=bound, target_eps=eps)
        m += 1


def truncated_coeffs(group, t, m, N, t0=DEFAULT_T0, entry_cap=DEFAULT_ENTRY_CAP) -> MultiplierCoeffs:
    """Coefficient table of the order-m truncation of the net.

    The orthogonal table has m+1 entries; the unitary one has an entry for
    every word of length <= m (2**(m+1) - 1 of them) and is refused with a
    :class:`~freeqg.errors.ResourceCapError` beyond ``entry_cap``.
    """
    group = Group.coerce(group)
    m = as_nonneg_int(m, "m")
    if group is Group.ORTH:
        entries = {n: coeff_ratio(n, t, N, t0) for n in range(m + 1)}
        return MultiplierCoeffs(group, entries, t=t, N=N, t0=t0)
    count = 2 ** (m + 1) - 1
    if count > entry_cap:
        raise ResourceCapError(
            f"unitary table to level {m} needs {count} entries, above the cap {entry_cap}"
        )
    r = r_of(t, N, t0)
    entries = {w: a_coeff_from_form(alternating_form(w), t, N, t0) for w in all_words(m)}
    return MultiplierCoeffs(group, entries, t=t, N=N, t0=t0, r=r)


def approx_identity_weights(group, t, m, N, t0=DEFAULT_T0, entry_cap=DEFAULT_ENTRY_CAP):
    """Weights (label, coefficient at the conjugate label times dimension).

    These are the coefficients of the central approximate-identity vectors
    built from the net: the orthogonal labels are self-conjugate, the unitary
    ones conjugate by the word involution.
    """
    group = Group.coerce(group)
    m = as_nonneg_int(m, "m")
    N = as_int(N, "N")
    t0 = _check_t0(t0)
    t = float(t)
    if not t0 <= t < N:
        raise DomainError(f"t must lie in [{t0}, {N}), got {t}")
    if group is Group.ORTH:
        return [
            (n, coeff_ratio(n, t, N, t0) * float(dim_orth(n, N)))
            for n in range(m + 1)
        ]
    count = 2 ** (m + 1) - 1
    if count > entry_cap:
        raise ResourceCapError(
            f"unitary table to level {m} needs {count} entries, above the cap {entry_cap}"
        )
    return [
        (w, a_coeff(involution(w), t, N, t0) * float(dim_unitary(w, N)))
        for w in all_words(m)
    ]


def poisson_coeff(r, n) -> float:
    """Fourier coefficient r**|n| of the Poisson kernel on the circle."""
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise DomainError(f"r must lie in [0, 1), got {r}")
    return r ** abs(as_int(n, "n"))
