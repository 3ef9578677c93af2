"""Trace-layer counts and the parity of cumulative partition numbers.

P(n) sums p(alpha) over all totally positive alpha of trace 2n, with
P(0) = 1.  Writing a_n for the number of such alpha, every a_n is odd for
D = 2, 3 (mod 4) and P satisfies the exact recurrence

    n * P(n) = sum_{k=1..n} ( sum_{d | k} d * a_d ) * P(n - k).

Conjugation pairs off every non-rational term of P(n), so P(n) = p(n)
(mod 2) where p(n) counts the partitions of the rational integer n in the
field; the recurrence therefore pins the parity of p(n) itself.  For
D = 1 (mod 4) elements of odd trace exist, so the same Euler product
argument is run on the full trace layers c_t instead; the resulting
P(n) = Q(2n) still equals the direct sum over even traces.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import DivisibilityViolation, InvariantViolation
from .field import Field
from .partition import DivisorCache, PartitionGrid

__all__ = [
    "ParityProfile",
    "ParityReport",
    "count_trace",
    "trace_layer_count",
    "cumulative_P",
    "parity_check",
    "odd_sigma_set",
]


def _count_trace_enumerated(field: Field, n: int) -> int:
    # Every element of trace 2n is n + t*sqrt(D) for integer t (with b = 2t
    # when D = 1 mod 4), so the scan over t is complete.
    count = 0
    for t in range(-n, n + 1):
        if field.from_sqrt(n, t).is_totally_positive():
            count += 1
    return count


def count_trace(field: Field, n: int) -> int:
    """a_n: the number of totally positive elements of trace 2n.

    Closed form 2*floor(n/sqrt(D)) + 1; cross-checked against a direct
    enumeration for small n on every call.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a_n = 2 * isqrt(n * n // field.D) + 1
    if n <= 50 and a_n != _count_trace_enumerated(field, n):
        raise InvariantViolation(f"count_trace mismatch at D={field.D}, n={n}")
    return a_n


def trace_layer_count(field: Field, t: int) -> int:
    """Number of totally positive elements of trace exactly t (any parity)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if not field.one_mod4:
        return 0 if t % 2 else count_trace(field, t // 2)
    # Elements of trace t are (t + B*sqrt(D))/2 with B = t (mod 2), and total
    # positivity is exactly |B| <= floor(t/sqrt(D)).
    f = isqrt(t * t // field.D)
    if t % 2 == 0:
        return 2 * (f // 2) + 1
    return 2 * ((f + 1) // 2)


@dataclass(frozen=True)
class ParityProfile:
    field: Field
    N: int
    a: tuple[int, ...]  # a_1 .. a_N
    P: tuple[int, ...]  # P(0) .. P(N)

    @property
    def parity_bits(self) -> tuple[int, ...]:
        return tuple(v % 2 for v in self.P)


def cumulative_P(field: Field, N: int, cache: DivisorCache | None = None) -> ParityProfile:
    """P(0..N) through the exact divisor-weighted recurrence."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    dc = cache or DivisorCache()
    a = tuple(count_trace(field, n) for n in range(1, N + 1))

    if not field.one_mod4:
        weight = [0] * (N + 1)
        for k in range(1, N + 1):
            weight[k] = sum(d * a[d - 1] for d in dc.divisors(k))
        P = [1]
        for n in range(1, N + 1):
            s = sum(weight[k] * P[n - k] for k in range(1, n + 1))
            q, r = divmod(s, n)
            if r:
                raise DivisibilityViolation(f"P({n}) division failed for D={field.D}")
            P.append(q)
        return ParityProfile(field=field, N=N, a=a, P=tuple(P))

    # D = 1 mod 4: run the recurrence on all trace layers and read off even traces.
    T = 2 * N
    c = [0] + [trace_layer_count(field, t) for t in range(1, T + 1)]
    weight = [0] * (T + 1)
    for k in range(1, T + 1):
        weight[k] = sum(d * c[d] for d in dc.divisors(k))
    Q = [1]
    for t in range(1, T + 1):
        s = sum(weight[k] * Q[t - k] for k in range(1, t + 1))
        q, r = divmod(s, t)
        if r:
            raise DivisibilityViolation(f"Q({t}) division failed for D={field.D}")
        Q.append(q)
    P = tuple(Q[2 * n] for n in range(N + 1))
    return ParityProfile(field=field, N=N, a=a, P=P)


@dataclass(frozen=True)
class ParityReport:
    profile: ParityProfile
    p_parity: tuple[int, ...]  # p(n) mod 2 for n = 0..N
    odd_count: int
    even_count: int

    @property
    def congruent(self) -> bool:
        return self.profile.parity_bits == self.p_parity


def parity_check(field: Field, N: int, grid: PartitionGrid) -> ParityReport:
    """Confirm P(n) = p(n) (mod 2) for n <= N against the grid diagonal."""
    profile = cumulative_P(field, N, cache=grid.divisors)
    grid.ensure(N)
    p_par = []
    offenders = []
    for n in range(N + 1):
        v = grid.value(n, 0)
        assert v is not None
        p_par.append(v % 2)
        if profile.parity_bits[n] != v % 2:
            offenders.append(n)
    if offenders:
        raise InvariantViolation(
            f"P and p disagree mod 2 for D={field.D} at n in {offenders}"
        )
    odd = sum(p_par[1:])
    return ParityReport(
        profile=profile,
        p_parity=tuple(p_par),
        odd_count=odd,
        even_count=N - odd,
    )


def odd_sigma_set(n: int) -> frozenset[int]:
    """{k <= n : sigma(k) is odd} = squares and doubled squares up to n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    out = set()
    m = 1
    while m * m <= n:
        out.add(m * m)
        m += 1
    m = 1
    while 2 * m * m <= n:
        out.add(2 * m * m)
        m += 1
    return frozenset(out)
