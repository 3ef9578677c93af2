"""Partition counts p(alpha) for totally positive elements, by exact recurrence.

The count p(alpha) of ways to write alpha as an unordered sum of totally
positive elements satisfies

    alpha * p(alpha) = sum over 0 < beta <= alpha of sig(beta) * p(alpha - beta)

where the interval runs over the total-positivity order, and
sig(beta) = (beta / c) * sigma(c) with c = gcd of the coordinates of beta
and sigma the rational sum-of-divisors function.  Matching coefficients in
the basis (1, w) recovers p(alpha) by one exact division, and the second
coordinate cross-checks it; any mismatch raises DivisibilityViolation.

Cells are filled column by column in the first coordinate.  Every summand
beta has first coordinate >= 1, so a cell only depends on strictly earlier
columns and the recurrence is well founded.
"""

from __future__ import annotations

from math import gcd, sqrt
from typing import Iterator

from .errors import DivisibilityViolation
from .field import Field, QElement

__all__ = [
    "DivisorCache",
    "PartitionGrid",
    "GridPool",
    "content",
    "sigma_K",
    "enumerate_interval",
    "build_grid",
    "p_value",
    "p_rational",
    "asymptotic_estimate",
    "ZETA3",
]

# Apery's constant zeta(3), used only by the floating-point diagnostic below.
ZETA3 = 1.2020569031595942854


class DivisorCache:
    """Memoized divisor lists and sum-of-divisors values."""

    def __init__(self) -> None:
        self._divisors: dict[int, tuple[int, ...]] = {1: (1,)}
        self._sigma: dict[int, int] = {1: 1}

    def divisors(self, n: int) -> tuple[int, ...]:
        """All positive divisors of n, ascending."""
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        try:
            return self._divisors[n]
        except KeyError:
            pass
        small: list[int] = []
        large: list[int] = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                small.append(d)
                if d * d != n:
                    large.append(n // d)
            d += 1
        out = tuple(small + large[::-1])
        self._divisors[n] = out
        return out

    def sigma(self, n: int) -> int:
        """Sum of the positive divisors of n."""
        try:
            return self._sigma[n]
        except KeyError:
            pass
        out = sum(self.divisors(n))
        self._sigma[n] = out
        return out


def content(e: QElement) -> int:
    """gcd of the coordinates; the largest c with e/c still integral."""
    c = gcd(e.a, e.b)
    if c == 0:
        raise ValueError("the zero element has no content")
    return c


def sigma_K(e: QElement, cache: DivisorCache | None = None) -> QElement:
    """(e / content(e)) * sigma(content(e)) for totally positive e."""
    if not e.is_totally_positive():
        raise ValueError(f"sigma_K needs a totally positive element, got {e!r}")
    c = content(e)
    s = (cache or DivisorCache()).sigma(c)
    return QElement(e.field, (e.a // c) * s, (e.b // c) * s)


def enumerate_interval(alpha: QElement) -> Iterator[QElement]:
    """Yield every beta with 0 < beta <= alpha, in increasing lex order.

    For each first coordinate u the second coordinate runs over an exact
    window: beta totally positive forces -floor(u/omega) <= v <= floor(u/xi),
    and alpha - beta totally positive (or zero) pins v to a translate of the
    same window for x - u.  Both bounds are integer-exact, and every candidate
    is confirmed by sign tests before being yielded.
    """
    fld = alpha.field
    if not alpha.is_totally_positive():
        raise ValueError(f"interval base must be totally positive, got {alpha!r}")
    x, y = alpha.a, alpha.b
    for u in range(1, x):
        g = x - u
        lo = max(-fld.floor_div_omega(u), y - fld.floor_div_xi(g))
        hi = min(fld.floor_div_xi(u), y + fld.floor_div_omega(g))
        for v in range(lo, hi + 1):
            beta = QElement(fld, u, v)
            assert u >= 1 and beta.is_totally_positive()
            assert (alpha - beta).is_totally_positive()
            yield beta
    # u = x admits only beta = alpha: a nonzero (0, c) is never totally positive.
    yield alpha


class PartitionGrid:
    """Partition counts for the whole cone of totally positive elements.

    Column x stores p(x + y*w) for every y in the exact window
    [-floor(x/omega), floor(x/xi)]; cells outside the window are not stored
    (value() returns None for them).  Columns extend on demand.
    """

    def __init__(self, field: Field) -> None:
        self.field = field
        self.divisors = DivisorCache()
        self._cols: list[list[int]] = [[1]]  # p(0) = 1
        self._vmin: list[int] = [0]
        self._fdo: list[int] = [0]
        self._fdx: list[int] = [0]
        self._sig0: list[list[int]] = [[]]
        self._sig1: list[list[int]] = [[]]

    @property
    def max_x(self) -> int:
        return len(self._cols) - 1

    def ensure(self, max_x: int) -> None:
        """Extend the grid so that all columns up to max_x are complete."""
        for x in range(self.max_x + 1, max_x + 1):
            self._build_column(x)

    def value(self, x: int, y: int) -> int | None:
        """Stored count at (x, y), or None when the cell is outside the cone."""
        if not 0 <= x <= self.max_x:
            return None
        i = y - self._vmin[x]
        col = self._cols[x]
        if 0 <= i < len(col):
            return col[i]
        return None

    def count(self, e: QElement) -> int:
        """p(e) for totally positive e, extending the grid as needed."""
        if e.field != self.field:
            raise ValueError(f"element of D={e.field.D} queried against D={self.field.D}")
        if not e.is_totally_positive():
            raise ValueError(f"count needs a totally positive element, got {e!r}")
        self.ensure(e.a)
        v = self.value(e.a, e.b)
        assert v is not None
        return v

    def column_window(self, x: int) -> tuple[int, int]:
        """(y_min, y_max) of the stored window in column x."""
        if not 0 <= x <= self.max_x:
            raise ValueError(f"column {x} not built yet")
        return self._vmin[x], self._vmin[x] + len(self._cols[x]) - 1

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """All stored (x, y, count) triples with x >= 1."""
        for x in range(1, self.max_x + 1):
            vmin = self._vmin[x]
            for i, c in enumerate(self._cols[x]):
                yield x, vmin + i, c

    # ----- internals -----------------------------------------------------

    def _build_column(self, x: int) -> None:
        fld = self.field
        self._fdo.append(fld.floor_div_omega(x))
        self._fdx.append(fld.floor_div_xi(x))
        vmin, vmax = -self._fdo[x], self._fdx[x]

        # sig coordinate tables for this column, indexed parallel to v.
        sigma = self.divisors.sigma
        s0: list[int] = []
        s1: list[int] = []
        for v in range(vmin, vmax + 1):
            c = gcd(x, v)
            sc = sigma(c)
            s0.append((x // c) * sc)
            s1.append((v // c) * sc)
        self._sig0.append(s0)
        self._sig1.append(s1)

        col = [self._cell(x, y) for y in range(vmin, vmax + 1)]
        self._cols.append(col)
        self._vmin.append(vmin)

    def _cell(self, x: int, y: int) -> int:
        fdo, fdx = self._fdo, self._fdx
        cols, vmins = self._cols, self._vmin
        sig0, sig1 = self._sig0, self._sig1
        S0 = 0
        S1 = 0
        for u in range(1, x):
            g = x - u
            lo = y - fdx[g]
            t = -fdo[u]
            if t > lo:
                lo = t
            hi = y + fdo[g]
            t = fdx[u]
            if t < hi:
                hi = t
            if lo > hi:
                continue
            a0 = sig0[u]
            a1 = sig1[u]
            prev = cols[g]
            i = lo + fdo[u]
            j = (y - lo) - vmins[g]
            for _ in range(lo, hi + 1):
                P = prev[j]
                S0 += a0[i] * P
                S1 += a1[i] * P
                i += 1
                j -= 1
        # The beta = alpha term contributes sig(alpha) * p(0).
        i = y + fdo[x]
        S0 += sig0[x][i]
        S1 += sig1[x][i]

        # Recover p from alpha * p = (S0, S1) and cross-check both coordinates.
        if y:
            p, r = divmod(S1, y)
            if r or S0 != x * p:
                raise DivisibilityViolation(
                    f"coefficient match failed at (x={x}, y={y}): S=({S0}, {S1})"
                )
        else:
            p, r = divmod(S0, x)
            if r or S1 != 0:
                raise DivisibilityViolation(
                    f"coefficient match failed at (x={x}, y={y}): S=({S0}, {S1})"
                )
        if p < 1:
            raise DivisibilityViolation(f"nonpositive count {p} at (x={x}, y={y})")
        return p

    # ----- serialization support ------------------------------------------

    def to_columns(self) -> list[dict]:
        return [
            {"x": x, "y_min": self._vmin[x], "counts": list(self._cols[x])}
            for x in range(self.max_x + 1)
        ]

    @classmethod
    def from_columns(cls, field: Field, columns: list[dict]) -> "PartitionGrid":
        """Rebuild a grid from serialized columns, revalidating the windows."""
        grid = cls(field)
        for entry in sorted(columns, key=lambda e: e["x"]):
            x = entry["x"]
            if x == 0:
                if entry["y_min"] != 0 or entry["counts"] != [1]:
                    raise ValueError("column 0 must be exactly {p(0) = 1}")
                continue
            if x != grid.max_x + 1:
                raise ValueError(f"columns must be contiguous, missing x={grid.max_x + 1}")
            fdo = field.floor_div_omega(x)
            fdx = field.floor_div_xi(x)
            if entry["y_min"] != -fdo or len(entry["counts"]) != fdo + fdx + 1:
                raise ValueError(f"column {x} does not match the cone window")
            grid._fdo.append(fdo)
            grid._fdx.append(fdx)
            sigma = grid.divisors.sigma
            s0: list[int] = []
            s1: list[int] = []
            for v in range(-fdo, fdx + 1):
                c = gcd(x, v)
                sc = sigma(c)
                s0.append((x // c) * sc)
                s1.append((v // c) * sc)
            grid._sig0.append(s0)
            grid._sig1.append(s1)
            grid._cols.append([int(c) for c in entry["counts"]])
            grid._vmin.append(-fdo)
        return grid


class GridPool:
    """One shared, lazily extended grid per field."""

    def __init__(self) -> None:
        self._grids: dict[int, PartitionGrid] = {}

    def grid(self, field: Field) -> PartitionGrid:
        try:
            return self._grids[field.D]
        except KeyError:
            g = PartitionGrid(field)
            self._grids[field.D] = g
            return g


def build_grid(field: Field, max_x: int) -> PartitionGrid:
    """A grid with all columns up to max_x complete."""
    grid = PartitionGrid(field)
    grid.ensure(max_x)
    return grid


def p_value(alpha: QElement, grid: PartitionGrid) -> int:
    """p(alpha) through the recurrence; extends the grid if needed."""
    return grid.count(alpha)


def p_rational(n: int, cache: DivisorCache | None = None) -> int:
    """The classical partition number p(n), by the sigma recurrence."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    dc = cache or DivisorCache()
    p = [1]
    for m in range(1, n + 1):
        s = 0
        for k in range(1, m + 1):
            s += dc.sigma(k) * p[m - k]
        q, r = divmod(s, m)
        if r:
            raise DivisibilityViolation(f"p({m}) recurrence division failed")
        p.append(q)
    return p[n]


def asymptotic_estimate(alpha: QElement) -> float:
    """Leading-order estimate of log p(alpha): 3*(zeta(3)*Nm(alpha)/sqrt(disc))^(1/3).

    This is the only floating-point computation in the package and is purely
    diagnostic; nothing exact depends on it.
    """
    if not alpha.is_totally_positive():
        raise ValueError(f"estimate needs a totally positive element, got {alpha!r}")
    nm = alpha.norm()
    return 3.0 * (ZETA3 * nm / sqrt(alpha.field.discriminant)) ** (1.0 / 3.0)
