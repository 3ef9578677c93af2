"""Search for every element with a prescribed number of partitions.

Elements are classified up to conjugation and multiplication by the totally
positive fundamental unit.  Each class has exactly one representative in the
fundamental domain

    x >= 1,  y >= 0,  alpha / conj(alpha) <= eps_plus  (tested exactly),

and a correctness lemma confines all representatives with p(alpha) <= m to
the finite slice alpha = (ceil(y*xi) + k) + y*omega with 0 <= k <= k_max,
0 <= y <= y_max, where p(k_max) >= m and the slice corner at y_max already
has p >= m with y_max >= floor(eps_plus / (xi + omega)).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .contfrac import FieldContext, build_context, floor_ratio_eps
from .errors import InvariantViolation
from .field import Field, QElement, is_squarefree
from .partition import PartitionGrid, p_rational

__all__ = [
    "SearchReport",
    "ThresholdRow",
    "slice_element",
    "in_fundamental_domain",
    "fundamental_representative",
    "find_kmax",
    "find_ymax",
    "search_m",
    "dm_scan",
    "exhaustive_scan_range",
    "en_fn_bounds",
    "verify_thresholds",
    "witness_m4",
    "witness_m6",
]

# m -> n with p(n) = m, for the m values whose D(m) scan is exhaustive.
_COMPLETE_M = {1: 1, 2: 2, 3: 3, 5: 4, 7: 5, 11: 6}


def slice_element(field: Field, k: int, y: int) -> QElement:
    """(ceil(y*xi) + k) + y*omega; totally positive whenever (k, y) != (0, 0)."""
    if k < 0 or y < 0:
        raise ValueError(f"slice offsets must be >= 0, got k={k}, y={y}")
    return QElement(field, field.ceil_xi_mult(y) + k, y)


def in_fundamental_domain(e: QElement, ctx: FieldContext) -> bool:
    """x >= 1, y >= 0 and alpha <= eps_plus * conj(alpha), all exact."""
    if e.a < 1 or e.b < 0:
        return False
    return (ctx.eps_plus * e.conjugate() - e).sign() >= 0


def fundamental_representative(e: QElement, ctx: FieldContext) -> QElement:
    """The unique domain element equivalent to e up to units and conjugation."""
    if not e.is_totally_positive():
        raise ValueError(f"need a totally positive element, got {e!r}")
    inv = ctx.eps_plus.conjugate()  # norm 1, so the conjugate is the inverse
    a = e
    while True:
        if a.b < 0:
            a = a.conjugate()
        if (ctx.eps_plus * a.conjugate() - a).sign() >= 0:
            return a
        a = a * inv


def find_kmax(grid: PartitionGrid, m: int) -> int:
    """Smallest n >= 1 with p(n) >= m."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = 1
    while True:
        grid.ensure(n)
        v = grid.value(n, 0)
        assert v is not None
        if v >= m:
            return n
        n += 1


def find_ymax(ctx: FieldContext, grid: PartitionGrid, m: int) -> int:
    """Smallest y >= floor(eps_plus/(xi+omega)) whose slice corner has p >= m."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    y = floor_ratio_eps(ctx)
    while True:
        corner = slice_element(ctx.field, 0, y)
        if y == 0 or grid.count(corner) >= m:
            return y
        y += 1


@dataclass
class SearchReport:
    field: Field
    m_max: int
    k_max: int
    y_max: int
    slice_counts: tuple[tuple[int, ...], ...]  # rows y = 0..y_max, cols k = 0..k_max
    representatives: dict[int, tuple[QElement, ...]]  # m -> lex-sorted domain reps

    def missing(self) -> bool:
        """True when no element at all has exactly m_max partitions."""
        return not self.representatives[self.m_max]


def search_m(ctx: FieldContext, m_max: int, grid: PartitionGrid | None = None) -> SearchReport:
    """Classify every element with p(alpha) <= m_max, up to units and conjugation."""
    field = ctx.field
    if grid is None:
        grid = PartitionGrid(field)
    k_max = find_kmax(grid, m_max)
    y_max = find_ymax(ctx, grid, m_max)
    grid.ensure(field.ceil_xi_mult(y_max) + k_max)

    rows: list[tuple[int, ...]] = []
    reps: dict[int, list[QElement]] = {m: [] for m in range(1, m_max + 1)}
    for y in range(y_max + 1):
        base = field.ceil_xi_mult(y)
        row: list[int] = []
        for k in range(k_max + 1):
            if y == 0 and k == 0:
                row.append(1)  # p(0), for the slice corner display
                continue
            alpha = QElement(field, base + k, y)
            p = grid.value(alpha.a, alpha.b)
            assert p is not None
            row.append(p)
            if p <= m_max and in_fundamental_domain(alpha, ctx):
                reps[p].append(alpha)
        rows.append(tuple(row))

    representatives = {
        m: tuple(sorted(found, key=lambda e: e.lex_key)) for m, found in reps.items()
    }
    return SearchReport(
        field=field,
        m_max=m_max,
        k_max=k_max,
        y_max=y_max,
        slice_counts=tuple(rows),
        representatives=representatives,
    )


def _misses(args: tuple[int, int]) -> tuple[int, bool]:
    D, m = args
    field = Field(D)
    report = search_m(build_context(field), m)
    return D, report.missing()


def dm_scan(m: int, D_values: list[int] | tuple[int, ...], jobs: int = 1) -> tuple[int, ...]:
    """The subset of D_values whose field has no element with exactly m partitions."""
    work = []
    for D in D_values:
        if not is_squarefree(D) or D < 2:
            raise ValueError(f"D values must be squarefree and >= 2, got {D}")
        work.append((D, m))
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_misses, work))
    else:
        results = [_misses(w) for w in work]
    return tuple(sorted(D for D, missing in results if missing))


def exhaustive_scan_range(m: int) -> tuple[int, ...]:
    """Squarefree D whose membership of m is not settled by the threshold bounds.

    For any other squarefree D, p(n) = m is attained at the rational integer n
    with p(n) = m, so scanning this finite set determines D(m) completely.
    Raises for m outside the supported table.
    """
    try:
        n = _COMPLETE_M[m]
    except KeyError:
        raise ValueError(f"no exhaustive scan range known for m={m}") from None
    e_bound, f_bound = en_fn_bounds(n)
    out = [D for D in range(2, e_bound + 1) if is_squarefree(D) and D % 4 != 1]
    out += [D for D in range(2, f_bound + 1) if is_squarefree(D) and D % 4 == 1]
    return tuple(sorted(out))


def en_fn_bounds(n: int) -> tuple[int, int]:
    """(E_n, F_n): thresholds beyond which p(n) collapses to the rational value."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    e_n = (n // 2) ** 2
    f_n = (n - 1) ** 2 if n % 2 == 0 else n * n
    return e_n, f_n


@dataclass(frozen=True)
class ThresholdRow:
    D: int
    n: int
    bound: int
    p_field: int
    p_rational: int

    @property
    def collapsed(self) -> bool:
        return self.p_field == self.p_rational


def _threshold_witness_parts(field: Field, n: int) -> tuple[QElement, QElement]:
    # The canonical extra partition that exists strictly below the threshold.
    k = n // 2
    if field.one_mod4:
        if n % 2 == 0:
            return field.element(k, 1), field.element(k, -1)
        return field.element(k + 1, -1), field.element(k, 1)
    if n % 2 == 0:
        return field.from_sqrt(k, 1), field.from_sqrt(k, -1)
    return field.from_sqrt(k + 1, 1), field.from_sqrt(k, -1)


def verify_thresholds(
    n: int,
    D_values: list[int] | tuple[int, ...],
    pool: "object | None" = None,
) -> tuple[ThresholdRow, ...]:
    """Check p(n) = p_rational(n) exactly when D exceeds its class threshold.

    Below the threshold the strict excess is asserted together with total
    positivity of the explicit two-part witness partition.
    """
    pn = p_rational(n)
    e_n, f_n = en_fn_bounds(n)
    rows = []
    for D in D_values:
        field = Field(D)
        grid = pool.grid(field) if pool is not None else PartitionGrid(field)
        grid.ensure(n)
        pkn = grid.value(n, 0)
        assert pkn is not None
        bound = f_n if field.one_mod4 else e_n
        row = ThresholdRow(D=D, n=n, bound=bound, p_field=pkn, p_rational=pn)
        if D > bound:
            if pkn != pn:
                raise InvariantViolation(f"p({n}) != p_rational({n}) for D={D} > {bound}")
        else:
            if pkn <= pn:
                raise InvariantViolation(f"p({n}) <= p_rational({n}) for D={D} <= {bound}")
            u, v = _threshold_witness_parts(field, n)
            if not (u.is_totally_positive() and v.is_totally_positive()):
                raise InvariantViolation(f"threshold witness not totally positive, D={D}, n={n}")
            if u + v != field.element(n):
                raise InvariantViolation(f"threshold witness does not sum to {n}, D={D}")
        rows.append(row)
    return tuple(rows)


def witness_m4(field: Field, grid: PartitionGrid | None = None) -> tuple[QElement, int]:
    """(ceil(xi) + 2) + omega has exactly 4 partitions, for every field."""
    alpha = QElement(field, field.ceil_xi_mult(1) + 2, 1)
    if grid is None:
        grid = PartitionGrid(field)
    count = grid.count(alpha)
    if count != 4:
        raise InvariantViolation(f"expected 4 partitions at {alpha}, got {count}")
    return alpha, count


def witness_m6(
    field: Field, grid: PartitionGrid | None = None
) -> tuple[QElement, int, str]:
    """(ceil(2*xi) + 2) + 2*omega has 6 or 9 partitions, by an exact gap test.

    The count is 6 when ceil(xi) - xi > 1/2 and 9 when it is < 1/2 (equality
    cannot occur).  D = 5 is rejected: the same element has 10 partitions there.
    """
    if field.D == 5:
        raise ValueError("D=5 is excluded: the candidate element has 10 partitions")
    # ceil(xi) - xi vs 1/2 becomes sign(2*ceil(xi) - 1 - 2*xi).
    gap = field.element(2 * (field.floor_xi() + 1) - 1) - 2 * field.xi()
    s = gap.sign()
    assert s != 0
    expected = 6 if s > 0 else 9
    alpha = QElement(field, field.ceil_xi_mult(2) + 2, 2)
    if grid is None:
        grid = PartitionGrid(field)
    count = grid.count(alpha)
    if count != expected:
        raise InvariantViolation(f"expected {expected} partitions at {alpha}, got {count}")
    return alpha, count, "wide-gap" if s > 0 else "narrow-gap"
