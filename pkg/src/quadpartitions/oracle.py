"""Brute-force partition enumeration, independent of the recurrence.

Partitions are produced as tuples of parts in non-increasing lex order, by
recursive descent over the interval of each remainder.  The walker charges
one unit of budget per visited node so that runaway inputs fail fast with
BudgetExceeded instead of hanging.
"""

from __future__ import annotations

from .errors import BudgetExceeded
from .field import QElement
from .partition import enumerate_interval

__all__ = ["enumerate_partitions", "count_partitions"]

DEFAULT_BUDGET = 10_000_000


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int) -> None:
        self.left = n

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("partition enumeration budget exhausted")


def _candidates(remaining: QElement) -> list[QElement]:
    # Descending lex, so partitions come out in non-increasing part order.
    return sorted(enumerate_interval(remaining), key=lambda e: e.lex_key, reverse=True)


def enumerate_partitions(
    alpha: QElement, budget: int = DEFAULT_BUDGET
) -> list[tuple[QElement, ...]]:
    """All partitions of alpha into totally positive parts.

    Each partition is a tuple sorted by non-increasing lex key; the list of
    partitions is itself lex-sorted and duplicate-free by construction.
    """
    if not alpha.is_totally_positive():
        raise ValueError(f"can only partition totally positive elements, got {alpha!r}")
    box = _Budget(budget)
    out: list[tuple[QElement, ...]] = []

    def walk(remaining: QElement, bound: tuple[int, int], prefix: list[QElement]) -> None:
        box.spend()
        for beta in _candidates(remaining):
            if beta.lex_key > bound:
                continue
            prefix.append(beta)
            rest = remaining - beta
            if rest.a == 0 and rest.b == 0:
                out.append(tuple(prefix))
            else:
                walk(rest, beta.lex_key, prefix)
            prefix.pop()

    walk(alpha, alpha.lex_key, [])
    return out


def count_partitions(alpha: QElement, budget: int = DEFAULT_BUDGET) -> int:
    """len(enumerate_partitions(alpha)) without materializing the parts."""
    if not alpha.is_totally_positive():
        raise ValueError(f"can only partition totally positive elements, got {alpha!r}")
    box = _Budget(budget)

    def walk(remaining: QElement, bound: tuple[int, int]) -> int:
        box.spend()
        total = 0
        for beta in _candidates(remaining):
            if beta.lex_key > bound:
                continue
            rest = remaining - beta
            if rest.a == 0 and rest.b == 0:
                total += 1
            else:
                total += walk(rest, beta.lex_key)
        return total

    return walk(alpha, alpha.lex_key)
