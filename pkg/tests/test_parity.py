import pytest

from quadpartitions import (
    Field,
    count_trace,
    cumulative_P,
    is_squarefree,
    odd_sigma_set,
    parity_check,
    trace_layer_count,
)
from quadpartitions.partition import DivisorCache

PARITY_D = (2, 3, 6, 7)


def direct_trace_layer(field: Field, t: int) -> int:
    # all elements of trace t: a determined by b, so scan b
    count = 0
    for b in range(-2 * t - 4, 2 * t + 5):
        if field.one_mod4:
            if (t - b) % 2:
                continue
            e = field.element((t - b) // 2, b)
        else:
            if t % 2:
                continue
            e = field.element(t // 2, b)
        if e.trace() == t and e.is_totally_positive():
            count += 1
    return count


def direct_P(field: Field, grid, n: int) -> int:
    # sum of grid counts over the full trace layer 2n
    total = 0
    grid.ensure(2 * n)
    for x, y, c in grid.cells():
        if field.element(x, y).trace() == 2 * n:
            total += c
    return total


def test_count_trace_is_odd_for_2_3_mod_4():
    for D in range(2, 40):
        if not is_squarefree(D) or D % 4 == 1:
            continue
        f = Field(D)
        for n in range(1, 201):
            assert count_trace(f, n) % 2 == 1, (D, n)


def test_count_trace_matches_enumeration_both_classes():
    for D in (2, 3, 5, 6, 13, 17, 21):
        f = Field(D)
        for n in range(1, 40):
            want = direct_trace_layer(f, 2 * n)
            assert count_trace(f, n) == want, (D, n)


def test_trace_layer_count_matches_enumeration():
    for D in (2, 3, 5, 13, 21):
        f = Field(D)
        for t in range(1, 61):
            assert trace_layer_count(f, t) == direct_trace_layer(f, t), (D, t)
    # odd traces occur only in the 1 mod 4 class
    assert trace_layer_count(Field(2), 3) == 0
    assert trace_layer_count(Field(5), 1) == 0
    assert trace_layer_count(Field(5), 3) == 2
    with pytest.raises(ValueError):
        trace_layer_count(Field(5), 0)


def test_cumulative_P_matches_direct_sum(pool):
    for D in PARITY_D:
        f = Field(D)
        grid = pool.grid(f)
        profile = cumulative_P(f, 25)
        assert profile.P[0] == 1
        for n in range(1, 26):
            assert profile.P[n] == direct_P(f, grid, n), (D, n)


def test_cumulative_P_matches_direct_sum_one_mod4(pool):
    for D in (5, 13, 17, 21):
        f = Field(D)
        grid = pool.grid(f)
        profile = cumulative_P(f, 18)
        for n in range(1, 19):
            assert profile.P[n] == direct_P(f, grid, n), (D, n)


def test_parity_congruence_holds(pool):
    for D in PARITY_D:
        f = Field(D)
        report = parity_check(f, 40, pool.grid(f))
        assert report.congruent
        assert report.odd_count + report.even_count == 40
        assert report.p_parity[0] == 1


def test_parity_bits_frozen_for_sqrt2(pool):
    report = parity_check(Field(2), 10, pool.grid(Field(2)))
    assert report.profile.parity_bits[1:] == (1, 0, 1, 0, 0, 1, 0, 0, 0, 0)
    assert report.profile.P == (1, 1, 4, 9, 20, 42, 91, 176, 354, 676, 1282)
    assert report.profile.a == (1, 3, 5, 5, 7, 9, 9, 11, 13, 15)


def test_both_parities_occur_in_window(pool):
    # finite-window stand-in for the infinitude statement
    for D in PARITY_D:
        bits = parity_check(Field(D), 40, pool.grid(Field(D))).p_parity[1:]
        assert bits.count(1) >= 3
        assert bits.count(0) >= 3


def test_odd_sigma_set():
    dc = DivisorCache()
    want = {k for k in range(1, 501) if dc.sigma(k) % 2 == 1}
    assert odd_sigma_set(500) == frozenset(want)
    assert odd_sigma_set(0) == frozenset()
    assert odd_sigma_set(2) == frozenset({1, 2})
    with pytest.raises(ValueError):
        odd_sigma_set(-1)


def test_bad_arguments():
    f = Field(2)
    with pytest.raises(ValueError):
        count_trace(f, 0)
    with pytest.raises(ValueError):
        cumulative_P(f, -1)
