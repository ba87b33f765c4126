"""The central counters: partitions of n classified by their restricted mex.

p_{A,a}(n) counts partitions whose mex over the progression a, a+A, ... is
congruent to a mod 2A; pbar_{A,a}(n) counts those congruent to A+a mod 2A.
Together they exhaust p(n).  Three independent routes are provided:

* enumeration  - walk every partition and test the mex class directly;
* series       - expand 1/(q)_inf times an alternating theta numerator;
* recurrence   - fold shifted partition numbers p(n - offset) with the
                 memoized pentagonal table.
"""

from __future__ import annotations

from functools import lru_cache

from . import partitions
from .series import alternating_theta, partition_generating_series
from .statistics import MexParams


@lru_cache(maxsize=None)
def _series_row(A: int, a: int, n_max: int, barred: bool) -> tuple[int, ...]:
    if barred:
        exponent = lambda n: A * n * (n + 1) // 2 + a * (n + 1)
    else:
        exponent = lambda n: A * n * (n - 1) // 2 + a * n
    numerator = alternating_theta(exponent, 0, n_max)
    return (numerator * partition_generating_series(n_max)).coeffs


def p_mex_series(params: MexParams, n_max: int) -> tuple[int, ...]:
    """Coefficients p_{A,a}(0..n_max) from the generating-function route."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    return _series_row(params.A, params.a, n_max, False)


def pbar_mex_series(params: MexParams, n_max: int) -> tuple[int, ...]:
    """Coefficients pbar_{A,a}(0..n_max) from the generating-function route."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    return _series_row(params.A, params.a, n_max, True)


def p_mex_recurrence(params: MexParams, n: int) -> int:
    """p_{A,a}(n) by folding shifted partition numbers; 0 for negative n.

    Evaluates p(n) + sum_{m>=1} [p(n - off(2m)) - p(n - off(2m-1))] with
    off(k) = A*k*(k-1)/2 + a*k, stopping at the first m where both shifted
    arguments are negative (the offsets are strictly increasing in m).
    """
    if n < 0:
        return 0
    A, a = params.A, params.a
    total = partitions.p_count(n)
    m = 1
    while True:
        k_odd = 2 * m - 1
        off_odd = A * (k_odd * (k_odd - 1) // 2) + a * k_odd
        if off_odd > n:
            break
        k_even = 2 * m
        off_even = A * (k_even * (k_even - 1) // 2) + a * k_even
        total += partitions.p_count(n - off_even) - partitions.p_count(n - off_odd)
        m += 1
    return total


def pbar_mex_recurrence(params: MexParams, n: int) -> int:
    """pbar_{A,a}(n) = p(n) - p_{A,a}(n); 0 for negative n."""
    if n < 0:
        return 0
    return partitions.p_count(n) - p_mex_recurrence(params, n)


def _enum_pair(params: MexParams, n: int, cap: int | None) -> tuple[int, int]:
    if n < 0:
        raise ValueError("n must be non-negative")
    partitions._check_enumeration_cap(n, cap)
    if n == 0:
        return 1, 0
    A, a = params.A, params.a
    in_p = 0
    in_pbar = 0
    # probe positions never exceed n + A (first candidate past the largest part wins)
    present = bytearray(n + A + a + 2)
    for parts in partitions.ascending_partitions(n):
        for x in parts:
            present[x] = 1
        c = a
        run = 0
        while present[c]:
            c += A
            run ^= 1
        if run:
            in_pbar += 1
        else:
            in_p += 1
        for x in parts:
            present[x] = 0
    return in_p, in_pbar


def p_mex_enum(params: MexParams, n: int, *, cap: int | None = None) -> int:
    """p_{A,a}(n) by enumerating the partitions of n and classifying each mex."""
    return _enum_pair(params, n, cap)[0]


def pbar_mex_enum(params: MexParams, n: int, *, cap: int | None = None) -> int:
    """pbar_{A,a}(n) by enumeration."""
    return _enum_pair(params, n, cap)[1]


@lru_cache(maxsize=None)
def mex_census(
    n: int, a_max: int, big_a_max: int, cap: int | None = None
) -> dict[tuple[int, int], tuple[int, int]]:
    """Enumeration tallies (p_{A,a}(n), pbar_{A,a}(n)) for every A <= big_a_max, a <= a_max.

    One pass over the partitions of n covers the whole parameter grid; the
    dominant cost is the enumeration itself, so sweeping many (A, a) pairs
    at once is far cheaper than repeated single-pair scans.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    partitions._check_enumeration_cap(n, cap)
    if n == 0:
        return {(A, a): (1, 0) for A in range(1, big_a_max + 1) for a in range(1, a_max + 1)}

    odd_runs = [[0] * (big_a_max + 1) for _ in range(a_max + 1)]
    total = 0
    present = bytearray(n + big_a_max + a_max + 2)
    a_range = range(1, a_max + 1)
    big_a_range = range(1, big_a_max + 1)
    for parts in partitions.ascending_partitions(n):
        total += 1
        for x in parts:
            present[x] = 1
        for a in a_range:
            if present[a]:
                row = odd_runs[a]
                for A in big_a_range:
                    c = a + A
                    run = 1
                    while present[c]:
                        c += A
                        run ^= 1
                    if run:
                        row[A] += 1
            # absent base: mex is a itself, an even (zero-length) run
        for x in parts:
            present[x] = 0

    out: dict[tuple[int, int], tuple[int, int]] = {}
    for a in a_range:
        row = odd_runs[a]
        for A in big_a_range:
            bar = row[A]
            out[(A, a)] = (total - bar, bar)
    return out
