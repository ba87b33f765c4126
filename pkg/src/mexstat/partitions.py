"""Enumeration and exact counting of integer partitions.

A partition is represented as a plain tuple of positive ints in
non-increasing (canonical) order.  Counting goes through the pentagonal
recurrence and bounded dynamic programming, deliberately independent of
the series engine so the two can cross-check each other.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Iterable, Iterator

from .series import ResidueCondition

Partition = tuple[int, ...]

#: Largest n accepted by the enumeration-backed operations (memory guard).
ENUMERATION_CAP = 70


class CapacityError(ValueError):
    """An argument exceeds what the requested method can handle."""


def _check_enumeration_cap(n: int, cap: int | None) -> None:
    limit = ENUMERATION_CAP if cap is None else cap
    if n > limit:
        raise CapacityError(
            f"n={n} exceeds the enumeration cap {limit}; use a series or recurrence method"
        )


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize an iterable of parts: sorted non-increasing, all parts >= 1."""
    ps = tuple(sorted(parts, reverse=True))
    for p in ps:
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"partition parts must be positive integers, got {p!r}")
    return ps


def _descending_partitions(remaining: int, largest: int) -> Iterator[Partition]:
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, largest), 0, -1):
        for rest in _descending_partitions(remaining - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int, *, cap: int | None = None) -> Iterator[Partition]:
    """All partitions of n, each exactly once, in reverse-lexicographic order.

    Yields the single empty partition for n = 0.  Raises CapacityError above
    the enumeration cap.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_enumeration_cap(n, cap)
    return _descending_partitions(n, n if n else 1)


def ascending_partitions(n: int) -> Iterator[list[int]]:
    """All partitions of n as ascending lists, in no particular order.

    Internal fast path (Kelleher's accelerating algorithm) for full-scan
    statistics; use :func:`enumerate_partitions` when order matters.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield []
        return
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        l = k + 1
        while x <= y:
            a[k] = x
            a[l] = y
            yield a[: k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[: k + 1]


# ---------------------------------------------------------------------------
# p(n) via the pentagonal recurrence (initialize-once shared table)
# ---------------------------------------------------------------------------

_p_table: list[int] = [1]
_p_lock = threading.Lock()


def p_count(n: int) -> int:
    """The partition count p(n); p(0) = 1 and p(n) = 0 for negative n."""
    if n < 0:
        return 0
    table = _p_table
    if n < len(table):
        return table[n]
    with _p_lock:
        while len(_p_table) <= n:
            m = len(_p_table)
            total = 0
            k = 1
            while True:
                g = m - k * (3 * k - 1) // 2
                if g < 0:
                    break
                term = _p_table[g]
                g2 = m - k * (3 * k + 1) // 2
                if g2 >= 0:
                    term += _p_table[g2]
                total += term if k & 1 else -term
                k += 1
            _p_table.append(total)
    return _p_table[n]


# ---------------------------------------------------------------------------
# restricted counts (bounded dynamic programming, no series involved)
# ---------------------------------------------------------------------------


def count_parts_restricted(
    n: int,
    allowed: ResidueCondition,
    distinct: ResidueCondition | None = None,
) -> int:
    """Partitions of n whose parts satisfy ``allowed``, with optional distinct marks.

    Every part size admitted by ``allowed`` may repeat freely.  When
    ``distinct`` is given, each part size it admits additionally contributes
    an at-most-once factor (1 + q^m) on top of whatever ``allowed`` grants
    it, i.e. the count expands

        prod_{allowed m} 1/(1-q^m) * prod_{distinct m} (1+q^m).

    With disjoint conditions this is the plain "parts from ``distinct``
    appear at most once" count.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    ways = [0] * (n + 1)
    ways[0] = 1
    for part in range(1, n + 1):
        if allowed.admits(part):
            for j in range(part, n + 1):
                ways[j] += ways[j - part]
    if distinct is not None:
        for part in range(1, n + 1):
            if distinct.admits(part):
                for j in range(n, part - 1, -1):
                    ways[j] += ways[j - part]
    return ways[n]


# ---------------------------------------------------------------------------
# partitions by parity of the number of parts
# ---------------------------------------------------------------------------


@lru_cache(maxsize=8)
def parts_parity_counts(n_max: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Tables (even, odd) where even[n] counts partitions of n with evenly many parts."""
    even = [0] * (n_max + 1)
    odd = [0] * (n_max + 1)
    even[0] = 1
    for part in range(1, n_max + 1):
        for j in range(part, n_max + 1):
            even[j], odd[j] = even[j] + odd[j - part], odd[j] + even[j - part]
    return tuple(even), tuple(odd)


def p_even_parts(n: int) -> int:
    """Partitions of n into an even number of parts."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return parts_parity_counts(n)[0][n]


def p_odd_parts(n: int) -> int:
    """Partitions of n into an odd number of parts."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return parts_parity_counts(n)[1][n]
