"""Partition enumeration and the congruence/difference-condition counters.

A partition is represented as a tuple of weakly decreasing positive
integers.  Enumeration order is lexicographically decreasing with the
largest part first, so witness lists are deterministic and diffable.

Two counting routes exist for the congruence ("product") sides: an
unbounded-knapsack dynamic program over the allowed part sizes, which
scales to n in the hundreds, and a brute-force filter over the full
enumeration, kept as a test oracle.  The difference-condition ("sum")
sides are inherently enumeration-based.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

Partition = tuple  # weakly decreasing tuple of positive ints


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield every partition of n (parts <= max_part) in lex-decreasing order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    cap = n if max_part is None else min(max_part, n)

    def gen(remaining: int, limit: int, prefix: tuple) -> Iterator[tuple]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(limit, remaining), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))

    if n == 0:
        yield ()
        return
    yield from gen(n, cap, ())


def _count_by_dp(n_max: int, allowed_parts: Sequence[int]) -> list:
    """ways[s] = number of multisets from allowed_parts summing to s."""
    ways = [0] * (n_max + 1)
    ways[0] = 1
    for p in sorted(allowed_parts):
        for s in range(p, n_max + 1):
            ways[s] += ways[s - p]
    return ways


def partition_numbers(n_max: int) -> list:
    """p(0..n_max) via the DP over all parts."""
    return _count_by_dp(n_max, range(1, n_max + 1))


# ---------------------------------------------------------------------------
# B side: congruence conditions modulo 4k
# ---------------------------------------------------------------------------


def _check_ki(k: int, i: int) -> None:
    if k < 2:
        raise ValueError("k must be at least 2")
    if not 0 <= i <= k - 1:
        raise ValueError(f"i must lie in [0, {k - 1}]")


def b_part_allowed(p: int, k: int, i: int) -> bool:
    """Whether part p may occur on the product side at parameters (i, k).

    Allowed parts are even but not congruent to 4i+2 mod 4k, or odd and
    congruent to 2i+1 or 2k+2i+1 mod 4k.
    """
    r = p % (4 * k)
    if p % 2 == 0:
        return r != 4 * i + 2
    return r in (2 * i + 1, 2 * k + 2 * i + 1)


def count_B_table(n_max: int, k: int, i: int) -> list:
    """B_{i,k}(0..n_max) by dynamic programming over the allowed parts."""
    _check_ki(k, i)
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    allowed = [p for p in range(1, n_max + 1) if b_part_allowed(p, k, i)]
    return _count_by_dp(n_max, allowed)


def count_B(n: int, k: int, i: int) -> int:
    return count_B_table(n, k, i)[n]


def b_witnesses(n: int, k: int, i: int) -> list:
    """All partitions counted by B_{i,k}(n), by filtering the enumeration."""
    _check_ki(k, i)
    return [
        parts
        for parts in enumerate_partitions(n)
        if all(b_part_allowed(p, k, i) for p in parts)
    ]


def count_B_by_enumeration(n: int, k: int, i: int) -> int:
    """Brute-force oracle for count_B."""
    return len(b_witnesses(n, k, i))


# ---------------------------------------------------------------------------
# C side: difference conditions
# ---------------------------------------------------------------------------

C_PHRASINGS = ("corollary", "thm12", "thm13")


def satisfies_corollary(parts: Partition, k: int, i: int) -> bool:
    """The general difference condition at parameters (i, k).

    For every odd part v = 2j+1 present: no even part lies in
    {2j-2i+2, 2j-2i+4, ..., 2j+2k-2i-2}; no other odd part lies in
    {2j+1, 2j+3, ..., 2j+2k-1} (so odd parts never repeat); and the
    smallest odd part is at least 2i+1.
    """
    cnt = Counter(parts)
    for v in cnt:
        if v % 2 == 0:
            continue
        if cnt[v] > 1:
            return False
        if v < 2 * i + 1:
            return False
        j2 = v - 1  # 2j
        for w in range(j2 - 2 * i + 2, j2 + 2 * k - 2 * i - 1, 2):
            if w >= 2 and w in cnt:
                return False
        for w in range(v + 2, v + 2 * k, 2):
            if w in cnt:
                return False
    return True


def satisfies_thm12(parts: Partition, k: int) -> bool:
    """The i = k-1 phrasing: a downward window below each odd part.

    If an odd part 2j+1 is present, no other part equals any of
    2j+1, 2j, ..., 2j-2k+3, and the smallest part is not in {1, 3, ..., 2k-3}.
    """
    cnt = Counter(parts)
    if parts:
        smallest = parts[-1]
        if smallest % 2 == 1 and smallest <= 2 * k - 3:
            return False
    for v in cnt:
        if v % 2 == 0:
            continue
        if cnt[v] > 1:
            return False
        for w in range(max(1, v - 2 * k + 2), v):
            if w in cnt:
                return False
    return True


def satisfies_thm13(parts: Partition, k: int) -> bool:
    """The i = 0 phrasing: an upward window above each odd part.

    If an odd part 2j+1 is present, no other part equals any of
    2j+1, 2j+2, ..., 2j+2k-1 (the window of 2k-1 consecutive values
    starting at the odd part itself).
    """
    cnt = Counter(parts)
    for v in cnt:
        if v % 2 == 0:
            continue
        if cnt[v] > 1:
            return False
        for w in range(v + 1, v + 2 * k - 1):
            if w in cnt:
                return False
    return True


def _c_predicate(k: int, i: int, phrasing: str):
    if phrasing == "corollary":
        _check_ki(k, i)
        return lambda parts: satisfies_corollary(parts, k, i)
    if phrasing == "thm12":
        _check_ki(k, i)
        if i != k - 1:
            raise ValueError("phrasing thm12 requires i = k-1")
        return lambda parts: satisfies_thm12(parts, k)
    if phrasing == "thm13":
        _check_ki(k, i)
        if i != 0:
            raise ValueError("phrasing thm13 requires i = 0")
        return lambda parts: satisfies_thm13(parts, k)
    raise ValueError(f"unknown phrasing {phrasing!r}")


def c_witnesses(n: int, k: int, i: int, phrasing: str = "corollary") -> list:
    """All partitions counted by C_{i,k}(n) under the selected phrasing."""
    pred = _c_predicate(k, i, phrasing)
    return [parts for parts in enumerate_partitions(n) if pred(parts)]


def count_C(n: int, k: int, i: int, phrasing: str = "corollary") -> int:
    return len(c_witnesses(n, k, i, phrasing))


# ---------------------------------------------------------------------------
# Schur's identity
# ---------------------------------------------------------------------------


def count_schur_product_table(n_max: int) -> list:
    """Partitions into parts congruent to +-1 mod 6, for n = 0..n_max."""
    allowed = [p for p in range(1, n_max + 1) if p % 6 in (1, 5)]
    return _count_by_dp(n_max, allowed)


def count_schur_product(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return count_schur_product_table(n)[n]


def satisfies_schur_gap(parts: Partition) -> bool:
    """Adjacent parts differ by >= 3, and by >= 6 when both are multiples of 3."""
    for a, b in zip(parts, parts[1:]):
        d = a - b
        if d < 3:
            return False
        if d < 6 and a % 3 == 0 and b % 3 == 0:
            return False
    return True


def schur_gap_witnesses(n: int) -> list:
    return [parts for parts in enumerate_partitions(n) if satisfies_schur_gap(parts)]


def count_schur_gap(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return len(schur_gap_witnesses(n))


def format_partition(parts: Partition) -> str:
    return "+".join(str(p) for p in parts) if parts else "0"
