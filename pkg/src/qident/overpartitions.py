"""Overpartition enumeration, the D_k admissibility rule, and specializations.

An overpartition is a partition in which the last occurrence of any part
value may be overlined.  It is stored per distinct value as
(value, multiplicity, overlined); because only the last occurrence can
carry the overline, "value v has a non-overlined occurrence" is decidable
locally: multiplicity(v) >= 2, or multiplicity(v) == 1 and v is not
overlined.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterator

from .partitions import enumerate_partitions


@dataclass(frozen=True)
class Overpartition:
    """entries: ((value, multiplicity, overlined), ...) with values strictly decreasing."""

    entries: tuple

    def __post_init__(self):
        values = [v for v, _, _ in self.entries]
        if values != sorted(values, reverse=True) or len(set(values)) != len(values):
            raise ValueError("entry values must be strictly decreasing")
        for v, mult, _ in self.entries:
            if v < 1 or mult < 1:
                raise ValueError("values and multiplicities must be positive")

    @property
    def weight(self) -> int:
        return sum(v * mult for v, mult, _ in self.entries)

    @property
    def overline_count(self) -> int:
        return sum(1 for _, _, over in self.entries if over)

    @property
    def overlined_values(self) -> frozenset:
        return frozenset(v for v, _, over in self.entries if over)

    def multiplicity(self, v: int) -> int:
        for value, mult, _ in self.entries:
            if value == v:
                return mult
        return 0

    def has_nonoverlined_occurrence(self, v: int) -> bool:
        for value, mult, over in self.entries:
            if value == v:
                return mult >= 2 or not over
        return False

    def __str__(self) -> str:
        pieces = []
        for v, mult, over in self.entries:
            pieces.extend([str(v)] * (mult - 1 if over else mult))
            if over:
                pieces.append(f"{v}~")
        return "+".join(pieces) if pieces else "0"


def enumerate_overpartitions(n: int, max_part: int | None = None) -> Iterator[Overpartition]:
    """Yield every overpartition of n (parts <= max_part) exactly once.

    Deterministic order: underlying partitions in lex-decreasing order,
    then overline subsets by increasing bitmask over the distinct values.
    """
    for parts in enumerate_partitions(n, max_part):
        groups = [(v, len(list(g))) for v, g in groupby(parts)]
        d = len(groups)
        for mask in range(1 << d):
            yield Overpartition(
                tuple(
                    (v, mult, bool((mask >> idx) & 1))
                    for idx, (v, mult) in enumerate(groups)
                )
            )


def is_Dk_admissible(o: Overpartition, k: int) -> bool:
    """The two forbidden-neighbour rules of the overpartition identity.

    For every overlined value b: (a) none of b, b+1, ..., b+k-2 appears as
    a non-overlined part, and (b) none of b+1, ..., b+k-1 is overlined.
    An overlined b alone is legal; b together with a second, plain copy of
    b is not (the plain copy is a non-overlined appearance of b).
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    over = o.overlined_values
    for b in over:
        for v in range(b, b + k - 1):
            if o.has_nonoverlined_occurrence(v):
                return False
        for v in range(b + 1, b + k):
            if v in over:
                return False
    return True


def d_witnesses(m: int, n: int, k: int) -> list:
    """Admissible overpartitions of n with exactly m overlined values."""
    return [
        o
        for o in enumerate_overpartitions(n)
        if o.overline_count == m and is_Dk_admissible(o, k)
    ]


def count_Dk(m: int, n: int, k: int) -> int:
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    return len(d_witnesses(m, n, k))


def count_Dk_table(n_max: int, k: int, m_max: int | None = None) -> list:
    """table[m][n] = D_k(m, n) for m <= m_max (default n_max), n <= n_max."""
    if m_max is None:
        m_max = n_max
    table = [[0] * (n_max + 1) for _ in range(m_max + 1)]
    for n in range(n_max + 1):
        for o in enumerate_overpartitions(n):
            m = o.overline_count
            if m <= m_max and is_Dk_admissible(o, k):
                table[m][n] += 1
    return table


def count_pj(m: int, n: int, j: int, k: int) -> int:
    """Admissible overpartitions of n with m overlines and all parts <= j."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if j < 0:
        raise ValueError("j must be non-negative")
    return sum(
        1
        for o in enumerate_overpartitions(n, max_part=j)
        if o.overline_count == m and is_Dk_admissible(o, k)
    )


def count_rj(m: int, n: int, j: int, k: int) -> int:
    """As count_pj, but additionally no overlined value in {j-k+2, ..., j}."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if j < 0:
        raise ValueError("j must be non-negative")
    forbidden = set(range(max(1, j - k + 2), j + 1))
    count = 0
    for o in enumerate_overpartitions(n, max_part=j):
        if o.overline_count != m:
            continue
        if o.overlined_values & forbidden:
            continue
        if is_Dk_admissible(o, k):
            count += 1
    return count


def specialize_overpartition(o: Overpartition, i: int, k: int) -> tuple:
    """Relabel an admissible overpartition into an ordinary partition.

    Each non-overlined occurrence of value j becomes an even part 2j; each
    overlined value j becomes the odd part 2j + 2i - 1.  The result is the
    partition counted on the difference-condition side at parameters (i, k).
    """
    if not 0 <= i <= k - 1:
        raise ValueError(f"i must lie in [0, {k - 1}]")
    if not is_Dk_admissible(o, k):
        raise ValueError("overpartition is not admissible for this k")
    parts = []
    for v, mult, over in o.entries:
        plain = mult - 1 if over else mult
        parts.extend([2 * v] * plain)
        if over:
            parts.append(2 * v + 2 * i - 1)
    return tuple(sorted(parts, reverse=True))
