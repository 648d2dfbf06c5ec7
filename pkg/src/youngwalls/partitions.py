"""Integer partitions: the canonical type, enumerators, and counting DPs.

A partition is stored in canonical form: a weakly decreasing tuple of
positive integers.  Reading an index past the stored length yields 0, which
is the convention every algorithm in this package relies on.  All counts use
Python's arbitrary-precision integers, so results are exact at any size.
"""

from __future__ import annotations

from functools import total_ordering
from typing import Iterable, Iterator


@total_ordering
class Partition:
    """A weakly decreasing sequence of positive integers.

    The constructor accepts any weakly decreasing sequence of non-negative
    integers and drops the zeros, so callers may hand over sequences padded
    with trailing zeros.  Increasing sequences and negative entries are
    rejected.

    Indexing is 0-based and total: ``lam[i]`` returns 0 for any ``i`` at or
    past the length.  Negative indices are not supported.
    """

    __slots__ = ("parts",)

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be non-negative, got {parts}")
        if parts and parts[-1] == 0:
            k = len(parts)
            while k > 0 and parts[k - 1] == 0:
                k -= 1
            parts = parts[:k]
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        """Total number of blocks, the sum of all parts."""
        return sum(self.parts)

    def is_strict(self) -> bool:
        """True when the positive parts are strictly decreasing."""
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("partition indices start at 0")
        return self.parts[i] if i < len(self.parts) else 0

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Partition is immutable")

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def _check_non_negative(m: int) -> None:
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")


def enumerate_partitions(m: int) -> list[Partition]:
    """All partitions of ``m`` in descending lexicographic order."""
    _check_non_negative(m)

    out: list[Partition] = []

    def rec(rest: int, bound: int, prefix: list[int]) -> None:
        if rest == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(rest, bound), 0, -1):
            prefix.append(p)
            rec(rest - p, p, prefix)
            prefix.pop()

    rec(m, m if m else 1, [])
    return out


def enumerate_strict(m: int) -> list[Partition]:
    """All partitions of ``m`` into distinct parts, descending lexicographic."""
    _check_non_negative(m)

    out: list[Partition] = []

    def rec(rest: int, bound: int, prefix: list[int]) -> None:
        if rest == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(rest, bound), 0, -1):
            prefix.append(p)
            rec(rest - p, p - 1, prefix)
            prefix.pop()

    rec(m, m if m else 1, [])
    return out


def count_partitions(m: int) -> int:
    """Number of partitions of ``m``, by the unbounded-parts DP."""
    _check_non_negative(m)
    dp = [0] * (m + 1)
    dp[0] = 1
    for part in range(1, m + 1):
        for total in range(part, m + 1):
            dp[total] += dp[total - part]
    return dp[m]


def count_strict(m: int) -> int:
    """Number of partitions of ``m`` into distinct parts."""
    _check_non_negative(m)
    dp = [0] * (m + 1)
    dp[0] = 1
    for part in range(1, m + 1):
        # each part usable at most once: sweep downward
        for total in range(m, part - 1, -1):
            dp[total] += dp[total - part]
    return dp[m]


def count_odd(m: int) -> int:
    """Number of partitions of ``m`` into odd parts."""
    _check_non_negative(m)
    dp = [0] * (m + 1)
    dp[0] = 1
    for part in range(1, m + 1, 2):
        for total in range(part, m + 1):
            dp[total] += dp[total - part]
    return dp[m]
