"""Walls over the rank-n ground state, encoded as partitions of column heights.

Blocks in every column repeat the color pattern 0,1,...,n-1,n,n,n-1,...,1,0
with period 2*delta where delta = n+1, so any 2*delta consecutive blocks of a
column contain each color exactly twice.  A column whose block count is a
multiple of delta ends at half-integer height; all other columns are "full"
(integer height).  A wall is proper when no two full columns are equally
tall, which on partitions means equal adjacent parts occur only at multiples
of delta.  A proper wall is reduced when no single column can shed a
2*delta-block segment and leave a proper wall; on partitions this is the gap
condition: adjacent parts (the last one paired with 0) differ by at most
2*delta, with equality allowed only when the taller part is not a multiple
of delta.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition

#: Block counts per color (a_0, ..., a_n); always of length n+1.
WeightVector = tuple[int, ...]


@dataclass(frozen=True)
class WallParams:
    """Rank of the wall pattern; delta = n + 1 is the per-column color period's half."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"rank n must be at least 2, got {self.n}")

    @property
    def delta(self) -> int:
        return self.n + 1

    @property
    def period(self) -> int:
        """Blocks per full color cycle in a column: 2 * delta."""
        return 2 * (self.n + 1)


def block_color(k: int, params: WallParams) -> int:
    """Color of the k-th block from the bottom of a column (k is 1-based)."""
    if k < 1:
        raise ValueError(f"block position must be >= 1, got {k}")
    r = (k - 1) % params.period
    return r if r <= params.n else 2 * params.n + 1 - r


def is_full_column(k: int, params: WallParams) -> bool:
    """Whether a column of ``k`` blocks reaches an integer height.

    Counting the ground half-block plus the half-height 0- and n-blocks, a
    column ends on a half-integer exactly when its block count is a multiple
    of delta, so fullness is ``delta does not divide k``.
    """
    if k < 0:
        raise ValueError(f"block count must be >= 0, got {k}")
    return k % params.delta != 0


def is_proper(lam: Partition, params: WallParams) -> bool:
    """Equal adjacent positive parts are allowed only at multiples of delta."""
    delta = params.delta
    return all(
        a != b or a % delta == 0 for a, b in zip(lam.parts, lam.parts[1:])
    )


def is_reduced(lam: Partition, params: WallParams) -> bool:
    """Proper, and every adjacent gap (last part against 0) is below 2*delta,
    or exactly 2*delta with the taller part not a multiple of delta."""
    if not is_proper(lam, params):
        return False
    delta, period = params.delta, params.period
    for i in range(len(lam)):
        gap = lam[i] - lam[i + 1]
        if gap > period or (gap == period and lam[i] % delta == 0):
            return False
    return True


def has_removable_delta(lam: Partition, params: WallParams) -> bool:
    """Whether some column can drop 2*delta blocks and leave a proper wall.

    Removal keeps the columns weakly decreasing only if the shortened column
    does not sink below its right neighbour, so a column qualifies when its
    height is at least 2*delta above that neighbour and the shortened wall is
    still proper.  Input must be proper.
    """
    if not is_proper(lam, params):
        raise ValueError(f"wall {lam!r} is not proper")
    period = params.period
    for i in range(len(lam)):
        if lam[i] >= period and lam[i] - period >= lam[i + 1]:
            shortened = list(lam.parts)
            shortened[i] -= period
            if is_proper(Partition(shortened), params):
                return True
    return False


def enumerate_proper(params: WallParams, m: int) -> list[Partition]:
    """All proper walls with ``m`` blocks, descending lexicographic.

    Generated by backtracking that fixes parts left to right under the
    properness constraint, never by filtering the full partition list.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    delta = params.delta
    out: list[Partition] = []

    def rec(rest: int, bound: int, prefix: list[int]) -> None:
        if rest == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(rest, bound), 0, -1):
            if p == bound and p % delta != 0 and prefix:
                continue
            prefix.append(p)
            rec(rest - p, p, prefix)
            prefix.pop()

    rec(m, m if m else 1, [])
    return out


def enumerate_reduced(params: WallParams, m: int) -> list[Partition]:
    """All reduced walls with ``m`` blocks, descending lexicographic.

    Backtracks under both the properness and the gap constraints, including
    the final gap of the last part against 0.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    delta, period = params.delta, params.period
    out: list[Partition] = []

    def ok_last(p: int) -> bool:
        return p < period or (p == period and p % delta != 0)

    def rec(rest: int, prev: int | None, prefix: list[int]) -> None:
        if rest == 0:
            if not prefix or ok_last(prefix[-1]):
                out.append(Partition(tuple(prefix)))
            return
        hi = rest if prev is None else min(rest, prev)
        lo = 1 if prev is None else max(1, prev - period)
        for p in range(hi, lo - 1, -1):
            if prev is not None:
                if p == prev and p % delta != 0:
                    continue
                if prev - p == period and prev % delta == 0:
                    continue
            prefix.append(p)
            rec(rest - p, p, prefix)
            prefix.pop()

    rec(m, None, [])
    return out


def weight(lam: Partition, params: WallParams) -> WeightVector:
    """Per-color block counts (a_0, ..., a_n) over all columns.

    Defined for any partition; columns are tallied independently.  Each full
    color cycle of a column contributes one pair of every color, so only the
    remainder below one period needs a block-by-block walk.
    """
    counts = [0] * (params.n + 1)
    for height in lam.parts:
        cycles, rem = divmod(height, params.period)
        if cycles:
            for c in range(params.n + 1):
                counts[c] += 2 * cycles
        for k in range(1, rem + 1):
            counts[block_color(k, params)] += 1
    return tuple(counts)
