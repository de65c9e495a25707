"""Sweep over every square minor of an n x n matrix.

Minors are built level by level with Laplace expansion along the smallest
row, so each order-k minor costs k products with a matrix entry plus k
additions, reusing the order-(k-1) minors of the previous level.  Entries are
never materialised; the caller supplies ``times_entry(i, j, v)`` returning
``a[i][j] * v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Optional, TypeVar

V = TypeVar("V")


@dataclass(frozen=True)
class SweepResult:
    minors_checked: int
    max_order: int
    witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]]

    @property
    def all_nonzero(self) -> bool:
        return self.witness is None


def minor_count(n: int, max_order: int) -> int:
    return sum(comb(n, k) ** 2 for k in range(1, max_order + 1))


def _mask(idx) -> int:
    m = 0
    for i in idx:
        m |= 1 << i
    return m


def laplace_sweep(
    n: int,
    one: V,
    times_entry: Callable[[int, int, V], V],
    add: Callable[[V, V], V],
    sub: Callable[[V, V], V],
    is_zero: Callable[[V], bool],
    max_order: Optional[int] = None,
    on_minor: Optional[Callable[[tuple, tuple, V], None]] = None,
) -> SweepResult:
    """Check every minor of order 1..max_order for vanishing.

    Order of visit: by order, then row sets lexicographically, then column
    sets lexicographically; the witness is the first vanishing minor.
    """
    if max_order is None:
        max_order = n
    if not 1 <= max_order <= n:
        raise ValueError(f"max_order must lie in 1..{n}, got {max_order}")
    checked = 0
    witness = None
    prev: dict[int, V] = {}
    for k in range(1, max_order + 1):
        level: dict[int, V] = {}
        col_sets = list(combinations(range(n), k))
        for rows in combinations(range(n), k):
            r0 = rows[0]
            rest = _mask(rows[1:]) << n
            for cols in col_sets:
                if k == 1:
                    val = times_entry(r0, cols[0], one)
                else:
                    cmask = _mask(cols)
                    val = None
                    for t, c in enumerate(cols):
                        term = times_entry(r0, c, prev[rest | (cmask ^ (1 << c))])
                        if val is None:
                            val = term
                        elif t & 1:
                            val = sub(val, term)
                        else:
                            val = add(val, term)
                checked += 1
                if on_minor is not None:
                    on_minor(rows, cols, val)
                if witness is None and is_zero(val):
                    witness = (rows, cols)
                if k < max_order:
                    level[(_mask(rows) << n) | _mask(cols)] = val
        prev = level
    return SweepResult(checked, max_order, witness)
