"""Direct constructions for row degrees 3 and 5 at even row counts.

Both follow the same two-step plan: first build a compact m x 3 or m x 5
block whose rows sum to zero, whose entries are exactly {+-1..+-(cm/2)}
(c = 3 or 5), and in which no row contains both k and -k; then spread the
block by sending each entry k to column |k| of the full-width rectangle.
Column |k| then holds exactly k and -k, so the spread array satisfies every
axiom of an (m, cm/2; c, 2) rectangle.

The five-column block is degenerate in exactly two rows when the row count
is 2 mod 4; an entry swap between two row pairs in the outer columns repairs
it.  There is no five-column construction at m = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .core import SignedArray, entry_multiset


class BlockError(ValueError):
    """Compact block violates its construction invariants."""


@dataclass(frozen=True)
class CompactBlock:
    """A zero-row-sum block ready to be spread to full width."""

    array: SignedArray
    kind: Literal["three", "five", "five_repaired"]

    def __post_init__(self) -> None:
        a = self.array
        width = a.cols
        m = a.rows
        expected = tuple(range(-(width * m) // 2, 0)) + tuple(
            range(1, (width * m) // 2 + 1)
        )
        if entry_multiset(a) != expected:
            raise BlockError(
                f"block entries are not exactly +-1..+-{(width * m) // 2}"
            )
        counts = [0] * (m + 1)
        sums = [0] * (m + 1)
        row_magnitudes: list[set[int]] = [set() for _ in range(m + 1)]
        for (i, _), e in a.cells.items():
            counts[i] += 1
            sums[i] += e
            if abs(e) in row_magnitudes[i]:
                raise BlockError(f"row {i} contains an entry and its negation")
            row_magnitudes[i].add(abs(e))
        for i in range(1, m + 1):
            if counts[i] != width:
                raise BlockError(f"row {i} is not fully filled")
            if sums[i] != 0:
                raise BlockError(f"row {i} sums to {sums[i]}")


def three_column_block(m: int) -> CompactBlock:
    """The m x 3 block spreading to an (m, 3m/2; 3, 2) rectangle, m even >= 2."""
    if m < 2 or m % 2:
        raise ValueError(f"row count must be even and at least 2, got {m}")
    half = m // 2
    top = 3 * half  # largest absolute entry
    cells: dict[tuple[int, int], int] = {}
    for i in range(1, half + 1):
        cells[i, 1] = i
        cells[i, 2] = top - 2 * i + 1
        cells[i, 3] = -top + i - 1
    for i in range(half + 1, m + 1):
        cells[i, 1] = half - i
        cells[i, 2] = -i
        cells[i, 3] = -half + 2 * i
    return CompactBlock(SignedArray(m, 3, cells), "three")


def five_column_block(m: int) -> CompactBlock:
    """The m x 5 block spreading to an (m, 5m/2; 5, 2) rectangle, m even >= 4.

    For m = 0 mod 4 the raw column formulas already avoid +-k row pairs.  For
    m = 2 mod 4 the raw block has exactly two degenerate rows, (m+2)/4 and
    (3m+2)/4; entries in columns 1 and 5 are swapped between each degenerate
    row and its predecessor, which restores the no-pair invariant while
    keeping row sums at zero.
    """
    if m < 4 or m % 2:
        raise ValueError(f"row count must be even and at least 4, got {m}")
    cells = _raw_five_column_cells(m)
    if m % 4 == 0:
        return CompactBlock(SignedArray(m, 5, cells), "five")
    for upper in ((m - 2) // 4, (3 * m - 2) // 4):
        lower = upper + 1
        for col in (1, 5):
            cells[upper, col], cells[lower, col] = cells[lower, col], cells[upper, col]
    return CompactBlock(SignedArray(m, 5, cells), "five_repaired")


def _raw_five_column_cells(m: int) -> dict[tuple[int, int], int]:
    half = m // 2
    cells: dict[tuple[int, int], int] = {}
    for i in range(1, half + 1):
        cells[i, 1] = i
        cells[i, 2] = half + 2 * i - 1
        cells[i, 3] = -m - i
        cells[i, 4] = -3 * half - i
        cells[i, 5] = 2 * m - i + 1
    for i in range(half + 1, m + 1):
        cells[i, 1] = half - i
        cells[i, 2] = -3 * half + i - 1
        cells[i, 3] = 5 * half - 2 * i + 2
        cells[i, 4] = 3 * half + i
        cells[i, 5] = -3 * m + i - 1
    return cells


def spread(block: CompactBlock) -> SignedArray:
    """Relocate each entry k of the block to column |k| of the full rectangle.

    Row contents (hence row sums) are unchanged; column |k| receives exactly
    k and -k.  A +-k pair inside one row would collide in one cell, which the
    block invariants rule out.
    """
    a = block.array
    width = (a.cols * a.rows) // 2
    cells: dict[tuple[int, int], int] = {}
    for (i, _), e in a.cells.items():
        target = (i, abs(e))
        if target in cells:
            raise BlockError(
                f"row {i} places both {cells[target]} and {e} at column {abs(e)}"
            )
        cells[target] = e
    return SignedArray(a.rows, width, cells)
