"""Composition operators: shifting, inflation and joins.

All operators take shiftable input where stated, preserve zero line sums,
and keep the entry set exact: a valid operand using {+-1..+-N} combines with
one using {+-1..+-N'} into a result using {+-1..+-(N+N')}.

The shift quantum of an array is half its cell count (the largest absolute
entry of a valid array).  Degenerate empty operands are accepted by the
inflations (k = 0) and act as identities in the joins, so boundary cases of
the dispatch table need no special-casing.
"""

from __future__ import annotations

from .core import SignedArray, is_shiftable


class NotShiftableError(ValueError):
    """Operand required to be shiftable is not."""


class ParityError(ValueError):
    """Join would need a half-integral shift (odd cell count in the fixed operand)."""


class JoinMismatchError(ValueError):
    """Join operands disagree on shared dimensions or fill degrees."""


def support_half(a: SignedArray) -> int:
    """Half the cell count: the shift quantum used by inflations and joins."""
    if len(a.cells) % 2:
        raise ParityError(f"array has an odd cell count {len(a.cells)}")
    return len(a.cells) // 2


def shift(a: SignedArray, t: int) -> SignedArray:
    """Increase every entry's absolute value by t.

    Requires a shiftable operand: balanced sign counts are exactly what keeps
    every row and column sum at zero after the shift.
    """
    if t < 0:
        raise ValueError(f"shift amount must be nonnegative, got {t}")
    if not is_shiftable(a):
        raise NotShiftableError("refusing to shift a non-shiftable array")
    if t == 0:
        return a
    cells = {(i, j): e + t if e > 0 else e - t for (i, j), e in a.cells.items()}
    return SignedArray(a.rows, a.cols, cells)


def inflate_horizontal(a: SignedArray, k: int) -> SignedArray:
    """Lay k progressively shifted copies side by side.

    Maps an (m, n; r, s) shiftable array to an (m, kn; kr, s) shiftable
    array; copy number b (0-based) is shifted by b times the quantum.  k = 0
    yields the empty m x 0 array.
    """
    if k < 0:
        raise ValueError(f"copy count must be nonnegative, got {k}")
    if not is_shiftable(a):
        raise NotShiftableError("horizontal inflation requires a shiftable array")
    if k == 1:
        return a
    quantum = support_half(a)
    cells: dict[tuple[int, int], int] = {}
    for b in range(k):
        t = b * quantum
        off = b * a.cols
        for (i, j), e in a.cells.items():
            cells[i, j + off] = e + t if e > 0 else e - t
    return SignedArray(a.rows, a.cols * k, cells)


def inflate_diagonal(a: SignedArray, k: int) -> SignedArray:
    """Lay k progressively shifted copies along the block diagonal.

    Maps an (m, n; r, s) shiftable array to a (km, kn; r, s) shiftable array
    with empty off-diagonal blocks.  k = 0 yields the empty 0 x 0 array.
    """
    if k < 0:
        raise ValueError(f"copy count must be nonnegative, got {k}")
    if not is_shiftable(a):
        raise NotShiftableError("diagonal inflation requires a shiftable array")
    if k == 1:
        return a
    quantum = support_half(a)
    cells: dict[tuple[int, int], int] = {}
    for b in range(k):
        t = b * quantum
        row_off = b * a.rows
        col_off = b * a.cols
        for (i, j), e in a.cells.items():
            cells[i + row_off, j + col_off] = e + t if e > 0 else e - t
    return SignedArray(a.rows * k, a.cols * k, cells)


def _row_degree(a: SignedArray) -> int:
    if a.rows == 0:
        return 0
    if len(a.cells) % a.rows:
        raise JoinMismatchError("operand rows are not uniformly filled")
    return len(a.cells) // a.rows


def _col_degree(a: SignedArray) -> int:
    if a.cols == 0:
        return 0
    if len(a.cells) % a.cols:
        raise JoinMismatchError("operand columns are not uniformly filled")
    return len(a.cells) // a.cols


def join_horizontal(a: SignedArray, b: SignedArray) -> SignedArray:
    """Attach b to the left of a shifted copy of a.

    b occupies columns 1..n' unchanged; a, shifted past b's entry range,
    follows.  Requires equal row counts and column degrees, a shiftable, and
    an even cell count in b.  The result is shiftable iff b is.
    """
    if a.is_empty and a.cols == 0:
        return b
    if a.rows != b.rows:
        raise JoinMismatchError(f"row counts differ: {a.rows} vs {b.rows}")
    if not is_shiftable(a):
        raise NotShiftableError("horizontal join requires a shiftable first operand")
    if len(b.cells) % 2:
        raise ParityError(
            f"fixed operand has {len(b.cells)} cells; the shared row count times "
            "its row degree must be even"
        )
    if not b.is_empty and not a.is_empty and _col_degree(a) != _col_degree(b):
        raise JoinMismatchError(
            f"column degrees differ: {_col_degree(a)} vs {_col_degree(b)}"
        )
    shifted = shift(a, support_half(b))
    cells = dict(b.cells)
    for (i, j), e in shifted.cells.items():
        cells[i, j + b.cols] = e
    return SignedArray(a.rows, a.cols + b.cols, cells)


def join_diagonal(a: SignedArray, b: SignedArray) -> SignedArray:
    """Attach b at the top-left of a shifted copy of a.

    b occupies the leading b.rows x b.cols region unchanged; a, shifted past
    b's entry range, fills the trailing diagonal block.  Requires equal row
    and column degrees, a shiftable, and an even cell count in b.  The result
    is shiftable iff b is.
    """
    if a.is_empty and a.rows == 0 and a.cols == 0:
        return b
    if not is_shiftable(a):
        raise NotShiftableError("diagonal join requires a shiftable first operand")
    if len(b.cells) % 2:
        raise ParityError(
            f"fixed operand has {len(b.cells)} cells; its row count times the "
            "shared row degree must be even"
        )
    if not b.is_empty and not a.is_empty:
        if _row_degree(a) != _row_degree(b):
            raise JoinMismatchError(
                f"row degrees differ: {_row_degree(a)} vs {_row_degree(b)}"
            )
        if _col_degree(a) != _col_degree(b):
            raise JoinMismatchError(
                f"column degrees differ: {_col_degree(a)} vs {_col_degree(b)}"
            )
    shifted = shift(a, support_half(b))
    cells = dict(b.cells)
    for (i, j), e in shifted.cells.items():
        cells[i + b.rows, j + b.cols] = e
    return SignedArray(a.rows + b.rows, a.cols + b.cols, cells)
