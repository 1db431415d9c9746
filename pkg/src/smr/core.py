"""Data model and axiom checker for signed magic rectangles.

A signed magic rectangle with parameters (m, n; r, s) is an m x n array in
which exactly r cells per row and s cells per column are filled, the filled
entries use every value of the support set exactly once, and every row and
every column sums to zero.  The support set is {+-1, ..., +-(mr/2)} when mr
is even and {0, +-1, ..., +-((ms-1)/2)} when mr is odd.

Indices are 1-based throughout the public model.  Arrays are sparse maps
from (row, col) to entry; they are immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping


class DimensionError(ValueError):
    """Array shape does not match the parameter set it is checked against."""


@dataclass(frozen=True)
class Params:
    """The parameter quadruple (m, n, r, s).

    m, n are the row and column counts; r and s are the filled-cell counts
    per row and per column.  Feasible parameters satisfy mr = ns, r <= n and
    s <= m.
    """

    m: int
    n: int
    r: int
    s: int

    def __post_init__(self) -> None:
        for name in ("m", "n", "r", "s"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        if self.m * self.r != self.n * self.s:
            raise ValueError(
                f"cell-count mismatch: m*r = {self.m * self.r} but n*s = {self.n * self.s}"
            )
        if self.r > self.n:
            raise ValueError(f"r = {self.r} exceeds column count n = {self.n}")
        if self.s > self.m:
            raise ValueError(f"s = {self.s} exceeds row count m = {self.m}")

    @property
    def cell_count(self) -> int:
        return self.m * self.r


@dataclass(frozen=True)
class SupportSet:
    """The exact multiset of entries a valid array must use.

    ``half`` is mr/2 in the even case and (ms-1)/2 in the odd case; the odd
    case additionally contains zero.
    """

    half: int
    includes_zero: bool

    @property
    def cardinality(self) -> int:
        return 2 * self.half + (1 if self.includes_zero else 0)

    def __contains__(self, value: int) -> bool:
        if value == 0:
            return self.includes_zero
        return 1 <= abs(value) <= self.half

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted_values())

    def sorted_values(self) -> tuple[int, ...]:
        negatives = range(-self.half, 0)
        positives = range(1, self.half + 1)
        middle = (0,) if self.includes_zero else ()
        return tuple(negatives) + middle + tuple(positives)


def support_set(p: Params) -> SupportSet:
    """Required entry set for parameters ``p``, split on the parity of mr."""
    if (p.m * p.r) % 2 == 0:
        return SupportSet(half=(p.m * p.r) // 2, includes_zero=False)
    return SupportSet(half=(p.m * p.s - 1) // 2, includes_zero=True)


@dataclass(frozen=True)
class SignedArray:
    """Sparse m x n grid of signed integer entries, 1-based indices.

    ``cells`` maps (row, col) to the entry.  Entries are nonzero for every
    parameter set with an even cell count (the only kind any construction
    here produces); zero is representable for odd-support parameter sets.
    """

    rows: int
    cols: int
    cells: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"negative dimensions {self.rows}x{self.cols}")
        frozen = dict(self.cells)
        for (i, j), e in frozen.items():
            if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                raise ValueError(
                    f"cell ({i},{j}) outside the {self.rows}x{self.cols} grid"
                )
            if not isinstance(e, int):
                raise ValueError(f"entry at ({i},{j}) is not an integer: {e!r}")
        object.__setattr__(self, "cells", frozen)

    @classmethod
    def from_cells(
        cls, rows: int, cols: int, triples: Iterable[tuple[int, int, int]]
    ) -> SignedArray:
        cells: dict[tuple[int, int], int] = {}
        for i, j, e in triples:
            if (i, j) in cells:
                raise ValueError(f"duplicate cell ({i},{j})")
            cells[i, j] = e
        return cls(rows, cols, cells)

    @classmethod
    def from_dense(cls, grid: Iterable[Iterable[int]]) -> SignedArray:
        """Build from row lists, using 0 to mark an empty cell."""
        rows = [list(row) for row in grid]
        cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise ValueError("ragged row lengths")
        cells = {
            (i, j): e
            for i, row in enumerate(rows, start=1)
            for j, e in enumerate(row, start=1)
            if e != 0
        }
        return cls(len(rows), cols, cells)

    def items(self) -> list[tuple[tuple[int, int], int]]:
        """All cells sorted by (row, col)."""
        return sorted(self.cells.items())

    def row(self, i: int) -> dict[int, int]:
        return {j: e for (ri, j), e in self.cells.items() if ri == i}

    def column(self, j: int) -> dict[int, int]:
        return {i: e for (i, cj), e in self.cells.items() if cj == j}

    @property
    def is_empty(self) -> bool:
        return not self.cells

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedArray):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and dict(self.cells) == dict(other.cells)
        )


def entry_multiset(a: SignedArray) -> tuple[int, ...]:
    """All stored entries in ascending order."""
    return tuple(sorted(a.cells.values()))


def is_shiftable(a: SignedArray) -> bool:
    """True iff every row and every column balances positive and negative
    entry counts.  The empty array is vacuously shiftable."""
    row_bal = [0] * (a.rows + 1)
    col_bal = [0] * (a.cols + 1)
    for (i, j), e in a.cells.items():
        d = 1 if e > 0 else -1
        row_bal[i] += d
        col_bal[j] += d
    return all(b == 0 for b in row_bal) and all(b == 0 for b in col_bal)


@dataclass(frozen=True)
class Violation:
    """One failed axiom; ``index`` is the offending row or column, when any."""

    axiom: str
    index: int | None
    detail: str

    def __str__(self) -> str:
        where = "" if self.index is None else f" at {self.axiom.split('_')[0]} {self.index}"
        return f"{self.axiom}{where}: {self.detail}"


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "pass"
        lines = [f"fail ({len(self.violations)} violations)"]
        lines += [f"  - {v}" for v in self.violations]
        return "\n".join(lines)


def verify_smr(a: SignedArray, p: Params) -> VerificationReport:
    """Check the five axioms and report every violation.

    Axioms: r filled cells per row, s per column, entry multiset equal to
    the support set, zero row sums, zero column sums.  Pure function; raises
    DimensionError when the array shape disagrees with ``p``.
    """
    if a.rows != p.m or a.cols != p.n:
        raise DimensionError(
            f"array is {a.rows}x{a.cols} but parameters expect {p.m}x{p.n}"
        )

    violations: list[Violation] = []
    row_count = [0] * (p.m + 1)
    col_count = [0] * (p.n + 1)
    row_sum = [0] * (p.m + 1)
    col_sum = [0] * (p.n + 1)
    for (i, j), e in a.cells.items():
        row_count[i] += 1
        col_count[j] += 1
        row_sum[i] += e
        col_sum[j] += e

    for i in range(1, p.m + 1):
        if row_count[i] != p.r:
            violations.append(
                Violation("row_count", i, f"{row_count[i]} filled cells, expected {p.r}")
            )
    for j in range(1, p.n + 1):
        if col_count[j] != p.s:
            violations.append(
                Violation("col_count", j, f"{col_count[j]} filled cells, expected {p.s}")
            )

    expected = support_set(p).sorted_values()
    actual = entry_multiset(a)
    if actual != expected:
        missing = _multiset_diff(expected, actual)
        extra = _multiset_diff(actual, expected)
        violations.append(
            Violation(
                "support",
                None,
                f"missing {_preview(missing)}, unexpected {_preview(extra)}",
            )
        )

    for i in range(1, p.m + 1):
        if row_sum[i] != 0:
            violations.append(Violation("row_sum", i, f"sums to {row_sum[i]}"))
    for j in range(1, p.n + 1):
        if col_sum[j] != 0:
            violations.append(Violation("col_sum", j, f"sums to {col_sum[j]}"))

    return VerificationReport(tuple(violations))


def _multiset_diff(left: tuple[int, ...], right: tuple[int, ...]) -> list[int]:
    from collections import Counter

    delta = Counter(left) - Counter(right)
    return sorted(delta.elements())


def _preview(values: list[int], limit: int = 8) -> str:
    if not values:
        return "nothing"
    shown = ", ".join(str(v) for v in values[:limit])
    more = "" if len(values) <= limit else f", ... ({len(values) - limit} more)"
    return f"[{shown}{more}]"
