"""Feasibility decision and deterministic construction routing.

An (m, n; r, 2) rectangle exists iff either m = 2 with n = r congruent to
0 or 3 mod 4, or m >= 3, r >= 3 and mr = 2n.  ``feasibility`` encodes that
criterion as a total function with machine-readable reason codes;
``construct`` routes every feasible point through a fixed pipeline of seeds,
inflations, joins and direct blocks, recording the applied operator sequence
so a result can be replayed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SignedArray
from .direct import CompactBlock, five_column_block, spread, three_column_block
from .seeds import seed
from .transforms import (
    inflate_diagonal,
    inflate_horizontal,
    join_diagonal,
    join_horizontal,
)

REASONS = (
    "OK_M2",
    "OK_GENERAL",
    "FAIL_ARITH",
    "FAIL_M2_RESIDUE",
    "FAIL_SMALL",
    "FAIL_PARITY",
)


@dataclass(frozen=True)
class Verdict:
    feasible: bool
    reason: str

    def __str__(self) -> str:
        return f"{'feasible' if self.feasible else 'infeasible'}: {self.reason}"


class InfeasibleError(ValueError):
    """Construction requested for parameters ruled out by the existence criterion."""

    def __init__(self, m: int, n: int, r: int, verdict: Verdict):
        super().__init__(f"no ({m}, {n}; {r}, 2) rectangle exists ({verdict.reason})")
        self.verdict = verdict


def feasibility(m: int, n: int, r: int) -> Verdict:
    """Total existence decision for (m, n; r, 2).

    Reason precedence for overlapping failures: nonpositive or too-small m
    (or nonpositive n, r) reports FAIL_SMALL; at m = 2 a count mismatch n != r
    reports FAIL_ARITH and a bad residue FAIL_M2_RESIDUE; for m >= 3, two odd
    degrees report FAIL_PARITY ahead of the count identity FAIL_ARITH, and a
    row degree below 3 reports FAIL_SMALL.
    """
    if m < 2 or n < 1 or r < 1:
        return Verdict(False, "FAIL_SMALL")
    if m == 2:
        if n != r:
            return Verdict(False, "FAIL_ARITH")
        if r % 4 in (0, 3):
            return Verdict(True, "OK_M2")
        return Verdict(False, "FAIL_M2_RESIDUE")
    if m % 2 == 1 and r % 2 == 1:
        return Verdict(False, "FAIL_PARITY")
    if m * r != 2 * n:
        return Verdict(False, "FAIL_ARITH")
    if r < 3:
        return Verdict(False, "FAIL_SMALL")
    return Verdict(True, "OK_GENERAL")


@dataclass(frozen=True)
class TraceStep:
    op: str
    args: tuple[tuple[str, object], ...] = ()

    def __str__(self) -> str:
        rendered = " ".join(f"{k}={v}" for k, v in self.args)
        return f"{self.op} {rendered}".rstrip()


@dataclass(frozen=True)
class RouteTrace:
    """Ordered operator sequence; replaying it reproduces the array exactly.

    Steps form a postfix program over a stack: seed and block steps push,
    inflations and spread rewrite the top, joins pop the fixed operand then
    the shiftable operand.
    """

    steps: tuple[TraceStep, ...]

    def __str__(self) -> str:
        return "\n".join(str(s) for s in self.steps)


def _step(op: str, **kwargs: object) -> TraceStep:
    return TraceStep(op, tuple(sorted(kwargs.items())))


def replay(trace: RouteTrace) -> SignedArray:
    """Execute a trace and return the resulting array."""
    stack: list[SignedArray | CompactBlock] = []

    def pop_array() -> SignedArray:
        top = stack.pop()
        if not isinstance(top, SignedArray):
            raise ValueError(f"trace expects an array, found {type(top).__name__}")
        return top

    for st in trace.steps:
        args = dict(st.args)
        if st.op == "seed":
            stack.append(seed(str(args["id"]))[0])
        elif st.op == "inflate_horizontal":
            stack.append(inflate_horizontal(pop_array(), int(args["k"])))
        elif st.op == "inflate_diagonal":
            stack.append(inflate_diagonal(pop_array(), int(args["k"])))
        elif st.op == "join_horizontal":
            b = pop_array()
            stack.append(join_horizontal(pop_array(), b))
        elif st.op == "join_diagonal":
            b = pop_array()
            stack.append(join_diagonal(pop_array(), b))
        elif st.op == "three_column_block":
            stack.append(three_column_block(int(args["m"])))
        elif st.op == "five_column_block":
            stack.append(five_column_block(int(args["m"])))
        elif st.op == "spread":
            top = stack.pop()
            if not isinstance(top, CompactBlock):
                raise ValueError("spread expects a compact block on the stack")
            stack.append(spread(top))
        else:
            raise ValueError(f"unknown trace op {st.op!r}")
    if len(stack) != 1:
        raise ValueError(f"trace left {len(stack)} operands on the stack")
    return pop_array()


def construct(m: int, n: int, r: int) -> tuple[SignedArray, RouteTrace]:
    """Build an (m, n; r, 2) rectangle, or raise InfeasibleError.

    Routing is deterministic (first matching rule), so identical inputs give
    identical arrays and traces:

      1. m = 2, r = 0 mod 4: inflate the 2x4 seed horizontally.
      2. m = 2, r = 3 mod 4: rule-1 width for r-3, joined after the 2x3 seed.
      3. m even, r = 3: spread three-column block.
      4. m even, r = 5: spread five-column block.
      5. m even, r = 0 mod 4: width-4 base (2x4 seed inflated diagonally to
         m rows) inflated horizontally to degree r.
      6. m even, r = 2 mod 4: degree-6 base joined after the rule-5 width
         for r-6 (empty at r = 6).
      7. m even, r = 1 mod 4, r >= 9: spread five-column block joined after
         the rule-5 width for r-5.
      8. m even, r = 3 mod 4, r >= 7: spread three-column block joined after
         the rule-5 width for r-3.
      9. m odd, r = 0 mod 4: odd-row width-4 base inflated horizontally.
     10. m odd, r = 2 mod 4: odd-row degree-6 base joined after the rule-9
         width for r-6 (empty at r = 6).
    """
    verdict = feasibility(m, n, r)
    if not verdict.feasible:
        raise InfeasibleError(m, n, r, verdict)

    if m == 2:
        if r % 4 == 0:
            steps = [_step("seed", id="S_2x4"), _step("inflate_horizontal", k=r // 4)]
        else:
            steps = [
                _step("seed", id="S_2x4"),
                _step("inflate_horizontal", k=(r - 3) // 4),
                _step("seed", id="S_2x3"),
                _step("join_horizontal"),
            ]
    elif m % 2 == 0:
        if r == 3:
            steps = [_step("three_column_block", m=m), _step("spread")]
        elif r == 5:
            steps = [_step("five_column_block", m=m), _step("spread")]
        elif r % 4 == 0:
            steps = _even_width4(m) + [_step("inflate_horizontal", k=r // 4)]
        elif r % 4 == 2:
            steps = (
                _even_width4(m)
                + [_step("inflate_horizontal", k=(r - 6) // 4)]
                + _even_degree6(m)
                + [_step("join_horizontal")]
            )
        elif r % 4 == 1:
            steps = (
                _even_width4(m)
                + [_step("inflate_horizontal", k=(r - 5) // 4)]
                + [_step("five_column_block", m=m), _step("spread")]
                + [_step("join_horizontal")]
            )
        else:  # r = 3 mod 4, r >= 7
            steps = (
                _even_width4(m)
                + [_step("inflate_horizontal", k=(r - 3) // 4)]
                + [_step("three_column_block", m=m), _step("spread")]
                + [_step("join_horizontal")]
            )
    else:
        if r % 4 == 0:
            steps = _odd_width4(m) + [_step("inflate_horizontal", k=r // 4)]
        else:  # r = 2 mod 4
            steps = (
                _odd_width4(m)
                + [_step("inflate_horizontal", k=(r - 6) // 4)]
                + _odd_degree6(m)
                + [_step("join_horizontal")]
            )

    trace = RouteTrace(tuple(steps))
    return replay(trace), trace


def _even_width4(m: int) -> list[TraceStep]:
    """Shiftable (m, 2m; 4, 2) for even m."""
    return [_step("seed", id="S_2x4"), _step("inflate_diagonal", k=m // 2)]


def _even_degree6(m: int) -> list[TraceStep]:
    """Shiftable (m, 3m; 6, 2) for even m >= 4."""
    if m % 4 == 0:
        return [_step("seed", id="S_4x12"), _step("inflate_diagonal", k=m // 4)]
    return [
        _step("seed", id="S_4x12"),
        _step("inflate_diagonal", k=(m - 6) // 4),
        _step("seed", id="S_6x18"),
        _step("join_diagonal"),
    ]


def _odd_width4(m: int) -> list[TraceStep]:
    """Shiftable (m, 2m; 4, 2) for odd m >= 3."""
    if m == 3:
        return [_step("seed", id="S_3x6")]
    if m == 5:
        return [_step("seed", id="S_5x10")]
    if m % 4 == 3:
        return [
            _step("seed", id="S_2x4"),
            _step("inflate_diagonal", k=(m - 3) // 2),
            _step("seed", id="S_3x6"),
            _step("join_diagonal"),
        ]
    return [
        _step("seed", id="S_2x4"),
        _step("inflate_diagonal", k=(m - 5) // 2),
        _step("seed", id="S_5x10"),
        _step("join_diagonal"),
    ]


def _odd_degree6(m: int) -> list[TraceStep]:
    """Shiftable (m, 3m; 6, 2) for odd m >= 3."""
    if m == 3:
        return [_step("seed", id="S_3x9")]
    if m == 5:
        return [_step("seed", id="S_5x15")]
    if m % 4 == 1:
        return [
            _step("seed", id="S_4x12"),
            _step("inflate_diagonal", k=(m - 5) // 4),
            _step("seed", id="S_5x15"),
            _step("join_diagonal"),
        ]
    return [
        _step("seed", id="S_4x12"),
        _step("inflate_diagonal", k=(m - 3) // 4),
        _step("seed", id="S_3x9"),
        _step("join_diagonal"),
    ]
