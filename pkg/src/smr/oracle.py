"""Independent exhaustive existence decider for small parameters.

With two filled cells per column, every column of a valid array holds some
value k together with -k (a two-term zero sum), and relabeling columns so
that column k holds {k, -k} loses no generality.  The search therefore only
assigns, for each value k from n down to 1, the row receiving +k and the row
receiving -k.  Pruning uses row capacities and a reachability bound on
partial row sums; row-relabeling symmetry is broken by touching new rows in
index order, which also fixes the global sign reflection.

``decide`` answers existence by exhaustion and never guesses: a node budget
overrun is reported as a cutoff, not as a decision.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Params, SignedArray, verify_smr
from .dispatch import Verdict, feasibility

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # "exists" | "not_exists" | "cutoff"
    witness: SignedArray | None
    nodes: int


def decide(m: int, r: int, budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Search for an (m, mr/2; r, 2) rectangle by exhaustive backtracking.

    An odd m*r leaves no valid support set, so the answer is immediate.
    Values are assigned largest first; large values constrain row sums the
    most, so the reachability bound prunes early.
    """
    if m < 1 or r < 1 or (m * r) % 2:
        return SearchOutcome("not_exists", None, 0)
    n = (m * r) // 2

    counts = [0] * m
    sums = [0] * m
    touched = [False] * m
    pos_row = [0] * (n + 1)
    neg_row = [0] * (n + 1)
    nodes = 0
    cutoff = False

    def viable(remaining: int) -> bool:
        # every row must reach exactly r entries and a zero sum using
        # distinct magnitudes from 1..remaining, at most one per value
        for i in range(m):
            d = r - counts[i]
            if d > remaining:
                return False
            if abs(sums[i]) > d * remaining - d * (d - 1) // 2:
                return False
        return True

    def candidates(exclude: int = -1) -> list[int]:
        # open rows already in use, plus the single lowest untouched row
        out = [i for i in range(m) if touched[i] and counts[i] < r and i != exclude]
        for i in range(m):
            if not touched[i]:
                out.append(i)
                break
        return out

    def assign(k: int) -> bool:
        nonlocal nodes, cutoff
        if k == 0:
            return True  # viability at remaining = 0 forced full rows and zero sums
        for p in candidates():
            p_was_new = not touched[p]
            touched[p] = True
            counts[p] += 1
            sums[p] += k
            pos_row[k] = p
            for q in candidates(exclude=p):
                nodes += 1
                if nodes > budget:
                    cutoff = True
                    break
                q_was_new = not touched[q]
                touched[q] = True
                counts[q] += 1
                sums[q] -= k
                neg_row[k] = q
                if viable(k - 1) and assign(k - 1):
                    return True
                counts[q] -= 1
                sums[q] += k
                if q_was_new:
                    touched[q] = False
                if cutoff:
                    break
            counts[p] -= 1
            sums[p] -= k
            if p_was_new:
                touched[p] = False
            if cutoff:
                break
        return False

    found = viable(n) and assign(n)
    if cutoff:
        return SearchOutcome("cutoff", None, nodes)
    if not found:
        return SearchOutcome("not_exists", None, nodes)

    cells: dict[tuple[int, int], int] = {}
    for k in range(1, n + 1):
        cells[pos_row[k] + 1, k] = k
        cells[neg_row[k] + 1, k] = -k
    witness = SignedArray(m, n, cells)
    report = verify_smr(witness, Params(m, n, r, 2))
    assert report.ok, f"search produced an invalid witness: {report}"
    return SearchOutcome("exists", witness, nodes)


@dataclass(frozen=True)
class Disagreement:
    m: int
    r: int
    search_status: str
    verdict: Verdict


@dataclass(frozen=True)
class CrossCheckReport:
    checked: int
    disagreements: tuple[Disagreement, ...]
    cutoffs: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def __str__(self) -> str:
        lines = [
            f"checked {self.checked} parameter points: "
            f"{len(self.disagreements)} disagreements, {len(self.cutoffs)} cutoffs"
        ]
        lines += [
            f"  disagree at m={d.m} r={d.r}: search says {d.search_status}, "
            f"criterion says {d.verdict}"
            for d in self.disagreements
        ]
        lines += [f"  cutoff at m={mm} r={rr}" for mm, rr in self.cutoffs]
        return "\n".join(lines)


def cross_check(
    max_m: int, max_r: int, budget: int = DEFAULT_BUDGET
) -> CrossCheckReport:
    """Compare exhaustive search against the existence criterion on a grid.

    Every (m, r) with 1 <= m <= max_m, 1 <= r <= max_r is decided both ways
    (n taken as floor(mr/2); when mr is odd both sides reject).  Cutoffs are
    listed separately and excluded from the disagreement count.
    """
    disagreements: list[Disagreement] = []
    cutoffs: list[tuple[int, int]] = []
    checked = 0
    for m in range(1, max_m + 1):
        for r in range(1, max_r + 1):
            checked += 1
            outcome = decide(m, r, budget)
            if outcome.status == "cutoff":
                cutoffs.append((m, r))
                continue
            verdict = feasibility(m, (m * r) // 2, r)
            if verdict.feasible != (outcome.status == "exists"):
                disagreements.append(Disagreement(m, r, outcome.status, verdict))
    return CrossCheckReport(checked, tuple(disagreements), tuple(cutoffs))
