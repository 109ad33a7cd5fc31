"""Generic matrix-partition semantics over {0, 1, *} patterns.

A pattern is a symmetric m-by-m matrix whose cell (i, j) constrains the
pairs across parts i and j of a vertex partition: 1 forces complete
adjacency, 0 forces complete non-adjacency, * imposes nothing.  Diagonal
cells therefore force a part to be a clique (1) or an independent set (0).
Star diagonals are rejected at construction: a part without restrictions
could swallow the whole graph, making every instance trivially solvable.

``solve`` is an exhaustive backtracking solver meant as a ground-truth
oracle at small scale, not a decision procedure for large inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, induced

ZERO, ONE, STAR = "0", "1", "*"

Assignment = tuple[int, ...]


@dataclass(frozen=True)
class Pattern:
    """Symmetric matrix over {0, 1, *} with a 0/1 diagonal."""

    cells: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        m = len(self.cells)
        for row in self.cells:
            if len(row) != m:
                raise ValueError("pattern matrix must be square")
            for cell in row:
                if cell not in (ZERO, ONE, STAR):
                    raise ValueError(f"bad pattern cell {cell!r}")
        for i in range(m):
            if self.cells[i][i] == STAR:
                raise ValueError(
                    "star diagonal rejected: an unrestricted part admits the "
                    "trivial partition placing every vertex in it"
                )
            for j in range(i):
                if self.cells[i][j] != self.cells[j][i]:
                    raise ValueError(f"pattern not symmetric at ({i}, {j})")

    @property
    def m(self) -> int:
        return len(self.cells)

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        """Parse the m-line text form, one row of {0,1,*} characters each."""
        rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
        return cls(tuple(tuple(row) for row in rows))

    def as_text(self) -> str:
        return "\n".join("".join(row) for row in self.cells) + "\n"


#: Three independent parts; the last two must be completely joined.
M1 = Pattern.parse("0**\n*01\n*10")


@dataclass(frozen=True)
class PartitionViolation:
    """One offending vertex pair and the cell it violates."""

    u: int
    v: int
    part_u: int
    part_v: int
    cell: str

    def __str__(self) -> str:
        need = "adjacent" if self.cell == ONE else "non-adjacent"
        return (
            f"vertices {self.u} (part {self.part_u}) and {self.v} "
            f"(part {self.part_v}) must be {need}"
        )


def verify_assignment(
    g: Graph, pattern: Pattern, assignment: Sequence[int]
) -> PartitionViolation | None:
    """None if the assignment satisfies the pattern, else the first violation.

    The assignment must place every vertex in a valid part; parts may be
    empty.
    """
    if len(assignment) != g.n:
        raise ValueError(f"assignment covers {len(assignment)} of {g.n} vertices")
    for v, part in enumerate(assignment):
        if not 0 <= part < pattern.m:
            raise ValueError(f"vertex {v} assigned to invalid part {part}")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            cell = pattern.cells[assignment[u]][assignment[v]]
            if cell == STAR:
                continue
            if (cell == ONE) != g.has_edge(u, v):
                return PartitionViolation(u, v, assignment[u], assignment[v], cell)
    return None


def solve(g: Graph, pattern: Pattern) -> Assignment | None:
    """Exhaustive search for a satisfying partition; None means none exists.

    Vertices are assigned in descending-degree order (id breaks ties) and
    parts are tried in index order, so results are deterministic.  A
    returned assignment always verifies.
    """
    n = g.n
    m = pattern.m
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    part_masks = [0] * m
    assignment = [0] * n
    # per candidate part: which parts must lie inside / outside N(v)
    ones = [
        [j for j in range(m) if pattern.cells[i][j] == ONE] for i in range(m)
    ]
    zeros = [
        [j for j in range(m) if pattern.cells[i][j] == ZERO] for i in range(m)
    ]

    def place(step: int) -> bool:
        if step == n:
            return True
        v = order[step]
        nb = g.adj[v]
        for i in range(m):
            ok = True
            for j in ones[i]:
                if part_masks[j] & ~nb:
                    ok = False
                    break
            if ok:
                for j in zeros[i]:
                    if part_masks[j] & nb:
                        ok = False
                        break
            if not ok:
                continue
            part_masks[i] |= 1 << v
            assignment[v] = i
            if place(step + 1):
                return True
            part_masks[i] &= ~(1 << v)
        return False

    if place(0):
        return tuple(assignment)
    return None


def is_minimal_obstruction(g: Graph, pattern: Pattern) -> bool:
    """True iff g is unsolvable but every single-vertex deletion is solvable."""
    if solve(g, pattern) is not None:
        return False
    for v in range(g.n):
        rest = induced(g, set(range(g.n)) - {v})
        if solve(rest, pattern) is None:
            return False
    return True
