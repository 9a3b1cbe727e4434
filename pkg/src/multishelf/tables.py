"""Operation tables on a finite carrier {0..n-1}.

The set of all binary operations on a carrier forms a monoid under
``a (op1;op2) b = (a op1 b) op2 b`` whose identity is the right-trivial
operation ``a * b = a``.  Everything here is a pure function over
immutable tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

Row = tuple[int, ...]


@dataclass(frozen=True)
class OpTable:
    """An n x n table over {0..n-1}; entries[a][b] is a * b."""

    n: int
    entries: tuple[Row, ...]

    def __getitem__(self, a: int) -> Row:
        return self.entries[a]

    def apply(self, a: int, b: int) -> int:
        return self.entries[a][b]

    def column(self, y: int) -> tuple[int, ...]:
        """The map x -> x * y as a one-line image tuple."""
        return tuple(row[y] for row in self.entries)


def make_table(n: int, entries: Sequence[Sequence[int]]) -> OpTable:
    """Build a validated OpTable; rejects ragged shapes and out-of-range entries."""
    if n < 1:
        raise ValueError(f"carrier size must be >= 1, got {n}")
    if len(entries) != n:
        raise ValueError(f"expected {n} rows, got {len(entries)}")
    rows = []
    for a, row in enumerate(entries):
        if len(row) != n:
            raise ValueError(f"row {a} has {len(row)} entries, expected {n}")
        for b, v in enumerate(row):
            if not (0 <= v < n):
                raise ValueError(f"entry {v} at ({a},{b}) out of range [0,{n})")
        rows.append(tuple(int(v) for v in row))
    return OpTable(n, tuple(rows))


def right_trivial(n: int) -> OpTable:
    """The monoid identity: a * b = a."""
    if n < 1:
        raise ValueError(f"carrier size must be >= 1, got {n}")
    return OpTable(n, tuple(tuple(a for _ in range(n)) for a in range(n)))


def compose(op1: OpTable, op2: OpTable) -> OpTable:
    """Monoid composition: result[a][b] = op2[op1[a][b]][b] (op1 applied first)."""
    if op1.n != op2.n:
        raise ValueError(f"carrier mismatch: {op1.n} vs {op2.n}")
    e1, e2 = op1.entries, op2.entries
    return OpTable(
        op1.n,
        tuple(
            tuple(e2[e1[a][b]][b] for b in range(op1.n)) for a in range(op1.n)
        ),
    )


def is_invertible(op: OpTable) -> bool:
    """True iff every column x -> x*y is a bijection of the carrier."""
    n = op.n
    for y in range(n):
        seen = [False] * n
        for x in range(n):
            v = op.entries[x][y]
            if seen[v]:
                return False
            seen[v] = True
    return True


def invert(op: OpTable) -> OpTable:
    """Composition inverse: each column is the inverse permutation of op's column."""
    if not is_invertible(op):
        raise ValueError("table is not invertible (some column is not a bijection)")
    n = op.n
    inv_rows = [[0] * n for _ in range(n)]
    for y in range(n):
        for x in range(n):
            inv_rows[op.entries[x][y]][y] = x
    return OpTable(n, tuple(tuple(r) for r in inv_rows))


def is_idempotent(op: OpTable) -> bool:
    """True iff a * a = a for all a."""
    return all(op.entries[a][a] == a for a in range(op.n))


def distributive_witness(opA: OpTable, opB: OpTable) -> Optional[tuple[int, int, int]]:
    """Smallest (a,b,c) violating (a A b) B c = (a B c) A (b B c), or None.

    None means the ordered pair is right-distributive; pass opA = opB for
    self-distributivity.
    """
    if opA.n != opB.n:
        raise ValueError(f"carrier mismatch: {opA.n} vs {opB.n}")
    n = opA.n
    ea, eb = opA.entries, opB.entries
    for a in range(n):
        ra = ea[a]
        rba = eb[a]
        for b in range(n):
            ab = ra[b]
            rbb = eb[b]
            for c in range(n):
                if eb[ab][c] != ea[rba[c]][rbb[c]]:
                    return (a, b, c)
    return None


def commutes(opA: OpTable, opB: OpTable) -> bool:
    """True iff the two tables commute in the composition monoid."""
    if opA.n != opB.n:
        raise ValueError(f"carrier mismatch: {opA.n} vs {opB.n}")
    return compose(opA, opB) == compose(opB, opA)


def relabel(op: OpTable, pi: Sequence[int]) -> OpTable:
    """Conjugate the table by a carrier bijection: a*b -> pi(pi^-1(a) * pi^-1(b))."""
    n = op.n
    if len(pi) != n or sorted(pi) != list(range(n)):
        raise ValueError("relabeling must be a permutation of the carrier")
    pi_inv = [0] * n
    for i, v in enumerate(pi):
        pi_inv[v] = i
    return OpTable(
        n,
        tuple(
            tuple(pi[op.entries[pi_inv[a]][pi_inv[b]]] for b in range(n))
            for a in range(n)
        ),
    )
