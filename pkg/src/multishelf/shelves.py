"""Distributive sets of tables and their closure into monoids and groups."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .tables import (
    OpTable,
    commutes,
    compose,
    distributive_witness,
    invert,
    is_idempotent,
    is_invertible,
    right_trivial,
)

DEFAULT_CLOSURE_BUDGET = 10_000


class DistributivityError(ValueError):
    """A pair of tables in a would-be distributive set fails the identity."""

    def __init__(self, i: int, j: int, triple: tuple[int, int, int]):
        self.pair = (i, j)
        self.triple = triple
        super().__init__(
            f"ops ({i},{j}) violate right distributivity at triple {triple}"
        )


class ClosureBudgetError(RuntimeError):
    """Closure grew past the configured table budget."""


@dataclass(frozen=True)
class DistributiveSet:
    """A family of tables on one carrier, pairwise (including self) distributive."""

    n: int
    ops: tuple[OpTable, ...]

    def __len__(self) -> int:
        return len(self.ops)

    def __getitem__(self, i: int) -> OpTable:
        return self.ops[i]


@dataclass(frozen=True)
class ClosureResult:
    ops: tuple[OpTable, ...]
    kind: str  # "monoid" | "group"
    cayley: tuple[tuple[int, ...], ...]
    abelian: bool

    @property
    def order(self) -> int:
        return len(self.ops)

    def as_distributive_set(self) -> DistributiveSet:
        return DistributiveSet(self.ops[0].n, self.ops)


def make_distributive_set(
    ops: Sequence[OpTable], n: Optional[int] = None
) -> DistributiveSet:
    """Validate all ordered pairs; raises DistributivityError with the witness."""
    if not ops:
        if n is None:
            raise ValueError("carrier size required for an empty family")
        return DistributiveSet(n, ())
    size = ops[0].n
    if n is not None and n != size:
        raise ValueError(f"carrier mismatch: declared {n}, tables have {size}")
    if any(op.n != size for op in ops):
        raise ValueError("all tables must share one carrier")
    for i, opA in enumerate(ops):
        for j, opB in enumerate(ops):
            w = distributive_witness(opA, opB)
            if w is not None:
                raise DistributivityError(i, j, w)
    return DistributiveSet(size, tuple(ops))


def _close(
    seeds: Sequence[OpTable],
    n: int,
    with_inverses: bool,
    budget: int,
) -> list[OpTable]:
    """Breadth-first closure under composition (and optionally inversion).

    Deterministic: elements are discovered in worklist order, seeds first.
    """
    ident = right_trivial(n)
    members: list[OpTable] = [ident]
    seen = {ident.entries}
    for op in seeds:
        if op.entries not in seen:
            members.append(op)
            seen.add(op.entries)

    def add(op: OpTable) -> bool:
        if op.entries in seen:
            return False
        seen.add(op.entries)
        members.append(op)
        if len(members) > budget:
            raise ClosureBudgetError(f"closure exceeded budget of {budget} tables")
        return True

    done = 0  # members below this index have been combined with everything before `done`
    while done < len(members):
        size = len(members)
        for i in range(size):
            for j in range(size):
                if i < done and j < done:
                    continue
                add(compose(members[i], members[j]))
        if with_inverses:
            for i in range(size):
                add(invert(members[i]))
        done = size
    return members


def _cayley(members: Sequence[OpTable]) -> tuple[tuple[int, ...], ...]:
    index = {op.entries: i for i, op in enumerate(members)}
    return tuple(
        tuple(index[compose(a, b).entries] for b in members) for a in members
    )


def close_monoid(
    S: DistributiveSet,
    budget: int = DEFAULT_CLOSURE_BUDGET,
    revalidate: bool = True,
) -> ClosureResult:
    """Least family containing S and the identity, closed under composition."""
    members = _close(S.ops, S.n, with_inverses=False, budget=budget)
    if revalidate:
        make_distributive_set(members)
    cayley = _cayley(members)
    return ClosureResult(tuple(members), "monoid", cayley, _is_abelian(cayley))


def close_group(
    S: DistributiveSet,
    budget: int = DEFAULT_CLOSURE_BUDGET,
    revalidate: bool = True,
) -> ClosureResult:
    """Least family containing S closed under composition and inversion."""
    for i, op in enumerate(S.ops):
        if not is_invertible(op):
            raise ValueError(f"member {i} is not invertible")
    members = _close(S.ops, S.n, with_inverses=True, budget=budget)
    if revalidate:
        make_distributive_set(members)
    cayley = _cayley(members)
    return ClosureResult(tuple(members), "group", cayley, _is_abelian(cayley))


def _is_abelian(cayley: tuple[tuple[int, ...], ...]) -> bool:
    k = len(cayley)
    return all(cayley[i][j] == cayley[j][i] for i in range(k) for j in range(i + 1, k))


def idempotent_center_report(S: DistributiveSet) -> list[tuple[int, bool]]:
    """For each idempotent member, whether it commutes with every member.

    All flags are guaranteed true for a validated distributive set; a false
    flag would mean a broken invariant, so it raises.
    """
    report: list[tuple[int, bool]] = []
    for i, op in enumerate(S.ops):
        if not is_idempotent(op):
            continue
        flag = all(commutes(op, other) for other in S.ops)
        if not flag:
            raise AssertionError(
                f"idempotent member {i} fails to commute in a validated set"
            )
        report.append((i, flag))
    return report
