"""Multi-term distributive homology of a finite distributive set.

Chain group C_d is free abelian on (d+1)-tuples over the carrier, ordered
lexicographically.  The one-term face map for an operation * is

    d_i(x_0..x_d) = (x_0*x_i, ..., x_{i-1}*x_i, x_{i+1}, ..., x_d)

and the differential is the alternating sum over i = 0..d; the multi-term
differential is the integer-weighted sum of one-term differentials.  The
convention is certified mechanically: homology is only reported after the
boundary-squares-to-zero check passes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .shelves import DistributiveSet
from .snf import IntMatrix, smith_normal_form
from .tables import OpTable

CONVENTION = "right-multiply-prefix/delete-face, signs (-1)^i, weighted sum"
DEFAULT_MAX_DEGREE = 3
DEFAULT_DIM_BUDGET = 50_000


@dataclass(frozen=True)
class ChainSpec:
    S: DistributiveSet
    weights: tuple[int, ...]
    max_degree: int = DEFAULT_MAX_DEGREE

    def __post_init__(self):
        if len(self.weights) != len(self.S.ops):
            raise ValueError(
                f"{len(self.weights)} weights for {len(self.S.ops)} operations"
            )
        if self.max_degree < 0:
            raise ValueError("max_degree must be >= 0")


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    free_rank: int
    torsion: tuple[int, ...]  # invariant factors > 1, in divisibility order


def _tuple_index(t: Sequence[int], n: int) -> int:
    """Rank of a tuple in the lexicographic order of X^len(t)."""
    idx = 0
    for v in t:
        idx = idx * n + v
    return idx


def _one_term_boundary(op: OpTable, x: tuple[int, ...]) -> Iterable[tuple[int, tuple[int, ...]]]:
    """(sign, face) terms of the one-term differential on a basis tuple."""
    e = op.entries
    for i in range(len(x)):
        xi = x[i]
        face = tuple(e[x[j]][xi] for j in range(i)) + x[i + 1 :]
        yield (1 if i % 2 == 0 else -1), face


def _apply_boundary(
    ops: Sequence[OpTable], weights: Sequence[int], chain: dict[tuple[int, ...], int]
) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for x, coeff in chain.items():
        for op, w in zip(ops, weights):
            if w == 0:
                continue
            for sign, face in _one_term_boundary(op, x):
                c = out.get(face, 0) + sign * w * coeff
                if c:
                    out[face] = c
                else:
                    out.pop(face, None)
    return out


def boundary_matrix(spec: ChainSpec, degree: int, dim_budget: int = DEFAULT_DIM_BUDGET) -> IntMatrix:
    """Matrix of the degree-n differential C_n -> C_{n-1}, lex basis order."""
    if not (1 <= degree <= spec.max_degree):
        raise ValueError(f"degree {degree} outside [1, {spec.max_degree}]")
    n = spec.S.n
    cols = n ** (degree + 1)
    rows = n**degree
    if cols > dim_budget:
        raise ValueError(f"chain dimension {cols} exceeds budget {dim_budget}")
    data = [[0] * cols for _ in range(rows)]
    for col, x in enumerate(itertools.product(range(n), repeat=degree + 1)):
        acc = _apply_boundary(spec.S.ops, spec.weights, {x: 1})
        for face, coeff in acc.items():
            data[_tuple_index(face, n)][col] += coeff
    return IntMatrix(rows, cols, tuple(tuple(r) for r in data))


def verify_differential(spec: ChainSpec) -> bool:
    """True iff the weighted differential squares to zero up to max_degree and
    the one-term differentials pairwise anticommute.

    Checked symbolically on every basis tuple; false means the input is not
    distributive or the face convention is inconsistent.
    """
    n = spec.S.n
    ops = spec.S.ops
    for d in range(1, spec.max_degree):
        for x in itertools.product(range(n), repeat=d + 2):
            once = _apply_boundary(ops, spec.weights, {x: 1})
            if _apply_boundary(ops, spec.weights, once):
                return False
            # pairwise anticommutation of the one-term differentials that
            # actually contribute (nonzero weight)
            active = [t for t, w in enumerate(spec.weights) if w != 0]
            for s in active:
                ws = tuple(1 if t == s else 0 for t in range(len(ops)))
                ds = _apply_boundary(ops, ws, {x: 1})
                for t in (u for u in active if u >= s):
                    wt = tuple(1 if u == t else 0 for u in range(len(ops)))
                    st = _apply_boundary(ops, wt, ds)
                    ts = _apply_boundary(ops, ws, _apply_boundary(ops, wt, {x: 1}))
                    total = dict(st)
                    for face, c in ts.items():
                        v = total.get(face, 0) + c
                        if v:
                            total[face] = v
                        else:
                            total.pop(face, None)
                    if total:
                        return False
    return True


def homology_groups(
    spec: ChainSpec, dim_budget: int = DEFAULT_DIM_BUDGET
) -> list[HomologyGroup]:
    """H_d = ker d_d / im d_{d+1} for d = 0..max_degree-1, via Smith normal form."""
    if not verify_differential(spec):
        raise ValueError("differential does not square to zero; refusing to compute")
    n = spec.S.n
    groups = []
    factors_by_degree: dict[int, list[int]] = {}

    def factors(d: int) -> list[int]:
        if d not in factors_by_degree:
            factors_by_degree[d] = smith_normal_form(boundary_matrix(spec, d, dim_budget))
        return factors_by_degree[d]

    for d in range(spec.max_degree):
        dim = n ** (d + 1)
        rank_d = 0 if d == 0 else len(factors(d))
        above = factors(d + 1)
        free_rank = dim - rank_d - len(above)
        torsion = tuple(f for f in above if f > 1)
        groups.append(HomologyGroup(d, free_rank, torsion))
    return groups
