"""Finite groups as multiplication tables, plus standard families."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .tables import OpTable, compose, right_trivial

SYMMETRIC_DEGREE_BOUND = 5
ISOMORPHISM_ORDER_BOUND = 8


@dataclass(frozen=True)
class FiniteGroup:
    """A group on {0..m-1} given by its full multiplication table."""

    m: int
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]


def group_from_table(m: int, mul: Sequence[Sequence[int]], identity: int) -> FiniteGroup:
    """Validate a multiplication table as a group (associativity, identity, inverses)."""
    if m < 1:
        raise ValueError(f"group order must be >= 1, got {m}")
    if len(mul) != m or any(len(row) != m for row in mul):
        raise ValueError(f"multiplication table must be {m}x{m}")
    table = tuple(tuple(int(v) for v in row) for row in mul)
    for a in range(m):
        for b in range(m):
            if not (0 <= table[a][b] < m):
                raise ValueError(f"entry {table[a][b]} at ({a},{b}) out of range")
    if not (0 <= identity < m):
        raise ValueError(f"identity index {identity} out of range")
    for a in range(m):
        if table[identity][a] != a or table[a][identity] != a:
            raise ValueError(f"{identity} is not a two-sided identity (fails at {a})")
    inv = [-1] * m
    for a in range(m):
        for b in range(m):
            if table[a][b] == identity and table[b][a] == identity:
                inv[a] = b
                break
        if inv[a] < 0:
            raise ValueError(f"no inverse for element {a}")
    for a in range(m):
        for b in range(m):
            ab = table[a][b]
            for c in range(m):
                if table[ab][c] != table[a][table[b][c]]:
                    raise ValueError(f"not associative at ({a},{b},{c})")
    return FiniteGroup(m, table, identity, tuple(inv))


def cyclic(k: int) -> FiniteGroup:
    """Z_k with elements 0..k-1 as residues."""
    if k < 1:
        raise ValueError(f"order must be >= 1, got {k}")
    mul = tuple(tuple((a + b) % k for b in range(k)) for a in range(k))
    inv = tuple((-a) % k for a in range(k))
    return FiniteGroup(k, mul, 0, inv)


def dihedral(k: int) -> FiniteGroup:
    """The dihedral group of order 2k; elements s^0..s^(k-1), t s^0..t s^(k-1).

    Generators satisfy t^2 = 1, s^k = 1, t s t = s^-1.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    m = 2 * k

    def idx(r: int, s: int) -> int:
        return r % k + k * s

    mul = [[0] * m for _ in range(m)]
    for i in range(m):
        r1, s1 = i % k, i // k
        for j in range(m):
            r2, s2 = j % k, j // k
            # t^s1 s^r1 . t^s2 s^r2 = t^(s1+s2) s^(r1*(-1)^s2 + r2)
            r = (-r1 if s2 else r1) + r2
            mul[i][j] = idx(r, (s1 + s2) % 2)
    g = group_from_table(m, mul, 0)
    return g


def symmetric(k: int, degree_bound: int = SYMMETRIC_DEGREE_BOUND) -> FiniteGroup:
    """S_k with elements the one-line permutations of {0..k-1} in lex order.

    Product uses left-to-right application: (p.q)(x) = q(p(x)).
    """
    if not (1 <= k <= degree_bound):
        raise ValueError(f"degree {k} outside [1, {degree_bound}]")
    perms = sorted(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    m = len(perms)
    mul = tuple(
        tuple(index[tuple(q[p[x]] for x in range(k))] for q in perms) for p in perms
    )
    inv = []
    for p in perms:
        pinv = [0] * k
        for x, v in enumerate(p):
            pinv[v] = x
        inv.append(index[tuple(pinv)])
    return FiniteGroup(m, mul, index[tuple(range(k))], tuple(inv))


def is_abelian(G: FiniteGroup) -> bool:
    return all(
        G.mul[a][b] == G.mul[b][a] for a in range(G.m) for b in range(a + 1, G.m)
    )


def is_monomorphism_to_bin(G: FiniteGroup, images: Sequence[OpTable]) -> bool:
    """Check that g -> images[g] is an injective monoid map into the table monoid."""
    if len(images) != G.m:
        raise ValueError(f"expected {G.m} images, got {len(images)}")
    n = images[0].n
    if any(op.n != n for op in images):
        raise ValueError("images must share one carrier")
    if images[G.identity] != right_trivial(n):
        return False
    for g1 in range(G.m):
        for g2 in range(G.m):
            if compose(images[g1], images[g2]) != images[G.mul[g1][g2]]:
                return False
    return len(set(images)) == G.m


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Brute-force isomorphism search over relabelings; orders must be <= 8."""
    if G.m != H.m:
        return False
    if G.m > ISOMORPHISM_ORDER_BOUND:
        raise ValueError(
            f"brute-force isomorphism bounded to order {ISOMORPHISM_ORDER_BOUND}"
        )
    for phi in itertools.permutations(range(G.m)):
        if phi[G.identity] != H.identity:
            continue
        if all(
            phi[G.mul[a][b]] == H.mul[phi[a]][phi[b]]
            for a in range(G.m)
            for b in range(G.m)
        ):
            return True
    return False
