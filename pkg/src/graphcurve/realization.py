"""Exact linear realisation of the bond matroid and of M_G.

The cycle matrix has one signed fundamental cycle per row and one column
``q_e`` per edge; its column matroid is the bond matroid of ``G``.  Cutting
the lines spanned by the columns at each vertex with a random hyperplane
gives one point per vertex, and the linear matroid of those points is
compared with M_G.

All arithmetic is on Python integers; floats are rejected.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from graphcurve.cographic import cographic_rank_mask
from graphcurve.errors import GenericityError, PreconditionError, VerificationError
from graphcurve.matroid import ExplicitMatroid, from_independence
from graphcurve.multigraph import (
    Multigraph,
    has_loops,
    is_connected,
    is_trivalent,
    is_two_edge_connected,
    iter_bits,
    mask_to_set,
)

HYPERPLANE_RANGE = 10**6
MAX_ATTEMPTS = 32
EXHAUSTIVE_EDGE_LIMIT = 15
RANDOM_SUBSETS = 10_000


def _integer_row(row: Sequence) -> list[int]:
    if any(isinstance(x, float) for x in row):
        raise TypeError("exact_rank refuses floating-point entries")
    if all(isinstance(x, int) for x in row):
        return list(row)
    fracs = [Fraction(x) for x in row]
    scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return [int(f * scale) for f in fracs]


def exact_rank(rows: Iterable[Sequence]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    M = [_integer_row(r) for r in rows]
    if not M or not M[0]:
        return 0
    nrows, ncols = len(M), len(M[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if M[i][col]), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        p = M[rank][col]
        top = M[rank]
        for i in range(rank + 1, nrows):
            row = M[i]
            a = row[col]
            for j in range(col + 1, ncols):
                row[j] = (p * row[j] - a * top[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


@dataclass(frozen=True)
class CycleMatrix:
    graph: Multigraph
    rows: tuple[tuple[int, ...], ...]
    tree_edges: frozenset[int]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.graph.m)

    def column(self, e: int) -> tuple[int, ...]:
        return tuple(r[e - 1] for r in self.rows)

    def columns(self, edge_ids: Iterable[int]) -> list[tuple[int, ...]]:
        return [self.column(e) for e in edge_ids]

    def rank_of_columns(self, edge_ids: Iterable[int]) -> int:
        return exact_rank(self.columns(edge_ids))


def cycle_matrix(G: Multigraph) -> CycleMatrix:
    """Signed fundamental cycles of a breadth-first spanning tree.

    Edges are oriented from the smaller to the larger endpoint.  The tree is
    grown from vertex 1, scanning incident edges by (neighbour id, edge id).
    Rows follow the non-tree edges in id order; each row has +1 on its
    non-tree edge and ±1 along the tree path closing the cycle.
    """
    if not is_connected(G):
        raise PreconditionError("cycle matrix needs a connected graph")
    if has_loops(G):
        raise PreconditionError("cycle matrix needs a loopless graph")

    def other(e, v):
        a, b = G.edges[e - 1]
        return b if a == v else a

    parent_edge = {1: None}
    depth = {1: 0}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for e in sorted(G.incident[v], key=lambda e: (other(e, v), e)):
            w = other(e, v)
            if w not in parent_edge:
                parent_edge[w] = e
                depth[w] = depth[v] + 1
                queue.append(w)
    tree = frozenset(e for e in parent_edge.values() if e is not None)

    def step_sign(x, y):
        # +1 when walking x -> y follows the edge orientation
        return 1 if x < y else -1

    rows = []
    for e, (u, v) in enumerate(G.edges, start=1):
        if e in tree:
            continue
        a, b = min(u, v), max(u, v)
        row = [0] * G.m
        row[e - 1] = 1
        # close the cycle by walking the tree from b back to a
        up_from_b, up_from_a = [], []
        x, y = b, a
        while depth[x] > depth[y]:
            up_from_b.append(x)
            x = other(parent_edge[x], x)
        while depth[y] > depth[x]:
            up_from_a.append(y)
            y = other(parent_edge[y], y)
        while x != y:
            up_from_b.append(x)
            x = other(parent_edge[x], x)
            up_from_a.append(y)
            y = other(parent_edge[y], y)
        for z in up_from_b:
            te = parent_edge[z]
            row[te - 1] += step_sign(z, other(te, z))
        for z in up_from_a:
            te = parent_edge[z]
            row[te - 1] += step_sign(other(te, z), z)
        rows.append(tuple(row))
    return CycleMatrix(G, tuple(rows), tree)


@dataclass(frozen=True)
class BondRealizationReport:
    ok: bool
    exhaustive: bool
    subsets_checked: int
    vertex_triples_ok: bool | None
    failure: str | None = None


def verify_bond_realization(G: Multigraph, seed: int = 0, raise_on_failure: bool = True,
                            exhaustive_limit: int = EXHAUSTIVE_EDGE_LIMIT,
                            samples: int = RANDOM_SUBSETS) -> BondRealizationReport:
    """Compare the column ranks of the cycle matrix with the bond rank on
    every edge subset (or a seeded random sample for large graphs)."""
    C = cycle_matrix(G)
    exhaustive = G.m <= exhaustive_limit
    if exhaustive:
        masks = range(1 << G.m)
    else:
        rng = random.Random(seed)
        masks = [rng.getrandbits(G.m) for _ in range(samples)]

    failure = None
    checked = 0
    for bmask in masks:
        checked += 1
        ids = list(iter_bits(bmask))
        linear = C.rank_of_columns(ids)
        combinatorial = cographic_rank_mask(G, bmask)
        if linear != combinatorial:
            failure = (f"edge subset {sorted(ids)}: column rank {linear} "
                       f"!= bond rank {combinatorial}")
            if raise_on_failure:
                raise VerificationError(failure, subset=mask_to_set(bmask))
            break

    triples_ok = None
    if failure is None and is_trivalent(G) and is_two_edge_connected(G):
        triples_ok = True
        for v in G.vertices:
            r = C.rank_of_columns(G.incident[v])
            if r != 2:
                triples_ok = False
                failure = f"columns at vertex {v} have rank {r}, expected 2"
                if raise_on_failure:
                    raise VerificationError(failure, subset=frozenset(G.incident[v]))
                break
    return BondRealizationReport(failure is None, exhaustive, checked, triples_ok, failure)


@dataclass(frozen=True)
class HyperplaneSample:
    h: tuple[int, ...]
    seed: int
    attempt: int


@dataclass(frozen=True)
class PointConfiguration:
    points: tuple[tuple[int, ...], ...]  # points[v - 1] is the point of vertex v
    sample: HyperplaneSample


def _dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def _line_basis(C: CycleMatrix, v: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    cols = C.columns(C.graph.incident[v])
    for q1, q2 in combinations(cols, 2):
        if exact_rank([q1, q2]) == 2:
            return q1, q2
    raise PreconditionError(f"columns at vertex {v} do not span a line")


def hyperplane_section(G: Multigraph, seed: int = 0,
                       max_attempts: int = MAX_ATTEMPTS) -> PointConfiguration:
    """Intersect each vertex line with a random hyperplane ``h · x = 0``."""
    if not is_trivalent(G) or not is_two_edge_connected(G):
        raise PreconditionError("hyperplane section needs a trivalent 2-edge-connected graph")
    C = cycle_matrix(G)
    lines = [_line_basis(C, v) for v in G.vertices]
    g = len(C.rows)
    rng = random.Random(seed)
    for attempt in range(1, max_attempts + 1):
        h = tuple(rng.randint(-HYPERPLANE_RANGE, HYPERPLANE_RANGE) for _ in range(g))
        if not any(h):
            continue
        points = []
        for q1, q2 in lines:
            s1, s2 = _dot(h, q1), _dot(h, q2)
            p = tuple(s2 * a - s1 * b for a, b in zip(q1, q2))
            if not any(p):
                break
            points.append(p)
        else:
            return PointConfiguration(tuple(points), HyperplaneSample(h, seed, attempt))
    raise GenericityError(
        f"no hyperplane avoided every vertex line after {max_attempts} attempts (seed {seed})",
        seed=seed,
    )


def linear_matroid(vectors: Sequence[Sequence[int]]) -> ExplicitMatroid:
    """Column matroid of a list of vectors; element ``i`` is ``vectors[i - 1]``."""
    def independent(mask):
        return exact_rank([vectors[i - 1] for i in iter_bits(mask)]) == mask.bit_count()

    return from_independence(len(vectors), independent)


def hyperplane_section_matroid(G: Multigraph, seed: int = 0) -> ExplicitMatroid:
    return linear_matroid(hyperplane_section(G, seed).points)
