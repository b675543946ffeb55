"""Rank functions of the graphic matroid M(G) and the bond matroid M*(G).

Both matroids live on the edge set.  ``r(B) = |V| - c(V, B)`` where
``c(V, B)`` counts components of the spanning subgraph with edge set ``B``;
the bond rank is the dual rank ``r*(B) = r(E - B) + |B| - r(E)``.
"""

from __future__ import annotations

from typing import Iterable

from graphcurve.errors import PreconditionError
from graphcurve.multigraph import (
    Multigraph,
    count_components,
    delta_mask,
    edge_mask,
    is_connected,
    vertex_mask,
)


def graphic_rank_mask(G: Multigraph, bmask: int) -> int:
    parent = list(range(G.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rank = 0
    edges = G.edges
    while bmask:
        low = bmask & -bmask
        bmask ^= low
        u, v = edges[low.bit_length() - 1]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            rank += 1
    return rank


def cographic_rank_mask(G: Multigraph, bmask: int) -> int:
    full = (1 << G.m) - 1
    return graphic_rank_mask(G, full & ~bmask) + bmask.bit_count() - graphic_rank_mask(G, full)


def graphic_rank(G: Multigraph, B: Iterable[int]) -> int:
    return graphic_rank_mask(G, edge_mask(G, B))


def cographic_rank(G: Multigraph, B: Iterable[int]) -> int:
    return cographic_rank_mask(G, edge_mask(G, B))


def neighborhood_rank_formula(G: Multigraph, amask: int) -> int:
    """``|δ(A)| - |A| - ω(V - A) + 1``; valid only for connected ``G``."""
    return (
        delta_mask(G, amask).bit_count()
        - amask.bit_count()
        - count_components(G, G.full_mask & ~amask)
        + 1
    )


def cographic_rank_of_neighborhood(G: Multigraph, A: Iterable[int]) -> int:
    """Bond rank of δ(A) from vertex counts alone (connected graphs only)."""
    if not is_connected(G):
        raise PreconditionError(
            "closed form needs a connected graph; use cographic_rank(G, delta(G, A))"
        )
    return neighborhood_rank_formula(G, vertex_mask(G, A))
