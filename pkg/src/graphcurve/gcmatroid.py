"""The graph curve matroid M_G on the vertex set of a multigraph.

A non-empty vertex set ``A`` is a circuit when it is inclusion-minimal with
``r*(δ(A)) <= |A|``, where ``r*`` is the bond-matroid rank.  Two engines
compute the circuit list:

* ``circuits_naive`` scans every vertex subset, subsets before supersets, and evaluates
  the bond rank directly.  It works for any multigraph.
* ``circuits_structured`` never evaluates a rank.  For trivalent
  2-edge-connected graphs it collects the vertex sets of cycles that do not
  disconnect ``G`` together with the acyclic sets ``A`` with
  ``ω(A) + 1 = ω(V - A)``, and keeps the inclusion-minimal ones.

The two are cross-checked in the test suite.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from graphcurve.cographic import cographic_rank_mask, graphic_rank_mask
from graphcurve.errors import PreconditionError, ResourceLimitError, VerificationError
from graphcurve.matroid import ExplicitMatroid, canonical_circuits, minimal_masks
from graphcurve.multigraph import (
    Multigraph,
    count_components,
    delta_mask,
    genus,
    is_cyclic_mask,
    is_trivalent,
    is_two_edge_connected,
    iter_bits,
    mask_to_set,
    vertex_mask,
)

DEFAULT_MAX_VERTICES = 16

CircuitList = tuple[frozenset[int], ...]


class NeighborhoodRank:
    """``A ↦ r*(δ(A))`` on vertex bitmasks, memoised for one graph."""

    def __init__(self, G: Multigraph):
        self.G = G
        self._cache: dict[int, int] = {}

    def __call__(self, amask: int) -> int:
        try:
            return self._cache[amask]
        except KeyError:
            value = cographic_rank_mask(self.G, delta_mask(self.G, amask))
            self._cache[amask] = value
            return value


def _submasks_by_size(amask: int, size: int):
    for combo in combinations(list(iter_bits(amask)), size):
        mask = 0
        for v in combo:
            mask |= 1 << (v - 1)
        yield mask


def _check_size(G: Multigraph, max_vertices: int):
    if G.n > max_vertices:
        raise ResourceLimitError(
            f"{G.n} vertices exceeds the enumeration bound of {max_vertices} "
            "(raise max_vertices to override)"
        )


def _require_trivalent_2ec(G: Multigraph, what: str):
    if not is_trivalent(G):
        raise PreconditionError(f"{what} needs a trivalent graph")
    if not is_two_edge_connected(G):
        raise PreconditionError(f"{what} needs a 2-edge-connected graph")


# -- dependence oracles ----------------------------------------------------


def _is_dependent_mask(amask: int, rank: NeighborhoodRank) -> bool:
    for k in range(1, amask.bit_count() + 1):
        for sub in _submasks_by_size(amask, k):
            if rank(sub) <= k:
                return True
    return False


def is_dependent(G: Multigraph, A: Iterable[int]) -> bool:
    """Some non-empty ``A' ⊆ A`` has ``r*(δ(A')) <= |A'|``."""
    return _is_dependent_mask(vertex_mask(G, A), NeighborhoodRank(G))


def is_independent(G: Multigraph, A: Iterable[int]) -> bool:
    return not is_dependent(G, A)


def _extends_independent(imask: int, v: int, rank: NeighborhoodRank) -> bool:
    # imask is independent, so only subsets through v can be dependent
    vbit = 1 << (v - 1)
    for k in range(imask.bit_count() + 1):
        for sub in _submasks_by_size(imask, k):
            if rank(sub | vbit) <= k + 1:
                return False
    return True


def _greedy(order: Iterable[int], rank: NeighborhoodRank) -> int:
    chosen = 0
    for v in order:
        if _extends_independent(chosen, v, rank):
            chosen |= 1 << (v - 1)
    return chosen


def rank_subset(G: Multigraph, A: Iterable[int]) -> int:
    """Size of a maximal independent subset of ``A`` (greedy, id order)."""
    return _greedy(sorted(set(A)), NeighborhoodRank(G)).bit_count()


# -- circuit engines -------------------------------------------------------


def circuits_naive(G: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> CircuitList:
    """Circuits by subset scan with the bond-rank test.

    Subsets are visited in increasing numeric order, so every proper subset
    is decided before its supersets.  A candidate with a dependent
    one-smaller subset contains a circuit and is skipped without a rank
    evaluation; otherwise it is a circuit exactly when it is dependent.
    """
    _check_size(G, max_vertices)
    inc = G.incident_edge_masks
    all_edges = (1 << G.m) - 1
    full_rank = graphic_rank_mask(G, all_edges)
    dependent = bytearray(1 << G.n)
    found: list[int] = []
    for mask in range(1, 1 << G.n):
        rest = mask
        dep = 0
        while rest:
            low = rest & -rest
            rest ^= low
            if dependent[mask ^ low]:
                dep = 1
                break
        if not dep:
            dmask = 0
            for v in iter_bits(mask):
                dmask |= inc[v]
            # bond rank r*(B) = r(E - B) + |B| - r(E)
            bond = graphic_rank_mask(G, all_edges & ~dmask) + dmask.bit_count() - full_rank
            if bond <= mask.bit_count():
                found.append(mask)
                dep = 1
        dependent[mask] = dep
    return canonical_circuits(mask_to_set(c) for c in found)


def cycle_vertex_sets(G: Multigraph) -> set[int]:
    """Vertex bitmasks of all cycles of length >= 2 (loops excluded)."""
    out = set()
    for u, v in G.edges:
        if u != v and G.multiplicity(u, v) >= 2:
            out.add((1 << (u - 1)) | (1 << (v - 1)))
    nbr = G.neighbor_masks
    for s in G.vertices:
        sbit = 1 << (s - 1)
        higher = G.full_mask & ~((sbit << 1) - 1)
        stack = [(s, sbit, 1)]
        while stack:
            v, path, length = stack.pop()
            if length >= 3 and nbr[v] & sbit:
                out.add(path)
            for w in iter_bits(nbr[v] & higher & ~path):
                stack.append((w, path | (1 << (w - 1)), length + 1))
    return out


def balanced_acyclic_sets(G: Multigraph) -> list[int]:
    """Non-empty acyclic vertex sets ``A`` with ``ω(A) + 1 = ω(V - A)``."""
    out = []
    full = G.full_mask

    def walk(v, amask):
        if v > G.n:
            if amask and count_components(G, amask) + 1 == count_components(G, full & ~amask):
                out.append(amask)
            return
        walk(v + 1, amask)
        grown = amask | (1 << (v - 1))
        # every superset of a cyclic set is cyclic
        if not is_cyclic_mask(G, grown):
            walk(v + 1, grown)

    walk(1, 0)
    return out


def circuits_structured(G: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> CircuitList:
    _check_size(G, max_vertices)
    _require_trivalent_2ec(G, "the structured engine")
    full = G.full_mask
    candidates = [c for c in cycle_vertex_sets(G) if count_components(G, full & ~c) <= 1]
    candidates += balanced_acyclic_sets(G)
    return canonical_circuits(mask_to_set(c) for c in minimal_masks(candidates))


# -- bases and loops -------------------------------------------------------


def connected_chain(G: Multigraph, v: int) -> list[int]:
    """Vertices in breadth-first order from ``v``, neighbours by id; every
    prefix induces a connected subgraph."""
    order = [v]
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for w in iter_bits(G.neighbor_masks[x]):
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def basis_containing_vertex(G: Multigraph, v: int) -> frozenset[int]:
    _require_trivalent_2ec(G, "basis construction")
    if not 1 <= v <= G.n:
        raise PreconditionError(f"vertex {v} is not in 1..{G.n}")
    basis = _greedy(connected_chain(G, v), NeighborhoodRank(G))
    if basis.bit_count() != genus(G) - 1:
        raise VerificationError(
            f"greedy basis has size {basis.bit_count()}, expected {genus(G) - 1}",
            subset=mask_to_set(basis),
        )
    return mask_to_set(basis)


def matroid_loops(G: Multigraph) -> frozenset[int]:
    """Vertices forming singleton circuits, i.e. ``r*(δ({v})) <= 1``."""
    if not is_trivalent(G):
        raise PreconditionError("matroid_loops needs a trivalent graph")
    rank = NeighborhoodRank(G)
    return frozenset(v for v in G.vertices if rank(1 << (v - 1)) <= 1)


# -- bundled result --------------------------------------------------------


ENGINES = ("naive", "structured")


@dataclass(frozen=True)
class GraphCurveMatroid:
    graph: Multigraph
    circuits: CircuitList
    engine: str

    @cached_property
    def explicit(self) -> ExplicitMatroid:
        return ExplicitMatroid(self.graph.n, self.circuits)

    @property
    def rank(self) -> int:
        return self.explicit.rank


def graph_curve_matroid(G: Multigraph, engine: str = "naive",
                        max_vertices: int = DEFAULT_MAX_VERTICES) -> GraphCurveMatroid:
    if engine == "naive":
        circuits = circuits_naive(G, max_vertices)
    elif engine == "structured":
        circuits = circuits_structured(G, max_vertices)
    else:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
    return GraphCurveMatroid(G, circuits, engine)


def bases(G: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> frozenset[frozenset[int]]:
    return graph_curve_matroid(G, "naive", max_vertices).explicit.bases()
