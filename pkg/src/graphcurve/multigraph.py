"""Finite undirected multigraphs with loops and parallel edges.

Vertices are ``1..n`` and edges are numbered ``1..m`` by their position in the
edge list.  Vertex subsets are passed around as iterables of vertex ids and
returned as frozensets; internally they are bitmasks with bit ``v - 1`` set
for vertex ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from graphcurve.errors import GraphInputError, PreconditionError

BRUTE_FORCE_EDGE_LIMIT = 20
MAX_ENUMERATION_VERTICES = 10


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for i, (u, v) in enumerate(edges, start=1):
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphInputError(f"edge {i} = ({u}, {v}) has an endpoint outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """``incident[v]`` lists the ids of edges touching ``v`` (a loop once)."""
        inc = [[] for _ in range(self.n + 1)]
        for e, (u, v) in enumerate(self.edges, start=1):
            inc[u].append(e)
            if v != u:
                inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        nbr = [0] * (self.n + 1)
        for u, v in self.edges:
            if u != v:
                nbr[u] |= 1 << (v - 1)
                nbr[v] |= 1 << (u - 1)
        return tuple(nbr)

    @cached_property
    def incident_edge_masks(self) -> tuple[int, ...]:
        """Bitmask over edges (bit ``e - 1``) of the edges touching each vertex."""
        out = [0] * (self.n + 1)
        for v in self.vertices:
            for e in self.incident[v]:
                out[v] |= 1 << (e - 1)
        return tuple(out)

    @cached_property
    def loop_counts(self) -> tuple[int, ...]:
        loops = [0] * (self.n + 1)
        for u, v in self.edges:
            if u == v:
                loops[u] += 1
        return tuple(loops)

    def degree(self, v: int) -> int:
        # a loop contributes 2
        return len(self.incident[v]) + self.loop_counts[v]

    def multiplicity(self, u: int, v: int) -> int:
        return sum(1 for a, b in self.edges if {a, b} == {u, v})

    def __repr__(self):
        return f"Multigraph(n={self.n}, edges={list(self.edges)})"


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Multigraph:
    pairs = [tuple(p) for p in pairs]
    for p in pairs:
        if len(p) != 2:
            raise GraphInputError(f"edge {p!r} is not a pair")
    return Multigraph(n, tuple(pairs))


def empty_graph(n: int = 0) -> Multigraph:
    return Multigraph(n, ())


# -- subset plumbing -------------------------------------------------------


def vertex_mask(G: Multigraph, A: Iterable[int]) -> int:
    mask = 0
    for v in A:
        if not 1 <= v <= G.n:
            raise GraphInputError(f"vertex {v} is not in 1..{G.n}")
        mask |= 1 << (v - 1)
    return mask


def edge_mask(G: Multigraph, B: Iterable[int]) -> int:
    mask = 0
    for e in B:
        if not 1 <= e <= G.m:
            raise GraphInputError(f"edge {e} is not in 1..{G.m}")
        mask |= 1 << (e - 1)
    return mask


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


# -- induced subgraph queries ----------------------------------------------


def delta(G: Multigraph, A: Iterable[int]) -> frozenset[int]:
    """Edges with at least one endpoint in ``A``."""
    return mask_to_set(delta_mask(G, vertex_mask(G, A)))


def delta_mask(G: Multigraph, amask: int) -> int:
    inc = G.incident_edge_masks
    out = 0
    for v in iter_bits(amask):
        out |= inc[v]
    return out


def count_components(G: Multigraph, amask: int) -> int:
    """Number of connected components of ``G[A]`` for a vertex bitmask."""
    nbr = G.neighbor_masks
    count = 0
    remaining = amask
    while remaining:
        seen = remaining & -remaining
        frontier = seen
        while frontier:
            v = (frontier & -frontier).bit_length()
            frontier &= frontier - 1
            new = nbr[v] & remaining & ~seen
            seen |= new
            frontier |= new
        remaining &= ~seen
        count += 1
    return count


def components(G: Multigraph, A: Iterable[int]) -> int:
    return count_components(G, vertex_mask(G, A))


def component_masks(G: Multigraph, amask: int) -> list[int]:
    nbr = G.neighbor_masks
    out = []
    remaining = amask
    while remaining:
        seen = remaining & -remaining
        frontier = seen
        while frontier:
            v = (frontier & -frontier).bit_length()
            frontier &= frontier - 1
            new = nbr[v] & remaining & ~seen
            seen |= new
            frontier |= new
        remaining &= ~seen
        out.append(seen)
    return out


def induced_edge_count(G: Multigraph, amask: int) -> int:
    count = 0
    for u, v in G.edges:
        if (amask >> (u - 1)) & 1 and (amask >> (v - 1)) & 1:
            count += 1
    return count


def is_cyclic_mask(G: Multigraph, amask: int) -> bool:
    # a forest on k vertices with c components has exactly k - c edges;
    # loops and parallel pairs push the count above that
    k = amask.bit_count()
    return induced_edge_count(G, amask) > k - count_components(G, amask)


def is_cyclic_subset(G: Multigraph, A: Iterable[int]) -> bool:
    """True iff ``G[A]`` contains a cycle (loops and parallel pairs included)."""
    return is_cyclic_mask(G, vertex_mask(G, A))


# -- global predicates -----------------------------------------------------


def is_connected(G: Multigraph) -> bool:
    return G.n > 0 and count_components(G, G.full_mask) == 1


def is_trivalent(G: Multigraph) -> bool:
    return G.n > 0 and all(G.degree(v) == 3 for v in G.vertices)


def has_loops(G: Multigraph) -> bool:
    return any(u == v for u, v in G.edges)


def is_simple(G: Multigraph) -> bool:
    if has_loops(G):
        return False
    seen = set()
    for u, v in G.edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            return False
        seen.add(key)
    return True


def genus(G: Multigraph) -> int:
    """First Betti number |E| - |V| + (number of components)."""
    return G.m - G.n + count_components(G, G.full_mask)


def bridges(G: Multigraph) -> frozenset[int]:
    """Edge ids whose removal increases the number of components.

    Iterative low-link DFS that skips the tree edge by id, so a parallel copy
    of the tree edge counts as a back edge.
    """
    pre = [0] * (G.n + 1)
    low = [0] * (G.n + 1)
    counter = 0
    found = []
    for root in G.vertices:
        if pre[root]:
            continue
        counter += 1
        pre[root] = low[root] = counter
        stack = [(root, 0, iter(G.incident[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for e in it:
                if e == via:
                    continue
                a, b = G.edges[e - 1]
                w = b if a == v else a
                if w == v:
                    continue
                if pre[w]:
                    low[v] = min(low[v], pre[w])
                else:
                    counter += 1
                    pre[w] = low[w] = counter
                    stack.append((w, e, iter(G.incident[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > pre[parent]:
                        found.append(via)
    return frozenset(found)


def _connected_without(G: Multigraph, removed: set[int]) -> bool:
    parent = list(range(G.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pieces = G.n
    for e, (u, v) in enumerate(G.edges, start=1):
        if e in removed:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            pieces -= 1
    return pieces == 1


def _edge_connectivity_brute(G: Multigraph) -> int:
    proper = [e for e, (u, v) in enumerate(G.edges, start=1) if u != v]
    bound = min(G.degree(v) - 2 * G.loop_counts[v] for v in G.vertices)
    for k in range(1, bound):
        for cut in combinations(proper, k):
            if not _connected_without(G, set(cut)):
                return k
    return bound


def _max_flow(G: Multigraph, s: int, t: int) -> int:
    cap = [[0] * (G.n + 1) for _ in range(G.n + 1)]
    for u, v in G.edges:
        if u != v:
            cap[u][v] += 1
            cap[v][u] += 1
    flow = 0
    while True:
        prev = [0] * (G.n + 1)
        prev[s] = s
        queue = deque([s])
        while queue and not prev[t]:
            x = queue.popleft()
            for y in range(1, G.n + 1):
                if cap[x][y] > 0 and not prev[y]:
                    prev[y] = x
                    queue.append(y)
        if not prev[t]:
            return flow
        y = t
        while y != s:
            x = prev[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1


def edge_connectivity(G: Multigraph) -> int:
    """Minimum number of edges whose removal disconnects ``G`` (0 if already
    disconnected or if ``G`` has fewer than two vertices)."""
    if G.n < 2 or not is_connected(G):
        return 0
    if G.m <= BRUTE_FORCE_EDGE_LIMIT:
        return _edge_connectivity_brute(G)
    return min(_max_flow(G, 1, t) for t in range(2, G.n + 1))


def is_two_edge_connected(G: Multigraph) -> bool:
    return is_connected(G) and not bridges(G)


def is_k_vertex_connected(G: Multigraph, k: int) -> bool:
    """Removing any ``k - 1`` or fewer vertices leaves a connected graph.

    Removing every vertex is not counted as disconnecting, so e.g. the theta
    graph is 2-vertex connected.
    """
    if not is_connected(G):
        return False
    full = G.full_mask
    for size in range(1, k):
        for removed in combinations(G.vertices, size):
            rest = full & ~vertex_mask(G, removed)
            if rest and count_components(G, rest) > 1:
                return False
    return True


@dataclass(frozen=True)
class ConnectivityReport:
    is_connected: bool
    is_trivalent: bool
    is_simple: bool
    has_loops: bool
    bridges: frozenset[int]
    edge_connectivity: int
    is_2_vertex_connected: bool
    genus: int

    @property
    def is_two_edge_connected(self) -> bool:
        return self.is_connected and not self.bridges


def connectivity_report(G: Multigraph) -> ConnectivityReport:
    return ConnectivityReport(
        is_connected=is_connected(G),
        is_trivalent=is_trivalent(G),
        is_simple=is_simple(G),
        has_loops=has_loops(G),
        bridges=bridges(G),
        edge_connectivity=edge_connectivity(G),
        is_2_vertex_connected=is_k_vertex_connected(G, 2),
        genus=genus(G),
    )


# -- constructions ---------------------------------------------------------


def disjoint_union(G1: Multigraph, G2: Multigraph) -> Multigraph:
    shift = G1.n
    return Multigraph(G1.n + G2.n, G1.edges + tuple((u + shift, v + shift) for u, v in G2.edges))


def two_switch(G1: Multigraph, G2: Multigraph, e1: int, e2: int, swap: bool = False) -> Multigraph:
    """Delete ``e1 = (a1, b1)`` and ``e2 = (a2, b2)`` from ``G1 ⊔ G2`` and append
    ``(a1, a2), (b1, b2)``; with ``swap`` append ``(a1, b2), (b1, a2)`` instead.

    Vertices of ``G2`` are shifted by ``G1.n``; remaining edges keep their
    relative order.
    """
    if not 1 <= e1 <= G1.m or not 1 <= e2 <= G2.m:
        raise GraphInputError(f"edge ids out of range: e1={e1}, e2={e2}")
    a1, b1 = G1.edges[e1 - 1]
    a2, b2 = G2.edges[e2 - 1]
    if a1 == b1 or a2 == b2:
        raise GraphInputError("cannot 2-switch a loop")
    shift = G1.n
    a2, b2 = a2 + shift, b2 + shift
    if swap:
        a2, b2 = b2, a2
    kept = [p for i, p in enumerate(G1.edges, start=1) if i != e1]
    kept += [(u + shift, v + shift) for i, (u, v) in enumerate(G2.edges, start=1) if i != e2]
    return Multigraph(G1.n + G2.n, tuple(kept) + ((a1, a2), (b1, b2)))


def relabel(G: Multigraph, perm: dict[int, int]) -> Multigraph:
    return Multigraph(G.n, tuple((perm[u], perm[v]) for u, v in G.edges))


# -- isomorphism and enumeration -------------------------------------------


def _refine(G: Multigraph, cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_of = {}
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        sig = {}
        for v in G.vertices:
            # multiplicity of each incident bundle, keyed by the neighbour's cell
            per_nbr = {}
            for e in G.incident[v]:
                a, b = G.edges[e - 1]
                w = b if a == v else a
                if w != v:
                    per_nbr[w] = per_nbr.get(w, 0) + 1
            sig[v] = (G.loop_counts[v], tuple(sorted((cell_of[w], k) for w, k in per_nbr.items())))
        new_cells = []
        for cell in cells:
            groups = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            for key in sorted(groups):
                new_cells.append(groups[key])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def canonical_form(G: Multigraph) -> tuple:
    """Canonical certificate: equal iff the graphs are isomorphic.

    Individualization-refinement search; the minimum relabelled sorted edge
    list over all leaves is returned.
    """
    best = None
    stack = [[list(G.vertices)]] if G.n else []
    while stack:
        cells = _refine(G, stack.pop())
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            pos = {cell[0]: i + 1 for i, cell in enumerate(cells)}
            code = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in G.edges))
            if best is None or code < best:
                best = code
            continue
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            stack.append(cells[:target] + [[v], rest] + cells[target + 1:])
    return (G.n, best or ())


def are_isomorphic(G1: Multigraph, G2: Multigraph) -> bool:
    if G1.n != G2.n or G1.m != G2.m:
        return False
    return canonical_form(G1) == canonical_form(G2)


def _bfs_labelled_cubic(n: int, allow_loops: bool):
    """Yield edge lists of connected cubic multigraphs whose labels follow a
    breadth-first discovery order from vertex 1.  Every isomorphism class
    appears at least once."""
    left = [3] * (n + 1)
    edges = []

    def fill(u, discovered, lo):
        if u > n:
            yield list(edges)
            return
        if u > discovered:
            return
        if left[u] == 0:
            yield from fill(u + 1, discovered, u + 1)
            return
        # next edge target t >= lo; targets from u are non-decreasing
        if allow_loops and lo <= u and left[u] >= 2:
            left[u] -= 2
            edges.append((u, u))
            yield from fill(u, discovered, u)
            edges.pop()
            left[u] += 2
        for w in range(max(lo, u + 1), discovered + 1):
            if left[w] > 0:
                left[u] -= 1
                left[w] -= 1
                edges.append((u, w))
                yield from fill(u, discovered, w)
                edges.pop()
                left[w] += 1
                left[u] += 1
        new = discovered + 1
        if new <= n and lo <= new:
            left[u] -= 1
            left[new] -= 1
            edges.append((u, new))
            yield from fill(u, new, new)
            edges.pop()
            left[new] += 1
            left[u] += 1

    yield from fill(1, 1, 1)


def enumerate_trivalent_graphs(n: int, require_2ec: bool = False,
                               max_n: int = MAX_ENUMERATION_VERTICES) -> list[Multigraph]:
    """One representative per isomorphism class of connected trivalent
    multigraphs on ``n`` vertices, sorted by canonical form.

    With ``require_2ec`` only loopless 2-edge-connected graphs are kept.
    """
    if n % 2:
        raise GraphInputError(f"no trivalent graph has an odd number of vertices ({n})")
    if n < 2:
        raise GraphInputError("need at least 2 vertices")
    if n > max_n:
        raise PreconditionError(f"n={n} exceeds the enumeration bound {max_n}")
    seen = {}
    for edge_list in _bfs_labelled_cubic(n, allow_loops=not require_2ec):
        G = Multigraph(n, tuple(edge_list))
        if require_2ec and bridges(G):
            continue
        key = canonical_form(G)
        if key not in seen:
            seen[key] = G
    return [seen[k] for k in sorted(seen)]
