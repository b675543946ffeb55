from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_multigraphs, graph, multigraphs
from graphcurve.errors import GraphInputError, PreconditionError
from graphcurve.multigraph import (
    Multigraph,
    are_isomorphic,
    bridges,
    canonical_form,
    components,
    connectivity_report,
    delta,
    disjoint_union,
    edge_connectivity,
    empty_graph,
    enumerate_trivalent_graphs,
    from_edge_list,
    genus,
    has_loops,
    is_connected,
    is_cyclic_subset,
    is_k_vertex_connected,
    is_simple,
    is_trivalent,
    is_two_edge_connected,
    relabel,
    two_switch,
    _edge_connectivity_brute,
    _max_flow,
)

DH_EDGE = {frozenset(p): i for i, p in enumerate(graph("doublehouse").edges, start=1)}


def dh_edges(*pairs):
    return {DH_EDGE[frozenset(p)] for p in pairs}


# -- oracles -----------------------------------------------------------------


def nx_multigraph(G, vertices=None):
    H = nx.MultiGraph()
    keep = set(G.vertices if vertices is None else vertices)
    H.add_nodes_from(keep)
    H.add_edges_from((u, v) for u, v in G.edges if u in keep and v in keep)
    return H


def has_cycle_by_union_find(G, A):
    A = set(A)
    parent = {v: v for v in A}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in G.edges:
        if u in A and v in A:
            ru, rv = find(u), find(v)
            if ru == rv:
                return True
            parent[ru] = rv
    return False


def brute_canonical(G):
    best = None
    for perm in permutations(range(1, G.n + 1)):
        code = tuple(sorted(tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in G.edges))
        if best is None or code < best:
            best = code
    return best


def brute_cubic_classes(n, allow_loops=True):
    """All connected cubic multigraphs on n labelled vertices, up to isomorphism,
    by choosing a multiplicity for every vertex pair."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u, n + 1)]
    if not allow_loops:
        pairs = [p for p in pairs if p[0] != p[1]]
    classes = set()
    deg = [0] * (n + 1)

    def rec(i, edges):
        if i == len(pairs):
            if all(d == 3 for d in deg[1:]):
                G = Multigraph(n, tuple(edges))
                if is_connected(G):
                    classes.add(brute_canonical(G))
            return
        u, v = pairs[i]
        for k in range(4):
            du = 2 * k if u == v else k
            dv = 0 if u == v else k
            if deg[u] + du > 3 or deg[v] + dv > 3:
                break
            deg[u] += du
            deg[v] += dv
            rec(i + 1, edges + [(u, v)] * k)
            deg[u] -= du
            deg[v] -= dv

    rec(0, [])
    return classes


# -- construction --------------------------------------------------------------


def test_theta_and_sodacan_from_edge_lists():
    theta = from_edge_list(2, [(1, 2), (1, 2), (1, 2)])
    assert theta == graph("theta")
    assert theta.m == 3 and is_trivalent(theta) and not is_simple(theta)
    soda = from_edge_list(4, [(1, 3), (2, 4), (1, 2), (1, 2), (3, 4), (3, 4)])
    assert soda == graph("sodacan")


def test_endpoint_out_of_range_rejected():
    with pytest.raises(GraphInputError):
        from_edge_list(2, [(1, 2), (1, 3)])


def test_edge_order_is_identity():
    assert from_edge_list(3, [(1, 2), (2, 3)]) != from_edge_list(3, [(2, 3), (1, 2)])


# -- delta / components / cycles ----------------------------------------------


def test_delta_examples():
    dh = graph("doublehouse")
    assert delta(dh, {1, 2, 3}) == dh_edges((1, 2), (1, 3), (2, 3), (1, 8), (2, 4), (3, 5))
    assert len(delta(dh, {1, 2, 3})) == 6
    assert delta(dh, set()) == frozenset()
    assert delta(graph("theta"), {1}) == {1, 2, 3}
    assert delta(dh, dh.vertices) == set(range(1, 13))


def test_components_examples():
    dh = graph("doublehouse")
    assert components(dh, {1, 2, 5, 6, 8}) == 2
    assert components(dh, {1, 4, 8}) == 2
    assert components(dh, []) == 0


def test_cyclic_examples():
    dh = graph("doublehouse")
    assert is_cyclic_subset(dh, {1, 2, 3})
    assert not is_cyclic_subset(dh, {2, 3, 5, 6, 7})
    assert is_cyclic_subset(graph("sodacan"), {1, 2})
    assert is_cyclic_subset(graph("dumbbell"), {1})


@given(multigraphs(), st.data())
def test_components_match_networkx(G, data):
    A = data.draw(st.sets(st.integers(1, G.n)))
    assert components(G, A) == nx.number_connected_components(nx_multigraph(G, A))


@given(multigraphs(), st.data())
def test_cyclic_matches_union_find(G, data):
    A = data.draw(st.sets(st.integers(1, G.n)))
    assert is_cyclic_subset(G, A) == has_cycle_by_union_find(G, A)


@given(multigraphs(), st.data())
def test_delta_union_and_intersection(G, data):
    A = data.draw(st.sets(st.integers(1, G.n)))
    B = data.draw(st.sets(st.integers(1, G.n)))
    assert delta(G, A | B) == delta(G, A) | delta(G, B)
    assert delta(G, A & B) <= delta(G, A) & delta(G, B)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_acyclic_delta_counting_identity(n):
    for G in enumerate_trivalent_graphs(n, require_2ec=True):
        for k in range(G.n + 1):
            for A in combinations(G.vertices, k):
                if not is_cyclic_subset(G, A):
                    assert len(delta(G, A)) == 2 * len(A) + components(G, A)


# -- connectivity ------------------------------------------------------------


def test_connectivity_report_k4():
    rep = connectivity_report(graph("k4"))
    assert rep.is_trivalent and rep.is_simple and rep.is_connected
    assert rep.edge_connectivity == 3 and rep.genus == 3 and not rep.bridges


def test_connectivity_report_theta():
    rep = connectivity_report(graph("theta"))
    assert rep.is_trivalent and not rep.is_simple
    assert rep.edge_connectivity == 3 and rep.genus == 2
    assert rep.is_2_vertex_connected


def test_connectivity_report_dumbbell():
    rep = connectivity_report(graph("dumbbell"))
    assert rep.has_loops and rep.is_trivalent
    assert rep.bridges == {3}
    assert rep.edge_connectivity == 1 and rep.genus == 2
    assert not rep.is_two_edge_connected


@given(multigraphs())
def test_bridges_by_deletion(G):
    base = nx.number_connected_components(nx_multigraph(G))
    expected = set()
    for e in range(1, G.m + 1):
        H = Multigraph(G.n, tuple(p for i, p in enumerate(G.edges, start=1) if i != e))
        if nx.number_connected_components(nx_multigraph(H)) > base:
            expected.add(e)
    assert bridges(G) == expected


@given(connected_multigraphs(max_n=7, extra_edges=10))
def test_edge_connectivity_matches_stoer_wagner(G):
    if G.n < 2:
        assert edge_connectivity(G) == 0
        return
    W = nx.Graph()
    W.add_nodes_from(G.vertices)
    for u, v in G.edges:
        if u != v:
            w = W.get_edge_data(u, v, {"weight": 0})["weight"]
            W.add_edge(u, v, weight=w + 1)
    cut, _ = nx.stoer_wagner(W)
    assert edge_connectivity(G) == cut
    assert _edge_connectivity_brute(G) == min(_max_flow(G, 1, t) for t in range(2, G.n + 1))


def test_edge_connectivity_large_graph_uses_flow():
    G = two_switch(graph("petersen"), graph("petersen"), 1, 1)
    assert G.m > 20
    assert edge_connectivity(G) == 2


def test_disconnected_graph_has_zero_edge_connectivity():
    assert edge_connectivity(disjoint_union(graph("theta"), graph("theta"))) == 0


@given(multigraphs())
def test_genus_is_betti_number(G):
    H = nx_multigraph(G)
    assert genus(G) == G.m - G.n + nx.number_connected_components(H)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_trivalent_vertex_and_edge_counts(n):
    for G in enumerate_trivalent_graphs(n):
        g = genus(G)
        assert G.n == 2 * g - 2 and G.m == 3 * g - 3


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_two_edge_connected_iff_loopless_and_2_vertex_connected(n):
    for G in enumerate_trivalent_graphs(n):
        assert is_two_edge_connected(G) == (not has_loops(G) and is_k_vertex_connected(G, 2))


@pytest.mark.parametrize("n", [4, 6, 8])
def test_three_edge_connected_iff_simple_and_3_vertex_connected(n):
    for G in enumerate_trivalent_graphs(n):
        assert (edge_connectivity(G) >= 3) == (is_simple(G) and is_k_vertex_connected(G, 3))


def test_theta_is_the_exception_to_the_3_connectivity_lemma():
    theta = graph("theta")
    assert edge_connectivity(theta) == 3
    assert not is_simple(theta)


# -- unions and switches -------------------------------------------------------


def test_disjoint_union():
    tt = disjoint_union(graph("theta"), graph("theta"))
    assert tt.n == 4 and tt.m == 6 and components(tt, tt.vertices) == 2
    assert disjoint_union(graph("k4"), empty_graph()) == graph("k4")
    kt = disjoint_union(graph("k4"), graph("theta"))
    # Betti numbers add: 3 + 2
    assert genus(kt) == kt.m - kt.n + 2 == 5


def test_two_thetas_switch_to_sodacan():
    G = two_switch(graph("theta"), graph("theta"), 1, 1)
    assert are_isomorphic(G, graph("sodacan"))
    assert G.edges[-2:] == ((1, 3), (2, 4))


def test_two_switch_of_k4s_has_two_edge_cut():
    G = two_switch(graph("k4"), graph("k4"), 1, 6)
    assert G.n == 8 and is_trivalent(G)
    assert edge_connectivity(G) == 2


def test_two_switch_rejects_loops():
    with pytest.raises(GraphInputError):
        two_switch(graph("dumbbell"), graph("theta"), 1, 1)


@pytest.mark.parametrize("swap", [False, True])
def test_two_switch_preserves_trivalence(swap):
    for a in ["theta", "k4", "prism"]:
        for b in ["theta", "sodacan", "cube"]:
            G1, G2 = graph(a), graph(b)
            G = two_switch(G1, G2, G1.m, 1, swap=swap)
            assert is_trivalent(G) and G.n == G1.n + G2.n and is_two_edge_connected(G)


# -- isomorphism and enumeration ----------------------------------------------


@settings(max_examples=60)
@given(multigraphs(max_n=6, max_m=9), st.data())
def test_canonical_form_is_relabelling_invariant(G, data):
    perm = data.draw(st.permutations(list(G.vertices)))
    H = relabel(G, {v: perm[v - 1] for v in G.vertices})
    assert canonical_form(G) == canonical_form(H)


@settings(max_examples=60)
@given(multigraphs(max_n=5, max_m=7), multigraphs(max_n=5, max_m=7))
def test_canonical_form_agrees_with_brute_force(G, H):
    same = G.n == H.n and brute_canonical(G) == brute_canonical(H)
    assert (canonical_form(G) == canonical_form(H)) == same


@pytest.mark.parametrize("n", [2, 4, 6])
def test_enumeration_matches_brute_force(n):
    found = {brute_canonical(G) for G in enumerate_trivalent_graphs(n)}
    assert found == brute_cubic_classes(n)
    found_2ec = {brute_canonical(G) for G in enumerate_trivalent_graphs(n, require_2ec=True)}
    brute_2ec = {c for c in brute_cubic_classes(n, allow_loops=False)
                 if is_two_edge_connected(Multigraph(n, c))}
    assert found_2ec == brute_2ec


def test_enumeration_counts():
    # connected cubic multigraphs with loops: 2, 5, 17, 71 on 2, 4, 6, 8 vertices
    assert [len(enumerate_trivalent_graphs(n)) for n in (2, 4, 6, 8)] == [2, 5, 17, 71]


def test_enumeration_small_cases():
    two = enumerate_trivalent_graphs(2, require_2ec=True)
    assert len(two) == 1 and are_isomorphic(two[0], graph("theta"))
    four = enumerate_trivalent_graphs(4, require_2ec=True)
    assert any(are_isomorphic(G, graph("k4")) for G in four)
    assert any(are_isomorphic(G, graph("sodacan")) for G in four)


def test_enumeration_rejects_odd_and_oversized():
    with pytest.raises(GraphInputError):
        enumerate_trivalent_graphs(3)
    with pytest.raises(PreconditionError):
        enumerate_trivalent_graphs(12)
