"""Closed walks, walk products, balance checks and the brute-force oracle."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bgains.balance import (
    EDGES,
    FLEXIBLE,
    FULL,
    RIGID,
    ClosedWalk,
    EdgeLabeling,
    EdgeUse,
    FullLabeling,
    OracleBudgetError,
    WalkError,
    all_closed_walks,
    brute_force_count,
    brute_force_count_reference,
    brute_force_labelings,
    is_balanced_edges,
    is_balanced_full,
    walk_product_edges,
    walk_product_full,
)
from bgains.digraph import Digraph, iter_connected_multigraphs
from bgains.groups import make_group

from conftest import random_connected_digraph


def canon(walk):
    trips = tuple((v, u.edge, u.reverse) for v, u in zip(walk.vertices, walk.steps))
    return min(trips[i:] + trips[:i] for i in range(len(trips)))


def naive_walks(d, mode):
    """Unpruned DFS over linearizations + rotation dedupe; reference for
    all_closed_walks."""
    uses = []
    for e, (u, w) in enumerate(d.edges):
        uses.append((u, w, EdgeUse(e, False)))
        if mode == FLEXIBLE:
            uses.append((w, u, EdgeUse(e, True)))
    found = set()

    def rec(start, cur, path):
        for o, t, use in uses:
            if o != cur or any(use == p[1] for p in path):
                continue
            npath = path + [(cur, use)]
            if t == start:
                trips = tuple((v, u.edge, u.reverse) for v, u in npath)
                found.add(min(trips[i:] + trips[:i] for i in range(len(trips))))
            rec(start, t, npath)

    for s in range(d.n_vertices):
        rec(s, s, [])
    return found


# ---------------------------------------------------------------- walks


def test_no_walks_without_edges():
    assert list(all_closed_walks(Digraph(1, ()))) == []
    assert list(all_closed_walks(Digraph(1, ()), RIGID)) == []


def test_single_loop_walks():
    d = Digraph(1, ((0, 0),))
    rigid = list(all_closed_walks(d, RIGID))
    assert rigid == [ClosedWalk((0,), (EdgeUse(0, False),))]
    flexible = list(all_closed_walks(d, FLEXIBLE))
    # forward, backward, and forward-then-backward (one cyclic class)
    assert len(flexible) == 3


def test_walks_match_naive_reference():
    rng = random.Random(7)
    graphs = list(iter_connected_multigraphs(2, 3))
    graphs += [random_connected_digraph(rng, 3, 4) for _ in range(20)]
    for d in graphs:
        for mode in (FLEXIBLE, RIGID):
            got = list(all_closed_walks(d, mode))
            canons = [canon(w) for w in got]
            assert len(set(canons)) == len(canons), "duplicate cyclic class emitted"
            assert set(canons) == naive_walks(d, mode)


def test_walks_from_base(theta):
    for mode in (FLEXIBLE, RIGID):
        everything = list(all_closed_walks(theta, mode))
        for b in range(4):
            based = list(all_closed_walks(theta, mode, base=b))
            assert all(w.vertices[0] == b for w in based)
            expected = {canon(w) for w in everything if b in w.vertices}
            assert {canon(w) for w in based} == expected


def test_theta_rigid_walks_miss_one_of_the_far_vertices(theta):
    walks = list(all_closed_walks(theta, RIGID))
    assert len(walks) == 2
    assert not any(0 in w.vertices and 3 in w.vertices for w in walks)
    # flexible walks do connect them
    assert any(0 in w.vertices and 3 in w.vertices for w in all_closed_walks(theta, FLEXIBLE))


def test_walk_lengths_bounded():
    d = Digraph(2, ((0, 1), (1, 0), (0, 1)))
    assert all(len(w) <= 2 * d.n_edges for w in all_closed_walks(d, FLEXIBLE))
    assert all(len(w) <= d.n_edges for w in all_closed_walks(d, RIGID))


def test_bad_mode_and_base():
    d = Digraph(1, ((0, 0),))
    with pytest.raises(ValueError, match="mode"):
        list(all_closed_walks(d, "loose"))
    with pytest.raises(ValueError, match="base"):
        list(all_closed_walks(d, FLEXIBLE, base=5))


# ------------------------------------------------------- walk products


def test_empty_walk_product_is_identity():
    g = make_group("symmetric:3")
    d = Digraph(2, ((0, 1),))
    f = EdgeLabeling((5,))
    assert walk_product_edges(g, d, f, ClosedWalk((), ())) == g.identity


def test_out_and_back_product():
    g = make_group("symmetric:3")
    d = Digraph(2, ((0, 1),))
    walk = ClosedWalk((0, 1), (EdgeUse(0, False), EdgeUse(0, True)))
    for x in range(g.order):
        assert walk_product_edges(g, d, EdgeLabeling((x,)), walk) == g.identity


def test_triangle_product_is_ordered_product():
    g = make_group("symmetric:3")
    d = Digraph(3, ((0, 1), (1, 2), (2, 0)))
    walk = ClosedWalk((0, 1, 2), (EdgeUse(0, False), EdgeUse(1, False), EdgeUse(2, False)))
    # one-line 102 = swap of 0,1; 210 = swap of 0,2; names pin the elements
    x = g.element_names.index("210")
    y = g.element_names.index("021")
    z = g.inv(g.mul(x, y))
    f = EdgeLabeling((x, y, z))
    assert walk_product_edges(g, d, f, walk) == g.identity
    for a, b, c in itertools.product(range(6), repeat=3):
        got = walk_product_edges(g, d, EdgeLabeling((a, b, c)), walk)
        assert got == g.mul(g.mul(a, b), c)


def test_walk_product_validation():
    g = make_group("cyclic:2")
    d = Digraph(2, ((0, 1), (1, 0)))
    f = EdgeLabeling((0, 0))
    with pytest.raises(WalkError, match="out of range"):
        walk_product_edges(g, d, f, ClosedWalk((0,), (EdgeUse(7, False),)))
    with pytest.raises(WalkError, match="repeats"):
        walk_product_edges(
            g,
            d,
            f,
            ClosedWalk((0, 1, 0, 1), tuple(EdgeUse(i % 2, False) for i in range(4))),
        )
    with pytest.raises(WalkError, match="does not lead"):
        walk_product_edges(g, d, f, ClosedWalk((0, 0), (EdgeUse(0, False), EdgeUse(1, False))))
    rigid = EdgeLabeling((0, 0), RIGID)
    with pytest.raises(WalkError, match="rigid"):
        walk_product_edges(g, d, rigid, ClosedWalk((0, 1), (EdgeUse(0, False), EdgeUse(0, True))))


def test_full_product_single_edge_relation():
    # going out and back along one edge: h(v) h(e) h(w) h(e)^-1 == identity
    # exactly when h(v) h(e) h(w) == h(e).
    g = make_group("symmetric:3")
    d = Digraph(2, ((0, 1),))
    walk = ClosedWalk((0, 1), (EdgeUse(0, False), EdgeUse(0, True)))
    for a, p, b in itertools.product(range(6), repeat=3):
        h = FullLabeling((a, b), (p,))
        balanced_here = walk_product_full(g, d, h, walk) == g.identity
        assert balanced_here == (g.mul(g.mul(a, p), b) == p)


def test_full_product_triangle_perimeter():
    # the triangle with vertex values a, x^-1 a x, y^-1 x^-1 a x y and edge
    # values ax, x^-1 a x y, y^-1 x^-1 a x y z multiplies to the identity
    # around the perimeter whenever xyz = 1 and a*a = 1.
    g = make_group("symmetric:3")
    a = g.element_names.index("102")  # swap of 0,1
    x = g.element_names.index("210")  # swap of 0,2
    y = g.element_names.index("021")  # swap of 1,2
    z = g.inv(g.mul(x, y))
    assert g.mul(a, a) == g.identity

    def conj(el, by):
        return g.mul(g.mul(g.inv(by), el), by)

    v0 = a
    v1 = conj(a, x)
    v2 = conj(v1, y)
    e0 = g.mul(a, x)
    e1 = g.mul(v1, y)
    e2 = g.mul(v2, z)
    d = Digraph(3, ((0, 1), (1, 2), (2, 0)))
    h = FullLabeling((v0, v1, v2), (e0, e1, e2))
    walk = ClosedWalk((0, 1, 2), (EdgeUse(0, False), EdgeUse(1, False), EdgeUse(2, False)))
    assert walk_product_full(g, d, h, walk) == g.identity
    # and out-and-back over each single edge
    for e, (u, w) in enumerate(d.edges):
        oab = ClosedWalk((u, w), (EdgeUse(e, False), EdgeUse(e, True)))
        assert walk_product_full(g, d, h, oab) == g.identity
    assert is_balanced_full(g, d, h)


# ------------------------------------------------------ balance checks


def test_identity_labeling_always_balanced(groups, theta, triangle):
    for g in groups.values():
        for d in (theta, triangle, Digraph(1, ((0, 0),))):
            f = EdgeLabeling((g.identity,) * d.n_edges)
            assert is_balanced_edges(g, d, f)
            h = FullLabeling((g.identity,) * d.n_vertices, (g.identity,) * d.n_edges)
            assert is_balanced_full(g, d, h)


def test_loop_forces_identity():
    g = make_group("cyclic:4")
    d = Digraph(1, ((0, 0),))
    for x in range(4):
        assert is_balanced_edges(g, d, EdgeLabeling((x,))) == (x == g.identity)


def test_parallel_edges_force_equal_values():
    d = Digraph(2, ((0, 1), (0, 1)))
    for spec in ("cyclic:4", "symmetric:3"):
        g = make_group(spec)
        for p, q in itertools.product(range(g.order), repeat=2):
            assert is_balanced_edges(g, d, EdgeLabeling((p, q))) == (p == q)


def test_single_vertex_full_balance():
    g = make_group("symmetric:3")
    d = Digraph(1, ())
    for a in range(6):
        assert is_balanced_full(g, d, FullLabeling((a,), ()))


def test_balanced_full_implies_edge_relation(groups, triangle, theta):
    # every balanced full labeling satisfies h(u) h(e) h(w) = h(e) on each
    # non-loop edge (the out-and-back walk)
    cases = [
        (groups["cyclic:3"], triangle),
        (groups["cyclic:3"], theta),
        (groups["symmetric:3"], triangle),
    ]
    for g, d in cases:
        for h in brute_force_labelings(g, d, FULL, FLEXIBLE):
            for e, (u, w) in enumerate(d.edges):
                lhs = g.mul(g.mul(h.vertex_values[u], h.edge_values[e]), h.vertex_values[w])
                assert lhs == h.edge_values[e]


# ------------------------------------------------------------- oracle


def test_brute_force_examples(triangle):
    c2 = make_group("cyclic:2")
    single = Digraph(1, ())
    assert brute_force_count(c2, single, EDGES, FLEXIBLE) == 1
    assert brute_force_count(c2, triangle, EDGES, FLEXIBLE) == 4
    assert brute_force_count(c2, triangle, FULL, FLEXIBLE) == 8


def test_brute_force_budget(triangle):
    s3 = make_group("symmetric:3")
    with pytest.raises(OracleBudgetError) as exc:
        brute_force_count(s3, triangle, FULL, FLEXIBLE, budget=100)
    assert exc.value.required == 6**6
    assert exc.value.budget == 100
    assert "46656" in str(exc.value)
    with pytest.raises(OracleBudgetError):
        brute_force_count_reference(s3, triangle, FULL, FLEXIBLE, budget=100)


def test_vectorized_oracle_matches_reference(groups):
    small = [g for g in iter_connected_multigraphs(2, 3)]
    for d in small:
        for g in (groups["cyclic:2"], groups["cyclic:3"]):
            for target in (EDGES, FULL):
                for mode in (FLEXIBLE, RIGID):
                    assert brute_force_count(g, d, target, mode) == brute_force_count_reference(
                        g, d, target, mode
                    ), (d, g.name, target, mode)


def test_vectorized_oracle_matches_reference_s3(triangle, path2):
    s3 = make_group("symmetric:3")
    for d in (triangle, path2, Digraph(1, ((0, 0),))):
        for target, mode in ((EDGES, FLEXIBLE), (EDGES, RIGID), (FULL, RIGID)):
            assert brute_force_count(s3, d, target, mode) == brute_force_count_reference(
                s3, d, target, mode
            )


def test_brute_force_labelings_are_balanced_and_distinct(groups, triangle):
    g = groups["cyclic:4"]
    labs = brute_force_labelings(g, triangle, FULL, FLEXIBLE)
    assert len(labs) == len(set(labs))
    assert len(labs) == brute_force_count(g, triangle, FULL, FLEXIBLE)
    assert all(is_balanced_full(g, triangle, h) for h in labs)


def test_labeling_shape_mismatch(triangle):
    g = make_group("cyclic:2")
    with pytest.raises(ValueError, match="3 edges"):
        is_balanced_edges(g, triangle, EdgeLabeling((0,)))
    with pytest.raises(ValueError, match="shape"):
        is_balanced_full(g, triangle, FullLabeling((0,), (0, 0, 0)))


@st.composite
def graph_and_labeling(draw):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(1, 4))
    edges = tuple((draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))) for _ in range(m))
    values = tuple(draw(st.integers(0, 5)) for _ in range(m))
    return Digraph(n, edges), values


@given(graph_and_labeling(), st.data())
@settings(max_examples=150, deadline=None)
def test_reversing_an_edge_inverts_its_label(pair, data):
    # flexible balance is insensitive to edge orientation when the flipped
    # edge's label is inverted
    d, values = pair
    g = make_group("symmetric:3")
    e = data.draw(st.integers(0, d.n_edges - 1))
    u, w = d.edges[e]
    flipped = Digraph(d.n_vertices, d.edges[:e] + ((w, u),) + d.edges[e + 1 :])
    fvals = values[:e] + (g.inv(values[e]),) + values[e + 1 :]
    assert is_balanced_edges(g, d, EdgeLabeling(values)) == is_balanced_edges(
        g, flipped, EdgeLabeling(fvals)
    )


def test_adding_edges_to_strongly_connected_graph_keeps_edge_count(triangle, theta):
    # flexible edge count is |G|^(V-1) regardless of extra edges
    rng = random.Random(3)
    for g in (make_group("cyclic:2"), make_group("cyclic:3")):
        for d in (triangle, theta):
            base = brute_force_count(g, d, EDGES, FLEXIBLE)
            assert base == g.order ** (d.n_vertices - 1)
            for _ in range(3):
                extra = (rng.randrange(d.n_vertices), rng.randrange(d.n_vertices))
                bigger = Digraph(d.n_vertices, d.edges + (extra,))
                assert brute_force_count(g, bigger, EDGES, FLEXIBLE) == base
