from hypothesis import given, settings

from quivergrass.core import make_parahoric
from quivergrass.fixedpoints import energy_table
from quivergrass.momentgraph import (
    Move,
    admissible_moves,
    build_graph,
    cell_closure,
    dominance_order,
    reachability_order,
)

from conftest import instances

GR2 = make_parahoric(2, 1, 1, [1])
FULL2 = make_parahoric(2, 1, 1, [1, 2])
LOOP22 = make_parahoric(2, 1, 2, [1])


def test_admissible_moves_loop22():
    moves = admissible_moves(LOOP22, (2, 0))
    assert moves == [
        (Move(1, 2, 1), (1, 1), 3),
        (Move(1, 2, 2), (0, 2), 1),
    ]
    # from the middle fixed point both candidates point backwards
    moves = admissible_moves(LOOP22, (1, 1))
    assert moves == [
        (Move(1, 2, 1), (0, 2), -1),
        (Move(2, 1, 1), (2, 0), -3),
    ]


def test_admissible_moves_full2():
    moves = admissible_moves(FULL2, (2, 0))
    assert moves == [(Move(1, 2, 1), (1, 1), 1)]  # amount 2 fails alignment


def test_graph_full2():
    G = build_graph(FULL2)
    assert len(G.vertices) == 3
    assert len(G.edges) == 2
    labels = {
        (G.vertices[e.source], G.vertices[e.target]): (e.character.eps, e.character.delta)
        for e in G.edges
    }
    assert labels[(2, 0), (1, 1)] == ((-1, 1), 1)  # eps_2 - eps_1 + delta
    assert labels[(0, 2), (1, 1)] == ((1, -1), 1)  # eps_1 - eps_2 + delta


def test_graph_gr2():
    G = build_graph(GR2)
    assert len(G.vertices) == 2 and len(G.edges) == 1
    e = G.edges[0]
    assert (G.vertices[e.source], G.vertices[e.target]) == ((1, 0), (0, 1))
    assert e.character.render() == "+e2 -e1 +1d"


def test_graph_loop22_out_degrees():
    G = build_graph(LOOP22)
    assert dict(zip(G.patterns, G.out_degrees())) == {
        ((1, 3),): 2,
        ((2, 4),): 1,
        ((3, 4),): 0,
    }


def test_reachability_examples():
    order = reachability_order(build_graph(FULL2))
    assert order.leq((1, 1), (2, 0)) and order.leq((1, 1), (0, 2))
    assert not order.leq((2, 0), (0, 2)) and not order.leq((0, 2), (2, 0))

    order = reachability_order(build_graph(LOOP22))
    assert order.leq((0, 2), (2, 0))      # one edge
    assert order.leq((1, 1), (0, 2))
    assert order.leq((1, 1), (2, 0))      # composite path
    assert not order.leq((2, 0), (1, 1))

    P0 = make_parahoric(2, 0, 1, [1])
    order = reachability_order(build_graph(P0))
    assert len(order.vertices) == 1 and order.leq((0, 0), (0, 0))


def test_dominance_examples():
    order = dominance_order(FULL2)
    assert order.leq(((2,), (2,)), ((1,), (2,)))
    assert not order.leq(((1,), (2,)), ((2,), (1,)))
    order = dominance_order(LOOP22)
    assert order.leq(((2, 4),), ((1, 3),))
    assert order.leq(((3, 4),), ((2, 4),))
    for J in order.vertices:
        assert order.leq(J, J)


def test_cell_closure_examples():
    assert set(cell_closure(FULL2, ((1,), (2,)))) == {((1,), (2,)), ((2,), (2,))}
    assert cell_closure(FULL2, ((2,), (2,))) == (((2,), (2,)),)
    assert len(cell_closure(LOOP22, ((1, 3),))) == 3


@given(instances())
@settings(max_examples=40, deadline=None)
def test_out_degree_equals_energy(P):
    G = build_graph(P)
    table = energy_table(P)
    for J, deg in zip(G.patterns, G.out_degrees()):
        assert deg == table[J]


@given(instances())
@settings(max_examples=40, deadline=None)
def test_reachability_equals_dominance(P):
    reach = reachability_order(build_graph(P))
    dom = dominance_order(P)
    assert reach.same_relation(dom)


@given(instances())
@settings(max_examples=40, deadline=None)
def test_edge_labels_shape(P):
    G = build_graph(P)
    for e in G.edges:
        assert e.character.delta == e.offset > 0
        nonzero = [c for c in e.character.eps if c]
        assert sorted(nonzero) == [-1, 1]
        assert e.character.eps[e.move.recipient - 1] == 1
        assert e.character.eps[e.move.donor - 1] == -1
