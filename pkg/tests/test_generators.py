import numpy as np
import pytest

from graph_helmholtzian import (
    FAMILIES,
    complete_graph,
    component_count,
    cycle_graph,
    generate,
    gnp_graph,
    path_graph,
    random_orientation,
    random_tree,
    star_graph,
)


def test_named_families():
    assert path_graph(3).oriented_edges == ((1, 2), (2, 3))
    assert cycle_graph(4).oriented_edges == ((1, 2), (1, 4), (2, 3), (3, 4))
    assert complete_graph(4).edge_count == 6
    assert star_graph(3).oriented_edges == ((1, 2), (1, 3), (1, 4))


def test_first_id_offset():
    assert path_graph(2, first=0).vertex_ids == (0, 1)


def test_gnp_is_deterministic_for_a_seed():
    a = gnp_graph(9, 0.5, np.random.default_rng(7))
    b = gnp_graph(9, 0.5, np.random.default_rng(7))

    assert a == b
    assert a.vertex_ids == tuple(range(1, 10))


@pytest.mark.parametrize("n", [1, 2, 3, 17, 40])
def test_random_tree_is_a_spanning_tree(rng, n):
    g = random_tree(n, rng)

    assert g.vertex_count == n
    assert g.edge_count == n - 1
    assert component_count(g) == 1


def test_random_orientation_keeps_underlying_graph(rng):
    g = complete_graph(6)

    oriented = random_orientation(g, rng)

    assert oriented.vertex_ids == g.vertex_ids
    assert [frozenset(e) for e in oriented.oriented_edges] == [frozenset(e) for e in g.oriented_edges]
    assert oriented.oriented_edges != g.oriented_edges


@pytest.mark.parametrize("family", FAMILIES)
def test_generate_every_family(family):
    g = generate(family, 6, np.random.default_rng(3))

    assert g.vertex_count == 6


@pytest.mark.parametrize("n", [0, 1, 2])
def test_cycle_needs_three_vertices(n):
    with pytest.raises(ValueError):
        cycle_graph(n)


def test_star_needs_non_negative_leaves():
    assert star_graph(0).vertex_ids == (1,)
    with pytest.raises(ValueError):
        star_graph(-1)
