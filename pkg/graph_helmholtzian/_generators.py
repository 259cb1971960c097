from __future__ import annotations

from typing import Literal, TypeAlias

import networkx as nx
import numpy as np
from typing_extensions import assert_never

from graph_helmholtzian._complex import Graph, reorient_edges

Family: TypeAlias = Literal["path", "cycle", "complete", "star", "gnp", "tree"]

FAMILIES: tuple[Family, ...] = ("path", "cycle", "complete", "star", "gnp", "tree")


def from_networkx(graph: nx.Graph, *, first: int = 1) -> Graph:
    """
    Relabels nodes ``0..n-1`` of a networkx graph to ``first..first+n-1``. Edges get the default orientation
    (tail is the smaller id) and lexicographic order.
    """
    edges = sorted((min(u, v) + first, max(u, v) + first) for u, v in graph.edges())
    return Graph.create(edges, (v + first for v in graph.nodes()))


def path_graph(n: int, *, first: int = 1) -> Graph:
    return from_networkx(nx.path_graph(n), first=first)


def cycle_graph(n: int, *, first: int = 1) -> Graph:
    if n < 3:
        raise ValueError(f"A cycle needs at least 3 vertices, got {n}")
    return from_networkx(nx.cycle_graph(n), first=first)


def complete_graph(n: int, *, first: int = 1) -> Graph:
    return from_networkx(nx.complete_graph(n), first=first)


def star_graph(leaves: int, *, first: int = 1) -> Graph:
    """``K_{1,leaves}``, the centre gets id ``first``."""
    if leaves < 0:
        raise ValueError(f"Leaf count must be non-negative, got {leaves}")
    return from_networkx(nx.star_graph(leaves), first=first)


def _seed_from(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 2**32 - 1))


def gnp_graph(n: int, p: float, rng: np.random.Generator, *, first: int = 1) -> Graph:
    return from_networkx(nx.gnp_random_graph(n, p, seed=_seed_from(rng)), first=first)


def random_tree(n: int, rng: np.random.Generator, *, first: int = 1) -> Graph:
    """Uniformly random labelled tree on ``n`` vertices, decoded from a uniform Prüfer sequence."""
    if n <= 2:
        return path_graph(n, first=first)
    sequence = [int(x) for x in rng.integers(0, n, size=n - 2)]
    return from_networkx(nx.from_prufer_sequence(sequence), first=first)


def random_orientation(g: Graph, rng: np.random.Generator) -> Graph:
    flips = [i for i, coin in enumerate(rng.random(g.edge_count)) if coin < 0.5]
    return reorient_edges(g, flips)


def generate(family: Family, n: int, rng: np.random.Generator, *, p: float = 0.5, first: int = 1) -> Graph:
    match family:
        case "path":
            return path_graph(n, first=first)
        case "cycle":
            return cycle_graph(n, first=first)
        case "complete":
            return complete_graph(n, first=first)
        case "star":
            return star_graph(n - 1, first=first)
        case "gnp":
            return gnp_graph(n, p, rng, first=first)
        case "tree":
            return random_tree(n, rng, first=first)
        case _:
            assert_never(family)
