import contextlib
import itertools
from typing import Iterator

import numpy as np
import pytest
from _pytest._code import ExceptionInfo

from graph_helmholtzian import Graph, OrientedComplex, gnp_graph, random_orientation


@contextlib.contextmanager
def raises_match_by_val(exc: BaseException) -> Iterator[ExceptionInfo]:
    with pytest.raises(type(exc)) as exc_info:
        yield exc_info

    assert exc_info.value == exc


def brute_force_triangles(g: Graph) -> list[tuple[int, int, int]]:
    adj = g.adjacency
    return [
        (a, b, c)
        for a, b, c in itertools.combinations(g.vertex_ids, 3)
        if b in adj[a] and c in adj[a] and c in adj[b]
    ]


def random_suite(rng: np.random.Generator, count: int, *, sizes=(4, 10), probabilities=(0.3, 0.5, 0.8)):
    """Randomly oriented G(n, p) complexes, sizes inclusive."""
    for i in range(count):
        n = int(rng.integers(sizes[0], sizes[1] + 1))
        p = probabilities[i % len(probabilities)]
        yield OrientedComplex.from_graph(random_orientation(gnp_graph(n, p, rng), rng))


def relative(value: float, scale: float) -> float:
    return value / scale if scale > 0 else value
