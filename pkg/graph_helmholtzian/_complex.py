from __future__ import annotations

import functools
import json
import logging
from dataclasses import dataclass
from typing import Iterable, Sequence, TypeAlias, final

import networkx as nx

from graph_helmholtzian._exceptions import (
    CommonNeighbor,
    DuplicateEdge,
    EmptyGraph,
    IndexOutOfRange,
    InvalidComplex,
    InvalidVertexId,
    NotPendant,
    ParseError,
    SelfLoop,
    UnknownVertex,
)

logger = logging.getLogger(__name__)

Edge: TypeAlias = tuple[int, int]


@final
@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph whose edges carry a fixed orientation ``(tail, head)``.

    ``vertex_ids`` are kept in ascending order, matrix columns follow it. Edge order is the construction order.
    """

    vertex_ids: tuple[int, ...]
    oriented_edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        for v in self.vertex_ids:
            if v < 0:
                raise InvalidVertexId(v)
        # Normalized here so that equal graphs compare equal regardless of how ids were listed
        object.__setattr__(self, "vertex_ids", tuple(sorted(set(self.vertex_ids))))

        known = set(self.vertex_ids)
        seen: set[frozenset[int]] = set()
        for tail, head in self.oriented_edges:
            if tail == head:
                raise SelfLoop(tail)
            for v in (tail, head):
                if v not in known:
                    raise UnknownVertex(v)
            key = frozenset((tail, head))
            if key in seen:
                raise DuplicateEdge((tail, head))
            seen.add(key)

    @classmethod
    def create(cls, edges: Iterable[Edge], vertices: Iterable[int] = ()) -> Graph:
        edges_ = tuple((int(tail), int(head)) for tail, head in edges)
        ids = set(vertices)
        for tail, head in edges_:
            ids.update((tail, head))
        return cls(tuple(ids), edges_)

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_ids)

    @property
    def edge_count(self) -> int:
        return len(self.oriented_edges)

    @functools.cached_property
    def vertex_index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertex_ids)}

    @functools.cached_property
    def edge_index(self) -> dict[frozenset[int], int]:
        return {frozenset(edge): i for i, edge in enumerate(self.oriented_edges)}

    @functools.cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertex_ids}
        for tail, head in self.oriented_edges:
            nbrs[tail].add(head)
            nbrs[head].add(tail)
        return {v: frozenset(n) for v, n in nbrs.items()}

    @functools.cached_property
    def incident_edges(self) -> dict[int, tuple[int, ...]]:
        incident: dict[int, list[int]] = {v: [] for v in self.vertex_ids}
        for i, (tail, head) in enumerate(self.oriented_edges):
            incident[tail].append(i)
            incident[head].append(i)
        return {v: tuple(es) for v, es in incident.items()}

    def degree(self, v: int, /) -> int:
        try:
            return len(self.adjacency[v])
        except KeyError as exc:
            raise UnknownVertex(v) from exc

    def find_edge(self, u: int, v: int, /) -> int | None:
        return self.edge_index.get(frozenset((u, v)))


@final
@dataclass(frozen=True, order=True)
class Triangle:
    """
    Oriented triangle, the cyclic order ``a -> b -> c -> a`` is its orientation. ``a`` is always the smallest id.
    """

    vertices: tuple[int, int, int]

    def __post_init__(self) -> None:
        a, b, c = self.vertices
        if len({a, b, c}) != 3:
            raise InvalidComplex(f"triangle {self.vertices} repeats a vertex")
        if a != min(self.vertices):
            raise InvalidComplex(f"triangle {self.vertices} must start from its smallest vertex")

    @property
    def key(self) -> tuple[int, int, int]:
        a, b, c = sorted(self.vertices)
        return a, b, c

    @property
    def arcs(self) -> tuple[Edge, Edge, Edge]:
        a, b, c = self.vertices
        return (a, b), (b, c), (c, a)

    def reversed(self) -> Triangle:
        a, b, c = self.vertices
        return Triangle((a, c, b))

    def sign_of(self, edge: Edge, /) -> int:
        """+1 when ``edge`` runs along the cyclic orientation, -1 when against it, 0 when not a side."""
        if edge in self.arcs:
            return 1
        if (edge[1], edge[0]) in self.arcs:
            return -1
        return 0


@final
@dataclass(frozen=True)
class OrientedComplex:
    """
    A graph together with all of its 3-cliques, i.e. the 2-skeleton of its clique complex.
    """

    graph: Graph
    triangles: tuple[Triangle, ...]

    def __post_init__(self) -> None:
        expected = [t.key for t in enumerate_triangles(self.graph)]
        got = [t.key for t in self.triangles]
        if got != expected:
            raise InvalidComplex(f"triangles {got} are not the ordered 3-cliques {expected} of the graph")

    @classmethod
    def from_graph(cls, graph: Graph) -> OrientedComplex:
        return cls(graph, tuple(enumerate_triangles(graph)))

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    @property
    def triangle_count(self) -> int:
        return len(self.triangles)

    @functools.cached_property
    def triangle_edges(self) -> tuple[tuple[int, int, int], ...]:
        """Indices of the sides of each triangle, in the order of its arcs."""
        res = []
        for t in self.triangles:
            sides = []
            for u, v in t.arcs:
                idx = self.graph.find_edge(u, v)
                assert idx is not None
                sides.append(idx)
            res.append((sides[0], sides[1], sides[2]))
        return tuple(res)

    @functools.cached_property
    def edge_triangles(self) -> tuple[tuple[int, ...], ...]:
        per_edge: list[list[int]] = [[] for _ in range(self.edge_count)]
        for ti, sides in enumerate(self.triangle_edges):
            for e in sides:
                per_edge[e].append(ti)
        return tuple(tuple(ts) for ts in per_edge)


def _parse_vertex(token: str, record: int, text: str) -> int:
    try:
        v = int(token)
    except ValueError:
        raise ParseError(record, text, f"vertex id {token!r} is not an integer") from None
    if v < 0:
        raise ParseError(record, text, f"vertex id {v} is negative")
    return v


def from_edge_list(lines: Iterable[str]) -> Graph:
    """
    Parses edge-list records. ``u v`` is an oriented edge ``u -> v``, ``v k`` declares vertex ``k`` (possibly
    isolated), lines starting with ``#`` and blank lines are skipped. Records are numbered from 1 by line. Input without
    any edge or vertex record is rejected.
    """
    edges: list[Edge] = []
    declared: set[int] = set()
    seen: set[frozenset[int]] = set()

    for record, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        match line.split():
            case ["v", token]:
                declared.add(_parse_vertex(token, record, line))
            case [tail_token, head_token]:
                tail = _parse_vertex(tail_token, record, line)
                head = _parse_vertex(head_token, record, line)
                if tail == head:
                    raise SelfLoop(tail, record)
                key = frozenset((tail, head))
                if key in seen:
                    raise DuplicateEdge((tail, head), record)
                seen.add(key)
                edges.append((tail, head))
            case _:
                raise ParseError(record, line, "expected `u v` or `v k`")

    if not edges and not declared:
        raise EmptyGraph()
    return Graph.create(edges, declared)


def to_edge_list(g: Graph) -> str:
    used = {v for edge in g.oriented_edges for v in edge}
    lines = [f"v {v}" for v in g.vertex_ids if v not in used]
    lines += [f"{tail} {head}" for tail, head in g.oriented_edges]
    return "".join(line + "\n" for line in lines)


def enumerate_triangles(g: Graph) -> list[Triangle]:
    adj = g.adjacency
    found: list[Triangle] = []
    for u, v in g.oriented_edges:
        a, b = min(u, v), max(u, v)
        for w in adj[a] & adj[b]:
            if w > b:
                found.append(Triangle((a, b, w)))
    found.sort()
    logger.debug("Enumerated %d triangles on %d edges", len(found), g.edge_count)
    return found


def _check_edge_index(g: Graph, e: int) -> None:
    if not 0 <= e < g.edge_count:
        raise IndexOutOfRange(e, g.edge_count)


def triangle_degree(c: OrientedComplex, e: int) -> int:
    _check_edge_index(c.graph, e)
    return len(c.edge_triangles[e])


def to_networkx(g: Graph) -> nx.Graph:
    res = nx.Graph()
    res.add_nodes_from(g.vertex_ids)
    res.add_edges_from(g.oriented_edges)
    return res


def component_count(g: Graph) -> int:
    return int(nx.number_connected_components(to_networkx(g)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    keep = set(vertices)
    for v in keep:
        if v not in g.vertex_index:
            raise UnknownVertex(v)
    edges = tuple(edge for edge in g.oriented_edges if edge[0] in keep and edge[1] in keep)
    return Graph(tuple(keep), edges)


def split_components(g: Graph) -> list[Graph]:
    """Connected components as subgraphs, ordered by their smallest vertex id."""
    parts = sorted((sorted(part) for part in nx.connected_components(to_networkx(g))), key=lambda p: p[0])
    return [induced_subgraph(g, part) for part in parts]


def cut_edges(g: Graph) -> list[int]:
    res = []
    for u, v in nx.bridges(to_networkx(g)):
        idx = g.find_edge(u, v)
        assert idx is not None
        res.append(idx)
    return sorted(res)


def delete_pendant(g: Graph, v: int) -> Graph:
    degree = g.degree(v)
    if degree != 1:
        raise NotPendant(v, degree)

    (e,) = g.incident_edges[v]
    edges = g.oriented_edges[:e] + g.oriented_edges[e + 1 :]
    return Graph(tuple(u for u in g.vertex_ids if u != v), edges)


def contract_edge(g: Graph, e: int) -> Graph:
    """
    Merges the endpoints of edge ``e`` into its tail. Requires the endpoints to have no common neighbour, which
    keeps the result simple.
    """
    _check_edge_index(g, e)
    tail, head = g.oriented_edges[e]
    common = g.adjacency[tail] & g.adjacency[head]
    if common:
        raise CommonNeighbor(e, tuple(sorted(common)))

    def rewire(v: int) -> int:
        return tail if v == head else v

    edges = tuple((rewire(u), rewire(w)) for i, (u, w) in enumerate(g.oriented_edges) if i != e)
    return Graph(tuple(v for v in g.vertex_ids if v != head), edges)


def subdivide_edge(g: Graph, e: int) -> Graph:
    """
    Replaces edge ``e = tail -> head`` by the directed path ``tail -> u -> head`` through a fresh vertex ``u``.
    """
    _check_edge_index(g, e)
    tail, head = g.oriented_edges[e]
    fresh = max(g.vertex_ids) + 1
    edges = g.oriented_edges[:e] + ((tail, fresh), (fresh, head)) + g.oriented_edges[e + 1 :]
    return Graph(g.vertex_ids + (fresh,), edges)


def reorient_edges(g: Graph, indices: Iterable[int]) -> Graph:
    flip = set(indices)
    for e in flip:
        _check_edge_index(g, e)
    edges = tuple((head, tail) if i in flip else (tail, head) for i, (tail, head) in enumerate(g.oriented_edges))
    return Graph(g.vertex_ids, edges)


def reorient_triangles(c: OrientedComplex, indices: Iterable[int]) -> OrientedComplex:
    flip = set(indices)
    for ti in flip:
        if not 0 <= ti < c.triangle_count:
            raise IndexOutOfRange(ti, c.triangle_count)
    triangles = tuple(t.reversed() if i in flip else t for i, t in enumerate(c.triangles))
    return OrientedComplex(c.graph, triangles)


def complex_to_json(c: OrientedComplex) -> str:
    doc = {
        "vertices": list(c.graph.vertex_ids),
        "edges": [list(edge) for edge in c.graph.oriented_edges],
        "triangles": [list(t.vertices) for t in c.triangles],
    }
    return json.dumps(doc)


def complex_from_json(text: str) -> OrientedComplex:
    doc = json.loads(text)
    graph = Graph.create((tuple(edge) for edge in doc["edges"]), doc["vertices"])
    triangles: Sequence[Sequence[int]] = doc["triangles"]
    return OrientedComplex(graph, tuple(Triangle((t[0], t[1], t[2])) for t in triangles))
