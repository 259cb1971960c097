"""
Incidence matrices of an oriented complex and the cochain operators they represent.

``grad`` maps vertex potentials to edge flows, ``curl`` maps edge flows to triangle cochains and ``div`` maps edge
flows back to vertices. In matrix form they are ``B``, ``C`` and ``-B^T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, final

import numpy as np
import numpy.typing as npt

from graph_helmholtzian._complex import OrientedComplex
from graph_helmholtzian._exceptions import DimensionMismatch, NonFiniteValues
from graph_helmholtzian._matrices import FloatArray, IntegerMatrix


def _as_values(values: npt.ArrayLike, what: str) -> FloatArray:
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1:
        raise DimensionMismatch(f"{what} rank", 1, arr.ndim)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteValues(what)
    arr.setflags(write=False)
    return arr


@final
@dataclass(frozen=True, eq=False, init=False)
class VertexPotential:
    """0-cochain, one value per vertex in ascending id order."""

    values: FloatArray

    def __init__(self, values: npt.ArrayLike) -> None:
        object.__setattr__(self, "values", _as_values(values, "vertex potential"))

    def __len__(self) -> int:
        return len(self.values)


@final
@dataclass(frozen=True, eq=False, init=False)
class EdgeFlow:
    """
    1-cochain, one value per edge measured along the stored orientation. The value along the reversed edge is the
    negated one.
    """

    values: FloatArray

    def __init__(self, values: npt.ArrayLike) -> None:
        object.__setattr__(self, "values", _as_values(values, "edge flow"))

    def __len__(self) -> int:
        return len(self.values)


@final
@dataclass(frozen=True, eq=False, init=False)
class TriangleCochain:
    """2-cochain, one value per triangle measured along its stored cyclic orientation."""

    values: FloatArray

    def __init__(self, values: npt.ArrayLike) -> None:
        object.__setattr__(self, "values", _as_values(values, "triangle cochain"))

    def __len__(self) -> int:
        return len(self.values)


def build_B(c: OrientedComplex) -> IntegerMatrix:
    """Edge-vertex incidence ``m x n``: -1 at the tail column, +1 at the head column."""
    g = c.graph
    rows: list[int] = []
    cols: list[int] = []
    vals: list[int] = []
    for e, (tail, head) in enumerate(g.oriented_edges):
        rows += [e, e]
        cols += [g.vertex_index[tail], g.vertex_index[head]]
        vals += [-1, 1]
    return IntegerMatrix.from_entries(rows, cols, vals, (g.edge_count, g.vertex_count))


def build_C(c: OrientedComplex) -> IntegerMatrix:
    """
    Triangle-edge incidence ``t x m``: +1 where the edge runs along the triangle orientation, -1 where it runs
    against it.
    """
    rows: list[int] = []
    cols: list[int] = []
    vals: list[int] = []
    for ti, (triangle, sides) in enumerate(zip(c.triangles, c.triangle_edges)):
        for e in sides:
            rows.append(ti)
            cols.append(e)
            vals.append(triangle.sign_of(c.graph.oriented_edges[e]))
    return IntegerMatrix.from_entries(rows, cols, vals, (c.triangle_count, c.edge_count))


def _check_len(what: str, expected: int, got: Sequence[float] | VertexPotential | EdgeFlow) -> None:
    if len(got) != expected:
        raise DimensionMismatch(what, expected, len(got))


def grad(c: OrientedComplex, p: VertexPotential) -> EdgeFlow:
    """``(grad p)(u -> v) = p(v) - p(u)``"""
    g = c.graph
    _check_len("vertex potential length", g.vertex_count, p)
    idx = g.vertex_index
    return EdgeFlow([p.values[idx[head]] - p.values[idx[tail]] for tail, head in g.oriented_edges])


def _along(c: OrientedComplex, f: EdgeFlow, u: int, v: int) -> float:
    e = c.graph.find_edge(u, v)
    assert e is not None
    value = float(f.values[e])
    return value if c.graph.oriented_edges[e] == (u, v) else -value


def curl(c: OrientedComplex, f: EdgeFlow) -> TriangleCochain:
    """``(curl f)(i, j, k) = f(i, j) + f(j, k) + f(k, i)`` along each triangle's orientation."""
    _check_len("edge flow length", c.edge_count, f)
    return TriangleCochain([sum(_along(c, f, u, v) for u, v in t.arcs) for t in c.triangles])


def div(c: OrientedComplex, f: EdgeFlow) -> VertexPotential:
    """
    ``(div f)(i) = sum_j f(i, j)``, i.e. outgoing minus incoming flow at ``i``. This is ``-B^T f``, so that
    ``div = -grad*`` and ``div grad = -B^T B``.
    """
    g = c.graph
    _check_len("edge flow length", g.edge_count, f)
    idx = g.vertex_index
    res = np.zeros(g.vertex_count, dtype=np.float64)
    for value, (tail, head) in zip(f.values, g.oriented_edges):
        res[idx[tail]] += value
        res[idx[head]] -= value
    return VertexPotential(res)
