from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal, TypeAlias, final

from typing_extensions import assert_never

from graph_helmholtzian._complex import OrientedComplex
from graph_helmholtzian._exceptions import DimensionMismatch, VerificationFailure
from graph_helmholtzian._incidence import build_B, build_C
from graph_helmholtzian._matrices import IntegerMatrix, Layout

logger = logging.getLogger(__name__)

Provenance: TypeAlias = Literal["product-form", "entrywise", "verified-both"]
Method: TypeAlias = Literal["product", "entrywise", "verify"]

# Helmholtzians up to this many edges are stored dense
DENSE_HELMHOLTZIAN_MAX_EDGES = 512


def helmholtzian_layout(m: int) -> Layout:
    return "dense" if m <= DENSE_HELMHOLTZIAN_MAX_EDGES else "sparse"


@final
@dataclass(frozen=True, eq=False)
class HelmholtzianMatrix:
    """``m x m`` matrix ``H = B B^T + C^T C`` indexed by edges, along with the way it was obtained."""

    matrix: IntegerMatrix
    provenance: Provenance

    @property
    def edge_count(self) -> int:
        return self.matrix.shape[0]


@final
@dataclass(frozen=True)
class Discrepancy:
    row: int
    col: int
    expected: int
    got: int


@final
@dataclass(frozen=True)
class EquivalenceReport:
    ok: bool
    discrepancy: Discrepancy | None = None
    helmholtzian: HelmholtzianMatrix | None = None

    def __bool__(self) -> bool:
        return self.ok


def assemble_product(B: IntegerMatrix, C: IntegerMatrix) -> HelmholtzianMatrix:
    m = B.shape[0]
    if C.shape[1] != m:
        raise DimensionMismatch("triangle-edge incidence column count", m, C.shape[1])

    H = B @ B.T + C.T @ C
    return HelmholtzianMatrix(H.relayout(helmholtzian_layout(m)), "product-form")


def assemble_entrywise(c: OrientedComplex) -> HelmholtzianMatrix:
    """
    Builds ``H`` from adjacency relations only, without forming ``B`` or ``C``:

    * ``h(e, e) = tri(e) + 2``, ``tri(e)`` being the number of triangles through ``e``;
    * ``-1`` when the head of one edge is the tail of the other and the edges share no triangle;
    * ``+1`` when the edges share their head or share their tail and share no triangle;
    * ``0`` otherwise.

    Each row is filled from the edges incident to the endpoints of its own edge only.
    """
    g = c.graph
    m = g.edge_count
    adj = g.adjacency

    rows: list[int] = []
    cols: list[int] = []
    vals: list[int] = []
    for e, (tail, head) in enumerate(g.oriented_edges):
        rows.append(e)
        cols.append(e)
        vals.append(len(c.edge_triangles[e]) + 2)

        for shared, other_end in ((tail, head), (head, tail)):
            for f in g.incident_edges[shared]:
                if f == e:
                    continue
                f_tail, f_head = g.oriented_edges[f]
                far = f_head if f_tail == shared else f_tail
                if far in adj[other_end]:
                    # e, f and the edge joining their far ends form a triangle, the two terms cancel
                    continue
                same_role = (shared == tail) == (shared == f_tail)
                rows.append(e)
                cols.append(f)
                vals.append(1 if same_role else -1)

    logger.debug("Entrywise Helmholtzian assembled for m=%d, t=%d", m, c.triangle_count)
    H = IntegerMatrix.from_entries(rows, cols, vals, (m, m), layout=helmholtzian_layout(m))
    return HelmholtzianMatrix(H, "entrywise")


def verify_equivalence(c: OrientedComplex) -> EquivalenceReport:
    """
    Assembles ``H`` both ways and compares entrywise, the product form being the oracle.
    """
    product = assemble_product(build_B(c), build_C(c))
    entrywise = assemble_entrywise(c)
    diff = product.matrix.first_difference(entrywise.matrix)
    if diff is not None:
        row, col, expected, got = diff
        logger.debug("Helmholtzian assemblies disagree at (%d, %d): %d != %d", row, col, expected, got)
        return EquivalenceReport(False, Discrepancy(row, col, expected, got))

    return EquivalenceReport(True, None, HelmholtzianMatrix(entrywise.matrix, "verified-both"))


def assemble(c: OrientedComplex, method: Method = "entrywise") -> HelmholtzianMatrix:
    """
    Default assembly path is entrywise. ``"verify"`` assembles both ways and raises on any disagreement.
    """
    match method:
        case "entrywise":
            return assemble_entrywise(c)
        case "product":
            return assemble_product(build_B(c), build_C(c))
        case "verify":
            report = verify_equivalence(c)
            if not report.ok:
                raise VerificationFailure("helmholtzian-equivalence", repr(report.discrepancy))
            assert report.helmholtzian is not None
            return report.helmholtzian
        case _:
            assert_never(method)
