from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Literal, TypeAlias, final

import numpy as np
import numpy.typing as npt

from graph_helmholtzian._complex import (
    Graph,
    OrientedComplex,
    component_count,
    contract_edge,
    cut_edges,
    delete_pendant,
    split_components,
    subdivide_edge,
    triangle_degree,
)
from graph_helmholtzian._exceptions import CommonNeighbor, DimensionMismatch, VerificationFailure
from graph_helmholtzian._helmholtzian import assemble_entrywise
from graph_helmholtzian._incidence import EdgeFlow, TriangleCochain, VertexPotential, build_B, build_C
from graph_helmholtzian._linalg import RationalVectorBasis, exact_rank, kernel_basis, least_squares_project
from graph_helmholtzian._matrices import FloatArray, vstack

logger = logging.getLogger(__name__)


@final
@dataclass(frozen=True)
class NullityReport:
    """
    Exact nullity of the Helmholtzian next to the closed-form prediction ``m - n - t + omega``.

    The prediction is only guaranteed when the triangle boundaries are independent (``rank_c == t``). For a
    disconnected graph ``components`` holds one report per component and the totals are their sums.
    """

    n: int
    m: int
    t: int
    omega: int
    rank_b: int
    rank_c: int
    eta_exact: int
    eta_predicted: int
    triangles_independent: bool
    components: tuple[NullityReport, ...] = field(default=(), compare=False)

    def to_json_dict(self) -> dict[str, object]:
        doc: dict[str, object] = {
            "n": self.n,
            "m": self.m,
            "t": self.t,
            "omega": self.omega,
            "rank_b": self.rank_b,
            "rank_c": self.rank_c,
            "eta_exact": self.eta_exact,
            "eta_predicted": self.eta_predicted,
            "triangles_independent": self.triangles_independent,
        }
        if self.components:
            doc["components"] = [part.to_json_dict() for part in self.components]
        return doc


def _connected_nullity(c: OrientedComplex) -> NullityReport:
    B, C = build_B(c), build_C(c)
    n, m, t = c.vertex_count, c.edge_count, c.triangle_count

    rank_b = exact_rank(B)
    rank_c = exact_rank(C)
    rank_stacked = exact_rank(vstack(B.T, C))

    if rank_stacked != rank_b + rank_c:
        # Row spaces of B^T and C are orthogonal since C B = 0
        detail = f"rank [B^T; C] = {rank_stacked}, rank B + rank C = {rank_b + rank_c}"
        raise VerificationFailure("stacked-rank", detail)
    if rank_b != n - 1:
        raise VerificationFailure("incidence-rank", f"rank B = {rank_b} on a connected graph with n = {n}")

    return NullityReport(
        n=n,
        m=m,
        t=t,
        omega=1,
        rank_b=rank_b,
        rank_c=rank_c,
        eta_exact=m - rank_stacked,
        eta_predicted=m - n - t + 1,
        triangles_independent=rank_c == t,
    )


def nullity_exact(c: OrientedComplex) -> NullityReport:
    """
    ``eta = m - rank [B^T; C]`` by exact rank, computed per connected component and summed.
    """
    parts = tuple(_connected_nullity(OrientedComplex.from_graph(part)) for part in split_components(c.graph))
    report = NullityReport(
        n=sum(p.n for p in parts),
        m=sum(p.m for p in parts),
        t=sum(p.t for p in parts),
        omega=len(parts),
        rank_b=sum(p.rank_b for p in parts),
        rank_c=sum(p.rank_c for p in parts),
        eta_exact=sum(p.eta_exact for p in parts),
        eta_predicted=sum(p.eta_predicted for p in parts),
        triangles_independent=all(p.triangles_independent for p in parts),
        components=parts if len(parts) > 1 else (),
    )
    logger.debug("Nullity report: %s", report.to_json_dict())
    return report


def nullity_predicted(c: OrientedComplex) -> int:
    """``m - n - t + omega`` verbatim, may be negative when triangle boundaries are dependent."""
    return c.edge_count - c.vertex_count - c.triangle_count + component_count(c.graph)


def triangle_count_predicted(c: OrientedComplex, report: NullityReport | None = None) -> int:
    """
    ``m - n - eta + omega``. Always equals ``rank C``, equals the triangle count only for independent triangles.
    """
    if report is None:
        report = nullity_exact(c)
    return report.m - report.n - report.eta_exact + report.omega


def harmonic_basis(c: OrientedComplex) -> RationalVectorBasis:
    """Exact rational basis of ``ker H``, i.e. the flows that are both divergence-free and curl-free."""
    return kernel_basis(assemble_entrywise(c).matrix)


def _as_flow(c: OrientedComplex, f: EdgeFlow | npt.ArrayLike) -> EdgeFlow:
    flow = f if isinstance(f, EdgeFlow) else EdgeFlow(f)
    if len(flow) != c.edge_count:
        raise DimensionMismatch("edge flow length", c.edge_count, len(flow))
    return flow


@final
@dataclass(frozen=True, eq=False)
class HodgeDecomposition:
    """
    ``f = gradient_part + harmonic_part + curl_part`` with pairwise orthogonal parts.

    ``reconstruction_error``, ``max_pairwise_inner_product`` and ``harmonic_residual`` are relative to ``|f|``
    (``|f|^2`` for the inner products), absolute for the zero flow.
    """

    gradient_part: EdgeFlow
    harmonic_part: EdgeFlow
    curl_part: EdgeFlow
    potential: VertexPotential
    triangle_coefficients: TriangleCochain
    reconstruction_error: float
    max_pairwise_inner_product: float
    harmonic_residual: float

    def squared_norms(self) -> tuple[float, float, float]:
        return (
            float(self.gradient_part.values @ self.gradient_part.values),
            float(self.harmonic_part.values @ self.harmonic_part.values),
            float(self.curl_part.values @ self.curl_part.values),
        )

    def to_json_dict(self) -> dict[str, object]:
        return {
            "gradient_part": self.gradient_part.values.tolist(),
            "harmonic_part": self.harmonic_part.values.tolist(),
            "curl_part": self.curl_part.values.tolist(),
            "potential": self.potential.values.tolist(),
            "triangle_coefficients": self.triangle_coefficients.values.tolist(),
            "reconstruction_error": self.reconstruction_error,
            "max_pairwise_inner_product": self.max_pairwise_inner_product,
            "harmonic_residual": self.harmonic_residual,
        }


def helmholtz_decompose(c: OrientedComplex, f: EdgeFlow | npt.ArrayLike) -> HodgeDecomposition:
    """
    Splits an edge flow into its gradient, harmonic and curl components. The gradient part is the projection
    onto the column space of ``B``, the curl part is the projection onto the column space of ``C^T``, the
    harmonic part is what remains.
    """
    flow = _as_flow(c, f)
    values = flow.values

    on_gradients = least_squares_project(build_B(c), values)
    on_curls = least_squares_project(build_C(c).T, values)
    gradient = on_gradients.projection
    curl_ = on_curls.projection
    harmonic = values - gradient - curl_

    norm = float(np.linalg.norm(values))
    scale = norm if norm > 0 else 1.0
    reconstruction = float(np.linalg.norm(gradient + harmonic + curl_ - values)) / scale
    pairwise = max(abs(float(gradient @ harmonic)), abs(float(gradient @ curl_)), abs(float(harmonic @ curl_)))
    H = assemble_entrywise(c).matrix
    residual = float(np.linalg.norm(np.asarray(H @ harmonic, dtype=np.float64))) / scale

    return HodgeDecomposition(
        gradient_part=EdgeFlow(gradient),
        harmonic_part=EdgeFlow(harmonic),
        curl_part=EdgeFlow(curl_),
        potential=VertexPotential(on_gradients.coefficients),
        triangle_coefficients=TriangleCochain(on_curls.coefficients),
        reconstruction_error=reconstruction,
        max_pairwise_inner_product=pairwise / scale**2,
        harmonic_residual=residual,
    )


@final
@dataclass(frozen=True, eq=False)
class RankingResult:
    """
    Global vertex scores best explaining a flow as score differences, with the share of the flow's squared norm
    falling into each component. ``degenerate`` marks the zero flow, for which every ratio is 0.
    """

    potential: VertexPotential
    consistency_ratio: float
    harmonic_ratio: float
    curl_ratio: float
    degenerate: bool = False

    def to_json_dict(self) -> dict[str, object]:
        return {
            "potential": self.potential.values.tolist(),
            "consistency_ratio": self.consistency_ratio,
            "harmonic_ratio": self.harmonic_ratio,
            "curl_ratio": self.curl_ratio,
            "degenerate": self.degenerate,
        }


def _center_per_component(g: Graph, scores: FloatArray) -> FloatArray:
    centered = scores.copy()
    for part in split_components(g):
        idx = [g.vertex_index[v] for v in part.vertex_ids]
        centered[idx] -= centered[idx].mean()
    return centered


def rank_flows(c: OrientedComplex, f: EdgeFlow | npt.ArrayLike) -> RankingResult:
    """
    Scores ``s`` minimizing ``|B s - f|``, minimum norm, mean zero on every connected component.
    """
    flow = _as_flow(c, f)
    decomposition = helmholtz_decompose(c, flow)
    total = float(flow.values @ flow.values)
    if total == 0.0:
        return RankingResult(VertexPotential(np.zeros(c.vertex_count)), 0.0, 0.0, 0.0, degenerate=True)

    potential = _center_per_component(c.graph, np.array(decomposition.potential.values))
    grad_sq, harmonic_sq, curl_sq = decomposition.squared_norms()
    return RankingResult(
        potential=VertexPotential(potential),
        consistency_ratio=grad_sq / total,
        harmonic_ratio=harmonic_sq / total,
        curl_ratio=curl_sq / total,
    )


CheckKind: TypeAlias = Literal["pendant-deletion", "cut-edge-contraction", "edge-contraction", "edge-subdivision"]


@final
@dataclass(frozen=True)
class StructuralCheck:
    """
    Nullity before and after one transformation. ``eta_expected`` is ``None`` for transformations reported as
    observations only, in which case ``holds`` is ``None`` too.
    """

    kind: CheckKind
    target: int
    eta_before: int
    eta_after: int
    eta_expected: int | None
    independent_before: bool
    independent_after: bool

    @property
    def holds(self) -> bool | None:
        if self.eta_expected is None:
            return None
        return self.eta_after == self.eta_expected

    def to_json_dict(self) -> dict[str, object]:
        return {
            "kind": self.kind,
            "target": self.target,
            "eta_before": self.eta_before,
            "eta_after": self.eta_after,
            "eta_expected": self.eta_expected,
            "holds": self.holds,
            "independent_before": self.independent_before,
            "independent_after": self.independent_after,
        }


@final
@dataclass(frozen=True)
class StructuralReport:
    base: NullityReport
    checks: tuple[StructuralCheck, ...]

    @property
    def failures(self) -> tuple[StructuralCheck, ...]:
        return tuple(check for check in self.checks if check.holds is False)

    def to_json_dict(self) -> dict[str, object]:
        return {
            "base": self.base.to_json_dict(),
            "checks": [check.to_json_dict() for check in self.checks],
            "failures": len(self.failures),
        }


def structural_nullity_checks(c: OrientedComplex) -> StructuralReport:
    """
    Recomputes the exact nullity after every pendant deletion, every cut-edge contraction, every other admissible
    edge contraction and every edge subdivision, and compares it with the expected relation:

    * pendant deletion and cut-edge contraction keep the nullity;
    * subdividing ``e`` adds ``tri(e)`` to the nullity, which needs independent triangle boundaries on both sides;
    * other contractions are reported without an expected value.
    """
    g = c.graph
    base = nullity_exact(c)

    def check(kind: CheckKind, target: int, transformed: Graph, expected: int | None) -> StructuralCheck:
        after = nullity_exact(OrientedComplex.from_graph(transformed))
        return StructuralCheck(
            kind=kind,
            target=target,
            eta_before=base.eta_exact,
            eta_after=after.eta_exact,
            eta_expected=expected,
            independent_before=base.triangles_independent,
            independent_after=after.triangles_independent,
        )

    checks: list[StructuralCheck] = []
    for v in g.vertex_ids:
        if g.degree(v) == 1:
            checks.append(check("pendant-deletion", v, delete_pendant(g, v), base.eta_exact))

    bridges = set(cut_edges(g))
    for e in range(g.edge_count):
        try:
            contracted = contract_edge(g, e)
        except CommonNeighbor:
            continue
        if e in bridges:
            checks.append(check("cut-edge-contraction", e, contracted, base.eta_exact))
        else:
            checks.append(check("edge-contraction", e, contracted, None))

    for e in range(g.edge_count):
        checks.append(check("edge-subdivision", e, subdivide_edge(g, e), base.eta_exact + triangle_degree(c, e)))

    report = StructuralReport(base, tuple(checks))
    if report.failures:
        logger.debug("%d structural relations failed", len(report.failures))
    return report
