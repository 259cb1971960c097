"""
Reference data with known exact answers, shared by ``helm selftest`` and the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, final

from graph_helmholtzian._complex import OrientedComplex, from_edge_list, subdivide_edge
from graph_helmholtzian._helmholtzian import assemble_entrywise, assemble_product
from graph_helmholtzian._hodge import nullity_exact, structural_nullity_checks
from graph_helmholtzian._incidence import build_B, build_C
from graph_helmholtzian._matrices import IntegerMatrix

# Five vertices, two triangles {2,3,4} and {2,4,5}, vertex 1 pendant
REFERENCE_EDGE_LIST = """\
1 2
3 2
2 5
4 5
4 3
4 2
"""

REFERENCE_B = (
    (-1, 1, 0, 0, 0),
    (0, 1, -1, 0, 0),
    (0, -1, 0, 0, 1),
    (0, 0, 0, -1, 1),
    (0, 0, 1, -1, 0),
    (0, 1, 0, -1, 0),
)

# Known up to the sign of each row, the triangle orientations behind it are not recoverable
REFERENCE_C = (
    (0, 1, 0, 0, 1, -1),
    (0, 0, -1, 1, 0, -1),
)

REFERENCE_H = (
    (2, 1, -1, 0, 0, 1),
    (1, 3, -1, 0, 0, 0),
    (-1, -1, 3, 0, 0, 0),
    (0, 0, 0, 3, 1, 0),
    (0, 0, 0, 1, 3, 0),
    (1, 0, 0, 0, 0, 4),
)

K4_EDGE_LIST = """\
1 2
1 3
1 4
2 3
2 4
3 4
"""


def reference_complex() -> OrientedComplex:
    return OrientedComplex.from_graph(from_edge_list(REFERENCE_EDGE_LIST.splitlines()))


def k4_complex() -> OrientedComplex:
    return OrientedComplex.from_graph(from_edge_list(K4_EDGE_LIST.splitlines()))


def equal_up_to_row_signs(actual: IntegerMatrix, expected: IntegerMatrix) -> bool:
    if actual.shape != expected.shape:
        return False
    return all(
        mine == theirs or mine == [-x for x in theirs] for mine, theirs in zip(actual.to_rows(), expected.to_rows())
    )


@final
@dataclass(frozen=True)
class SelftestOutcome:
    name: str
    passed: bool
    detail: str


def _exact(name: str, actual: IntegerMatrix, expected: IntegerMatrix) -> SelftestOutcome:
    diff = actual.first_difference(expected)
    if diff is None:
        return SelftestOutcome(name, True, "exact match")
    row, col, got, want = diff
    return SelftestOutcome(name, False, f"entry ({row}, {col}) is {got}, expected {want}")


def _reference_b() -> SelftestOutcome:
    return _exact("reference-B", build_B(reference_complex()), IntegerMatrix.from_rows(REFERENCE_B))


def _reference_c() -> SelftestOutcome:
    ok = equal_up_to_row_signs(build_C(reference_complex()), IntegerMatrix.from_rows(REFERENCE_C))
    return SelftestOutcome("reference-C", ok, "match up to row signs" if ok else "rows differ beyond sign")


def _reference_h_product() -> SelftestOutcome:
    c = reference_complex()
    H = assemble_product(build_B(c), build_C(c)).matrix
    return _exact("reference-H-product", H, IntegerMatrix.from_rows(REFERENCE_H))


def _reference_h_entrywise() -> SelftestOutcome:
    H = assemble_entrywise(reference_complex()).matrix
    return _exact("reference-H-entrywise", H, IntegerMatrix.from_rows(REFERENCE_H))


def _reference_nullity() -> SelftestOutcome:
    report = nullity_exact(reference_complex())
    ok = (report.eta_exact, report.eta_predicted, report.t, report.triangles_independent) == (0, 0, 2, True)
    detail = f"eta_exact={report.eta_exact} eta_predicted={report.eta_predicted}"
    return SelftestOutcome("reference-nullity", ok, detail)


def _k4_nullity() -> SelftestOutcome:
    report = nullity_exact(k4_complex())
    observed = (report.eta_exact, report.eta_predicted, report.rank_c, report.triangles_independent)
    ok = observed == (0, -1, 3, False)
    return SelftestOutcome(
        "k4-dependent-triangles",
        ok,
        f"eta_exact={observed[0]} eta_predicted={observed[1]} rank_c={observed[2]} independent={observed[3]}",
    )


def _k4_subdivision() -> SelftestOutcome:
    c = k4_complex()
    before = nullity_exact(c).eta_exact
    after = nullity_exact(OrientedComplex.from_graph(subdivide_edge(c.graph, 0))).eta_exact
    failures = structural_nullity_checks(c).failures
    ok = (before, after) == (0, 1) and any(check.kind == "edge-subdivision" for check in failures)
    return SelftestOutcome("k4-subdivision", ok, f"eta {before} -> {after}, expected by the relation {before + 2}")


SELFTESTS: tuple[Callable[[], SelftestOutcome], ...] = (
    _reference_b,
    _reference_c,
    _reference_h_product,
    _reference_h_entrywise,
    _reference_nullity,
    _k4_nullity,
    _k4_subdivision,
)


def run_selftests() -> list[SelftestOutcome]:
    return [test() for test in SELFTESTS]
