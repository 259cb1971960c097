"""
``helm`` command line front end.

Every subcommand reads one edge-list file (``-`` for standard input) and writes one document to standard output.
Exit status is 0 on success, 1 on an input or usage error and 2 when two independent computations disagree or a
self-test fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from dataclasses import dataclass
from typing import IO, Literal, Mapping, NoReturn, Sequence, TypeAlias, final, get_args

import numpy as np
from typing_extensions import assert_never

from graph_helmholtzian._complex import (
    Graph,
    OrientedComplex,
    complex_to_json,
    component_count,
    from_edge_list,
    to_edge_list,
    triangle_degree,
)
from graph_helmholtzian._exceptions import Error, GraphError, InputError, UsageError, VerificationFailure
from graph_helmholtzian._fixtures import run_selftests
from graph_helmholtzian._generators import FAMILIES, Family, generate, random_orientation
from graph_helmholtzian._helmholtzian import Method, assemble
from graph_helmholtzian._hodge import (
    helmholtz_decompose,
    nullity_exact,
    rank_flows,
    structural_nullity_checks,
    triangle_count_predicted,
)
from graph_helmholtzian._incidence import build_B, build_C
from graph_helmholtzian._linalg import DEFAULT_TOL, exact_rank, kernel_basis, near_zero_count, symmetric_eigenvalues
from graph_helmholtzian._matrices import IntegerMatrix

logger = logging.getLogger(__name__)

Subcommand: TypeAlias = Literal[
    "info",
    "incidence",
    "helmholtzian",
    "nullity",
    "spectrum",
    "kernel",
    "decompose",
    "rank",
    "triangles",
    "selftest",
    "generate",
    "complex",
    "checks",
]
OutputFormat: TypeAlias = Literal["json", "matrixmarket", "table"]
LogLevel: TypeAlias = Literal["DEBUG", "INFO", "WARNING", "ERROR"]

SEED_ENV_VAR = "HELM_SEED"
STDIN_MARKER = "-"

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VERIFICATION_FAILURE = 2

MATRIX_SUBCOMMANDS: frozenset[Subcommand] = frozenset({"incidence", "helmholtzian"})
FLOW_SUBCOMMANDS: frozenset[Subcommand] = frozenset({"decompose", "rank"})
METHOD_SUBCOMMANDS: frozenset[Subcommand] = frozenset({"helmholtzian", "spectrum", "kernel"})
# Every other family accepts any positive size
MIN_FAMILY_SIZE: Mapping[Family, int] = {"cycle": 3}
GRAPH_SUBCOMMANDS: tuple[tuple[Subcommand, str], ...] = (
    ("info", "vertex, edge, triangle and component counts with triangle degrees"),
    ("incidence", "edge-vertex matrix B and triangle-edge matrix C"),
    ("helmholtzian", "the Helmholtzian H = B B^T + C^T C"),
    ("nullity", "exact nullity of H next to its closed-form prediction"),
    ("spectrum", "eigenvalues of H in ascending order"),
    ("kernel", "exact rational basis of the harmonic flows"),
    ("decompose", "gradient, harmonic and curl parts of an edge flow"),
    ("rank", "least-squares vertex scores of an edge flow"),
    ("triangles", "enumerated triangles and the count recovered from the nullity"),
    ("complex", "canonical JSON document of the oriented clique complex"),
    ("checks", "nullity before and after pendant deletions, contractions and subdivisions"),
)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message, self.format_usage())


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=get_args(OutputFormat), default="json", help="output format")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="relative zero tolerance for eigenvalues")
    common.add_argument("--seed", type=int, default=None, help=f"random seed, falls back to ${SEED_ENV_VAR}")
    common.add_argument("--log-level", choices=get_args(LogLevel), default="WARNING")

    parser = _Parser(prog="helm", description="Graph Helmholtzian toolkit.")
    subparsers = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    for name, help_ in GRAPH_SUBCOMMANDS:
        sub = subparsers.add_parser(name, parents=[common], help=help_)
        sub.add_argument("graph", help=f"edge-list file, `{STDIN_MARKER}` for standard input")
        if name in FLOW_SUBCOMMANDS:
            sub.add_argument("flow", help="one real per line in edge order, measured along the stored orientation")
        if name in METHOD_SUBCOMMANDS:
            sub.add_argument("--method", choices=get_args(Method), default="entrywise", help="assembly path of H")

    subparsers.add_parser("selftest", parents=[common], help="reproduce the reference fixtures exactly")

    gen = subparsers.add_parser("generate", parents=[common], help="emit an edge list of a graph family")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("size", type=int, help="number of vertices")
    gen.add_argument("--p", type=float, default=0.5, help="edge probability of the gnp family")
    gen.add_argument("--first", type=int, default=1, help="smallest vertex id")
    gen.add_argument("--random-orientation", action="store_true", help="flip every edge with probability 1/2")

    return parser


def _seed_from_env(environ: Mapping[str, str]) -> int | None:
    raw = environ.get(SEED_ENV_VAR, "").strip()
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None


@final
@dataclass(frozen=True)
class CommandInvocation:
    subcommand: Subcommand
    graph: str | None = None
    flow: str | None = None
    format: OutputFormat = "json"
    method: Method = "entrywise"
    tol: float = DEFAULT_TOL
    seed: int | None = None
    log_level: LogLevel = "WARNING"
    family: Family | None = None
    size: int = 0
    p: float = 0.5
    first: int = 1
    random_orientation: bool = False

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise UsageError(f"--tol must be positive, got {self.tol}")
        if self.seed is not None and self.seed < 0:
            raise UsageError(f"seed must be non-negative, got {self.seed}")
        if self.format == "matrixmarket" and self.subcommand not in MATRIX_SUBCOMMANDS:
            raise UsageError(f"{self.subcommand} has no matrix output, use --format json or table")
        if self.graph == STDIN_MARKER and self.flow == STDIN_MARKER:
            raise UsageError("graph and flow can't both come from standard input")
        if self.subcommand == "generate":
            smallest = MIN_FAMILY_SIZE.get(self.family, 1) if self.family is not None else 1
            if self.size < smallest:
                raise UsageError(f"{self.family} needs size at least {smallest}, got {self.size}")
            if not 0.0 <= self.p <= 1.0:
                raise UsageError(f"--p must lie in [0, 1], got {self.p}")
            if self.first < 0:
                raise UsageError(f"--first must be non-negative, got {self.first}")

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace, environ: Mapping[str, str]) -> CommandInvocation:
        args = vars(ns)
        seed = args["seed"] if args["seed"] is not None else _seed_from_env(environ)
        return cls(
            subcommand=args["subcommand"],
            graph=args.get("graph"),
            flow=args.get("flow"),
            format=args["format"],
            method=args.get("method", "entrywise"),
            tol=args["tol"],
            seed=seed,
            log_level=args["log_level"],
            family=args.get("family"),
            size=args.get("size", 0),
            p=args.get("p", 0.5),
            first=args.get("first", 1),
            random_orientation=args.get("random_orientation", False),
        )


def parse_invocation(argv: Sequence[str], environ: Mapping[str, str] | None = None) -> CommandInvocation:
    ns = build_parser().parse_args(list(argv))
    return CommandInvocation.from_namespace(ns, os.environ if environ is None else environ)


def _read_text(source: str, stdin: IO[str]) -> str:
    try:
        if source == STDIN_MARKER:
            return stdin.read()
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except UnicodeDecodeError as exc:
        raise InputError(source, f"not valid UTF-8: byte {exc.object[exc.start]:#04x} at offset {exc.start}") from exc
    except OSError as exc:
        raise InputError(source, exc.strerror or str(exc)) from exc


def load_graph(source: str, stdin: IO[str]) -> Graph:
    text = _read_text(source, stdin)
    try:
        return from_edge_list(text.splitlines())
    except GraphError as exc:
        raise InputError(source, str(exc)) from exc


def parse_flow(text: str, source: str) -> list[float]:
    """One real per line, blank lines and ``#`` comments skipped."""
    values = []
    for record, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            value = float(line)
        except ValueError:
            raise InputError(source, f"record {record}: expected one real number: {line!r}") from None
        if not math.isfinite(value):
            raise InputError(source, f"record {record}: value is not finite: {line!r}")
        values.append(value)
    return values


def load_flow(source: str, stdin: IO[str], edge_count: int) -> list[float]:
    values = parse_flow(_read_text(source, stdin), source)
    if len(values) != edge_count:
        raise InputError(source, f"{len(values)} flow values for a graph with {edge_count} edges")
    return values


def _render_matrix(M: IntegerMatrix) -> str:
    rows = M.to_rows()
    width = max((len(str(x)) for row in rows for x in row), default=1)
    return "".join(" ".join(str(x).rjust(width) for x in row) + "\n" for row in rows)


def _render_table(doc: Mapping[str, object]) -> str:
    width = max((len(key) for key in doc), default=0)
    return "".join(
        f"{key.ljust(width)}  {value if isinstance(value, str) else json.dumps(value)}\n" for key, value in doc.items()
    )


def _emit(out: IO[str], fmt: OutputFormat, doc: Mapping[str, object]) -> None:
    match fmt:
        case "json":
            out.write(json.dumps(doc, indent=2) + "\n")
        case "table":
            out.write(_render_table(doc))
        case "matrixmarket":
            raise UsageError("no matrix to emit in Matrix Market format")
        case _:
            assert_never(fmt)


def _incidence(c: OrientedComplex, inv: CommandInvocation, out: IO[str]) -> None:
    B, C = build_B(c), build_C(c)
    match inv.format:
        case "json":
            _emit(out, "json", {"B": B.to_json_rows(), "C": C.to_json_rows()})
        case "matrixmarket":
            out.write(B.to_matrix_market(comment="B edge-vertex incidence"))
            out.write(C.to_matrix_market(comment="C triangle-edge incidence"))
        case "table":
            out.write("B\n" + _render_matrix(B) + "C\n" + _render_matrix(C))
        case _:
            assert_never(inv.format)


def _helmholtzian(c: OrientedComplex, inv: CommandInvocation, out: IO[str]) -> None:
    # Raises VerificationFailure on any mismatch when the method is "verify"
    H = assemble(c, inv.method)
    notes = [f"provenance: {H.provenance}"]
    if inv.method == "verify":
        notes.append("equivalence: ok")

    match inv.format:
        case "json":
            doc: dict[str, object] = {"method": inv.method, "provenance": H.provenance, "H": H.matrix.to_json_rows()}
            if inv.method == "verify":
                doc["equivalence"] = "ok"
            _emit(out, "json", doc)
        case "matrixmarket":
            out.write(H.matrix.to_matrix_market(comment="\n".join(notes)))
        case "table":
            out.write(_render_matrix(H.matrix) + "".join(note + "\n" for note in notes))
        case _:
            assert_never(inv.format)


def _info(c: OrientedComplex) -> dict[str, object]:
    return {
        "n": c.vertex_count,
        "m": c.edge_count,
        "t": c.triangle_count,
        "omega": component_count(c.graph),
        "triangle_degrees": [triangle_degree(c, e) for e in range(c.edge_count)],
    }


def _spectrum(c: OrientedComplex, inv: CommandInvocation) -> dict[str, object]:
    H = assemble(c, inv.method).matrix
    eigenvalues = symmetric_eigenvalues(H, inv.tol)
    return {
        "eigenvalues": eigenvalues.tolist(),
        "near_zero": near_zero_count(eigenvalues, inv.tol),
        "eta_exact": H.shape[0] - exact_rank(H),
    }


def _kernel(c: OrientedComplex, inv: CommandInvocation) -> dict[str, object]:
    basis = kernel_basis(assemble(c, inv.method).matrix)
    return {"dimension": basis.dimension, "vectors": basis.to_strings()}


def _triangles(c: OrientedComplex) -> dict[str, object]:
    report = nullity_exact(c)
    return {
        "triangles": [list(t.vertices) for t in c.triangles],
        "t": c.triangle_count,
        "t_predicted": triangle_count_predicted(c, report),
        "rank_c": report.rank_c,
        "triangles_independent": report.triangles_independent,
    }


def _selftest(inv: CommandInvocation, out: IO[str]) -> int:
    outcomes = run_selftests()
    ok = all(outcome.passed for outcome in outcomes)
    if inv.format == "table":
        width = max(len(o.name) for o in outcomes)
        for o in outcomes:
            out.write(f"{'pass' if o.passed else 'FAIL'}  {o.name.ljust(width)}  {o.detail}\n")
    else:
        results = [{"name": o.name, "passed": o.passed, "detail": o.detail} for o in outcomes]
        _emit(out, "json", {"ok": ok, "results": results})
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILURE


def _generate(inv: CommandInvocation, out: IO[str]) -> None:
    assert inv.family is not None
    rng = np.random.default_rng(inv.seed)
    g = generate(inv.family, inv.size, rng, p=inv.p, first=inv.first)
    if inv.random_orientation:
        g = random_orientation(g, rng)
    logger.info("Generated %s graph with n=%d, m=%d", inv.family, g.vertex_count, g.edge_count)
    out.write(to_edge_list(g))


def execute(inv: CommandInvocation, out: IO[str], stdin: IO[str]) -> int:
    match inv.subcommand:
        case "selftest":
            return _selftest(inv, out)
        case "generate":
            _generate(inv, out)
            return EXIT_OK
        case _:
            pass

    assert inv.graph is not None
    c = OrientedComplex.from_graph(load_graph(inv.graph, stdin))
    logger.info("Loaded %s: n=%d, m=%d, t=%d", inv.graph, c.vertex_count, c.edge_count, c.triangle_count)

    match inv.subcommand:
        case "info":
            _emit(out, inv.format, _info(c))
        case "incidence":
            _incidence(c, inv, out)
        case "helmholtzian":
            _helmholtzian(c, inv, out)
        case "nullity":
            _emit(out, inv.format, nullity_exact(c).to_json_dict())
        case "spectrum":
            _emit(out, inv.format, _spectrum(c, inv))
        case "kernel":
            _emit(out, inv.format, _kernel(c, inv))
        case "decompose" | "rank":
            assert inv.flow is not None
            flow = load_flow(inv.flow, stdin, c.edge_count)
            result = helmholtz_decompose(c, flow) if inv.subcommand == "decompose" else rank_flows(c, flow)
            _emit(out, inv.format, result.to_json_dict())
        case "triangles":
            _emit(out, inv.format, _triangles(c))
        case "complex":
            _emit(out, inv.format, json.loads(complex_to_json(c)))
        case "checks":
            _emit(out, inv.format, structural_nullity_checks(c).to_json_dict())
        case "selftest" | "generate":
            raise AssertionError(inv.subcommand)
        case _:
            assert_never(inv.subcommand)
    return EXIT_OK


def run(
    argv: Sequence[str] | None = None,
    *,
    stdout: IO[str] | None = None,
    stderr: IO[str] | None = None,
    stdin: IO[str] | None = None,
    environ: Mapping[str, str] | None = None,
) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr

    try:
        inv = parse_invocation(sys.argv[1:] if argv is None else argv, environ)
    except UsageError as exc:
        err.write(exc.usage)
        err.write(f"helm: error: {exc}\n")
        return EXIT_INPUT_ERROR
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK

    logging.basicConfig(level=inv.log_level, stream=err, format="%(levelname)s %(name)s: %(message)s")
    try:
        return execute(inv, out, stdin if stdin is not None else sys.stdin)
    except VerificationFailure as exc:
        err.write(f"helm: verification failed: {exc}\n")
        return EXIT_VERIFICATION_FAILURE
    except Error as exc:
        err.write(f"helm: {exc}\n")
        return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run())
