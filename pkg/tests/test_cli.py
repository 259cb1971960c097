import io
import json

import pytest

from graph_helmholtzian import IntegerMatrix, UsageError, from_edge_list
from graph_helmholtzian._cli import CommandInvocation, parse_invocation, run
from graph_helmholtzian._fixtures import K4_EDGE_LIST, REFERENCE_EDGE_LIST, REFERENCE_H, SelftestOutcome
from graph_helmholtzian._helmholtzian import HelmholtzianMatrix
from tests.utils import raises_match_by_val


@pytest.fixture
def reference_path(tmp_path):
    path = tmp_path / "reference.edges"
    path.write_text(REFERENCE_EDGE_LIST)
    return str(path)


@pytest.fixture
def k4_path(tmp_path):
    path = tmp_path / "k4.edges"
    path.write_text(K4_EDGE_LIST)
    return str(path)


@pytest.fixture
def c4_path(tmp_path):
    path = tmp_path / "c4.edges"
    path.write_text("1 2\n2 3\n3 4\n1 4\n")
    return str(path)


def helm(*argv, stdin="", environ=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err, stdin=io.StringIO(stdin), environ=environ or {})
    return code, out.getvalue(), err.getvalue()


class TestInvocation:
    def test_defaults(self, reference_path):
        assert parse_invocation(["nullity", reference_path], {}) == CommandInvocation("nullity", graph=reference_path)

    def test_seed_from_environment(self):
        inv = parse_invocation(["generate", "gnp", "6"], {"HELM_SEED": "11"})

        assert inv.seed == 11
        assert parse_invocation(["generate", "gnp", "6", "--seed", "3"], {"HELM_SEED": "11"}).seed == 3

    def test_tolerance_must_be_positive(self, reference_path):
        with raises_match_by_val(UsageError("--tol must be positive, got 0.0", "")):
            parse_invocation(["spectrum", reference_path, "--tol", "0"], {})

    def test_unknown_flag(self, reference_path):
        with pytest.raises(UsageError) as exc_info:
            parse_invocation(["nullity", reference_path, "--frobnicate"], {})

        assert exc_info.value.usage.startswith("usage: helm")
        assert "--frobnicate" in str(exc_info.value)


class TestFixtureCommands:
    def test_nullity_reference(self, reference_path):
        code, out, _ = helm("nullity", reference_path)

        doc = json.loads(out)
        assert code == 0
        assert (doc["eta_exact"], doc["t"]) == (0, 2)
        assert list(doc)[:3] == ["n", "m", "t"]

    def test_nullity_k4(self, k4_path):
        code, out, _ = helm("nullity", k4_path)

        doc = json.loads(out)
        assert code == 0
        assert (doc["eta_exact"], doc["eta_predicted"], doc["triangles_independent"]) == (0, -1, False)

    def test_helmholtzian_verify(self, reference_path):
        code, out, _ = helm("helmholtzian", "--method", "verify", reference_path)

        doc = json.loads(out)
        assert code == 0
        assert doc["H"] == [list(row) for row in REFERENCE_H]
        assert doc["equivalence"] == "ok"
        assert doc["provenance"] == "verified-both"

    def test_helmholtzian_verify_table(self, reference_path):
        code, out, _ = helm("helmholtzian", "--method", "verify", "--format", "table", reference_path)

        lines = out.splitlines()
        assert code == 0
        assert [[int(x) for x in line.split()] for line in lines[:6]] == [list(row) for row in REFERENCE_H]
        assert "equivalence: ok" in lines

    def test_helmholtzian_matrix_market(self, reference_path):
        code, out, _ = helm("helmholtzian", "--method", "verify", "--format", "matrixmarket", reference_path)

        assert code == 0
        assert "equivalence: ok" in out
        assert IntegerMatrix.from_matrix_market(out) == IntegerMatrix.from_rows(REFERENCE_H)

    def test_incidence(self, reference_path):
        code, out, _ = helm("incidence", reference_path)

        doc = json.loads(out)
        assert code == 0
        assert doc["B"][0] == [-1, 1, 0, 0, 0]
        assert doc["C"] == [[0, -1, 0, 0, -1, 1], [0, 0, -1, 1, 0, -1]]

    def test_info(self, reference_path):
        code, out, _ = helm("info", reference_path)

        assert code == 0
        assert json.loads(out) == {"n": 5, "m": 6, "t": 2, "omega": 1, "triangle_degrees": [0, 1, 1, 1, 1, 2]}

    def test_info_table(self, reference_path):
        code, out, _ = helm("info", "--format", "table", reference_path)

        assert code == 0
        assert out.splitlines()[0] == "n".ljust(len("triangle_degrees")) + "  5"

    def test_spectrum(self, reference_path):
        code, out, _ = helm("spectrum", reference_path)

        doc = json.loads(out)
        assert code == 0
        assert len(doc["eigenvalues"]) == 6
        assert (doc["near_zero"], doc["eta_exact"]) == (0, 0)

    def test_kernel_as_rationals(self, c4_path):
        code, out, _ = helm("kernel", c4_path)

        assert code == 0
        assert json.loads(out) == {"dimension": 1, "vectors": [["-1/1", "-1/1", "-1/1", "1/1"]]}

    def test_triangles_k4(self, k4_path):
        code, out, _ = helm("triangles", k4_path)

        doc = json.loads(out)
        assert code == 0
        assert doc["triangles"] == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
        assert (doc["t"], doc["t_predicted"], doc["rank_c"], doc["triangles_independent"]) == (4, 3, 3, False)

    def test_graph_from_stdin(self):
        code, out, _ = helm("nullity", "-", stdin=K4_EDGE_LIST)

        assert code == 0
        assert json.loads(out)["rank_c"] == 3

    def test_complex(self, reference_path):
        code, out, _ = helm("complex", reference_path)

        assert code == 0
        assert json.loads(out)["triangles"] == [[2, 3, 4], [2, 4, 5]]

    def test_checks(self, k4_path):
        code, out, _ = helm("checks", k4_path)

        assert code == 0
        assert json.loads(out)["failures"] == 6


class TestFlowCommands:
    def test_decompose(self, c4_path, tmp_path):
        flow = tmp_path / "c4.flow"
        flow.write_text("# circulation\n1\n1\n1\n-1\n")

        code, out, _ = helm("decompose", c4_path, str(flow))

        doc = json.loads(out)
        assert code == 0
        assert doc["harmonic_part"] == pytest.approx([1.0, 1.0, 1.0, -1.0])
        assert doc["gradient_part"] == pytest.approx([0.0] * 4, abs=1e-12)

    def test_rank(self, tmp_path):
        graph = tmp_path / "p3.edges"
        graph.write_text("1 2\n2 3\n")
        flow = tmp_path / "p3.flow"
        flow.write_text("1.0\n1.0\n")

        code, out, _ = helm("rank", str(graph), str(flow))

        doc = json.loads(out)
        assert code == 0
        assert doc["potential"] == pytest.approx([-1.0, 0.0, 1.0])
        assert doc["consistency_ratio"] == pytest.approx(1.0)

    def test_flow_length_mismatch(self, c4_path, tmp_path):
        flow = tmp_path / "short.flow"
        flow.write_text("1\n2\n")

        code, _, err = helm("decompose", c4_path, str(flow))

        assert code == 1
        assert f"{flow}: 2 flow values for a graph with 4 edges" in err

    def test_malformed_flow_value(self, c4_path, tmp_path):
        flow = tmp_path / "bad.flow"
        flow.write_text("1\nabc\n1\n1\n")

        code, _, err = helm("decompose", c4_path, str(flow))

        assert code == 1
        assert f"{flow}: record 2: expected one real number" in err

    def test_non_finite_flow_value(self, c4_path, tmp_path):
        flow = tmp_path / "inf.flow"
        flow.write_text("1\ninf\n1\n1\n")

        code, _, err = helm("rank", c4_path, str(flow))

        assert code == 1
        assert "record 2: value is not finite" in err


class TestSelftest:
    def test_passes(self):
        code, out, _ = helm("selftest")

        doc = json.loads(out)
        assert code == 0
        assert doc["ok"] is True
        assert len(doc["results"]) == 7

    def test_table(self):
        code, out, _ = helm("selftest", "--format", "table")

        assert code == 0
        assert all(line.startswith("pass") for line in out.splitlines())

    def test_failure_exits_with_two(self, monkeypatch):
        monkeypatch.setattr(
            "graph_helmholtzian._cli.run_selftests",
            lambda: [SelftestOutcome("reference-B", False, "entry (0, 0) is 1, expected -1")],
        )

        code, out, _ = helm("selftest")

        assert code == 2
        assert json.loads(out)["ok"] is False


class TestGenerate:
    def test_edge_list_output(self):
        code, out, _ = helm("generate", "cycle", "4")

        assert code == 0
        assert out == "1 2\n1 4\n2 3\n3 4\n"

    def test_seed_is_deterministic(self):
        _, first, _ = helm("generate", "gnp", "9", "--seed", "5", "--random-orientation")
        _, second, _ = helm("generate", "gnp", "9", environ={"HELM_SEED": "5"}, stdin="")
        _, third, _ = helm("generate", "gnp", "9", "--random-orientation", environ={"HELM_SEED": "5"})

        assert first == third
        assert from_edge_list(second.splitlines()).vertex_count == 9

    def test_probability_range(self):
        code, _, err = helm("generate", "gnp", "5", "--p", "1.5")

        assert code == 1
        assert "--p must lie in [0, 1]" in err


class TestErrors:
    def test_missing_file(self, tmp_path):
        code, _, err = helm("nullity", str(tmp_path / "absent.edges"))

        assert code == 1
        assert "absent.edges" in err

    def test_self_loop_with_record(self, tmp_path):
        path = tmp_path / "loop.edges"
        path.write_text("1 2\n2 2\n")

        code, _, err = helm("info", str(path))

        assert code == 1
        assert err == f"helm: {path}: record 2: self-loop at vertex 2\n"

    def test_unknown_flag(self, reference_path):
        code, out, err = helm("nullity", "--frobnicate", reference_path)

        assert code == 1
        assert out == ""
        assert err.startswith("usage: helm")
        assert "helm: error: unrecognized arguments: --frobnicate" in err

    def test_missing_subcommand(self):
        code, _, err = helm()

        assert code == 1
        assert "helm: error:" in err

    def test_matrix_format_needs_a_matrix(self, reference_path):
        code, _, err = helm("nullity", "--format", "matrixmarket", reference_path)

        assert code == 1
        assert "nullity has no matrix output" in err

    def test_bad_seed_environment(self):
        code, _, err = helm("generate", "tree", "5", environ={"HELM_SEED": "abc"})

        assert code == 1
        assert "HELM_SEED must be an integer" in err

    def test_verification_failure_exits_with_two(self, reference_path, monkeypatch):
        tampered = IntegerMatrix.from_rows([[0] * 6] * 6)
        monkeypatch.setattr(
            "graph_helmholtzian._helmholtzian.assemble_entrywise",
            lambda c: HelmholtzianMatrix(tampered, "entrywise"),
        )

        code, out, err = helm("helmholtzian", "--method", "verify", reference_path)

        assert code == 2
        assert out == ""
        assert err.startswith("helm: verification failed: helmholtzian-equivalence")

    def test_help(self, capsys):
        assert run(["--help"]) == 0
        assert "usage: helm" in capsys.readouterr().out


class TestInputDecoding:
    def test_invalid_utf8_file(self, tmp_path):
        path = tmp_path / "binary.edges"
        path.write_bytes(b"1 2\n\xff\xfe 3\n")

        code, out, err = helm("nullity", str(path))

        assert code == 1
        assert out == ""
        assert err == f"helm: {path}: not valid UTF-8: byte 0xff at offset 4\n"

    def test_invalid_utf8_stdin(self):
        err = io.StringIO()
        stdin = io.TextIOWrapper(io.BytesIO(b"1 2\n\xff\n"), encoding="utf-8")

        code = run(["info", "-"], stdout=io.StringIO(), stderr=err, stdin=stdin, environ={})

        assert code == 1
        assert err.getvalue().startswith("helm: -: not valid UTF-8")

    def test_empty_graph_file(self, tmp_path):
        path = tmp_path / "empty.edges"
        path.write_text("# nothing here\n")

        code, _, err = helm("info", str(path))

        assert code == 1
        assert err == f"helm: {path}: no edge or vertex records\n"


class TestGenerateSizes:
    @pytest.mark.parametrize("size", ["1", "2"])
    def test_cycle_too_small(self, size):
        code, out, err = helm("generate", "cycle", size)

        assert code == 1
        assert out == ""
        assert f"helm: error: cycle needs size at least 3, got {size}" in err

    def test_star_needs_a_centre(self):
        code, _, err = helm("generate", "star", "0")

        assert code == 1
        assert "star needs size at least 1, got 0" in err

    def test_single_vertex_star(self):
        code, out, _ = helm("generate", "star", "1")

        assert code == 0
        assert out == "v 1\n"
