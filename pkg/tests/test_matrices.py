import numpy as np
import pytest

from graph_helmholtzian import DimensionMismatch, IntegerMatrix, vstack
from graph_helmholtzian._matrices import choose_layout
from tests.utils import raises_match_by_val

SAMPLE = ((1, 0, -2), (0, 3, 0))


class TestLayout:
    def test_choose_layout(self):
        assert choose_layout(0, (0, 0)) == "dense"
        assert choose_layout(1, (2, 2)) == "dense"
        assert choose_layout(2, (10, 10)) == "sparse"

    def test_equality_ignores_layout(self):
        dense = IntegerMatrix.from_rows(SAMPLE)
        sparse_ = dense.relayout("sparse")

        assert dense.layout == "dense"
        assert sparse_.layout == "sparse"
        assert dense == sparse_
        assert sparse_.to_rows() == [[1, 0, -2], [0, 3, 0]]

    def test_to_dense_returns_a_copy(self):
        m = IntegerMatrix(np.eye(2, dtype=np.int64))

        dense = m.to_dense()
        dense[0, 0] = 7

        assert m.to_rows() == [[1, 0], [0, 1]]

    def test_unhashable(self):
        with pytest.raises(TypeError):
            hash(IntegerMatrix.from_rows(SAMPLE))


class TestConstruction:
    def test_from_entries_sums_duplicates(self):
        m = IntegerMatrix.from_entries([0, 0, 1], [1, 1, 0], [2, -2, 5], (2, 2))

        assert m.to_rows() == [[0, 0], [5, 0]]
        assert m.nnz == 1

    def test_empty_rows_keep_column_count(self):
        assert IntegerMatrix.from_rows([], cols=4).shape == (0, 4)

    def test_rejects_vectors(self):
        with pytest.raises(ValueError):
            IntegerMatrix(np.arange(3))


class TestArithmetic:
    def test_product_and_transpose(self):
        m = IntegerMatrix.from_rows(SAMPLE)

        assert (m @ m.T).to_rows() == [[5, 0], [0, 9]]
        assert (m.T @ m).is_symmetric()

    def test_product_dimension_mismatch(self):
        m = IntegerMatrix.from_rows(SAMPLE)

        with raises_match_by_val(DimensionMismatch("matrix product inner dimension", 3, 2)):
            m @ m

    def test_vector_product(self):
        m = IntegerMatrix.from_rows(SAMPLE).relayout("sparse")

        assert np.allclose(m @ np.array([1.0, 1.0, 0.5]), [0.0, 3.0])

    def test_sum(self):
        m = IntegerMatrix.from_rows(SAMPLE)

        assert (m + m).to_rows() == [[2, 0, -4], [0, 6, 0]]

    def test_sum_shape_mismatch(self):
        with raises_match_by_val(DimensionMismatch("matrix sum", (2, 3), (3, 2))):
            IntegerMatrix.from_rows(SAMPLE) + IntegerMatrix.from_rows(SAMPLE).T

    def test_vstack(self):
        top = IntegerMatrix.from_rows([[1, 2]])
        bottom = IntegerMatrix.from_rows([[3, 4], [5, 6]]).relayout("sparse")

        assert vstack(top, bottom).to_rows() == [[1, 2], [3, 4], [5, 6]]

    def test_vstack_column_mismatch(self):
        with raises_match_by_val(DimensionMismatch("stacked column count", 2, 3)):
            vstack(IntegerMatrix.from_rows([[1, 2]]), IntegerMatrix.from_rows(SAMPLE))


class TestFirstDifference:
    def test_equal(self):
        assert IntegerMatrix.from_rows(SAMPLE).first_difference(IntegerMatrix.from_rows(SAMPLE)) is None

    def test_row_major_order(self):
        other = IntegerMatrix.from_rows([[1, 0, -2], [7, 3, 1]])

        assert IntegerMatrix.from_rows(SAMPLE).first_difference(other) == (1, 0, 0, 7)

    def test_shape_mismatch(self):
        assert IntegerMatrix.from_rows(SAMPLE).first_difference(IntegerMatrix.from_rows([[1]])) == (-1, -1, 0, 0)


class TestExport:
    def test_matrix_market_is_integer_coordinate(self):
        text = IntegerMatrix.from_rows(SAMPLE).to_matrix_market(comment="sample")

        assert text.startswith("%%MatrixMarket matrix coordinate integer general")
        assert "%sample" in text.replace(" ", "")
        assert IntegerMatrix.from_matrix_market(text) == IntegerMatrix.from_rows(SAMPLE)

    def test_json_rows(self):
        assert IntegerMatrix.from_rows(SAMPLE).to_json_rows() == [[1, 0, -2], [0, 3, 0]]
