from __future__ import annotations

import io
import logging
from typing import Literal, Sequence, TypeAlias, final, overload

import numpy as np
import numpy.typing as npt
import scipy.io
from scipy import sparse

from graph_helmholtzian._exceptions import DimensionMismatch

logger = logging.getLogger(__name__)

Layout: TypeAlias = Literal["dense", "sparse"]

# Matrices at or above this share of nonzeros are kept dense
DENSE_DENSITY_THRESHOLD = 0.25

IntArray: TypeAlias = npt.NDArray[np.int64]
FloatArray: TypeAlias = npt.NDArray[np.float64]


def choose_layout(nnz: int, shape: tuple[int, int]) -> Layout:
    size = shape[0] * shape[1]
    if size == 0 or nnz / size >= DENSE_DENSITY_THRESHOLD:
        return "dense"
    return "sparse"


@final
class IntegerMatrix:
    """
    Immutable integer matrix stored either as a dense ``int64`` array or as a CSR array.

    Equality is exact and entrywise and does not depend on the layout.
    """

    __slots__ = ("_data",)

    def __init__(self, data: IntArray | sparse.csr_array, /) -> None:
        if isinstance(data, np.ndarray):
            if data.ndim != 2:
                raise ValueError(f"2-d array expected, got {data.ndim}-d")
            data = data.astype(np.int64, copy=True)
            data.setflags(write=False)
        else:
            data = sparse.csr_array(data, dtype=np.int64)
            data.sum_duplicates()
            data.eliminate_zeros()
        self._data: IntArray | sparse.csr_array = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], /, *, cols: int | None = None) -> IntegerMatrix:
        if not rows:
            return cls(np.zeros((0, cols or 0), dtype=np.int64))
        return cls(np.array(rows, dtype=np.int64))

    @classmethod
    def from_entries(
        cls,
        rows: npt.ArrayLike,
        cols: npt.ArrayLike,
        vals: npt.ArrayLike,
        shape: tuple[int, int],
        /,
        *,
        layout: Layout | None = None,
    ) -> IntegerMatrix:
        """Duplicate ``(row, col)`` entries are summed."""
        coo = sparse.coo_array(
            (np.asarray(vals, dtype=np.int64), (np.asarray(rows, dtype=np.intp), np.asarray(cols, dtype=np.intp))),
            shape=shape,
        )
        csr = sparse.csr_array(coo)
        csr.sum_duplicates()
        csr.eliminate_zeros()
        if layout is None:
            layout = choose_layout(csr.nnz, shape)
        logger.debug("Assembled %sx%s integer matrix as %s", shape[0], shape[1], layout)
        return cls(csr.toarray()) if layout == "dense" else cls(csr)

    @classmethod
    def from_matrix_market(cls, text: str, /) -> IntegerMatrix:
        data = scipy.io.mmread(io.BytesIO(text.encode()))
        if isinstance(data, np.ndarray):
            return cls(np.asarray(data, dtype=np.int64))
        return cls(sparse.csr_array(data, dtype=np.int64))

    @property
    def shape(self) -> tuple[int, int]:
        rows, cols = self._data.shape
        return int(rows), int(cols)

    @property
    def layout(self) -> Layout:
        return "dense" if isinstance(self._data, np.ndarray) else "sparse"

    @property
    def nnz(self) -> int:
        if isinstance(self._data, np.ndarray):
            return int(np.count_nonzero(self._data))
        return int(self._data.nnz)

    def to_dense(self) -> IntArray:
        if isinstance(self._data, np.ndarray):
            return self._data.copy()
        return np.asarray(self._data.toarray(), dtype=np.int64)

    def to_sparse(self) -> sparse.csr_array:
        if isinstance(self._data, np.ndarray):
            return sparse.csr_array(self._data)
        return self._data.copy()

    def to_rows(self) -> list[list[int]]:
        """Entries as Python ints, safe to feed into arbitrary precision arithmetic."""
        rows: list[list[int]] = self.to_dense().tolist()
        return rows

    def to_float(self) -> FloatArray:
        return self.to_dense().astype(np.float64)

    def relayout(self, layout: Layout) -> IntegerMatrix:
        if layout == self.layout:
            return self
        return IntegerMatrix(self.to_dense()) if layout == "dense" else IntegerMatrix(self.to_sparse())

    @property
    def T(self) -> IntegerMatrix:
        if isinstance(self._data, np.ndarray):
            return IntegerMatrix(self._data.T)
        return IntegerMatrix(sparse.csr_array(self._data.T))

    @overload
    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        ...

    @overload
    def __matmul__(self, other: npt.NDArray[np.generic]) -> npt.NDArray[np.generic]:
        ...

    def __matmul__(self, other: IntegerMatrix | npt.NDArray[np.generic]) -> IntegerMatrix | npt.NDArray[np.generic]:
        if isinstance(other, IntegerMatrix):
            if self.shape[1] != other.shape[0]:
                raise DimensionMismatch("matrix product inner dimension", self.shape[1], other.shape[0])
            product = sparse.csr_array(self.to_sparse() @ other.to_sparse())
            return IntegerMatrix.from_entries(*_coo_triplets(product), (self.shape[0], other.shape[1]))

        if other.shape[0] != self.shape[1]:
            raise DimensionMismatch("matrix-vector product", self.shape[1], other.shape[0])
        return np.asarray(self._data @ other)

    def __add__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch("matrix sum", self.shape, other.shape)
        total = sparse.csr_array(self.to_sparse() + other.to_sparse())
        return IntegerMatrix.from_entries(*_coo_triplets(total), self.shape)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None  # type: ignore[assignment]

    def first_difference(self, other: IntegerMatrix, /) -> tuple[int, int, int, int] | None:
        """
        First ``(row, col, self_entry, other_entry)`` in row-major order where the matrices differ.

        Matrices of different shapes differ at ``(-1, -1, 0, 0)``.
        """
        if self.shape != other.shape:
            return -1, -1, 0, 0
        mine, theirs = self.to_dense(), other.to_dense()
        diff = np.argwhere(mine != theirs)
        if len(diff) == 0:
            return None
        r, c = (int(x) for x in diff[0])
        return r, c, int(mine[r, c]), int(theirs[r, c])

    def is_symmetric(self) -> bool:
        rows, cols = self.shape
        return rows == cols and self.first_difference(self.T) is None

    def __repr__(self) -> str:
        return f"<IntegerMatrix shape={self.shape} layout={self.layout} nnz={self.nnz}>"

    def to_matrix_market(self, *, comment: str = "") -> str:
        buf = io.BytesIO()
        scipy.io.mmwrite(buf, sparse.coo_array(self.to_sparse()), comment=comment, field="integer", symmetry="general")
        return buf.getvalue().decode()

    def to_json_rows(self) -> list[list[int]]:
        return self.to_rows()


def _coo_triplets(m: sparse.csr_array) -> tuple[IntArray, IntArray, IntArray]:
    coo = sparse.coo_array(m)
    return (
        np.asarray(coo.row, dtype=np.int64),
        np.asarray(coo.col, dtype=np.int64),
        np.asarray(coo.data, dtype=np.int64),
    )


def vstack(top: IntegerMatrix, bottom: IntegerMatrix, /) -> IntegerMatrix:
    if top.shape[1] != bottom.shape[1]:
        raise DimensionMismatch("stacked column count", top.shape[1], bottom.shape[1])
    top_rows, top_cols, top_vals = _coo_triplets(top.to_sparse())
    bottom_rows, bottom_cols, bottom_vals = _coo_triplets(bottom.to_sparse())
    return IntegerMatrix.from_entries(
        np.concatenate([top_rows, bottom_rows + top.shape[0]]),
        np.concatenate([top_cols, bottom_cols]),
        np.concatenate([top_vals, bottom_vals]),
        (top.shape[0] + bottom.shape[0], top.shape[1]),
    )
