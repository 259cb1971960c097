"""
Exact and floating linear algebra kernels.

Rank and kernel decisions are made over the rationals with no tolerance at all. Floating point is used only for
eigenvalues and orthogonal projections, whose results are reals anyway.
"""

from __future__ import annotations

import functools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, final

import numpy as np
import numpy.typing as npt
import scipy.linalg

from graph_helmholtzian._exceptions import DimensionMismatch, NotSymmetric, VerificationFailure
from graph_helmholtzian._matrices import FloatArray, IntegerMatrix

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9


def _bareiss_rank(rows: list[list[int]]) -> int:
    a = [row[:] for row in rows]
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0

    rank = 0
    prev_pivot = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = next((r for r in range(rank, n_rows) if a[r][col] != 0), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]

        pivot = a[rank][col]
        for r in range(rank + 1, n_rows):
            factor = a[r][col]
            row = a[r]
            for c in range(col + 1, n_cols):
                # Exact by Sylvester's identity, every entry is a minor of the original matrix
                row[c] = (pivot * row[c] - factor * a[rank][c]) // prev_pivot
            row[col] = 0
        prev_pivot = pivot
        rank += 1

    return rank


def exact_rank(M: IntegerMatrix) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination on arbitrary precision ints."""
    rows, cols = M.shape
    # Eliminating along the shorter side is cheaper and gives the same rank
    rank = _bareiss_rank(M.to_rows() if rows <= cols else M.T.to_rows())
    logger.debug("Exact rank of %sx%s matrix is %d", rows, cols, rank)
    return rank


@final
@dataclass(frozen=True)
class RationalVectorBasis:
    """Linearly independent rational vectors of common ``length``."""

    vectors: tuple[tuple[Fraction, ...], ...]
    length: int

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def to_strings(self) -> list[list[str]]:
        """Entries rendered as ``"p/q"``, never as floats."""
        return [[f"{x.numerator}/{x.denominator}" for x in vec] for vec in self.vectors]

    def to_float(self) -> FloatArray:
        return np.array([[float(x) for x in vec] for vec in self.vectors], dtype=np.float64).reshape(
            self.dimension, self.length
        )

    def primitive(self) -> list[list[int]]:
        """Each vector scaled to coprime integers, first nonzero entry positive."""
        res = []
        for vec in self.vectors:
            scale = functools.reduce(math.lcm, (x.denominator for x in vec), 1)
            ints = [int(x * scale) for x in vec]
            common = functools.reduce(math.gcd, ints, 0) or 1
            lead = next((x for x in ints if x != 0), 1)
            sign = 1 if lead > 0 else -1
            res.append([sign * x // common for x in ints])
        return res


def _rref(rows: list[list[int]], n_cols: int) -> tuple[list[list[Fraction]], list[int]]:
    a = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r == len(a):
            break
        pivot_row = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][col]
        a[r] = [x / pivot for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    return a[:r], pivots


def kernel_basis(M: IntegerMatrix) -> RationalVectorBasis:
    """
    Basis of ``{x : M x = 0}`` over the rationals, one vector per free column of the reduced row echelon form.

    Every vector is checked by exact substitution before being returned.
    """
    n_rows, n_cols = M.shape
    rows = M.to_rows()
    reduced, pivots = _rref(rows, n_cols)
    pivot_set = set(pivots)

    vectors = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * n_cols
        vec[free] = Fraction(1)
        for row, pivot_col in zip(reduced, pivots):
            vec[pivot_col] = -row[free]
        vectors.append(tuple(vec))

    for vec in vectors:
        for i, row in enumerate(rows):
            if sum((Fraction(x) * y for x, y in zip(row, vec)), Fraction(0)) != 0:
                raise VerificationFailure("kernel-substitution", f"row {i} of the {n_rows}x{n_cols} matrix")
    if len(vectors) != n_cols - len(pivots):
        raise VerificationFailure("kernel-dimension", f"{len(vectors)} vectors for nullity {n_cols - len(pivots)}")

    return RationalVectorBasis(tuple(vectors), n_cols)


def near_zero_count(eigenvalues: npt.NDArray[np.float64], tol: float = DEFAULT_TOL) -> int:
    """Number of eigenvalues below ``tol * max(1, spectral radius)`` in absolute value."""
    if len(eigenvalues) == 0:
        return 0
    radius = float(np.max(np.abs(eigenvalues)))
    return int(np.count_nonzero(np.abs(eigenvalues) <= tol * max(1.0, radius)))


def symmetric_eigenvalues(M: IntegerMatrix, tol: float = DEFAULT_TOL) -> FloatArray:
    """
    All eigenvalues of a symmetric integer matrix in ascending order. Values within ``tol * max(1, radius)`` of
    zero are reported as exactly ``0.0``, this affects reporting only and never a rank decision.
    """
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
    if not M.is_symmetric():
        raise NotSymmetric(M.shape)
    if M.shape[0] == 0:
        return np.zeros(0, dtype=np.float64)

    eigenvalues = np.sort(scipy.linalg.eigvalsh(M.to_float()))
    radius = float(np.max(np.abs(eigenvalues)))
    eigenvalues[np.abs(eigenvalues) <= tol * max(1.0, radius)] = 0.0
    return np.asarray(eigenvalues, dtype=np.float64)


@final
@dataclass(frozen=True, eq=False)
class LeastSquaresResult:
    coefficients: FloatArray
    projection: FloatArray
    residual: FloatArray


def least_squares_project(M: IntegerMatrix, f: Sequence[float] | FloatArray) -> LeastSquaresResult:
    """
    Orthogonal projection of ``f`` onto the column space of ``M``. On rank deficiency the minimum-norm
    coefficients are returned.
    """
    rhs = np.asarray(f, dtype=np.float64)
    n_rows, n_cols = M.shape
    if rhs.shape != (n_rows,):
        raise DimensionMismatch("least-squares right-hand side length", n_rows, rhs.shape[0] if rhs.ndim else 0)

    if n_rows == 0 or n_cols == 0 or M.nnz == 0:
        coefficients = np.zeros(n_cols, dtype=np.float64)
    else:
        # Singular values below the cutoff are round-off from dependent columns and are treated as zero
        cond = np.finfo(np.float64).eps * max(n_rows, n_cols)
        coefficients, *_ = scipy.linalg.lstsq(M.to_float(), rhs, cond=cond, lapack_driver="gelsd")
    projection = np.asarray(M @ coefficients, dtype=np.float64).reshape(n_rows)
    return LeastSquaresResult(np.asarray(coefficients, dtype=np.float64), projection, rhs - projection)
