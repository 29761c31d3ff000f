"""Exact linear algebra: rational matrices and parametric kernels.

Two layers:

* plain Gaussian elimination over ``Fraction`` (rref, rank, kernel bases,
  membership tests) used everywhere a subspace question comes up;
* fraction-free (Bareiss) elimination over the polynomial ring in the formal
  parameter, used to locate every rational parameter value at which a matrix
  drops rank.  Candidates come from the rational roots of the pivot
  determinant; each candidate is then confirmed with an exact kernel
  computation at that value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .scalars import LambdaPoly, poly_gcd

Row = List[Fraction]
Matrix = List[Row]


# ---------------------------------------------------------------------------
# rational matrices
# ---------------------------------------------------------------------------


def rref(matrix: Sequence[Sequence[Fraction]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form with deterministic pivoting.

    Returns (rref matrix, pivot column list).  Pivots are chosen as the first
    nonzero entry scanning columns left to right, rows top down.
    """
    m = [list(row) for row in matrix]
    if not m:
        return [], []
    rows, cols = len(m), len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """Basis of the right kernel, one vector per free column.

    Each vector has entry 1 at its free column, making the basis canonical.
    """
    if not matrix:
        return []
    cols = len(matrix[0])
    red, pivots = rref(matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def in_row_span(matrix: Sequence[Sequence[Fraction]], vector: Sequence[Fraction]) -> bool:
    """True when ``vector`` lies in the row span of ``matrix``."""
    red, pivots = rref(matrix)
    v = list(vector)
    for r, pc in enumerate(pivots):
        if v[pc] != 0:
            f = v[pc]
            v = [a - f * b for a, b in zip(v, red[r])]
    return all(x == 0 for x in v)


class SpanBuilder:
    """Incremental row-echelon basis; used for subalgebra closures."""

    def __init__(self, width: int):
        self.width = width
        self.rows: Matrix = []
        self.pivots: List[int] = []

    def reduce(self, vector: Sequence[Fraction]) -> Row:
        v = list(vector)
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, vector: Sequence[Fraction]) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        v = self.reduce(vector)
        for p, x in enumerate(v):
            if x != 0:
                v = [a / x for a in v]
                self.rows.append(v)
                self.pivots.append(p)
                order = sorted(range(len(self.pivots)), key=lambda i: self.pivots[i])
                self.rows = [self.rows[i] for i in order]
                self.pivots = [self.pivots[i] for i in order]
                return True
        return False

    def contains(self, vector: Sequence[Fraction]) -> bool:
        return all(x == 0 for x in self.reduce(vector))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def coordinates(self, vector: Sequence[Fraction]) -> Optional[List[Fraction]]:
        """Coefficients of ``vector`` in the stored row basis, or None."""
        coeffs: List[Fraction] = []
        v = list(vector)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            coeffs.append(c)
            if c != 0:
                v = [a - c * b for a, b in zip(v, row)]
        if any(x != 0 for x in v):
            return None
        return coeffs


# ---------------------------------------------------------------------------
# parametric matrices
# ---------------------------------------------------------------------------

PMatrix = List[List[LambdaPoly]]


@dataclass
class ParamSolveResult:
    """Outcome of a parametric kernel search.

    ``solutions`` holds (parameter value, kernel basis) pairs, sorted by the
    value.  ``identically_singular`` flags a matrix whose kernel is
    nontrivial for every parameter value.  ``unresolved_factors`` lists
    pivot-determinant factors that have no rational roots but could not be
    certified nonvanishing; empty means the rational answer is complete.
    """

    solutions: List[Tuple[Fraction, List[List[Fraction]]]] = field(default_factory=list)
    identically_singular: bool = False
    unresolved_factors: List[LambdaPoly] = field(default_factory=list)

    @property
    def lambdas(self) -> List[Fraction]:
        return [lam for lam, _ in self.solutions]


def evaluate_matrix(M: PMatrix, x: Fraction) -> Matrix:
    return [[entry(x) for entry in row] for row in M]


def _bareiss_rank(M: PMatrix) -> Tuple[int, LambdaPoly, List[int]]:
    """Generic rank over the parameter field, by fraction-free elimination.

    Returns (rank, pivot determinant, pivot row indices).  The determinant is
    that of the square submatrix on the pivot rows/columns; the rank can drop
    at a parameter value only where this polynomial vanishes.
    """
    A = [list(row) for row in M]
    if not A:
        return 0, LambdaPoly.const(1), []
    rows, cols = len(A), len(A[0])
    prev = LambdaPoly.const(1)
    pivot_rows: List[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pivot = None
        best = None
        for i in range(r, rows):
            e = A[i][c]
            if not e.is_zero():
                if best is None or e.degree < best:
                    pivot, best = i, e.degree
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                num = A[r][c] * A[i][j] - A[i][c] * A[r][j]
                A[i][j] = num.exact_div(prev)
            A[i][c] = LambdaPoly()
        prev = A[r][c]
        pivot_rows.append(r)
        r += 1
    return r, prev, pivot_rows


def param_solve(M: PMatrix, extra_minor_budget: int = 64) -> ParamSolveResult:
    """Every rational parameter value with a nontrivial kernel, with bases.

    Method: fraction-free elimination gives the generic rank and a pivot
    determinant; rational-root extraction on that determinant gives the
    candidate values; an exact kernel at each candidate confirms or rejects
    it.  When the determinant keeps factors without rational roots, further
    maximal minors are combined by gcd to certify (when possible) that no
    parameter value at all makes those factors relevant.
    """
    result = ParamSolveResult()
    if not M or not M[0]:
        result.identically_singular = bool(M and not M[0]) or not M
        return result
    ncols = len(M[0])
    generic_rank, pivot_det, _ = _bareiss_rank(M)
    if generic_rank < ncols:
        result.identically_singular = True
        return result
    candidates = pivot_det.rational_roots()
    for lam in candidates:
        K = kernel_basis(evaluate_matrix(M, lam))
        if K:
            result.solutions.append((lam, K))
    result.solutions.sort(key=lambda t: t[0])
    residual = pivot_det.deflate_rational_roots()
    if residual.degree > 0:
        residual = _certify_minors(M, residual, extra_minor_budget)
        if residual.degree > 0:
            result.unresolved_factors.append(residual)
    return result


def _certify_minors(M: PMatrix, residual: LambdaPoly, budget: int) -> LambdaPoly:
    """Shrink a residual factor by gcd with other maximal minors.

    The kernel is nontrivial at a parameter value only if every maximal
    minor vanishes there, so a gcd reaching a constant certifies that the
    residual factor contributes no solutions.
    """
    import itertools

    nrows = len(M)
    ncols = len(M[0])
    count = 0
    for combo in itertools.combinations(range(nrows), ncols):
        sub = [M[i] for i in combo]
        r, det, _ = _bareiss_rank(sub)
        if r < ncols:
            continue
        residual = poly_gcd(residual, det)
        if residual.degree <= 0:
            return LambdaPoly.const(1)
        count += 1
        if count >= budget:
            break
    return residual


def param_root_scan(p: LambdaPoly) -> List[Fraction]:
    """All rational roots of a nonzero parameter polynomial."""
    return p.rational_roots()
