"""Dense exact linear algebra over Q and F_p.

The ``Matrix`` class is the universal carrier for representation matrices,
stacked action maps, Jacobians and kernels.  Entries are int64 residues for
a prime field and ``Fraction`` objects for the rationals.  Elimination over
F_p goes through the selected kernel backend; elimination over Q is
fraction-free (Bareiss) on cleared-denominator integer rows, with a final
exact normalization pass to reduced row echelon form.  Pivoting is always
first-nonzero in column order, so every result is deterministic.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from math import gcd

import numpy as np

from .fields import PrimeField, RandomSource
from .kernels import matmul_mod, rref_mod

__all__ = [
    "Matrix",
    "NoSolution",
    "NonUnique",
    "NO_SOLUTION",
    "NON_UNIQUE",
    "rank",
    "kernel_basis",
    "solve",
    "associative_closure",
    "commutant_dimension",
    "SpanBuilder",
    "coordinates_in_span",
    "random_matrix",
    "random_vector",
]


class NoSolution:
    """Marker: the linear system has no solution."""

    def __repr__(self):
        return "NoSolution"


class NonUnique:
    """Marker: the system is consistent but the kernel is nontrivial."""

    def __repr__(self):
        return "NonUnique"


NO_SOLUTION = NoSolution()
NON_UNIQUE = NonUnique()


def _is_gf(field) -> bool:
    return isinstance(field, PrimeField)


def _coerce_array(field, data) -> np.ndarray:
    """Build the canonical entry array for ``field`` from nested lists/arrays."""
    if _is_gf(field):
        arr = np.asarray(data)
        if arr.dtype == object:
            flat = [field.scalar(x) for x in arr.ravel()]
            arr = np.array(flat, dtype=np.int64).reshape(arr.shape)
        return np.array(arr, dtype=np.int64, order="C") % field.p
    arr = np.empty(np.shape(data), dtype=object)
    flat = arr.reshape(-1)
    src = np.asarray(data, dtype=object).reshape(-1)
    for i, x in enumerate(src):
        flat[i] = Fraction(x)
    return arr


class Matrix:
    """Immutable dense matrix over one field.

    All entries share the field; arithmetic is exact.  Instances cache their
    reduced row echelon form, so rank/kernel/solve reuse one elimination.
    """

    __slots__ = ("field", "rows", "cols", "data", "_rref")

    def __init__(self, field, data, _raw: np.ndarray | None = None):
        self.field = field
        if _raw is not None:
            arr = _raw
        else:
            arr = _coerce_array(field, data)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-d, got shape {arr.shape}")
        arr.flags.writeable = False
        self.data = arr
        self.rows, self.cols = arr.shape
        self._rref = None

    # -- construction -----------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        if _is_gf(field):
            return cls(field, None, _raw=np.zeros((rows, cols), dtype=np.int64))
        arr = np.empty((rows, cols), dtype=object)
        arr[:] = Fraction(0)
        return cls(field, None, _raw=arr)

    @classmethod
    def identity(cls, field, n):
        if _is_gf(field):
            return cls(field, None, _raw=np.eye(n, dtype=np.int64))
        arr = np.empty((n, n), dtype=object)
        arr[:] = Fraction(0)
        for i in range(n):
            arr[i, i] = Fraction(1)
        return cls(field, None, _raw=arr)

    @classmethod
    def from_rows(cls, field, rows):
        return cls(field, rows)

    @classmethod
    def vstack(cls, mats):
        field = mats[0].field
        return cls(field, None, _raw=np.vstack([m.data for m in mats]))

    @classmethod
    def hstack(cls, mats):
        field = mats[0].field
        return cls(field, None, _raw=np.hstack([m.data for m in mats]))

    @classmethod
    def column(cls, field, vec):
        arr = _coerce_vector(field, vec)
        return cls(field, None, _raw=arr.reshape(-1, 1).copy())

    # -- arithmetic --------------------------------------------------------

    def _wrap(self, arr):
        return Matrix(self.field, None, _raw=arr)

    def __add__(self, other):
        self._check_compatible(other)
        if _is_gf(self.field):
            return self._wrap((self.data + other.data) % self.field.p)
        return self._wrap(self.data + other.data)

    def __sub__(self, other):
        self._check_compatible(other)
        if _is_gf(self.field):
            return self._wrap((self.data - other.data) % self.field.p)
        return self._wrap(self.data - other.data)

    def __neg__(self):
        if _is_gf(self.field):
            return self._wrap((-self.data) % self.field.p)
        return self._wrap(-self.data)

    def __matmul__(self, other):
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if _is_gf(self.field):
            return self._wrap(matmul_mod(self.data, other.data, self.field.p))
        return self._wrap(np.dot(self.data, other.data))

    def scale(self, c):
        c = self.field.scalar(c)
        if _is_gf(self.field):
            return self._wrap(self.data * c % self.field.p)
        return self._wrap(self.data * c)

    def apply(self, vec) -> np.ndarray:
        """Matrix-vector product, returning a 1-d entry array."""
        v = _coerce_vector(self.field, vec)
        if _is_gf(self.field):
            return matmul_mod(self.data, v.reshape(-1, 1), self.field.p).reshape(-1)
        return np.dot(self.data, v)

    @property
    def T(self):
        return self._wrap(np.ascontiguousarray(self.data.T))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self):
        raise TypeError("Matrix is not hashable")

    def is_zero(self) -> bool:
        if _is_gf(self.field):
            return not self.data.any()
        return all(x == 0 for x in self.data.reshape(-1))

    def entry(self, i, j):
        return self.data[i, j]

    def row(self, i) -> np.ndarray:
        return self.data[i].copy()

    def col(self, j) -> np.ndarray:
        return self.data[:, j].copy()

    def flatten(self) -> np.ndarray:
        return self.data.reshape(-1).copy()

    def submatrix(self, row_idx, col_idx):
        return self._wrap(np.ascontiguousarray(self.data[np.ix_(row_idx, col_idx)]))

    def to_lists(self):
        if _is_gf(self.field):
            return self.data.tolist()
        return [list(r) for r in self.data]

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.rows}x{self.cols})"

    def _check_compatible(self, other):
        if self.field != other.field or self.shape != other.shape:
            raise ValueError("incompatible matrices")

    # -- elimination -------------------------------------------------------

    def rref(self):
        """Reduced row echelon form: (Matrix, pivot column tuple).  Cached."""
        if self._rref is None:
            if _is_gf(self.field):
                arr, piv = rref_mod(self.data, self.field.p)
            else:
                arr, piv = _rref_qq(self.data)
            arr.flags.writeable = False
            self._rref = (self._wrap(arr), piv)
        return self._rref

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[np.ndarray]:
        """Basis of the right null space; each v satisfies self @ v == 0."""
        red, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        out = []
        for f in free:
            v = _zero_vector(self.field, self.cols)
            v[f] = self.field.one
            for i, c in enumerate(pivots):
                v[c] = self.field.neg(red.data[i, f])
            out.append(v)
        return out

    def solve(self, b):
        """Solve ``self @ x = b`` for a vector b.

        Returns the unique solution vector, or NO_SOLUTION / NON_UNIQUE.
        The two failure modes are never collapsed: uniqueness is load-bearing
        for the fiber-transporter argument.
        """
        bv = _coerce_vector(self.field, b)
        if bv.shape[0] != self.rows:
            raise ValueError("dimension mismatch between matrix and rhs")
        aug = Matrix.hstack([self, Matrix.column(self.field, bv)])
        red, pivots = aug.rref()
        if self.cols in pivots:
            return NO_SOLUTION
        if len(pivots) < self.cols:
            return NON_UNIQUE
        x = _zero_vector(self.field, self.cols)
        for i, c in enumerate(pivots):
            x[c] = red.data[i, self.cols]
        return x

    def det(self):
        """Determinant (square matrices), exact over either field."""
        if self.rows != self.cols:
            raise ValueError("det of non-square matrix")
        if _is_gf(self.field):
            return _det_gf(self.data, self.field.p)
        return _det_qq(self.data)

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        aug = Matrix.hstack([self, Matrix.identity(self.field, self.rows)])
        red, pivots = aug.rref()
        if len(pivots) != self.rows or any(p >= self.rows for p in pivots):
            raise ZeroDivisionError("matrix is singular")
        return self._wrap(np.ascontiguousarray(red.data[:, self.rows :]))


# -- vectors ----------------------------------------------------------------


def _coerce_vector(field, vec) -> np.ndarray:
    if isinstance(vec, np.ndarray):
        if _is_gf(field) and vec.dtype == np.int64:
            return vec if (vec >= 0).all() and (vec < field.p).all() else vec % field.p
        if not _is_gf(field) and vec.dtype == object:
            return vec
    if _is_gf(field):
        return np.array([field.scalar(x) for x in vec], dtype=np.int64)
    return np.array([Fraction(x) for x in vec], dtype=object)


def _zero_vector(field, n) -> np.ndarray:
    if _is_gf(field):
        return np.zeros(n, dtype=np.int64)
    v = np.empty(n, dtype=object)
    v[:] = Fraction(0)
    return v


def vector_is_zero(field, vec) -> bool:
    if _is_gf(field):
        return not np.asarray(vec).any()
    return all(x == 0 for x in vec)


def random_vector(field, n, rng: RandomSource) -> np.ndarray:
    return _coerce_vector(field, rng.scalars(field, n))


def random_matrix(field, rows, cols, rng: RandomSource) -> Matrix:
    data = [rng.scalars(field, cols) for _ in range(rows)]
    return Matrix(field, data)


# -- rational elimination ----------------------------------------------------


def _rref_qq(arr: np.ndarray):
    """RREF over Q: Bareiss forward pass on integers, exact normalization.

    Rows are first scaled by their denominator lcm (which changes neither
    rank nor kernel nor solution sets of augmented systems), then reduced
    fraction-free so intermediate entries stay integral minors.
    """
    rows, cols = arr.shape
    work: list[list[int]] = []
    for i in range(rows):
        dens = [Fraction(x).denominator for x in arr[i]]
        l = 1
        for d in dens:
            l = l * d // gcd(l, d)
        work.append([int(Fraction(x) * l) for x in arr[i]])

    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        sel = -1
        for i in range(r, rows):
            if work[i][c] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            work[r], work[sel] = work[sel], work[r]
        piv = work[r][c]
        for i in range(r + 1, rows):
            wi = work[i]
            f = wi[c]
            wr = work[r]
            for j in range(c, cols):
                wi[j] = (piv * wi[j] - f * wr[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1

    # Back-substitute to reduced form with exact Fractions.
    frac = [[Fraction(x) for x in row] for row in work[: len(pivots)]]
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        piv = frac[i][c]
        if piv != 1:
            frac[i] = [x / piv for x in frac[i]]
        for k in range(i):
            f = frac[k][c]
            if f != 0:
                frac[k] = [a - f * b for a, b in zip(frac[k], frac[i])]
    out = np.empty((rows, cols), dtype=object)
    out[:] = Fraction(0)
    for i, row in enumerate(frac):
        for j, x in enumerate(row):
            out[i, j] = x
    return out, tuple(pivots)


def _det_qq(arr: np.ndarray) -> Fraction:
    n = arr.shape[0]
    dens = Fraction(1)
    work: list[list[int]] = []
    for i in range(n):
        row = [Fraction(x) for x in arr[i]]
        l = 1
        for x in row:
            l = l * x.denominator // gcd(l, x.denominator)
        dens *= l
        work.append([int(x * l) for x in row])
    sign = 1
    prev = 1
    for c in range(n):
        sel = -1
        for i in range(c, n):
            if work[i][c] != 0:
                sel = i
                break
        if sel < 0:
            return Fraction(0)
        if sel != c:
            work[c], work[sel] = work[sel], work[c]
            sign = -sign
        piv = work[c][c]
        for i in range(c + 1, n):
            f = work[i][c]
            for j in range(c, n):
                work[i][j] = (piv * work[i][j] - f * work[c][j]) // prev
        prev = piv
    return Fraction(sign * work[n - 1][n - 1]) / dens


def _det_gf(arr: np.ndarray, p: int) -> int:
    m = arr.copy()
    n = m.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(m[c:, c])[0]
        if nz.size == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            m[[c, i]] = m[[i, c]]
            det = -det
        piv = int(m[c, c])
        det = det * piv % p
        inv = pow(piv, -1, p)
        below = np.nonzero(m[c + 1 :, c])[0] + c + 1
        if below.size:
            factors = m[below, c] * inv % p
            m[below] = (m[below] - np.outer(factors, m[c])) % p
    return det % p


# -- module-level operations -------------------------------------------------


def rank(m: Matrix) -> int:
    """Exact rank over the matrix's field."""
    return m.rank()


def kernel_basis(m: Matrix) -> list[np.ndarray]:
    """Basis of the right null space of ``m``."""
    return m.kernel_basis()


def solve(m: Matrix, b):
    """Solve ``m x = b``; vector, NO_SOLUTION, or NON_UNIQUE."""
    return m.solve(b)


class SpanBuilder:
    """Incremental row-space in reduced echelon form.

    Supports exact membership tests and dimension tracking for the span
    closure operations (associative closure, octonion subalgebras, bracket
    closure verification).
    """

    def __init__(self, field, ambient_dim: int):
        self.field = field
        self.n = ambient_dim
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> np.ndarray:
        v = _coerce_vector(self.field, vec).copy()
        gf = _is_gf(self.field)
        p = self.field.p if gf else None
        for piv, row in zip(self.pivots, self.rows):
            c = v[piv]
            if gf:
                if c:
                    v = (v - c * row) % p
            else:
                if c != 0:
                    v = v - c * row
        return v

    def contains(self, vec) -> bool:
        return vector_is_zero(self.field, self.reduce(vec))

    def add(self, vec) -> bool:
        """Add a vector; True if it enlarged the span."""
        v = self.reduce(vec)
        gf = _is_gf(self.field)
        nz = np.nonzero(v)[0] if gf else [i for i, x in enumerate(v) if x != 0]
        if len(nz) == 0:
            return False
        j = int(nz[0])
        lead = v[j]
        if gf:
            if lead != 1:
                v = v * pow(int(lead), -1, self.field.p) % self.field.p
        else:
            if lead != 1:
                v = v / lead
        for k, (piv, row) in enumerate(zip(self.pivots, self.rows)):
            c = row[j]
            if gf:
                if c:
                    self.rows[k] = (row - c * v) % self.field.p
            else:
                if c != 0:
                    self.rows[k] = row - c * v
        self.rows.append(v)
        self.pivots.append(j)
        return True


def coordinates_in_span(basis_cols: Matrix, targets: Matrix) -> Matrix:
    """Coordinates of each target column in the span of the basis columns.

    ``basis_cols`` must have full column rank.  Raises ValueError naming the
    first target column that falls outside the span.
    """
    k = basis_cols.cols
    aug = Matrix.hstack([basis_cols, targets])
    red, pivots = aug.rref()
    if len([p for p in pivots if p < k]) != k:
        raise ValueError("basis columns are not linearly independent")
    for p in pivots:
        if p >= k:
            raise ValueError(f"target column {p - k} is outside the span")
    return Matrix(basis_cols.field, None, _raw=np.ascontiguousarray(red.data[:k, k:]))


def associative_closure(gens: list[Matrix]) -> int:
    """Dimension of the unital associative algebra generated by ``gens``.

    Span-closure of {I} plus the generators under matrix product, iterated
    to a fixpoint; monotone in the generators and bounded by d^2.
    """
    if not gens:
        return 1
    field = gens[0].field
    d = gens[0].rows
    for g in gens:
        if g.rows != d or g.cols != d or g.field != field:
            raise ValueError("generators must be square, equal size, one field")
    sb = SpanBuilder(field, d * d)
    basis: list[Matrix] = []
    queue: deque[tuple[int, int]] = deque()

    def push(mat: Matrix):
        if sb.add(mat.flatten()):
            i = len(basis)
            basis.append(mat)
            for j in range(len(basis)):
                queue.append((i, j))
                if j != i:
                    queue.append((j, i))

    push(Matrix.identity(field, d))
    for g in gens:
        push(g)
    while queue:
        i, j = queue.popleft()
        push(basis[i] @ basis[j])
    return sb.dim


def commutant_dimension(gens: list[Matrix]) -> int:
    """Dimension of {X : Xg = gX for all g}, via the stacked Sylvester system."""
    if not gens:
        raise ValueError("commutant of an empty set needs an ambient size; pass d via gens")
    field = gens[0].field
    d = gens[0].rows
    blocks = []
    eye = Matrix.identity(field, d).data
    for g in gens:
        if g.rows != d or g.cols != d or g.field != field:
            raise ValueError("generators must be square, equal size, one field")
        blocks.append(np.kron(eye, np.ascontiguousarray(g.data.T)) - np.kron(g.data, eye))
    stacked = np.vstack(blocks)
    if _is_gf(field):
        stacked = stacked % field.p
    m = Matrix(field, None, _raw=stacked)
    return d * d - m.rank()


def commutant_dimension_with_size(gens: list[Matrix], d: int) -> int:
    """commutant_dimension, but with the ambient size explicit so the empty
    generating set is meaningful (everything commutes: d^2)."""
    if not gens:
        return d * d
    return commutant_dimension(gens)
