from fractions import Fraction
from itertools import combinations, permutations

import numpy as np
import pytest

from spincert.fields import GF, QQ, RandomSource
from spincert.linalg import (
    NON_UNIQUE,
    NO_SOLUTION,
    Matrix,
    SpanBuilder,
    associative_closure,
    commutant_dimension,
    commutant_dimension_with_size,
    coordinates_in_span,
    kernel_basis,
    random_matrix,
    random_vector,
    rank,
    solve,
)

F = GF(1_000_003)
F2 = GF(999_983)


# -- independent oracles -------------------------------------------------------


def det_by_permutations(m: Matrix):
    """Leibniz expansion; the slow but unarguable determinant."""
    n = m.rows
    f = m.field
    total = f.zero
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = f.one if sign == 1 else f.neg(f.one)
        for i in range(n):
            term = f.mul(term, m.data[i, perm[i]])
        total = f.add(total, term)
    return total


def rank_by_minors(m: Matrix) -> int:
    """Largest size of a nonzero minor, enumerated exhaustively."""
    best = 0
    for k in range(1, min(m.rows, m.cols) + 1):
        found = False
        for rows in combinations(range(m.rows), k):
            for cols in combinations(range(m.cols), k):
                if not m.field.is_zero(det_by_permutations(m.submatrix(rows, cols))):
                    found = True
                    break
            if found:
                break
        if found:
            best = k
        else:
            break
    return best


def rref_by_fractions(m: Matrix):
    """Naive Gauss-Jordan with Fraction arithmetic: the oracle for the
    fraction-free elimination path."""
    rows = [[Fraction(x) for x in r] for r in m.data]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        sel = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, tuple(pivots)


# -- spec examples -------------------------------------------------------------


@pytest.mark.parametrize("field", [F, QQ])
def test_rank_examples(field):
    assert rank(Matrix.identity(field, 3)) == 3
    assert rank(Matrix.zeros(field, 2, 2)) == 0
    assert rank(Matrix(field, [[1, 2], [2, 4]])) == 1


@pytest.mark.parametrize("field", [F, QQ])
def test_kernel_examples(field):
    assert kernel_basis(Matrix.identity(field, 3)) == []
    (v,) = kernel_basis(Matrix(field, [[1, -1]]))
    assert v[0] == v[1] and not field.is_zero(v[0])
    (w,) = kernel_basis(Matrix(field, [[1, 2], [2, 4]]))
    # proportional to (2, -1): 1*w0 + 2*w1 = 0
    assert field.is_zero(field.add(w[0], field.mul(field.scalar(2), w[1])))


def test_kernel_vectors_annihilate():
    rng = RandomSource(1)
    for field in (F, QQ):
        m = random_matrix(field, 4, 7, rng)
        for v in m.kernel_basis():
            assert all(field.is_zero(x) for x in m.apply(v))


def test_solve_examples():
    b = [2, 5, 9]
    x = solve(Matrix.identity(QQ, 3), b)
    assert list(x) == [Fraction(2), Fraction(5), Fraction(9)]
    assert list(Matrix(QQ, [[3]]).solve([5])) == [Fraction(5, 3)]
    assert Matrix(QQ, [[1, 1]]).solve([1]) is NON_UNIQUE
    assert Matrix(QQ, [[1], [1]]).solve([1, 2]) is NO_SOLUTION
    assert Matrix(F, [[1, 1]]).solve([1]) is NON_UNIQUE
    with pytest.raises(ValueError):
        Matrix(F, [[1, 1]]).solve([1, 2, 3])


def test_solve_replay_random():
    rng = RandomSource(2)
    for field in (F, QQ):
        m = random_matrix(field, 5, 5, rng)
        if m.rank() < 5:
            continue
        b = random_vector(field, 5, rng)
        x = m.solve(b)
        assert all(p == q for p, q in zip(m.apply(x), b))


def test_rank_nullity_always():
    rng = RandomSource(3)
    for field in (F, QQ):
        for rows, cols in [(3, 5), (5, 3), (4, 4), (1, 6)]:
            m = random_matrix(field, rows, cols, rng)
            assert m.rank() + len(m.kernel_basis()) == cols


def test_rank_against_minor_oracle():
    rng = RandomSource(4)
    for field in (F, QQ):
        for _ in range(4):
            m = random_matrix(field, 3, 4, rng)
            assert m.rank() == rank_by_minors(m)
    # engineered low rank
    a = random_matrix(QQ, 3, 1, rng)
    b = random_matrix(QQ, 1, 4, rng)
    m = a @ b
    assert m.rank() == rank_by_minors(m) == 1


def test_det_against_permutation_oracle():
    rng = RandomSource(5)
    for field in (F, QQ):
        for n in (1, 2, 3, 4):
            m = random_matrix(field, n, n, rng)
            assert m.det() == det_by_permutations(m)


def test_qq_rref_matches_fraction_oracle():
    rng = RandomSource(6)
    for rows, cols in [(3, 5), (5, 3), (4, 4), (6, 4)]:
        m = random_matrix(QQ, rows, cols, rng)
        got, piv = m.rref()
        want, piv2 = rref_by_fractions(m)
        assert piv == piv2
        assert all(got.data[i, j] == want[i][j] for i in range(rows) for j in range(cols))
    # non-integer entries exercise denominator clearing
    m = Matrix(QQ, [[Fraction(1, 2), Fraction(2, 3)], [Fraction(1, 5), 7]])
    got, piv = m.rref()
    want, piv2 = rref_by_fractions(m)
    assert piv == piv2 and all(
        got.data[i, j] == want[i][j] for i in range(2) for j in range(2)
    )


def test_field_agreement_qq_vs_two_primes():
    # integer matrices: rank over Q equals rank over both large primes
    rng = RandomSource(7)
    for _ in range(5):
        rows = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(4)]
        r_qq = Matrix(QQ, rows).rank()
        assert r_qq == Matrix(F, rows).rank() == Matrix(F2, rows).rank()


def test_full_rank_probability_sanity():
    # random square matrices over a large prime are essentially always regular
    rng = RandomSource(8)
    assert all(random_matrix(F, 6, 6, rng).rank() == 6 for _ in range(20))


def test_inverse_roundtrip():
    rng = RandomSource(9)
    for field in (F, QQ):
        m = random_matrix(field, 5, 5, rng)
        assert (m @ m.inverse()) == Matrix.identity(field, 5)
    with pytest.raises(ZeroDivisionError):
        Matrix(QQ, [[1, 2], [2, 4]]).inverse()


def test_associative_closure_examples():
    assert associative_closure([Matrix.identity(F, 2)]) == 1
    e12 = Matrix(QQ, [[0, 1], [0, 0]])
    e21 = Matrix(QQ, [[0, 0], [1, 0]])
    assert associative_closure([e12, e21]) == 4


def test_associative_closure_monotone_and_bounded():
    rng = RandomSource(10)
    gens = [random_matrix(F, 3, 3, rng) for _ in range(3)]
    dims = [associative_closure(gens[: k + 1]) for k in range(3)]
    assert dims == sorted(dims)
    assert dims[-1] <= 9


def test_commutant_examples():
    assert commutant_dimension_with_size([], 3) == 9
    units = [Matrix(F, m) for m in ([[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]], [[0, 0], [0, 1]])]
    assert commutant_dimension(units) == 1
    # over Q as well
    units_q = [Matrix(QQ, m.to_lists()) for m in units]
    assert commutant_dimension(units_q) == 1


def test_commutant_against_definition():
    rng = RandomSource(11)
    g = random_matrix(F, 3, 3, rng)
    dim = commutant_dimension([g])
    # brute check: count independent E_ab images under X -> Xg - gX
    rows = []
    for a in range(3):
        for b in range(3):
            x = np.zeros((3, 3), dtype=np.int64)
            x[a, b] = 1
            xm = Matrix(F, x)
            rows.append((xm @ g - g @ xm).flatten())
    assert dim == 9 - Matrix(F, np.stack(rows)).rank()


def test_span_builder():
    sb = SpanBuilder(QQ, 3)
    assert sb.add([1, 2, 3])
    assert not sb.add([2, 4, 6])
    assert sb.add([0, 1, 1])
    assert sb.dim == 2
    assert sb.contains([1, 3, 4])
    assert not sb.contains([0, 0, 1])


def test_coordinates_in_span():
    basis = Matrix(QQ, [[1, 0], [0, 1], [1, 1]])
    targets = Matrix(QQ, [[3], [4], [7]])
    coords = coordinates_in_span(basis, targets)
    assert coords.to_lists() == [[Fraction(3)], [Fraction(4)]]
    with pytest.raises(ValueError):
        coordinates_in_span(basis, Matrix(QQ, [[1], [0], [0]]))


def test_matrix_shape_and_field_guards():
    with pytest.raises(ValueError):
        Matrix(F, [[1, 2], [3, 4]]) @ Matrix(F, [[1, 2], [3, 4], [5, 6]])
    with pytest.raises(ValueError):
        Matrix(F, [[1]]) + Matrix(QQ, [[1]])
    with pytest.raises(ValueError):
        Matrix(F, [[1, 2]]).det()
