"""Vector, spin and half-spin representations of so(n) as explicit matrices.

The spin module is the Fock space Lambda(span(f_1..f_m)) with basis indexed
by subsets of {1..m}: p_i acts by exterior multiplication with f_i, q_i by
the dual contraction, and the odd unit vector u by the parity involution.
Substituting these generator actions into m_ab = (e_a e_b - e_b e_a)/4 gives
the so(n) matrices; the same bivectors act on the generator basis itself for
the vector representation.

Every constructed matrix has entries in Z/4 (quarter-integers), so the
integer quadruple of each family is built once per n and reduced into
whatever field a caller asks for.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from threading import Lock

import numpy as np

from .clifford import (
    CliffordElement,
    QuadraticSpace,
    expand_in_bivectors,
    so_pairs,
)
from .fields import PrimeField
from .linalg import Matrix

__all__ = [
    "LieRepresentation",
    "vector_rep",
    "spin_rep",
    "half_spin_reps",
    "direct_sum",
    "SubalgebraEmbedding",
    "embed_subalgebra",
    "compose_embeddings",
    "restrict",
    "fock_element_action",
    "center_acts_minus_one",
    "fock_generator_matrices",
    "parity_indices",
    "verify_lie_homomorphism",
]


@dataclass(frozen=True)
class LieRepresentation:
    """An ordered list of d x d matrices aligned with a labeled so(n) basis.

    ``tensor`` has shape (g, d, d): int64 residues over a prime field,
    Fraction objects over Q.  ``basis_labels`` are the generator-index pairs
    (a, b) of the bivector basis; a trailing ("scale",) label marks an
    appended scaling generator.
    """

    n: int
    field: object
    name: str
    basis_labels: tuple
    tensor: np.ndarray

    @property
    def g(self) -> int:
        return self.tensor.shape[0]

    @property
    def dim(self) -> int:
        return self.tensor.shape[1]

    @cached_property
    def matrices(self) -> list[Matrix]:
        return [Matrix(self.field, None, _raw=np.ascontiguousarray(self.tensor[k])) for k in range(self.g)]

    def matrix(self, k: int) -> Matrix:
        return self.matrices[k]

    def with_scaling(self) -> "LieRepresentation":
        """Append the identity as one extra generator (scalar action)."""
        eye = _tensor_identity(self.field, self.dim)
        tensor = np.concatenate([self.tensor, eye[None]], axis=0)
        return LieRepresentation(
            self.n,
            self.field,
            f"{self.name}+scale",
            self.basis_labels + (("scale",),),
            _freeze(tensor),
        )

    def to_json_dict(self) -> dict:
        if isinstance(self.field, PrimeField):
            mats = [m.tolist() for m in self.tensor]
        else:
            mats = [[[str(x) for x in row] for row in m] for m in self.tensor]
        return {
            "n": self.n,
            "name": self.name,
            "basisLabels": [list(l) for l in self.basis_labels],
            "field": self.field.to_json(),
            "matrices": mats,
        }


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def _tensor_identity(field, d: int) -> np.ndarray:
    if isinstance(field, PrimeField):
        return np.eye(d, dtype=np.int64)
    out = np.empty((d, d), dtype=object)
    out[:] = Fraction(0)
    for i in range(d):
        out[i, i] = Fraction(1)
    return out


def _reduce_x4(field, x4: np.ndarray) -> np.ndarray:
    """Turn a 4x-scaled integer tensor into field entries."""
    if isinstance(field, PrimeField):
        inv4 = field.inv(4)
        return _freeze(x4 % field.p * inv4 % field.p)
    out = np.empty(x4.shape, dtype=object)
    flat = out.reshape(-1)
    q = Fraction(1, 4)
    for i, v in enumerate(x4.reshape(-1)):
        flat[i] = int(v) * q
    return _freeze(out)


# -- integer construction, cached per n --------------------------------------

_INT_CACHE: dict = {}
_REP_CACHE: dict = {}
_CACHE_LOCK = Lock()


def fock_generator_matrices(n: int) -> list[np.ndarray]:
    """Action of each generator e_g on the Fock basis, as 0/+-1 int matrices.

    Fock basis index = subset bitmask over {0..m-1}; p_i creates, q_i
    annihilates, u flips sign on odd-degree vectors.
    """
    key = ("fock_gens", n)
    with _CACHE_LOCK:
        hit = _INT_CACHE.get(key)
    if hit is not None:
        return hit
    space = QuadraticSpace(n)
    m = space.m
    d = 1 << m
    mats = []
    for g in range(n):
        mat = np.zeros((d, d), dtype=np.int64)
        if space.odd and g == n - 1:
            for s in range(d):
                mat[s, s] = 1 if s.bit_count() % 2 == 0 else -1
        else:
            i = g // 2
            bit = 1 << i
            creating = g % 2 == 0
            for s in range(d):
                if creating and not s & bit:
                    sign = -1 if (s & (bit - 1)).bit_count() % 2 else 1
                    mat[s | bit, s] = sign
                elif not creating and s & bit:
                    sign = -1 if (s & (bit - 1)).bit_count() % 2 else 1
                    mat[s ^ bit, s] = sign
        mats.append(mat)
    with _CACHE_LOCK:
        _INT_CACHE[key] = mats
    return mats


def _spin_x4(n: int) -> np.ndarray:
    """4 * m_ab on the Fock space: 2 e_a e_b - 2B(a,b), integer entries."""
    key = ("spin_x4", n)
    with _CACHE_LOCK:
        hit = _INT_CACHE.get(key)
    if hit is not None:
        return hit
    space = QuadraticSpace(n)
    gens = fock_generator_matrices(n)
    d = gens[0].shape[0]
    pairs = so_pairs(space)
    out = np.zeros((len(pairs), d, d), dtype=np.int64)
    eye = np.eye(d, dtype=np.int64)
    for k, (a, b) in enumerate(pairs):
        out[k] = 2 * (gens[a] @ gens[b]) - space.two_b_int(a, b) * eye
    out = _freeze(out)
    with _CACHE_LOCK:
        _INT_CACHE[key] = out
    return out


def _vector_x4(n: int) -> np.ndarray:
    """4 * (v -> [m_ab, v]) on the generator basis: [m_ab, e_c] = B(b,c) e_a - B(a,c) e_b."""
    key = ("vector_x4", n)
    with _CACHE_LOCK:
        hit = _INT_CACHE.get(key)
    if hit is not None:
        return hit
    space = QuadraticSpace(n)
    pairs = so_pairs(space)
    out = np.zeros((len(pairs), n, n), dtype=np.int64)
    for k, (a, b) in enumerate(pairs):
        for c in range(n):
            tb_bc = space.two_b_int(b, c)
            tb_ac = space.two_b_int(a, c)
            if tb_bc:
                out[k, a, c] += 2 * tb_bc
            if tb_ac:
                out[k, b, c] -= 2 * tb_ac
    out = _freeze(out)
    with _CACHE_LOCK:
        _INT_CACHE[key] = out
    return out


def parity_indices(n: int) -> tuple[list[int], list[int]]:
    """Fock indices of even and odd exterior degree."""
    m = n // 2
    even = [s for s in range(1 << m) if s.bit_count() % 2 == 0]
    odd = [s for s in range(1 << m) if s.bit_count() % 2 == 1]
    return even, odd


def _cached_rep(key, build):
    with _CACHE_LOCK:
        hit = _REP_CACHE.get(key)
    if hit is not None:
        return hit
    rep = build()
    with _CACHE_LOCK:
        _REP_CACHE[key] = rep
    return rep


def vector_rep(space: QuadraticSpace, field) -> LieRepresentation:
    """The natural n-dimensional representation; every matrix is B-skew."""

    def build():
        tensor = _reduce_x4(field, _vector_x4(space.n))
        return LieRepresentation(space.n, field, f"vector({space.n})", so_pairs(space), tensor)

    return _cached_rep(("vector", space.n, field), build)


def spin_rep(space: QuadraticSpace, field) -> LieRepresentation:
    """The 2^floor(n/2)-dimensional spin representation (Fock model)."""

    def build():
        tensor = _reduce_x4(field, _spin_x4(space.n))
        return LieRepresentation(space.n, field, f"spin({space.n})", so_pairs(space), tensor)

    return _cached_rep(("spin", space.n, field), build)


def half_spin_reps(space: QuadraticSpace, field):
    """Even and odd parity blocks of the spin representation (n even).

    Every so(n) matrix is block-diagonal for the parity grading; this is
    asserted during extraction.
    """
    if space.odd:
        raise ValueError("half-spin representations need even n")

    def build():
        full = spin_rep(space, field)
        even, odd = parity_indices(space.n)
        for k in range(full.g):
            off = full.tensor[k][np.ix_(even, odd)]
            off2 = full.tensor[k][np.ix_(odd, even)]
            if isinstance(field, PrimeField):
                bad = off.any() or off2.any()
            else:
                bad = any(x != 0 for x in off.reshape(-1)) or any(x != 0 for x in off2.reshape(-1))
            if bad:
                raise AssertionError("spin matrix not parity-block-diagonal")
        reps = []
        for label, idx in (("even", even), ("odd", odd)):
            tensor = np.ascontiguousarray(full.tensor[:, idx][:, :, idx])
            reps.append(
                LieRepresentation(
                    space.n,
                    field,
                    f"half_spin_{label}({space.n})",
                    so_pairs(space),
                    _freeze(tensor),
                )
            )
        return tuple(reps)

    return _cached_rep(("half_spin", space.n, field), build)


def direct_sum(reps: list[LieRepresentation], name: str | None = None) -> LieRepresentation:
    """Block-diagonal sum of representations of the same so(n)."""
    first = reps[0]
    for r in reps:
        if r.n != first.n or r.field != first.field or r.basis_labels != first.basis_labels:
            raise ValueError("direct sum needs matching algebras and bases")
    g = first.g
    dims = [r.dim for r in reps]
    d = sum(dims)
    if isinstance(first.field, PrimeField):
        tensor = np.zeros((g, d, d), dtype=np.int64)
    else:
        tensor = np.empty((g, d, d), dtype=object)
        tensor[:] = Fraction(0)
    off = 0
    for r in reps:
        tensor[:, off : off + r.dim, off : off + r.dim] = r.tensor
        off += r.dim
    if name is None:
        name = " + ".join(r.name for r in reps)
    return LieRepresentation(first.n, first.field, name, first.basis_labels, _freeze(tensor))


# -- fock module action -------------------------------------------------------


def fock_element_action(space: QuadraticSpace, field, elem: CliffordElement) -> Matrix:
    """Matrix of an arbitrary Clifford element acting on the Fock space."""
    gens = fock_generator_matrices(space.n)
    d = gens[0].shape[0]
    if isinstance(field, PrimeField):
        p = field.p
        acc = np.zeros((d, d), dtype=np.int64)
        for mask, coeff in elem.coeffs.items():
            part = np.eye(d, dtype=np.int64)
            m = mask
            while m:
                low = m & -m
                part = part @ gens[low.bit_length() - 1] % p
                m ^= low
            acc = (acc + coeff * part) % p
        return Matrix(field, None, _raw=acc)
    acc = np.zeros((d, d), dtype=object)
    acc[:] = Fraction(0)
    for mask, coeff in elem.coeffs.items():
        part = np.eye(d, dtype=np.int64)
        m = mask
        while m:
            low = m & -m
            part = part @ gens[low.bit_length() - 1]
            m ^= low
        acc = acc + coeff * part
    return Matrix(field, acc)


def center_acts_minus_one(space: QuadraticSpace, rep: LieRepresentation) -> bool:
    """True when the Clifford scalar -1 negates every basis Fock vector of
    the module carrying ``rep`` (spin or half-spin only)."""
    if not ("spin(" in rep.name or "half_spin" in rep.name):
        raise ValueError("center check applies to spin or half-spin representations")
    field = rep.field
    minus_one = CliffordElement.scalar(space, field, field.neg(field.one))
    act = fock_element_action(space, field, minus_one)
    if "half_spin" in rep.name:
        even, odd = parity_indices(space.n)
        idx = even if "even" in rep.name else odd
        act = act.submatrix(idx, idx)
    expected = Matrix.identity(field, rep.dim).scale(field.neg(field.one))
    return act == expected


# -- subalgebra embeddings -----------------------------------------------------


@dataclass(frozen=True)
class SubalgebraEmbedding:
    """so(n') inside so(n) by a choice of n' ambient quadratic vectors.

    ``gen_vectors`` is an integer (n' x n) matrix: row a gives the ambient
    coordinates of the a-th sub-generator.  ``pair_map`` expands each sub
    bivector in the ambient bivector basis with integer coefficients.
    """

    ambient_n: int
    sub_n: int
    gen_vectors: tuple
    pair_map: tuple

    @property
    def sub_space(self) -> QuadraticSpace:
        return QuadraticSpace(self.sub_n)


def _pair_map_from_vectors(ambient: QuadraticSpace, vectors: list[list[int]]):
    """Expand every sub bivector (v_a v_b - v_b v_a)/4 in the ambient basis."""
    from .fields import QQ

    sub_n = len(vectors)
    sub = QuadraticSpace(sub_n)
    # B-compatibility: the chosen vectors must reproduce the split sub form.
    amb_gram = ambient.gram()
    for a in range(sub_n):
        for b in range(sub_n):
            val = Fraction(0)
            for i, ci in enumerate(vectors[a]):
                if ci:
                    for j, cj in enumerate(vectors[b]):
                        if cj:
                            val += Fraction(ci * cj) * amb_gram[i][j]
            if val != sub.gram()[a][b]:
                raise ValueError("embedding vectors do not restrict to the split sub form")

    elems = []
    for a in range(sub_n):
        e = CliffordElement.zero(ambient, QQ)
        for i, ci in enumerate(vectors[a]):
            if ci:
                e = e + CliffordElement.generator(ambient, QQ, i).scale(ci)
        elems.append(e)
    quarter = Fraction(1, 4)
    out = []
    for a, b in so_pairs(sub):
        comm = (elems[a] * elems[b] - elems[b] * elems[a]).scale(quarter)
        coeffs = expand_in_bivectors(comm)
        row = []
        for k, c in enumerate(coeffs):
            if c != 0:
                if c.denominator != 1:
                    raise AssertionError("non-integer embedding coefficient")
                row.append((k, int(c)))
        out.append(tuple(row))
    return tuple(out)


def embed_subalgebra(space: QuadraticSpace, sub_n: int) -> SubalgebraEmbedding:
    """Canonical chain embedding so(sub_n) in so(n).

    One step down from odd n drops the unit vector u; one step down from
    even n folds the last hyperbolic pair into the unit vector p_m + q_m.
    Larger drops compose the steps.
    """
    if sub_n >= space.n:
        raise ValueError("need sub_n < n")
    if sub_n < 2:
        raise ValueError("need sub_n >= 2")
    n = space.n
    vectors = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    k = n
    while k > sub_n:
        if k % 2 == 1:
            vectors = vectors[: k - 1]
        else:
            folded = [vectors[k - 2][j] + vectors[k - 1][j] for j in range(n)]
            vectors = vectors[: k - 2] + [folded]
        k -= 1
    pair_map = _pair_map_from_vectors(space, vectors)
    return SubalgebraEmbedding(n, sub_n, tuple(tuple(v) for v in vectors), pair_map)


def compose_embeddings(outer: SubalgebraEmbedding, inner: SubalgebraEmbedding) -> SubalgebraEmbedding:
    """so(n'') in so(n') in so(n) composed to a single embedding."""
    if inner.ambient_n != outer.sub_n:
        raise ValueError("embeddings do not chain")
    n = outer.ambient_n
    vectors = []
    for row in inner.gen_vectors:
        vec = [0] * n
        for a, c in enumerate(row):
            if c:
                for j in range(n):
                    vec[j] += c * outer.gen_vectors[a][j]
        vectors.append(vec)
    pair_map = _pair_map_from_vectors(QuadraticSpace(n), vectors)
    return SubalgebraEmbedding(n, inner.sub_n, tuple(tuple(v) for v in vectors), pair_map)


def verify_lie_homomorphism(rep: LieRepresentation, struct) -> bool:
    """Check rho([m_i, m_j]) = [rho(m_i), rho(m_j)] on every basis pair.

    ``struct`` carries the bracket expansions computed inside the Clifford
    algebra, so this compares the representation against structure constants
    it had no hand in producing.
    """
    if len(rep.basis_labels) != struct.dim:
        raise ValueError("representation basis does not match the structure constants")
    field = rep.field
    T = rep.tensor
    g = rep.g
    if isinstance(field, PrimeField):
        p = field.p
        d = rep.dim
        if 2 * d * (p - 1) * (p - 1) >= 2**53:
            raise OverflowError("prime too large for the float64 commutator path")
        # one float64 copy; products and their difference stay exact integers
        Tf = T.astype(np.float64)
        for i in range(g):
            if i + 1 == g:
                break
            tail = Tf[i + 1 :]
            comm = np.mod(np.matmul(Tf[i], tail) - np.matmul(tail, Tf[i]), float(p)).astype(np.int64)
            for j in range(i + 1, g):
                rhs = np.zeros_like(T[0])
                for k, c in struct.bracket_row(i, j):
                    rhs = (rhs + c * T[k]) % p
                if not np.array_equal(comm[j - i - 1], rhs):
                    return False
        return True
    for i in range(g):
        for j in range(g):
            if i == j:
                continue
            comm = np.dot(T[i], T[j]) - np.dot(T[j], T[i])
            rhs = np.zeros_like(T[0])
            rhs[:] = Fraction(0)
            for k, c in struct.bracket_row(i, j):
                rhs = rhs + c * T[k]
            if any(x != y for x, y in zip(comm.reshape(-1), rhs.reshape(-1))):
                return False
    return True


def restrict(rep: LieRepresentation, emb: SubalgebraEmbedding) -> LieRepresentation:
    """Representation of so(n') on the same space, via the embedding."""
    if rep.n != emb.ambient_n:
        raise ValueError("representation and embedding ambient dimensions differ")
    if any(lbl == ("scale",) for lbl in rep.basis_labels):
        raise ValueError("cannot restrict a scaling-augmented representation")
    field = rep.field
    d = rep.dim
    g_sub = len(emb.pair_map)
    if isinstance(field, PrimeField):
        tensor = np.zeros((g_sub, d, d), dtype=np.int64)
        for k, row in enumerate(emb.pair_map):
            for amb, c in row:
                tensor[k] = (tensor[k] + c * rep.tensor[amb]) % field.p
    else:
        tensor = np.empty((g_sub, d, d), dtype=object)
        tensor[:] = Fraction(0)
        for k, row in enumerate(emb.pair_map):
            for amb, c in row:
                tensor[k] = tensor[k] + c * rep.tensor[amb]
    sub = QuadraticSpace(emb.sub_n)
    return LieRepresentation(
        emb.sub_n,
        field,
        f"{rep.name}|so({emb.sub_n})",
        so_pairs(sub),
        _freeze(tensor),
    )
