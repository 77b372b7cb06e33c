"""Lie-algebra orbit and stabilizer analysis.

Everything here reduces to exact kernels of stacked action maps: stabilizer
subalgebras, generic freeness, invariant bilinear forms, fixed subspaces and
isotypic fingerprints.  Genericity claims follow one protocol: a handful of
random trials, take the minimum dimension (dimension only jumps upward on
special points), and require agreement across two independent primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .fields import GF, PrimeField, RandomSource
from .kernels import matmul_mod
from .linalg import (
    Matrix,
    associative_closure,
    commutant_dimension_with_size,
    coordinates_in_span,
    random_vector,
)
from .spinreps import LieRepresentation

__all__ = [
    "GenericityUncertain",
    "ClosureViolation",
    "Aborted",
    "StabilizerReport",
    "SubalgebraStructure",
    "BilinearInvariants",
    "action_matrix",
    "stabilizer",
    "stabilizer_from_matrices",
    "kernel_action_matrices",
    "generic_stabilizer_dim",
    "generic_stabilizer_dim_checked",
    "subalgebra_structure",
    "subalgebra_structure_from_matrices",
    "invariant_bilinear_space",
    "fixed_subspace",
    "isotypic_fingerprint",
    "invariant_quartic_dim",
]


class GenericityUncertain(RuntimeError):
    """The two configured primes disagree on a generic dimension."""


class ClosureViolation(RuntimeError):
    """A bracket left the candidate subalgebra span (bug or special point)."""


class Aborted(RuntimeError):
    """A budgeted computation exceeded its resource limit."""


@dataclass
class StabilizerReport:
    """Kernel of the stacked action map at one point."""

    dimension: int
    algebra_dimension: int
    orbit_dimension: int
    kernel: list
    trials: int | None = None
    primes: tuple | None = None

    def to_json_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "algebra_dimension": self.algebra_dimension,
            "orbit_dimension": self.orbit_dimension,
            "kernel": [[str(x) for x in v] for v in self.kernel],
            "trials": self.trials,
            "primes": list(self.primes) if self.primes else None,
        }


def action_matrix(rep: LieRepresentation, v) -> Matrix:
    """d x g matrix whose k-th column is rho(m_k) v."""
    field = rep.field
    if isinstance(field, PrimeField):
        cols = matmul_mod(rep.tensor, np.asarray(v, dtype=np.int64).reshape(1, -1, 1), field.p)
        return Matrix(field, None, _raw=np.ascontiguousarray(cols[:, :, 0].T))
    cols = [np.dot(rep.tensor[k], v) for k in range(rep.g)]
    return Matrix(field, np.stack(cols, axis=1))


def stabilizer(rep: LieRepresentation, v) -> StabilizerReport:
    """Stabilizer subalgebra of the point v: exact kernel, re-verified."""
    mat = action_matrix(rep, v)
    kernel = mat.kernel_basis()
    field = rep.field
    for z in kernel:
        # the defining property, checked again after extraction
        if isinstance(field, PrimeField):
            acting = np.tensordot(z, rep.tensor, axes=(0, 0)) % field.p
            img = matmul_mod(acting, np.asarray(v).reshape(-1, 1), field.p)
            if img.any():
                raise AssertionError("kernel vector does not annihilate the point")
        else:
            acting = sum(z[k] * rep.tensor[k] for k in range(rep.g))
            if any(x != 0 for x in np.dot(acting, v)):
                raise AssertionError("kernel vector does not annihilate the point")
    dim = len(kernel)
    return StabilizerReport(dim, rep.g, rep.g - dim, kernel)


def stabilizer_from_matrices(mats: list[Matrix], v) -> StabilizerReport:
    """Stabilizer kernel for a raw matrix list (no so(n) bookkeeping)."""
    field = mats[0].field
    cols = [m.apply(v) for m in mats]
    mat = Matrix(field, np.stack(cols, axis=1))
    kernel = mat.kernel_basis()
    return StabilizerReport(len(kernel), len(mats), len(mats) - len(kernel), kernel)


def kernel_action_matrices(kernel: list, rep: LieRepresentation) -> list[Matrix]:
    """Images of kernel vectors (so(n) coordinates) under the representation."""
    field = rep.field
    out = []
    for z in kernel:
        if isinstance(field, PrimeField):
            acting = np.tensordot(z, rep.tensor, axes=(0, 0)) % field.p
            out.append(Matrix(field, None, _raw=np.ascontiguousarray(acting)))
        else:
            acting = sum(z[k] * rep.tensor[k] for k in range(rep.g))
            out.append(Matrix(field, acting))
    return out


def generic_stabilizer_dim(rep: LieRepresentation, trials: int, rng: RandomSource) -> int:
    """Minimum stabilizer dimension over random trial points (one field)."""
    if trials < 1:
        raise ValueError("need trials >= 1")
    dims = []
    for t in range(trials):
        v = random_vector(rep.field, rep.dim, rng.child(t))
        dims.append(stabilizer(rep, v).dimension)
    return min(dims)


def generic_stabilizer_dim_checked(
    build_rep: Callable[[PrimeField], LieRepresentation],
    primes: tuple[int, int],
    trials: int,
    seed: int,
) -> int:
    """Two-prime genericity protocol; raises GenericityUncertain on mismatch."""
    dims = []
    for p in primes:
        rep = build_rep(GF(p))
        dims.append(generic_stabilizer_dim(rep, trials, RandomSource(seed)))
    if len(set(dims)) != 1:
        raise GenericityUncertain(
            f"primes {primes} disagree on generic stabilizer dimension: {dims}; raise trials"
        )
    return dims[0]


# -- subalgebra structure ------------------------------------------------------


@dataclass
class SubalgebraStructure:
    """Bracket-closed subalgebra with its own structure constants.

    The Killing form is computed from these structure constants (ad within
    the subalgebra), never restricted from the ambient algebra: the
    rank/nullity fingerprint is a statement about the subalgebra itself.
    """

    dimension: int
    basis: list
    structure_constants: np.ndarray  # (k, k, k), c[i, j, :] = [x_i, x_j]
    killing: Matrix
    killing_rank: int
    killing_nullity: int
    derived_dimension: int

    def to_json_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "killing_rank": self.killing_rank,
            "killing_nullity": self.killing_nullity,
            "derived_dimension": self.derived_dimension,
        }


def subalgebra_structure(kernel_vectors: list, carrier_rep: LieRepresentation) -> SubalgebraStructure:
    """Structure of the span of kernel vectors, through a faithful carrier.

    The kernel vectors live in so(n) coordinates; their images under any
    faithful representation (the natural one is the cheap choice) have the
    same brackets, so closure and structure constants are computed there.
    """
    mats = kernel_action_matrices(kernel_vectors, carrier_rep)
    return subalgebra_structure_from_matrices(mats, basis_vectors=list(kernel_vectors))


def subalgebra_structure_from_matrices(
    mats: list[Matrix], basis_vectors: list | None = None
) -> SubalgebraStructure:
    """Structure constants, Killing form and derived size of a matrix span."""
    k = len(mats)
    field = mats[0].field
    if k == 0:
        raise ValueError("empty subalgebra")
    flats = Matrix(field, np.stack([m.flatten() for m in mats], axis=1))
    if flats.rank() != k:
        raise ValueError("subalgebra basis matrices are dependent")
    brackets = []
    pairs = []
    for i in range(k):
        for j in range(i + 1, k):
            comm = mats[i] @ mats[j] - mats[j] @ mats[i]
            brackets.append(comm.flatten())
            pairs.append((i, j))
    if brackets:
        targets = Matrix(field, np.stack(brackets, axis=1))
        try:
            coords = coordinates_in_span(flats, targets)
        except ValueError as exc:
            raise ClosureViolation(str(exc)) from exc
    else:
        coords = Matrix.zeros(field, k, 0)

    if isinstance(field, PrimeField):
        c = np.zeros((k, k, k), dtype=np.int64)
        for idx, (i, j) in enumerate(pairs):
            c[i, j] = coords.data[:, idx]
            c[j, i] = (-coords.data[:, idx]) % field.p
    else:
        c = np.empty((k, k, k), dtype=object)
        c[:] = Fraction(0)
        for idx, (i, j) in enumerate(pairs):
            c[i, j] = coords.data[:, idx]
            c[j, i] = -coords.data[:, idx]

    # ad_i maps e_j to c[i, j, :], so its matrix is c[i].T
    ads = [np.ascontiguousarray(c[i].T) for i in range(k)]
    if isinstance(field, PrimeField):
        killing = np.zeros((k, k), dtype=np.int64)
        for i in range(k):
            for j in range(i, k):
                val = int(np.trace(matmul_mod(ads[i], ads[j], field.p)) % field.p)
                killing[i, j] = killing[j, i] = val
    else:
        killing = np.empty((k, k), dtype=object)
        killing[:] = Fraction(0)
        for i in range(k):
            for j in range(i, k):
                val = np.trace(np.dot(ads[i], ads[j]))
                killing[i, j] = killing[j, i] = val
    kmat = Matrix(field, killing)
    krank = kmat.rank()

    derived = Matrix(field, np.stack([c[i, j] for (i, j) in pairs], axis=0)) if pairs else None
    derived_dim = derived.rank() if derived is not None else 0

    return SubalgebraStructure(
        dimension=k,
        basis=basis_vectors if basis_vectors is not None else [m.flatten() for m in mats],
        structure_constants=c,
        killing=kmat,
        killing_rank=krank,
        killing_nullity=k - krank,
        derived_dimension=derived_dim,
    )


# -- invariant bilinear forms --------------------------------------------------


@dataclass
class BilinearInvariants:
    symmetric_dim: int
    antisymmetric_dim: int
    sample: Matrix | None
    sample_rank: int
    sample_symmetric: bool | None


def _diagonal_members(rep: LieRepresentation) -> list[int]:
    out = []
    for kk in range(rep.g):
        m = rep.tensor[kk]
        if isinstance(rep.field, PrimeField):
            if not (m - np.diag(np.diagonal(m))).any():
                out.append(kk)
        else:
            if all(m[i, j] == 0 for i in range(rep.dim) for j in range(rep.dim) if i != j):
                out.append(kk)
    return out


def invariant_bilinear_space(rep: LieRepresentation) -> BilinearInvariants:
    """All bilinear forms B with rho(m)^T B + B rho(m) = 0 for every basis m.

    Diagonal basis members (the split Cartan acts diagonally on all the
    representations built here) prune the candidate matrix units E_ab to the
    weight-opposite pairs; the surviving space is then intersected exactly
    with the constraint of every generator, diagonal ones included.
    """
    field = rep.field
    d = rep.dim
    diags = _diagonal_members(rep)
    if diags:
        neg_key = {}
        buckets: dict = {}
        for a in range(d):
            key = tuple(rep.tensor[kk][a, a] for kk in diags)
            buckets.setdefault(key, []).append(a)
            neg_key[a] = tuple(field.neg(x) for x in key)
        candidates = []
        for a in range(d):
            for b in buckets.get(neg_key[a], ()):
                candidates.append((a, b))
    else:
        candidates = [(a, b) for a in range(d) for b in range(d)]
    c = len(candidates)
    if c == 0:
        return BilinearInvariants(0, 0, None, 0, None)

    K = Matrix.identity(field, c)
    gf = isinstance(field, PrimeField)
    for kk in range(rep.g):
        if K.cols == 0:
            break
        M = rep.tensor[kk]
        if gf:
            img = np.zeros((d * d, c), dtype=np.int64)
            for j, (a, b) in enumerate(candidates):
                rows1 = np.arange(d) * d + b
                np.add.at(img[:, j], rows1, M[a, :])
                rows2 = a * d + np.arange(d)
                np.add.at(img[:, j], rows2, M[b, :])
            img %= field.p
        else:
            img = np.empty((d * d, c), dtype=object)
            img[:] = Fraction(0)
            for j, (a, b) in enumerate(candidates):
                for x in range(d):
                    img[x * d + b, j] += M[a, x]
                for y in range(d):
                    img[a * d + y, j] += M[b, y]
        constrained = Matrix(field, None, _raw=img) @ K if gf else Matrix(field, img) @ K
        null = constrained.kernel_basis()
        if not null:
            K = Matrix.zeros(field, c, 0)
            break
        K = K @ Matrix(field, np.stack(null, axis=1))

    total = K.cols
    if total == 0:
        return BilinearInvariants(0, 0, None, 0, None)

    forms = []
    for j in range(total):
        if gf:
            B = np.zeros((d, d), dtype=np.int64)
        else:
            B = np.empty((d, d), dtype=object)
            B[:] = Fraction(0)
        for idx, (a, b) in enumerate(candidates):
            coeff = K.data[idx, j]
            if gf:
                B[a, b] = (B[a, b] + coeff) % field.p
            else:
                B[a, b] += coeff
        forms.append(Matrix(field, B))

    sym_parts = [f + f.T for f in forms]
    alt_parts = [f - f.T for f in forms]

    def span_dim(parts):
        stack = [m.flatten() for m in parts if not m.is_zero()]
        if not stack:
            return 0
        return Matrix(field, np.stack(stack, axis=0)).rank()

    sym_dim = span_dim(sym_parts)
    alt_dim = span_dim(alt_parts)
    if sym_dim + alt_dim != total:
        raise AssertionError("invariant form space did not split into parities")

    sample = None
    sample_sym = None
    pool = [m for m in sym_parts if not m.is_zero()] or [m for m in alt_parts if not m.is_zero()]
    if pool:
        sample = pool[0]
        sample_sym = sample == sample.T
    return BilinearInvariants(sym_dim, alt_dim, sample, sample.rank() if sample else 0, sample_sym)


def fixed_subspace(mats: list[Matrix], field=None, dim: int | None = None):
    """Common null space of the matrices; returns (dimension, basis vectors).

    With an empty list the whole space is fixed, so the field and dimension
    must be supplied explicitly.
    """
    if not mats:
        if field is None or dim is None:
            raise ValueError("empty matrix list needs an explicit field and dimension")
        basis = [col for col in Matrix.identity(field, dim).data.T.copy()]
        return dim, basis
    stacked = Matrix.vstack(mats)
    basis = stacked.kernel_basis()
    return len(basis), basis


def isotypic_fingerprint(mats: list[Matrix]) -> tuple[int, int]:
    """(generated associative algebra dim, commutant dim).

    Certifies a module's decomposition shape without explicit intertwiners.
    """
    if not mats:
        raise ValueError("fingerprint of an empty matrix list")
    d = mats[0].rows
    return associative_closure(mats), commutant_dimension_with_size(mats, d)


# -- degree-4 invariants (budgeted stretch operation) ---------------------------


def invariant_quartic_dim(
    rep: LieRepresentation,
    max_candidates: int = 60_000,
    max_rows: int = 2_000_000,
) -> int:
    """Dimension of degree-4 invariant polynomials of the representation.

    Monomials are pruned by the diagonal (weight) generators first, then the
    surviving space is cut exactly by the derivation action of every
    generator.  Prime fields only; budget overruns raise Aborted.
    """
    field = rep.field
    if not isinstance(field, PrimeField):
        raise ValueError("quartic invariants are computed over a prime field only")
    d = rep.dim
    if d > 32:
        raise ValueError("quartic invariants support dimension <= 32")
    p = field.p

    diags = _diagonal_members(rep)
    weights = [np.diagonal(rep.tensor[kk]).copy() for kk in diags]

    def monomials():
        for i in range(d):
            for j in range(i, d):
                for k in range(j, d):
                    for l in range(k, d):
                        yield (i, j, k, l)

    candidates = []
    for mono in monomials():
        ok = True
        for w in weights:
            if (int(w[mono[0]]) + int(w[mono[1]]) + int(w[mono[2]]) + int(w[mono[3]])) % p:
                ok = False
                break
        if ok:
            candidates.append(mono)
            if len(candidates) > max_candidates:
                raise Aborted(f"quartic candidate budget exceeded ({max_candidates})")
    c = len(candidates)
    if c == 0:
        return 0
    cand_index = {m: i for i, m in enumerate(candidates)}

    K = Matrix.identity(field, c)
    for kk in range(rep.g):
        if K.cols == 0:
            break
        if kk in diags:
            continue  # already exact on the candidate set by construction
        M = rep.tensor[kk]
        rows_index: dict = {}
        entries: list[tuple[int, int, int]] = []
        for j, mono in enumerate(candidates):
            acc: dict = {}
            for pos in range(4):
                a = mono[pos]
                col = M[:, a] if False else M[a, :]
                # derivation: x_a -> sum_b M[a, b] x_b in slot pos
                for b in range(d):
                    coeff = int(col[b])
                    if coeff == 0:
                        continue
                    new = list(mono)
                    new[pos] = b
                    new.sort()
                    key = tuple(new)
                    acc[key] = (acc.get(key, 0) + coeff) % p
            for key, coeff in acc.items():
                if coeff == 0:
                    continue
                r = rows_index.setdefault(key, len(rows_index))
                entries.append((r, j, coeff))
        t = len(rows_index)
        if t * K.cols > max_rows * 8:
            raise Aborted("quartic row budget exceeded")
        img = np.zeros((t, c), dtype=np.int64)
        for r, j, coeff in entries:
            img[r, j] = coeff
        constrained = Matrix(field, None, _raw=img) @ K
        null = constrained.kernel_basis()
        if not null:
            return 0
        K = K @ Matrix(field, np.stack(null, axis=1))
    return K.cols
