import numpy as np
import pytest

from spincert.clifford import QuadraticSpace
from spincert.fields import GF, QQ, RandomSource
from spincert.linalg import Matrix, random_vector
from spincert.orbits import (
    Aborted,
    ClosureViolation,
    GenericityUncertain,
    fixed_subspace,
    generic_stabilizer_dim,
    generic_stabilizer_dim_checked,
    invariant_bilinear_space,
    invariant_quartic_dim,
    isotypic_fingerprint,
    kernel_action_matrices,
    stabilizer,
    subalgebra_structure,
)
from spincert.spinreps import (
    direct_sum,
    embed_subalgebra,
    half_spin_reps,
    restrict,
    spin_rep,
    vector_rep,
)

F = GF(1_000_003)
PRIMES = (1_000_003, 999_983)


def test_stabilizer_of_zero_is_everything():
    rep = spin_rep(QuadraticSpace(7), F)
    r = stabilizer(rep, np.zeros(8, dtype=np.int64))
    assert r.dimension == 21 and r.orbit_dimension == 0


def test_spin7_generic_stabilizer():
    dim = generic_stabilizer_dim_checked(
        lambda f: spin_rep(QuadraticSpace(7), f), PRIMES, trials=3, seed=0
    )
    assert dim == 14


def test_half14_generic_stabilizer():
    dim = generic_stabilizer_dim_checked(
        lambda f: half_spin_reps(QuadraticSpace(14), f)[0], PRIMES, trials=3, seed=0
    )
    assert dim == 28


def test_generic_dim_stable_under_seed_change():
    rep = spin_rep(QuadraticSpace(7), F)
    d0 = generic_stabilizer_dim(rep, 3, RandomSource(0))
    d1 = generic_stabilizer_dim(rep, 3, RandomSource(12345))
    assert d0 == d1 == 14


def test_genericity_uncertain_raised_on_disagreement():
    calls = []

    def flaky_build(field):
        calls.append(field.p)
        n = 7 if len(calls) == 1 else 5
        return spin_rep(QuadraticSpace(n), field)

    with pytest.raises(GenericityUncertain):
        generic_stabilizer_dim_checked(flaky_build, PRIMES, trials=1, seed=0)


def test_stabilizer_kernel_annihilates_exactly():
    rep = spin_rep(QuadraticSpace(7), F)
    v = random_vector(F, 8, RandomSource(0).child(0))
    r = stabilizer(rep, v)
    for z in r.kernel:
        acting = np.tensordot(z, rep.tensor, axes=(0, 0)) % F.p
        assert not (acting @ np.asarray(v) % F.p).any()


def test_subalgebra_structure_g2_fingerprint():
    rep = spin_rep(QuadraticSpace(7), F)
    v = random_vector(F, 8, RandomSource(0).child(0))
    r = stabilizer(rep, v)
    ss = subalgebra_structure(r.kernel, vector_rep(QuadraticSpace(7), F))
    assert ss.dimension == 14
    assert ss.killing_rank == 14 and ss.killing_nullity == 0
    assert ss.derived_dimension == 14  # perfect algebra


def test_subalgebra_structure_spin10_radical():
    rep = half_spin_reps(QuadraticSpace(10), F)[0]
    v = random_vector(F, 16, RandomSource(0).child(0))
    r = stabilizer(rep, v)
    assert r.dimension == 29
    ss = subalgebra_structure(r.kernel, vector_rep(QuadraticSpace(10), F))
    assert ss.killing_rank == 21 and ss.killing_nullity == 8


def test_closure_violation_on_non_closed_span():
    # opposite root vectors: their bracket is a Cartan combination, which
    # leaves the two-dimensional span
    rep = vector_rep(QuadraticSpace(7), F)
    z1 = np.zeros(21, dtype=np.int64)
    z2 = np.zeros(21, dtype=np.int64)
    z1[rep.basis_labels.index((0, 2))] = 1  # p1 p2
    z2[rep.basis_labels.index((1, 3))] = 1  # q1 q2
    with pytest.raises(ClosureViolation):
        subalgebra_structure([z1, z2], rep)


def test_stabilizer_kernels_bracket_closed():
    # subalgebra_structure succeeding is the closure certificate
    for n, build in ((7, spin_rep), (11, spin_rep)):
        rep = build(QuadraticSpace(n), F)
        v = random_vector(F, rep.dim, RandomSource(3).child(0))
        r = stabilizer(rep, v)
        subalgebra_structure(r.kernel, vector_rep(QuadraticSpace(n), F))


def test_generic_stabilizer_vector_sums():
    dim = generic_stabilizer_dim_checked(
        lambda f: direct_sum([vector_rep(QuadraticSpace(10), f)] * 5), PRIMES, 3, 0
    )
    assert dim == 10
    dim = generic_stabilizer_dim_checked(
        lambda f: direct_sum(
            [vector_rep(QuadraticSpace(7), f)] * 3 + [spin_rep(QuadraticSpace(7), f)]
        ),
        PRIMES,
        3,
        0,
    )
    assert dim == 0


def test_invariant_bilinear_spin7():
    inv = invariant_bilinear_space(spin_rep(QuadraticSpace(7), F))
    assert (inv.symmetric_dim, inv.antisymmetric_dim) == (1, 0)
    assert inv.sample_rank == 8 and inv.sample_symmetric
    # the sample is genuinely invariant and symmetric, re-checked cold
    B = inv.sample
    assert B == B.T
    rep = spin_rep(QuadraticSpace(7), F)
    for m in rep.matrices:
        assert (m.T @ B + B @ m).is_zero()


def test_invariant_bilinear_spin5_symplectic():
    inv = invariant_bilinear_space(spin_rep(QuadraticSpace(5), F))
    assert (inv.symmetric_dim, inv.antisymmetric_dim) == (0, 1)
    assert inv.sample_rank == 4 and inv.sample_symmetric is False


def test_invariant_bilinear_open_orbit_controls():
    inv10 = invariant_bilinear_space(half_spin_reps(QuadraticSpace(10), F)[0])
    assert (inv10.symmetric_dim, inv10.antisymmetric_dim) == (0, 0)
    assert inv10.sample is None


def test_invariant_bilinear_vector_rep_is_gram_line():
    inv = invariant_bilinear_space(vector_rep(QuadraticSpace(7), F))
    assert (inv.symmetric_dim, inv.antisymmetric_dim) == (1, 0)
    assert inv.sample_rank == 7


def test_fixed_subspace_examples():
    rep = spin_rep(QuadraticSpace(7), F)
    v = random_vector(F, 8, RandomSource(0).child(0))
    r = stabilizer(rep, v)
    mats = kernel_action_matrices(r.kernel, rep)
    dim, basis = fixed_subspace(mats)
    assert dim == 1
    stacked = Matrix(F, np.stack([basis[0], np.asarray(v)]))
    assert stacked.rank() == 1  # the fixed line is the point's line
    dim_full, _ = fixed_subspace(rep.matrices)
    assert dim_full == 0  # irreducibility control
    dim_empty, basis_empty = fixed_subspace([], field=F, dim=5)
    assert dim_empty == 5 and len(basis_empty) == 5


def test_isotypic_fingerprint_restricted_so5():
    space = QuadraticSpace(10)
    emb = embed_subalgebra(space, 5)
    res = restrict(half_spin_reps(space, F)[0], emb)
    assert isotypic_fingerprint(res.matrices) == (16, 16)


def test_isotypic_fingerprint_spin11_natural_module():
    # frozen from the exact computation, reproduced over five distinct primes;
    # the module splits 5 + dual(5) + trivial, hence commutant 3
    rep = spin_rep(QuadraticSpace(11), F)
    v = random_vector(F, 32, RandomSource(0).child(0))
    r = stabilizer(rep, v)
    mats = kernel_action_matrices(r.kernel, vector_rep(QuadraticSpace(11), F))
    assert isotypic_fingerprint(mats) == (51, 3)


def test_scaling_extension_invariant():
    # appending the scaling generator: stabilizer stays 8 for the derivation
    # action on one octonion copy (radial line joins the orbit image); the
    # spin14 variant is exercised in the suites
    from spincert.octonion import g2_stabilizer_checks

    rpt = g2_stabilizer_checks(PRIMES, 3, 0)
    assert rpt.vector_kernel == rpt.scaled_kernel == 8


def test_quartic_invariants_vector7():
    # q^2 spans the degree-4 invariants of the quadratic form
    assert invariant_quartic_dim(vector_rep(QuadraticSpace(7), F)) == 1


def test_quartic_invariants_spin11():
    assert invariant_quartic_dim(spin_rep(QuadraticSpace(11), F)) == 1


def test_quartic_budget_and_field_guards():
    with pytest.raises(Aborted):
        invariant_quartic_dim(spin_rep(QuadraticSpace(11), F), max_candidates=10)
    with pytest.raises(ValueError):
        invariant_quartic_dim(spin_rep(QuadraticSpace(11), QQ))
    with pytest.raises(ValueError):
        invariant_quartic_dim(half_spin_reps(QuadraticSpace(14), F)[0])


def test_reports_serialize_to_json():
    import json

    rep = spin_rep(QuadraticSpace(7), F)
    v = random_vector(F, 8, RandomSource(0).child(0))
    r = stabilizer(rep, v)
    r.trials = 3
    r.primes = PRIMES
    doc = r.to_json_dict()
    json.dumps(doc)
    assert doc["dimension"] == 14 and doc["orbit_dimension"] == 7
    ss = subalgebra_structure(r.kernel, vector_rep(QuadraticSpace(7), F))
    json.dumps(ss.to_json_dict())


def test_subalgebra_structure_rejects_dependent_basis():
    rep = vector_rep(QuadraticSpace(5), F)
    z = np.zeros(10, dtype=np.int64)
    z[0] = 1
    z2 = (2 * z) % F.p
    with pytest.raises(ValueError):
        subalgebra_structure([z, z2], rep)
