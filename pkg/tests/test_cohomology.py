import random
from fractions import Fraction

import pytest

import formacheck as fc
from formacheck.cohomology import (ChainComplexError, ChainComplexQ,
                                   duality_check, validate_square_zero)
from formacheck.linalg import MatQ

import oracles
from util import (algebra, corpus_objects, cp2, frac_matrix, pipeline,
                  random_chain_complex, s2, wedge_s2_s2)


def model_of(h):
    return fc.build_model(h, fc.choose_generators(h))


# ---- model cohomology ----

def test_sphere_cohomology_degree_2():
    model = model_of(s2())
    dim, reps = fc.cohomology_basis(model, 2)
    assert dim == 1
    assert reps == [(Fraction(1),)]  # the class of v


def test_sphere_cohomology_degree_4_exact():
    model = model_of(s2())
    dim, reps = fc.cohomology_basis(model, 4)
    assert (dim, reps) == (0, [])  # v^2 = dw


def test_degree_zero_constants():
    for obj in corpus_objects()[:4]:
        model = model_of(algebra(obj))
        dim, reps = fc.cohomology_basis(model, 0)
        assert dim == 1
        assert reps == [(Fraction(1),)]


def test_induced_map_sphere_bijective():
    h = s2()
    model = model_of(h)
    report = fc.induced_map(model, h, 2)
    assert (report.model_cohomology_dim, report.target_dim,
            report.induced_map_rank) == (1, 1, 1)
    assert report.bijective


def test_induced_map_degree_zero():
    h = cp2()
    report = fc.induced_map(model_of(h), h, 0)
    assert report.bijective
    assert report.induced_map_rank == 1


def test_wedge_degree_5_not_injective():
    h = wedge_s2_s2()
    report = fc.induced_map(model_of(h), h, 5)
    assert report.model_cohomology_dim == 2
    assert report.target_dim == 0
    assert not report.injective
    assert report.surjective


def test_verify_quasi_iso_sphere():
    h = s2()
    report = fc.verify_quasi_iso(model_of(h), h, 12)
    assert report.overall and report.first_failure is None
    dims = [r.model_cohomology_dim for r in report.reports]
    assert dims == [1, 0, 1] + [0] * 10


def test_verify_quasi_iso_cp2():
    h = cp2()
    report = fc.verify_quasi_iso(model_of(h), h, 12)
    assert report.overall
    assert [r.model_cohomology_dim for r in report.reports] == \
        [1, 0, 1, 0, 1] + [0] * 8


def test_verify_quasi_iso_wedge_first_failure():
    h = wedge_s2_s2()
    report = fc.verify_quasi_iso(model_of(h), h, 12)
    assert not report.overall
    assert report.first_failure == 5


def test_cap_below_top_rejected():
    h = cp2()
    with pytest.raises(ValueError):
        fc.verify_quasi_iso(model_of(h), h, 3)


def test_threads_give_identical_report():
    h = wedge_s2_s2()
    model = model_of(h)
    assert fc.verify_quasi_iso(model, h, 8) == \
        fc.verify_quasi_iso(model, h, 8, threads=4)


@pytest.mark.parametrize("obj_index", range(len(corpus_objects())))
def test_model_dims_match_brute_force_oracle(obj_index):
    h = algebra(corpus_objects()[obj_index])
    model = model_of(h)
    cap = 2 * h.top_degree + 1
    report = fc.verify_quasi_iso(model, h, cap)
    assert [r.model_cohomology_dim for r in report.reports] == \
        oracles.brute_model_dims(model, cap)


@pytest.mark.parametrize("obj_index", range(len(corpus_objects())))
def test_low_degrees_are_unit_and_empty(obj_index):
    # H^0 = Q and H^1 = 0 for every corpus model (no degree-1 classes)
    h = algebra(corpus_objects()[obj_index])
    report = fc.verify_quasi_iso(model_of(h), h, h.top_degree)
    assert (report.reports[0].model_cohomology_dim,
            report.reports[1].model_cohomology_dim) == (1, 0)
    assert report.reports[0].bijective and report.reports[1].bijective


@pytest.mark.parametrize("obj_index", range(len(corpus_objects())))
def test_surjective_up_to_top_degree(obj_index):
    h = algebra(corpus_objects()[obj_index])
    report = fc.verify_quasi_iso(model_of(h), h, h.top_degree)
    assert all(r.surjective for r in report.reports)


@pytest.mark.parametrize("obj_index", range(len(corpus_objects())))
def test_euler_characteristic_consistency(obj_index):
    h = algebra(corpus_objects()[obj_index])
    model = model_of(h)
    cap = 2 * h.top_degree + 1
    chain_dims = [len(fc.monomials_of_degree(model, n)) for n in range(cap + 1)]
    coh_dims = [fc.cohomology_basis(model, n)[0] for n in range(cap + 1)]
    boundary = fc.rref(fc.differential_matrix(model, cap)).rank
    lhs = sum((-1) ** n * d for n, d in enumerate(chain_dims)) - (-1) ** cap * boundary
    rhs = sum((-1) ** n * d for n, d in enumerate(coh_dims))
    assert lhs == rhs


# ---- chain complex duality ----

def zero_complex(dims):
    return ChainComplexQ(tuple(dims),
                         tuple(MatQ.zeros(dims[k], dims[k + 1])
                               for k in range(len(dims) - 1)))


def test_duality_zero_differentials():
    rows = duality_check(zero_complex((1, 0, 2)))
    assert [(r.homology_dim, r.dual_cohomology_dim, r.equal) for r in rows] == \
        [(1, 1, True), (0, 0, True), (2, 2, True)]


def test_duality_acyclic_pair():
    c = ChainComplexQ((1, 1), (MatQ.identity(1),))
    rows = duality_check(c)
    assert [(r.homology_dim, r.dual_cohomology_dim) for r in rows] == [(0, 0), (0, 0)]
    assert all(r.equal for r in rows)


def test_square_nonzero_rejected_with_degree():
    d2 = frac_matrix([[1]])
    d1 = frac_matrix([[1]])
    c = ChainComplexQ((1, 1, 1), (d1, d2))
    with pytest.raises(ChainComplexError) as err:
        duality_check(c)
    assert err.value.degree == 2


@pytest.mark.parametrize("seed", range(12))
def test_duality_random_complexes(seed):
    rng = random.Random(7000 + seed)
    c, expected = random_chain_complex(rng)
    validate_square_zero(c)
    rows = duality_check(c)
    assert all(r.equal for r in rows)
    assert [r.homology_dim for r in rows] == expected
