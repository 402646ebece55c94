import random
from fractions import Fraction

import pytest

from formacheck.linalg import (MatQ, RowSpace, extend_to_complement,
                               kernel_basis, rref, solve, unit_vec)

from util import frac_matrix


def rand_matrix(rng, rows, cols, scale=4):
    return MatQ.from_rows(
        [[Fraction(rng.randint(-scale, scale), rng.randint(1, 3)) for _ in range(cols)]
         for _ in range(rows)],
        cols=cols)


def test_rref_identity():
    m = MatQ.identity(2)
    out = rref(m)
    assert out.rref == m
    assert out.pivot_cols == (0, 1)
    assert out.rank == 2


def test_rref_proportional_rows():
    m = frac_matrix([[2, 4], [1, 2]])
    out = rref(m)
    assert out.rref == frac_matrix([[1, 2], [0, 0]])
    assert out.pivot_cols == (0,)
    assert out.rank == 1


def test_rref_fractional_entries():
    # second row is half the first, so the rank is 1
    m = MatQ.from_rows([[Fraction(1, 2), Fraction(1, 3)],
                        [Fraction(1, 4), Fraction(1, 6)]])
    assert rref(m).rank == 1


def test_kernel_zero_matrix():
    m = MatQ.zeros(3, 3)
    basis = kernel_basis(m)
    assert basis == [unit_vec(3, i) for i in range(3)]


def test_kernel_identity():
    assert kernel_basis(MatQ.identity(4)) == []


def test_kernel_single_row():
    m = frac_matrix([[1, 1, 0]])
    basis = kernel_basis(m)
    assert basis == [(Fraction(-1), Fraction(1), Fraction(0)),
                     (Fraction(0), Fraction(0), Fraction(1))]


def test_solve_identity():
    b = (Fraction(3), Fraction(-2))
    assert solve(MatQ.identity(2), b) == b


def test_solve_free_variables_zero():
    assert solve(frac_matrix([[1, 1]]), [2]) == (Fraction(2), Fraction(0))


def test_solve_inconsistent():
    assert solve(frac_matrix([[1], [1]]), [1, 2]) is None


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve(MatQ.identity(2), [1, 2, 3])


def test_extend_empty_subspace():
    assert extend_to_complement([], 2) == [unit_vec(2, 0), unit_vec(2, 1)]


def test_extend_one_vector():
    assert extend_to_complement([unit_vec(2, 0)], 2) == [unit_vec(2, 1)]


def test_extend_greedy_rule():
    sub = [(Fraction(1), Fraction(1), Fraction(0))]
    assert extend_to_complement(sub, 3) == [unit_vec(3, 0), unit_vec(3, 2)]


def test_float_entries_rejected():
    with pytest.raises(TypeError):
        MatQ.from_rows([[0.5]])


@pytest.mark.parametrize("seed", range(8))
def test_rank_of_transpose(seed):
    rng = random.Random(seed)
    m = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
    assert rref(m).rank == rref(m.transpose()).rank


@pytest.mark.parametrize("seed", range(8))
def test_rank_nullity(seed):
    rng = random.Random(100 + seed)
    m = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
    assert m.cols == rref(m).rank + len(kernel_basis(m))


@pytest.mark.parametrize("seed", range(8))
def test_solve_is_exact(seed):
    rng = random.Random(200 + seed)
    m = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
    x0 = [Fraction(rng.randint(-3, 3)) for _ in range(m.cols)]
    b = m.matvec(x0)
    x = solve(m, b)
    assert x is not None
    assert m.matvec(x) == b


@pytest.mark.parametrize("seed", range(8))
def test_kernel_vectors_annihilate(seed):
    rng = random.Random(300 + seed)
    m = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
    for v in kernel_basis(m):
        assert all(x == 0 for x in m.matvec(v))


@pytest.mark.parametrize("seed", range(8))
def test_complement_completes_the_space(seed):
    rng = random.Random(400 + seed)
    dim = rng.randint(1, 6)
    sub = [tuple(Fraction(rng.randint(-2, 2)) for _ in range(dim))
           for _ in range(rng.randint(0, dim))]
    sub_rank = rref(MatQ.from_rows(sub, cols=dim)).rank
    comp = extend_to_complement(sub, dim)
    assert len(comp) == dim - sub_rank
    assert rref(MatQ.from_rows(list(sub) + comp, cols=dim)).rank == dim


@pytest.mark.parametrize("seed", range(4))
def test_rational_contract(seed):
    # Fraction carries the exact-rational contract: positive denominator,
    # reduced form, and exact arithmetic
    rng = random.Random(500 + seed)
    for _ in range(50):
        a = Fraction(rng.randint(-99, 99), rng.randint(1, 99))
        b = Fraction(rng.randint(-99, 99), rng.randint(1, 99))
        assert a.denominator > 0
        from math import gcd
        assert gcd(abs(a.numerator), a.denominator) == 1
        assert (a + b) - b == a
        assert (a * b).denominator > 0


def test_rowspace_tracks_rank():
    rs = RowSpace(3)
    assert rs.add((Fraction(1), Fraction(1), Fraction(0))) is not None
    assert rs.add((Fraction(2), Fraction(2), Fraction(0))) is None
    assert rs.add((Fraction(0), Fraction(0), Fraction(1))) is not None
    assert rs.rank == 2
    assert rs.contains((Fraction(3), Fraction(3), Fraction(5)))
