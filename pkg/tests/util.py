"""Shared builders for the test suite."""

from fractions import Fraction

import formacheck as fc
from formacheck.corpus import even_sphere, product, truncated_poly, wedge
from formacheck.formats import parse_algebra_json


def algebra(obj):
    return parse_algebra_json(obj)


def s2():
    return algebra(even_sphere(2))


def cp2():
    return algebra(truncated_poly(2, 3))


def cp3():
    return algebra(truncated_poly(2, 4))


def wedge_s2_s2():
    return algebra(wedge(even_sphere(2), even_sphere(2)))


def corpus_objects():
    """A spread of small valid inputs used by the property suites."""
    s2_obj = even_sphere(2)
    s4_obj = even_sphere(4)
    s6_obj = even_sphere(6)
    return [
        s2_obj,
        s4_obj,
        s6_obj,
        truncated_poly(2, 3),
        truncated_poly(2, 4),
        truncated_poly(2, 5),
        truncated_poly(4, 3),
        wedge(s2_obj, s2_obj),
        wedge(s2_obj, s4_obj),
        wedge(truncated_poly(2, 3), s2_obj),
        product(s2_obj, s2_obj),
        product(s2_obj, s4_obj),
        product(truncated_poly(2, 3), s2_obj),
    ]


def pipeline(h, cap=None):
    """Run the whole pipeline; returns (gens, e, goods, model, report)."""
    gens = fc.choose_generators(h)
    e = fc.compute_E(h, gens)
    goods = fc.good_objects(h, gens)
    model = fc.build_model(h, gens, goods)
    used_cap = cap if cap is not None else 2 * h.top_degree + 1
    report = fc.verify_quasi_iso(model, h, used_cap)
    return gens, e, goods, model, report


def frac_matrix(rows):
    return fc.MatQ.from_rows([[Fraction(x) for x in row] for row in rows])


def random_invertible(rng, n):
    """(T, T^-1) with small integer entries, built from elementary ops."""
    t = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    tinv = [row[:] for row in t]
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        if rng.random() < 0.8:
            c = Fraction(rng.randint(-2, 2))
            # row_j += c * row_i on t; col_i -= c * col_j on tinv
            t[j] = [a + c * b for a, b in zip(t[j], t[i])]
            for row in tinv:
                row[i] -= c * row[j]
        else:
            t[i], t[j] = t[j], t[i]
            for row in tinv:
                row[i], row[j] = row[j], row[i]
    left = fc.MatQ.from_rows(t, cols=n)
    right = fc.MatQ.from_rows(tinv, cols=n)
    assert left.matmul(right) == fc.MatQ.identity(n)
    return left, right


def random_chain_complex(rng, max_dim=5, max_deg=6):
    """Random complex with d*d = 0 by construction and known homology.

    Start from a staircase normal form (sources map isomorphically onto
    boundary slots) and conjugate each degree by a random invertible matrix.
    Returns (complex, list of homology dims).
    """
    top = rng.randint(1, max_deg)
    dims = [rng.randint(0, max_dim) for _ in range(top + 1)]
    ranks = [0] * (top + 2)
    for n in range(top, 0, -1):
        bound = min(dims[n] - ranks[n + 1], dims[n - 1])
        ranks[n] = rng.randint(0, max(bound, 0)) if bound > 0 else 0
    canonical = []
    for n in range(1, top + 1):
        rows = [[Fraction(0)] * dims[n] for _ in range(dims[n - 1])]
        for j in range(ranks[n]):
            rows[ranks[n - 1] + j][j] = Fraction(1)
        canonical.append(fc.MatQ.from_rows(rows, cols=dims[n]))
    base_change = [random_invertible(rng, dims[n]) for n in range(top + 1)]
    boundaries = tuple(
        base_change[n - 1][0].matmul(canonical[n - 1]).matmul(base_change[n][1])
        for n in range(1, top + 1))
    homology = [dims[n] - ranks[n] - ranks[n + 1] for n in range(top + 1)]
    return fc.ChainComplexQ(tuple(dims), boundaries), homology


def random_even_monomial_algebra(rng):
    """Quotient of an even polynomial ring by a monomial ideal plus a degree
    cut: associative, commutative, and unital by construction."""
    num = rng.randint(1, 4)
    degs = sorted(rng.choice((2, 4, 6)) for _ in range(num))
    top = rng.randrange(max(degs), 13, 2)

    monos = []

    def walk(i, acc):
        if i == num:
            monos.append(tuple(acc))
            return
        budget = top - sum(e * d for e, d in zip(acc, degs))
        for e in range(budget // degs[i] + 1):
            walk(i + 1, acc + [e])

    walk(0, [])
    monos.sort()
    candidates = [m for m in monos if sum(m) >= 2]
    k = min(len(candidates), rng.randint(0, 3))
    ideal = sorted(rng.sample(candidates, k=k)) if k else []

    def killed(m):
        return any(all(a >= b for a, b in zip(m, g)) for g in ideal)

    basis = [m for m in monos if not killed(m)]
    label = {m: "m" + "".join(map(str, m)) for m in basis}
    basis_set = set(basis)
    products = {}
    for i, a in enumerate(basis):
        for b in basis[i:]:
            s = tuple(x + y for x, y in zip(a, b))
            if a != (0,) * num and b != (0,) * num and s in basis_set:
                products[(label[a], label[b])] = {label[s]: 1}
    return fc.GradedAlgebra.from_products(
        [(label[m], sum(e * d for e, d in zip(m, degs))) for m in basis],
        label[(0,) * num], products)
