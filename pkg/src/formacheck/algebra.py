"""Finite-dimensional graded commutative algebras over Q.

The input object is a basis with degrees plus a sparse multiplication table.
Only the half with left index <= right index is supplied; the mirror entry
is synthesized with the sign (-1)^(pq), which makes graded commutativity
structural wherever it can be.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .linalg import (ONE, RowSpace, Vec, extend_to_complement, unit_vec,
                     vec_is_zero, zero_vec)


class AlgebraStructureError(ValueError):
    """Structurally malformed input: bad indices, degrees, or table shape."""


@dataclass(frozen=True)
class GradedAlgebra:
    labels: tuple[str, ...]
    degrees: tuple[int, ...]
    unit_index: int
    mult: dict  # (i, j) -> Vec, both orders present, zero products omitted

    @property
    def dim(self) -> int:
        return len(self.labels)

    @cached_property
    def top_degree(self) -> int:
        return max(self.degrees)

    @cached_property
    def _by_degree(self) -> dict:
        out: dict[int, tuple[int, ...]] = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, ())
            out[d] += (i,)
        return out

    def degree_indices(self, n: int) -> tuple[int, ...]:
        return self._by_degree.get(n, ())

    def dim_in_degree(self, n: int) -> int:
        return len(self.degree_indices(n))

    def zero(self) -> Vec:
        return zero_vec(self.dim)

    def basis_vector(self, i: int) -> Vec:
        return unit_vec(self.dim, i)

    def unit(self) -> Vec:
        return self.basis_vector(self.unit_index)

    def mul(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
        out = [Fraction(0)] * self.dim
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb == 0:
                    continue
                entry = self.mult.get((i, j))
                if entry is None:
                    continue
                c = ca * cb
                for k, ck in enumerate(entry):
                    if ck != 0:
                        out[k] += c * ck
        return tuple(out)

    def homogeneous_degree(self, v: Sequence[Fraction]) -> Optional[int]:
        """Degree of a homogeneous element; None for zero, error for mixed."""
        degs = {self.degrees[i] for i, c in enumerate(v) if c != 0}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    @classmethod
    def from_products(cls, basis: Sequence[tuple[str, int]], unit: str,
                      products: Mapping[tuple[str, str], Mapping[str, Fraction]]
                      ) -> "GradedAlgebra":
        """Build from the half multiplication table keyed by labels.

        Pairs must satisfy left <= right in basis order; omitted pairs are
        zero products, and unit products default to the unit law.  Structural
        problems raise AlgebraStructureError; algebraic law violations are
        left for validate() to report.
        """
        labels = tuple(lab for lab, _ in basis)
        degrees = tuple(deg for _, deg in basis)
        if len(set(labels)) != len(labels):
            raise AlgebraStructureError("duplicate basis labels")
        if not labels:
            raise AlgebraStructureError("empty basis")
        for lab, deg in basis:
            if not isinstance(deg, int) or isinstance(deg, bool) or deg < 0:
                raise AlgebraStructureError(f"basis element {lab!r} has invalid degree {deg!r}")
        index = {lab: i for i, lab in enumerate(labels)}
        if unit not in index:
            raise AlgebraStructureError("missing unit")
        u = index[unit]
        if degrees[u] != 0:
            raise AlgebraStructureError("unit must have degree 0")

        dim = len(labels)
        mult: dict[tuple[int, int], Vec] = {}
        # unit law holds by default; explicit entries below may override it
        # (validate() will then flag the violation)
        for j in range(dim):
            mult[(u, j)] = unit_vec(dim, j)
            mult[(j, u)] = unit_vec(dim, j)

        for (left, right), value in products.items():
            if left not in index or right not in index:
                raise AlgebraStructureError(f"unknown label in pair ({left!r}, {right!r})")
            i, j = index[left], index[right]
            if i > j:
                raise AlgebraStructureError(
                    f"pair ({left!r}, {right!r}) is not in basis order; give left <= right only")
            vec = [Fraction(0)] * dim
            for lab, coeff in value.items():
                if lab not in index:
                    raise AlgebraStructureError(f"unknown label {lab!r} in product value")
                if isinstance(coeff, float):
                    raise AlgebraStructureError("floating point coefficients are not allowed")
                vec[index[lab]] = Fraction(coeff)
            entry = tuple(vec)
            sign = -ONE if (degrees[i] % 2 and degrees[j] % 2) else ONE
            mirror = entry if sign == 1 else tuple(-x for x in entry)
            if vec_is_zero(entry):
                mult.pop((i, j), None)
                if i != j:
                    mult.pop((j, i), None)
            else:
                mult[(i, j)] = entry
                if i != j:
                    mult[(j, i)] = mirror
        return cls(labels, degrees, u, mult)


@dataclass(frozen=True)
class ValidationReport:
    single_unit_in_degree_zero: bool
    graded_multiplicativity: bool
    unit_law: bool
    associativity: bool
    graded_commutativity: bool
    finite_dimensional: bool
    odd_degrees_vanish: bool
    failures: tuple[str, ...]

    @property
    def structure_ok(self) -> bool:
        """Everything except the odd-degree hypothesis flag."""
        return (self.single_unit_in_degree_zero and self.graded_multiplicativity
                and self.unit_law and self.associativity
                and self.graded_commutativity and self.finite_dimensional)


def validate(h: GradedAlgebra) -> ValidationReport:
    """Check the ring axioms and record witnesses for every failure.

    Odd-degree classes are reported as a hypothesis flag, not a structural
    failure: such inputs load and validate so the pipeline can diagnose
    them instead of crashing.
    """
    failures = []

    degree_zero = [i for i, d in enumerate(h.degrees) if d == 0]
    single_unit = degree_zero == [h.unit_index]
    if not single_unit:
        failures.append(
            "degree 0 must contain exactly the unit; found "
            + ", ".join(h.labels[i] for i in degree_zero))

    graded = True
    for (i, j), entry in sorted(h.mult.items()):
        expected = h.degrees[i] + h.degrees[j]
        bad = [k for k, c in enumerate(entry) if c != 0 and h.degrees[k] != expected]
        if bad:
            graded = False
            failures.append(
                f"product {h.labels[i]}*{h.labels[j]} has support in degree "
                f"{h.degrees[bad[0]]}, expected {expected}")
            break

    unit_ok = True
    u = h.unit()
    for j in range(h.dim):
        e = h.basis_vector(j)
        if h.mul(u, e) != e or h.mul(e, u) != e:
            unit_ok = False
            failures.append(f"unit law fails on {h.labels[j]}")
            break

    commutative = True
    for i in range(h.dim):
        for j in range(i, h.dim):
            a, b = h.basis_vector(i), h.basis_vector(j)
            ab = h.mul(a, b)
            ba = h.mul(b, a)
            sign = -1 if (h.degrees[i] % 2 and h.degrees[j] % 2) else 1
            if ab != tuple(sign * x for x in ba):
                commutative = False
                failures.append(
                    f"graded commutativity fails on ({h.labels[i]}, {h.labels[j]})")
                break
        if not commutative:
            break

    # O(dim^3) triple check; inputs are desk scale
    associative = True
    for i in range(h.dim):
        a = h.basis_vector(i)
        for j in range(h.dim):
            b = h.basis_vector(j)
            ab = h.mul(a, b)
            for k in range(h.dim):
                c = h.basis_vector(k)
                if h.mul(ab, c) != h.mul(a, h.mul(b, c)):
                    associative = False
                    failures.append(
                        f"associativity fails on ({h.labels[i]}, {h.labels[j]}, {h.labels[k]})")
                    break
            if not associative:
                break
        if not associative:
            break

    odd_vanish = all(d % 2 == 0 for d in h.degrees)

    return ValidationReport(
        single_unit_in_degree_zero=single_unit,
        graded_multiplicativity=graded,
        unit_law=unit_ok,
        associativity=associative,
        graded_commutativity=commutative,
        finite_dimensional=True,
        odd_degrees_vanish=odd_vanish,
        failures=tuple(failures),
    )


def decomposables(h: GradedAlgebra) -> dict[int, list[Vec]]:
    """Degreewise bases of the span of products of positive-degree classes.

    Returns a canonical (RREF) basis for each degree 1..top_degree; degree 0
    is excluded by definition.  The elimination runs in each degree's local
    coordinates and stops as soon as a degree is saturated.
    """
    spans = {n: RowSpace(h.dim_in_degree(n)) for n in range(1, h.top_degree + 1)}
    positive = [i for i in range(h.dim) if h.degrees[i] > 0]
    for i in positive:
        for j in positive:
            n = h.degrees[i] + h.degrees[j]
            if n > h.top_degree:
                continue
            span = spans[n]
            if span.rank == span.dim:
                continue
            prod = h.mult.get((i, j))
            if prod is not None:
                span.add(tuple(prod[k] for k in h.degree_indices(n)))
    out = {}
    for n in range(1, h.top_degree + 1):
        idx = h.degree_indices(n)
        full = []
        for row in spans[n].rows:
            vec = [Fraction(0)] * h.dim
            for slot, k in enumerate(idx):
                vec[k] = row[slot]
            full.append(tuple(vec))
        out[n] = full
    return out


@dataclass(frozen=True)
class Generator:
    label: str
    degree: int
    class_vector: Vec


@dataclass(frozen=True)
class GeneratorSet:
    """Chosen degreewise complement of the decomposables inside H^+.

    Ordered by (degree, basis index); the greedy standard-basis rule in
    extend_to_complement makes the choice reproducible, and the chosen
    classes are recorded verbatim in certificates.
    """

    generators: tuple[Generator, ...]

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, k: int) -> Generator:
        return self.generators[k]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    def all_even(self) -> bool:
        return all(d % 2 == 0 for d in self.degrees)


def choose_generators(h: GradedAlgebra) -> GeneratorSet:
    """Pick generators degree by degree as a complement of the decomposables."""
    decomp = decomposables(h)
    gens = []
    for n in range(1, h.top_degree + 1):
        idx = h.degree_indices(n)
        if not idx:
            continue
        local = [tuple(row[k] for k in idx) for row in decomp[n]]
        comp = extend_to_complement(local, len(idx))
        for e in comp:
            slot = next(k for k, c in enumerate(e) if c != 0)
            basis_index = idx[slot]
            gens.append((n, basis_index))
    generators = tuple(
        Generator(label=f"v{k + 1}", degree=n, class_vector=h.basis_vector(i))
        for k, (n, i) in enumerate(sorted(gens)))
    return GeneratorSet(generators)


def evaluate_phi(h: GradedAlgebra, gens: GeneratorSet,
                 exponents: Iterable[int]) -> Vec:
    """Product in h of the generator classes named by `exponents`.

    `exponents` lists generator indices with repetition (a multiset); it
    must be nonempty.  The result is zero whenever the product vanishes or
    its degree exceeds the top degree of h.
    """
    indices = list(exponents)
    if not indices:
        raise ValueError("evaluate_phi needs at least one generator index")
    out = gens[indices[0]].class_vector
    for k in indices[1:]:
        if vec_is_zero(out):
            return h.zero()
        out = h.mul(out, gens[k].class_vector)
    return out
