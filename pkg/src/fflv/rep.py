"""Exact integer models of irreducible sl(n+1) modules and their submodules.

The module with highest weight (m_1, ..., m_n) is realized inside the tensor
product of m_k copies of the k-th exterior power of C^(n+1), one block per
fundamental weight.  Ambient basis vectors are tuples of k-element subsets of
{1, ..., n+1}; the matrix unit E_ab acts on each tensor factor by replacing b
with a (with the sign of the resorting shuffle) and is summed over factors.
All coordinates are integers and every rank is computed exactly.

Lowering and raising follow the convention that the lowering operator for the
positive root built on rows i..j is E_{j+1,i} and the raising operator is
E_{i,j+1}, so lowering moves weight down the dominance order.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations, product
from math import gcd
from typing import Iterable, Optional, Sequence

from .characters import to_partition, weyl_dimension
from .linalg import IntSpan
from .polytope import LatticePoint, PointSet, enumerate_lattice_points
from .roots import DominantWeight, Root, all_positive_roots
from .weyl import Permutation, RootSubset, is_triangular_subset, reduced_word

Vector = tuple[int, ...]
_SubsetKey = tuple[int, ...]
_BasisKey = tuple[_SubsetKey, ...]
_OpTable = tuple[tuple[tuple[int, int], ...], ...]


class DimensionCapError(RuntimeError):
    """A construction would exceed the configured dimension cap."""

    def __init__(self, needed: int, limit: int, what: str = "module") -> None:
        super().__init__(f"{what} needs dimension {needed}, cap is {limit}")
        self.needed = needed
        self.limit = limit


def _wedge_action(a: int, b: int, subset: _SubsetKey) -> Optional[tuple[_SubsetKey, int]]:
    """Apply the matrix unit E_ab to a basis subset of an exterior power.

    Returns the image subset and sign, or None when the image vanishes.
    """
    if a == b:
        return (subset, 1) if b in subset else None
    if b not in subset or a in subset:
        return None
    lo, hi = min(a, b), max(a, b)
    sign = -1 if sum(1 for s in subset if lo < s < hi) % 2 else 1
    image = tuple(sorted([a] + [s for s in subset if s != b]))
    return image, sign


class TensorSpace:
    """Ambient tensor product of exterior powers for one dominant weight.

    Factors are listed smallest exterior power first; the basis is the
    lexicographic product of the subset bases of the factors.
    """

    __slots__ = ("n", "factors", "basis", "index", "_tables")

    def __init__(self, n: int, factors: Sequence[int]) -> None:
        if n < 1:
            raise ValueError(f"rank must be at least 1, got {n}")
        for k in factors:
            if not 1 <= k <= n:
                raise ValueError(f"exterior power degree {k} outside 1..{n}")
        self.n = n
        self.factors = tuple(factors)
        pools = [tuple(combinations(range(1, n + 2), k)) for k in self.factors]
        self.basis: tuple[_BasisKey, ...] = tuple(product(*pools))
        self.index = {key: i for i, key in enumerate(self.basis)}
        self._tables: dict[tuple[int, int], _OpTable] = {}

    @classmethod
    def from_weight(cls, lam: DominantWeight) -> "TensorSpace":
        factors = [k for k, m in enumerate(lam.coeffs, start=1) for _ in range(m)]
        return cls(len(lam.coeffs), factors)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def highest_vector(self) -> Vector:
        top = tuple(tuple(range(1, k + 1)) for k in self.factors)
        vec = [0] * self.dimension
        vec[self.index[top]] = 1
        return tuple(vec)

    def weight_of(self, key: _BasisKey) -> tuple[int, ...]:
        """Content vector: how many tensor factors contain each of 1..n+1."""
        content = [0] * (self.n + 1)
        for subset in key:
            for s in subset:
                content[s - 1] += 1
        return tuple(content)

    def table(self, a: int, b: int) -> _OpTable:
        """Sparse action of E_ab summed over tensor factors, cached."""
        cached = self._tables.get((a, b))
        if cached is not None:
            return cached
        rows: list[tuple[tuple[int, int], ...]] = []
        for key in self.basis:
            entries: dict[int, int] = {}
            for f, subset in enumerate(key):
                hit = _wedge_action(a, b, subset)
                if hit is None:
                    continue
                image, sign = hit
                target = self.index[key[:f] + (image,) + key[f + 1:]]
                entries[target] = entries.get(target, 0) + sign
            rows.append(tuple((t, c) for t, c in entries.items() if c))
        table = tuple(rows)
        self._tables[(a, b)] = table
        return table

    def lowering_table(self, root: Root) -> _OpTable:
        return self.table(root.j + 1, root.i)

    def raising_table(self, root: Root) -> _OpTable:
        return self.table(root.i, root.j + 1)

    def apply(self, table: _OpTable, vec: Sequence[int]) -> Vector:
        out = [0] * self.dimension
        for i, v in enumerate(vec):
            if v:
                for t, c in table[i]:
                    out[t] += c * v
        return tuple(out)


@dataclass(frozen=True)
class ExplicitModule:
    """A submodule of the ambient tensor space, given by an echelon basis.

    The generator is the cyclic vector the basis was grown from; the basis
    rows are integer vectors in echelon form, so the dimension is their
    count and membership tests need no further elimination.
    """

    space: TensorSpace
    weight: DominantWeight
    generator: Vector
    basis: tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def span(self) -> IntSpan:
        span = IntSpan(self.space.dimension)
        for row in self.basis:
            span.add(row)
        return span

    def __contains__(self, vector: Sequence[int]) -> bool:
        return tuple(vector) in self.span()


def _closure(
    space: TensorSpace,
    starts: Iterable[Vector],
    tables: Sequence[_OpTable],
    cap: Optional[int] = None,
    what: str = "module",
) -> tuple[Vector, ...]:
    """Smallest span containing the start vectors and closed under the ops."""
    span = IntSpan(space.dimension)
    frontier: list[Vector] = []
    for vec in starts:
        row = span.add(vec)
        if row is not None:
            frontier.append(row)
    while frontier:
        vec = frontier.pop()
        for table in tables:
            row = span.add(space.apply(table, vec))
            if row is not None:
                if cap is not None and span.rank > cap:
                    raise DimensionCapError(span.rank, cap, what)
                frontier.append(row)
    return span.rows


def build_highest_weight_module(lam: DominantWeight, cap: int = 400) -> ExplicitModule:
    """Irreducible module generated from the highest vector by simple lowerings.

    The closure of the highest vector of the ambient tensor space under the
    simple lowering operators; its dimension always comes out equal to the
    Weyl dimension formula, which is checked.
    """
    n = len(lam.coeffs)
    expected = weyl_dimension(lam)
    if expected > cap:
        raise DimensionCapError(expected, cap)
    space = TensorSpace.from_weight(lam)
    simple = [space.lowering_table(Root(i, i)) for i in range(1, n + 1)]
    basis = _closure(space, [space.highest_vector()], simple, cap=cap)
    if len(basis) != expected:
        raise ArithmeticError(
            f"highest weight closure has dimension {len(basis)}, expected {expected}"
        )
    return ExplicitModule(space, lam, space.highest_vector(), basis)


def extremal_vector(module: ExplicitModule, w: Permutation) -> Vector:
    """The weight vector of extremal weight w(lambda), up to a scalar.

    Built by lowering along a reduced word: reading the word right to left,
    each letter contributes the full lowering string from the current
    weight.  The result spans the one-dimensional extremal weight space.
    """
    space = module.space
    if w.n != space.n:
        raise ValueError(f"permutation rank {w.n} does not match module rank {space.n}")
    content = list(to_partition(module.weight).parts)
    vec = module.generator
    for i in reversed(reduced_word(w)):
        amount = content[i - 1] - content[i]
        if amount < 0:
            raise ArithmeticError(
                f"negative lowering string at simple root {i}; wrong convention"
            )
        table = space.lowering_table(Root(i, i))
        for _ in range(amount):
            vec = space.apply(table, vec)
        content[i - 1], content[i] = content[i], content[i - 1]
    if not any(vec):
        raise ArithmeticError(f"extremal vector for {w} vanished")
    expected = [0] * (space.n + 1)
    parts = to_partition(module.weight).parts
    for i in range(1, space.n + 2):
        expected[w(i) - 1] = parts[i - 1]
    for idx, v in enumerate(vec):
        if v and list(space.weight_of(space.basis[idx])) != expected:
            raise ArithmeticError(f"extremal vector for {w} is not of weight {expected}")
    g = 0
    for v in vec:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        vec = tuple(v // g for v in vec)
    return vec


def demazure_submodule(module: ExplicitModule, w: Permutation) -> ExplicitModule:
    """Span generated from the extremal vector by the Borel subalgebra.

    Closure of the extremal vector of weight w(lambda) under all raising
    operators.  The Cartan subalgebra acts diagonally on every vector this
    produces (they are weight vectors), so no extra closure step is needed.
    """
    space = module.space
    gen = extremal_vector(module, w)
    tables = [space.raising_table(r) for r in all_positive_roots(space.n)]
    basis = _closure(space, [gen], tables, what="Borel closure")
    return ExplicitModule(space, module.weight, gen, basis)


def subset_submodule(module: ExplicitModule, A: RootSubset) -> ExplicitModule:
    """Span generated from the highest vector by the lowerings in A."""
    space = module.space
    if A.n != space.n:
        raise ValueError(f"subset rank {A.n} does not match module rank {space.n}")
    if not is_triangular_subset(A):
        warnings.warn(
            f"root subset {sorted(r.label for r in A.members)} is not triangular;"
            " the closure is still well defined",
            stacklevel=2,
        )
    tables = [space.lowering_table(r) for r in A.sorted_roots()]
    basis = _closure(space, [module.generator], tables, what="lowering closure")
    return ExplicitModule(space, module.weight, module.generator, basis)


def _ordered_image(
    module: ExplicitModule, listing: Sequence[Root], exponents: Sequence[int]
) -> Vector:
    """Apply the ordered product of lowering powers to the highest vector.

    The listing gives the product left to right; the rightmost factor acts
    first, so the loop walks the listing in reverse.
    """
    space = module.space
    vec = module.generator
    for root, e in zip(reversed(listing), reversed(list(exponents))):
        if not e:
            continue
        table = space.lowering_table(root)
        for _ in range(e):
            vec = space.apply(table, vec)
    return vec


def monomial_vector(module: ExplicitModule, point: LatticePoint) -> Vector:
    """Image of the highest vector under one ordered lowering monomial.

    Factors are ordered by (row, column) on the roots, fixed once for the
    whole package; the rightmost factor acts first.
    """
    if point.n != module.space.n:
        raise ValueError(f"point rank {point.n} does not match module rank {module.space.n}")
    listing = sorted(point.roots)
    exps = [point.value(r) for r in listing]
    return _ordered_image(module, listing, exps)


@dataclass(frozen=True)
class MonomialBasisReport:
    """Outcome of checking the ordered monomials against the lattice points."""

    lattice_points: int
    rank: int
    submodule_dimension: int
    independent: bool
    spanning: bool
    witness: Optional[LatticePoint]

    @property
    def ok(self) -> bool:
        return self.independent and self.spanning


def verify_monomial_basis(
    module: ExplicitModule, A: RootSubset, lam: DominantWeight
) -> MonomialBasisReport:
    """Check that the ordered monomials over the lattice points form a basis.

    For each lattice point of the face polytope, the ordered lowering
    monomial is applied to the highest vector; the report records whether
    those vectors are linearly independent and whether they span the
    submodule generated by the lowerings in A.  The witness is the first
    point (in sorted order) whose vector fell inside the span of its
    predecessors, if any.
    """
    if lam != module.weight:
        raise ValueError(f"module was built for {module.weight}, not {lam}")
    points = enumerate_lattice_points(A, lam)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        sub = subset_submodule(module, A)
    span = IntSpan(module.space.dimension)
    witness: Optional[LatticePoint] = None
    for point in points:
        if span.add(monomial_vector(module, point)) is None and witness is None:
            witness = point
    return MonomialBasisReport(
        lattice_points=len(points),
        rank=span.rank,
        submodule_dimension=sub.dimension,
        independent=witness is None,
        spanning=span.rank == sub.dimension,
        witness=witness,
    )


def pbw_filtration_profile(module: ExplicitModule, A: RootSubset) -> list[int]:
    """Dimensions of the filtration by number of lowering factors.

    Entry d is the dimension of the span of all products of at most d
    lowering operators from A applied to the highest vector; the list stops
    once the dimension stabilizes.  Successive differences count lattice
    points by degree when the monomial basis theorem applies.
    """
    space = module.space
    tables = [space.lowering_table(r) for r in A.sorted_roots()]
    span = IntSpan(space.dimension)
    first = span.add(module.generator)
    dims = [span.rank]
    frontier = [first] if first is not None else []
    while frontier:
        fresh: list[Vector] = []
        for vec in frontier:
            for table in tables:
                row = span.add(space.apply(table, vec))
                if row is not None:
                    fresh.append(row)
        if span.rank == dims[-1]:
            break
        dims.append(span.rank)
        frontier = fresh
    return dims


def _tall_first(roots: Iterable[Root]) -> list[Root]:
    """Total order on roots: taller first, then smaller starting row."""
    return sorted(roots, key=lambda r: (-(r.j - r.i), r.i))


def _degree_compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for head in range(total + 1):
        for tail in _degree_compositions(total - head, parts - 1):
            yield (head,) + tail


def essential_monomials(
    module: ExplicitModule, A: RootSubset, order: str = "revlex"
) -> PointSet:
    """Exponents whose ordered monomial escapes the span of all smaller ones.

    Monomials are compared degree first; within a degree, "revlex" compares
    exponent tuples (taller roots first) by reverse lexicographic order and
    "lex" by lexicographic order.  Exponents are scanned in increasing
    order and kept exactly when their monomial vector enlarges the span, so
    the result does not depend on any basis choice.
    """
    if order not in ("revlex", "lex"):
        raise ValueError(f"order must be 'revlex' or 'lex', got {order!r}")
    space = module.space
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        target = subset_submodule(module, A).dimension
    listing = _tall_first(A.members)
    span = IntSpan(space.dimension)
    found: list[dict[Root, int]] = []
    degree = 0
    while span.rank < target:
        if degree > 4 * target + 4:
            raise ArithmeticError("essential monomial scan did not stabilize")
        exps = list(_degree_compositions(degree, len(listing)))
        if order == "revlex":
            exps.sort(key=lambda s: tuple(-x for x in reversed(s)))
        else:
            exps.sort()
        for s in exps:
            if span.add(_ordered_image(module, listing, s)) is not None:
                found.append(dict(zip(listing, s)))
                if span.rank == target:
                    break
        degree += 1
    roots = A.sorted_roots()
    tuples = frozenset(tuple(f.get(r, 0) for r in roots) for f in found)
    return PointSet(space.n, roots, tuples)


def cartan_component_dimension(
    lam: DominantWeight, mu: DominantWeight, A: RootSubset, cap: int = 400
) -> int:
    """Dimension of the diagonal lowering closure of the top tensor vector.

    Inside the tensor product of the modules for the two weights, the
    vector (highest) x (highest) is closed under the diagonal action of the
    lowerings in A; the dimension of that span is returned.
    """
    n = len(lam.coeffs)
    if len(mu.coeffs) != n or A.n != n:
        raise ValueError("weights and subset must share one rank")
    left = TensorSpace.from_weight(lam)
    right = TensorSpace.from_weight(mu)
    d1, d2 = left.dimension, right.dimension
    if d1 * d2 > 40000:
        raise DimensionCapError(d1 * d2, 40000, "tensor ambient")
    width = d1 * d2

    def pair_table(root: Root) -> _OpTable:
        t1 = left.lowering_table(root)
        t2 = right.lowering_table(root)
        rows: list[tuple[tuple[int, int], ...]] = []
        for i1 in range(d1):
            for i2 in range(d2):
                entries = [(j1 * d2 + i2, c) for j1, c in t1[i1]]
                entries += [(i1 * d2 + j2, c) for j2, c in t2[i2]]
                rows.append(tuple(entries))
        return tuple(rows)

    tables = [pair_table(r) for r in A.sorted_roots()]
    start = [0] * width
    h1 = left.highest_vector().index(1)
    h2 = right.highest_vector().index(1)
    start[h1 * d2 + h2] = 1

    span = IntSpan(width)
    frontier = [span.add(tuple(start))]
    while frontier:
        vec = frontier.pop()
        for table in tables:
            out = [0] * width
            for i, v in enumerate(vec):
                if v:
                    for t, c in table[i]:
                        out[t] += c * v
            row = span.add(out)
            if row is not None:
                if span.rank > cap:
                    raise DimensionCapError(span.rank, cap, "diagonal closure")
                frontier.append(row)
    return span.rank
