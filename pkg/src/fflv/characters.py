"""Formal characters on exponent vectors, Demazure operators, dimension
formulas, and the character read off from face lattice points.

Weights are encoded as exponent vectors in Z^{n+1}: a dominant weight with
coefficients (m_1, ..., m_n) becomes the partition (m_1+...+m_n, m_2+...+m_n,
..., m_n, 0), the root alpha_{i,j} becomes e_i - e_{j+1}, and permutations
act by permuting coordinates.  This keeps every operation in exact integer
arithmetic and makes termwise comparison of characters trivial.
"""

from __future__ import annotations

import json
from math import prod
from typing import Iterable, Mapping, NamedTuple

from .polytope import PointSet, enumerate_lattice_points
from .roots import DominantWeight, all_positive_roots, pairing
from .weyl import Permutation, RootSubset, inversion_roots, is_triangular_element, reduced_word


class PartitionWeight(NamedTuple):
    """Weakly decreasing exponent vector with last coordinate zero."""

    parts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.parts)


def to_partition(lam: DominantWeight) -> PartitionWeight:
    """Tail sums (m_k + ... + m_n) for k = 1..n, then a trailing zero."""
    tails = tuple(sum(lam.coeffs[k:]) for k in range(lam.n)) + (0,)
    return PartitionWeight(tails)


class Character:
    """A finite integer combination of formal exponentials x^a, a in Z^{n+1}.

    Multiplicities are nonzero integers; characters of actual modules carry
    positive ones, which the tests assert where it matters.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], int]):
        clean: dict[tuple[int, ...], int] = {}
        for vec, mult in terms.items():
            if len(vec) != n + 1:
                raise ValueError(f"exponent vector {vec} is not length {n + 1}")
            if mult:
                clean[tuple(vec)] = clean.get(tuple(vec), 0) + mult
        self.n = n
        self.terms = {v: m for v, m in clean.items() if m}

    @classmethod
    def monomial(cls, n: int, vec: Iterable[int], mult: int = 1) -> "Character":
        return cls(n, {tuple(vec): mult})

    @property
    def mass(self) -> int:
        return sum(self.terms.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "Character") -> "Character":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        out = dict(self.terms)
        for v, m in other.terms.items():
            out[v] = out.get(v, 0) + m
        return Character(self.n, out)

    def permuted(self, w: Permutation) -> "Character":
        """Coordinate permutation: coordinate w(i) of the image equals
        coordinate i of the original."""
        if w.n != self.n:
            raise ValueError("rank mismatch")
        out: dict[tuple[int, ...], int] = {}
        for vec, mult in self.terms.items():
            img = [0] * (self.n + 1)
            for i, a in enumerate(vec, start=1):
                img[w(i) - 1] = a
            key = tuple(img)
            out[key] = out.get(key, 0) + mult
        return Character(self.n, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for vec in sorted(self.terms, reverse=True):
            m = self.terms[vec]
            coeff = "" if m == 1 else f"{m}*"
            bits.append(f"{coeff}x^({','.join(str(a) for a in vec)})")
        return " + ".join(bits)

    def to_json(self) -> str:
        data = {
            "rank": self.n,
            "terms": {
                ",".join(str(a) for a in vec): self.terms[vec]
                for vec in sorted(self.terms, reverse=True)
            },
        }
        return json.dumps(data, separators=(",", ":"))


def demazure_operator(i: int, f: Character) -> Character:
    """Isobaric divided difference D_i f = (x_i f - x_{i+1} s_i f)/(x_i - x_{i+1}).

    Evaluated monomial by monomial via the closed string form: with
    d = a_i - a_{i+1}, the monomial x^a maps to the sum of the d+1 monomials
    sliding a_i down to a_{i+1} when d >= 0, to 0 when d = -1, and to minus
    the interior string when d <= -2.
    """
    if not 1 <= i <= f.n:
        raise ValueError(f"operator index {i} outside 1..{f.n}")
    out: dict[tuple[int, ...], int] = {}

    def bump(vec: tuple[int, ...], mult: int) -> None:
        out[vec] = out.get(vec, 0) + mult

    for vec, mult in f.terms.items():
        a, b = vec[i - 1], vec[i]
        d = a - b
        if d >= 0:
            for k in range(d + 1):
                bump(vec[: i - 1] + (a - k, b + k) + vec[i + 1 :], mult)
        elif d <= -2:
            for k in range(1, -d):
                bump(vec[: i - 1] + (a + k, b - k) + vec[i + 1 :], -mult)
    return Character(f.n, out)


def demazure_operator_division(i: int, f: Character) -> Character:
    """Same operator computed by literal polynomial division.

    Forms x_i f - x_{i+1} (s_i f) and divides by (x_i - x_{i+1}) with exact
    leading-term elimination; a nonzero remainder is an internal error.
    """
    if not 1 <= i <= f.n:
        raise ValueError(f"operator index {i} outside 1..{f.n}")
    num: dict[tuple[int, ...], int] = {}
    for vec, mult in f.terms.items():
        up = vec[: i - 1] + (vec[i - 1] + 1, vec[i]) + vec[i + 1 :]
        num[up] = num.get(up, 0) + mult
        swapped = vec[: i - 1] + (vec[i], vec[i - 1] + 1) + vec[i + 1 :]
        num[swapped] = num.get(swapped, 0) - mult
    num = {v: m for v, m in num.items() if m}

    # Group the numerator along (i, i+1)-strings: fixed other coordinates and
    # fixed pair sum s.  Within a string, N = Q * (x_i - x_{i+1}) forces the
    # quotient coefficient at i-exponent p to be the suffix sum of N above p,
    # and exactness means each string sums to zero.
    strings: dict[tuple, dict[int, int]] = {}
    for vec, mult in num.items():
        key = (vec[: i - 1] + vec[i + 1 :], vec[i - 1] + vec[i])
        strings.setdefault(key, {})[vec[i - 1]] = mult
    quot: dict[tuple[int, ...], int] = {}
    for (rest, s), coeffs in strings.items():
        if sum(coeffs.values()):
            raise ArithmeticError("division by x_i - x_{i+1} left a remainder")
        suffix = 0
        for p in range(max(coeffs), min(coeffs), -1):
            suffix += coeffs.get(p, 0)
            if suffix:
                qv = rest[: i - 1] + (p - 1, s - p) + rest[i - 1 :]
                quot[qv] = quot.get(qv, 0) + suffix
    return Character(f.n, quot)


def demazure_character_oracle(w: Permutation, lam: DominantWeight) -> Character:
    """Apply the operators along a reduced word of w, rightmost letter first,
    to the monomial of the partition encoding of the weight."""
    if w.n != lam.n:
        raise ValueError("rank mismatch")
    ch = Character.monomial(lam.n, to_partition(lam).parts)
    for i in reversed(reduced_word(w)):
        ch = demazure_operator(i, ch)
    return ch


def character_from_lattice_points(
    A: RootSubset,
    lam: DominantWeight,
    w: Permutation,
    points: PointSet | None = None,
    require_triangular: bool = True,
) -> Character:
    """Character read off from the face lattice points of the inversion set:
    the w-permuted exponentials of (partition weight minus the point's root
    sum), one per point.

    Demands that A equals inversion_roots(w) and, by default, that w is
    triangular: the formula is only a theorem in that case.  Passing
    require_triangular=False computes the same sum for any w so callers can
    measure how far it drifts from the true character.  A precomputed point
    set for (A, lam) may be passed to skip re-enumeration.
    """
    if w.n != lam.n or A.n != lam.n:
        raise ValueError("rank mismatch")
    if A.members != inversion_roots(w).members:
        raise ValueError("subset must be the inversion set of w")
    if require_triangular and not is_triangular_element(w):
        raise ValueError(f"{w} is not triangular; refusing to build the character")
    if points is None:
        points = enumerate_lattice_points(A, lam)
    elif points.n != lam.n or set(points.roots) != set(A.members):
        raise ValueError("point set does not match the subset")
    base = to_partition(lam).parts
    out: dict[tuple[int, ...], int] = {}
    for pt in points:
        vec = list(base)
        for r, v in zip(pt.roots, pt.values):
            vec[r.i - 1] -= v
            vec[r.j] += v
        img = [0] * (lam.n + 1)
        for i, a in enumerate(vec, start=1):
            img[w(i) - 1] = a
        key = tuple(img)
        out[key] = out.get(key, 0) + 1
    return Character(lam.n, out)


def weyl_dimension(lam: DominantWeight) -> int:
    """Product over the root triangle of (pairing + height)/height, exactly."""
    roots = all_positive_roots(lam.n)
    num = prod(pairing(lam, r) + r.height for r in roots)
    den = prod(r.height for r in roots)
    if num % den:
        raise ArithmeticError("dimension product is not an integer")
    return num // den


def demazure_dimension_oracle(w: Permutation, lam: DominantWeight) -> int:
    """Mass of the operator-built character: the submodule dimension."""
    return demazure_character_oracle(w, lam).mass
