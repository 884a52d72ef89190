"""Degree-three exterior power of H with integer coefficients.

The Johnson homomorphism lands here.  Monomials are strictly increasing index
triples over the fixed basis order of :mod:`torelli.homology`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import DimensionError
from .homology import HClass, SurfaceConfig, basis_name, intersection_pairing

Monomial = tuple[int, int, int]


def _sort_sign(idx: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation, or 0 when an index repeats."""
    if len(set(idx)) < len(idx):
        return 0, idx
    sign = 1
    items = list(idx)
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return sign, tuple(items)


@dataclass(frozen=True)
class Wedge3:
    genus: int
    terms: tuple[tuple[Monomial, int], ...] = ()

    @classmethod
    def from_dict(cls, genus: int, terms: Mapping[Monomial, int]) -> Wedge3:
        n = 2 * genus
        clean = {}
        for mono, coeff in terms.items():
            if not (len(mono) == 3 and 0 <= mono[0] < mono[1] < mono[2] < n):
                raise DimensionError(f"bad wedge monomial {mono} for genus {genus}")
            if coeff:
                clean[tuple(mono)] = int(coeff)
        return cls(genus, tuple(sorted(clean.items())))

    @classmethod
    def zero(cls, genus: int) -> Wedge3:
        return cls(genus)

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def _check(self, other: Wedge3):
        if other.genus != self.genus:
            raise DimensionError(f"genus mismatch: {self.genus} vs {other.genus}")

    def __add__(self, other: Wedge3) -> Wedge3:
        self._check(other)
        acc = self.as_dict()
        for mono, c in other.terms:
            acc[mono] = acc.get(mono, 0) + c
        return Wedge3.from_dict(self.genus, acc)

    def __neg__(self) -> Wedge3:
        return Wedge3(self.genus, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: Wedge3) -> Wedge3:
        return self + (-other)

    def __mul__(self, k: int) -> Wedge3:
        return Wedge3.from_dict(self.genus, {m: k * c for m, c in self.terms})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def render(self) -> str:
        """Canonical text, e.g. ``"-1·a2^a3^a4"``; the zero element renders as ``"0"``."""
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms:
            names = "^".join(basis_name(self.genus, i) for i in mono)
            parts.append(f"{c}·{names}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [
            {"monomial": [basis_name(self.genus, i) for i in mono], "coeff": c}
            for mono, c in self.terms
        ]

    def __str__(self) -> str:
        return self.render()


def wedge3(u: HClass, v: HClass, w: HClass) -> Wedge3:
    """Expand u∧v∧w multilinearly into canonical monomials."""
    u._check(v)
    u._check(w)
    acc: dict[Monomial, int] = {}
    for i, x in enumerate(u.coords):
        if not x:
            continue
        for j, y in enumerate(v.coords):
            if not y:
                continue
            for k, z in enumerate(w.coords):
                if not z:
                    continue
                sign, mono = _sort_sign((i, j, k))
                if sign:
                    acc[mono] = acc.get(mono, 0) + sign * x * y * z
    return Wedge3.from_dict(u.genus, acc)


def contraction(x: Wedge3) -> HClass:
    """The map a∧b∧c ↦ 2(î(b,c)a + î(c,a)b + î(a,b)c), extended linearly.

    The cyclic arrangement of the pairings is what makes this alternating.
    """
    surface = SurfaceConfig(x.genus)
    basis = surface.basis()
    total = surface.zero()
    for (i, j, k), coeff in x.terms:
        a, b, c = basis[i], basis[j], basis[k]
        term = (intersection_pairing(b, c) * a
                + intersection_pairing(c, a) * b
                + intersection_pairing(a, b) * c)
        total = total + (2 * coeff) * term
    return total


def chillingworth_class(tau_image: Wedge3) -> HClass:
    return contraction(tau_image)


def e_f(c: HClass, t_f: HClass) -> int:
    """Winding-number change e_f(c) recovered from the Chillingworth class: c · t_f."""
    return intersection_pairing(c, t_f)
