"""The square-free Boolean algebra B over Z/2 attached to H_1(S; Z/2).

Every element is stored as a polynomial in the 2g basis bars (one variable per
basis class).  Bars of other classes are expanded on the spot with
``bar(u + v) = bar(u) + bar(v) + u·v``, so polynomials have a unique normal form.
Signs do not exist mod 2: ``1 - c̄`` is written ``1 + c̄`` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError, InvariantError
from .homology import HClass, basis_name, mod2_reduce


def _mask_vars(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _grlex_key(mask: int):
    return (bin(mask).count("1"), _mask_vars(mask))


@dataclass(frozen=True)
class BoolPoly:
    """Z/2 combination of square-free monomials; a monomial is a bitmask of variables."""

    genus: int
    monomials: frozenset[int] = frozenset()

    @classmethod
    def zero(cls, genus: int) -> BoolPoly:
        return cls(genus)

    @classmethod
    def one(cls, genus: int) -> BoolPoly:
        return cls(genus, frozenset({0}))

    @classmethod
    def var(cls, genus: int, index: int) -> BoolPoly:
        if not 0 <= index < 2 * genus:
            raise DimensionError(f"variable {index} out of range for genus {genus}")
        return cls(genus, frozenset({1 << index}))

    @classmethod
    def from_monomials(cls, genus: int, monos: Iterable[Iterable[int]]) -> BoolPoly:
        acc: set[int] = set()
        for mono in monos:
            mask = 0
            for i in mono:
                mask |= 1 << i
            acc ^= {mask}
        return cls(genus, frozenset(acc))

    def _check(self, other: BoolPoly):
        if other.genus != self.genus:
            raise DimensionError(f"genus mismatch: {self.genus} vs {other.genus}")

    def __add__(self, other: BoolPoly) -> BoolPoly:
        self._check(other)
        return BoolPoly(self.genus, self.monomials ^ other.monomials)

    __sub__ = __add__

    def __mul__(self, other: BoolPoly) -> BoolPoly:
        return multiply(self, other)

    def is_zero(self) -> bool:
        return not self.monomials

    def __bool__(self) -> bool:
        return bool(self.monomials)

    def sorted_monomials(self) -> list[int]:
        return sorted(self.monomials, key=_grlex_key)

    def monomial_names(self, mask: int) -> str:
        if mask == 0:
            return "1"
        return " ".join(basis_name(self.genus, i) for i in _mask_vars(mask))

    def render(self) -> str:
        """Canonical text, graded-lex: e.g. ``"a2 a4 + a2 a3 a4"``; zero is ``"0"``."""
        if not self.monomials:
            return "0"
        return " + ".join(self.monomial_names(m) for m in self.sorted_monomials())

    def to_json(self) -> list[list[str]]:
        return [[basis_name(self.genus, i) for i in _mask_vars(m)] for m in self.sorted_monomials()]

    def coefficient(self, *variables: int) -> int:
        mask = 0
        for i in variables:
            mask |= 1 << i
        return int(mask in self.monomials)

    def __str__(self) -> str:
        return self.render()


def multiply(p: BoolPoly, q: BoolPoly) -> BoolPoly:
    p._check(q)
    acc: set[int] = set()
    for m in p.monomials:
        for n in q.monomials:
            acc ^= {m | n}
    return BoolPoly(p.genus, frozenset(acc))


def product(polys: Iterable[BoolPoly], genus: int) -> BoolPoly:
    result = BoolPoly.one(genus)
    for p in polys:
        result = multiply(result, p)
    return result


def _pairing_mod2(genus: int, u: Sequence[int], v: Sequence[int]) -> int:
    return sum(u[i] * v[genus + i] + u[genus + i] * v[i] for i in range(genus)) % 2


def bar_vector(genus: int, v: Sequence[int]) -> BoolPoly:
    """bar of a Z/2 vector; the zero vector has no bar."""
    v = [x % 2 for x in v]
    if len(v) != 2 * genus:
        raise DimensionError(f"expected {2 * genus} coordinates, got {len(v)}")
    if not any(v):
        raise DomainError("bar is only defined for nonzero classes mod 2")
    monos = {1 << i for i, x in enumerate(v) if x}
    # one unit for every symplectic pair (a_i, b_i) in the support
    if sum(v[i] * v[genus + i] for i in range(genus)) % 2:
        monos.add(0)
    return BoolPoly(genus, frozenset(monos))


def bar(v: HClass | Sequence[int], genus: int | None = None) -> BoolPoly:
    if isinstance(v, HClass):
        return bar_vector(v.genus, mod2_reduce(v))
    if genus is None:
        genus = len(v) // 2
    return bar_vector(genus, v)


def degree(p: BoolPoly) -> int:
    if not p.monomials:
        return 0
    return max(bin(m).count("1") for m in p.monomials)


def is_in_B3(p: BoolPoly) -> bool:
    return degree(p) <= 3


# Z/2 symplectic matrices are tuples of rows of 0/1 entries acting on columns.
Mod2Matrix = tuple[tuple[int, ...], ...]


def mod2_identity(genus: int) -> Mod2Matrix:
    n = 2 * genus
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mod2_matmul(m: Mod2Matrix, n: Mod2Matrix) -> Mod2Matrix:
    cols = list(zip(*n))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) % 2 for col in cols) for row in m)


def mod2_apply(m: Mod2Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a * x for a, x in zip(row, v)) % 2 for row in m)


def mod2_transvection(genus: int, d: Sequence[int]) -> Mod2Matrix:
    """T_d mod 2: v ↦ v + (v·d) d.  Signs are irrelevant mod 2."""
    n = 2 * genus
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        t = _pairing_mod2(genus, e, d)
        cols.append(tuple((e[i] + t * d[i]) % 2 for i in range(n)))
    return tuple(zip(*cols))


def is_symplectic_mod2(m: Mod2Matrix, genus: int) -> bool:
    n = 2 * genus
    if len(m) != n or any(len(r) != n for r in m):
        return False
    cols = list(zip(*m))
    for i in range(n):
        for j in range(n):
            want = _pairing_mod2(genus, [int(k == i) for k in range(n)], [int(k == j) for k in range(n)])
            if _pairing_mod2(genus, cols[i], cols[j]) != want:
                return False
    return True


def sp2_action(m: Mod2Matrix, p: BoolPoly) -> BoolPoly:
    """Action of a mod-2 symplectic matrix: each basis bar goes to bar(M e_i)."""
    g = p.genus
    m = tuple(tuple(x % 2 for x in r) for r in m)
    if not is_symplectic_mod2(m, g):
        raise InvariantError("matrix does not preserve the mod 2 intersection pairing")
    cols = list(zip(*m))
    images = [bar_vector(g, cols[i]) for i in range(2 * g)]
    result = BoolPoly.zero(g)
    for mono in p.monomials:
        result = result + product((images[i] for i in _mask_vars(mono)), g)
    return result
