"""First homology of a genus-g surface with one boundary component.

Classes are integer vectors in the basis ``a1 .. ag, b1 .. bg`` with
``î(a_i, b_i) = +1`` and every other basis pairing zero.  All arithmetic is
on Python integers, so nothing can overflow.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, InvariantError

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([ab])(\d+)")


@dataclass(frozen=True)
class SurfaceConfig:
    genus: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 1:
            raise InvariantError(f"genus must be a positive integer, got {self.genus!r}")

    @property
    def rank(self) -> int:
        return 2 * self.genus

    def zero(self) -> HClass:
        return HClass(self.genus, (0,) * self.rank)

    def a(self, i: int) -> HClass:
        return self.basis_vector(i - 1)

    def b(self, i: int) -> HClass:
        return self.basis_vector(self.genus + i - 1)

    def basis_vector(self, index: int) -> HClass:
        if not 0 <= index < self.rank:
            raise DimensionError(f"basis index {index} out of range for genus {self.genus}")
        coords = [0] * self.rank
        coords[index] = 1
        return HClass(self.genus, tuple(coords))

    def basis(self) -> list[HClass]:
        return [self.basis_vector(i) for i in range(self.rank)]

    def vector(self, coords: Sequence[int]) -> HClass:
        return HClass(self.genus, tuple(coords))

    def parse(self, text: str) -> HClass:
        """Parse expressions such as ``"a2 - a3 + 2b3"`` or ``"0"``."""
        text = text.strip()
        if text in ("", "0"):
            return self.zero()
        coords = [0] * self.rank
        pos = 0
        for m in _TERM.finditer(text):
            if text[pos:m.start()].strip():
                raise ValueError(f"cannot parse homology class {text!r}")
            pos = m.end()
            sign = -1 if m.group(1) == "-" else 1
            mult = int(m.group(2)) if m.group(2) else 1
            i = int(m.group(4))
            if not 1 <= i <= self.genus:
                raise DimensionError(f"{m.group(3)}{i} does not exist in genus {self.genus}")
            idx = i - 1 if m.group(3) == "a" else self.genus + i - 1
            coords[idx] += sign * mult
        if text[pos:].strip():
            raise ValueError(f"cannot parse homology class {text!r}")
        return self.vector(coords)


def basis_name(genus: int, index: int) -> str:
    if index < genus:
        return f"a{index + 1}"
    return f"b{index - genus + 1}"


@dataclass(frozen=True)
class HClass:
    genus: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != 2 * self.genus:
            raise DimensionError(
                f"class of genus {self.genus} needs {2 * self.genus} coordinates, got {len(self.coords)}"
            )
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def surface(self) -> SurfaceConfig:
        return SurfaceConfig(self.genus)

    def _check(self, other: HClass):
        if not isinstance(other, HClass):
            raise TypeError(f"expected HClass, got {type(other).__name__}")
        if other.genus != self.genus:
            raise DimensionError(f"genus mismatch: {self.genus} vs {other.genus}")

    def __add__(self, other: HClass) -> HClass:
        self._check(other)
        return HClass(self.genus, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: HClass) -> HClass:
        self._check(other)
        return HClass(self.genus, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> HClass:
        return HClass(self.genus, tuple(-x for x in self.coords))

    def __mul__(self, k: int) -> HClass:
        return HClass(self.genus, tuple(k * x for x in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def to_json(self) -> list[int]:
        return list(self.coords)

    def render(self) -> str:
        """Canonical text form, e.g. ``"2·a1"`` or ``"1·a2 + -1·a3"``; zero is ``"0"``."""
        terms = [f"{c}·{basis_name(self.genus, i)}" for i, c in enumerate(self.coords) if c]
        return " + ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.render()


def intersection_pairing(u: HClass, v: HClass) -> int:
    """Algebraic intersection number î(u, v)."""
    u._check(v)
    g = u.genus
    x, y = u.coords, v.coords
    return sum(x[i] * y[g + i] - x[g + i] * y[i] for i in range(g))


@dataclass(frozen=True)
class SpMatrix:
    """Integer 2g×2g matrix acting on column coordinate vectors."""

    genus: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = 2 * self.genus
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionError(f"expected a {n}x{n} matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, genus: int) -> SpMatrix:
        n = 2 * genus
        return cls(genus, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __matmul__(self, other: SpMatrix) -> SpMatrix:
        if other.genus != self.genus:
            raise DimensionError(f"genus mismatch: {self.genus} vs {other.genus}")
        cols = list(zip(*other.rows))
        return SpMatrix(self.genus, tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows
        ))

    def apply(self, v: HClass) -> HClass:
        if v.genus != self.genus:
            raise DimensionError(f"genus mismatch: {self.genus} vs {v.genus}")
        return HClass(self.genus, tuple(sum(a * x for a, x in zip(row, v.coords)) for row in self.rows))

    def transpose(self) -> SpMatrix:
        return SpMatrix(self.genus, tuple(zip(*self.rows)))

    def is_identity(self) -> bool:
        return self == SpMatrix.identity(self.genus)

    def is_symplectic(self) -> bool:
        j = form_matrix(self.genus)
        return self.transpose() @ j @ self == j

    def inverse(self) -> SpMatrix:
        # M^-1 = -J M^T J for symplectic M
        j = form_matrix(self.genus)
        inv = j @ self.transpose() @ j
        return SpMatrix(self.genus, tuple(tuple(-x for x in r) for r in inv.rows))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def form_matrix(genus: int) -> SpMatrix:
    """The Gram matrix J of the intersection pairing, î(u, v) = uᵀ J v."""
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for i in range(genus):
        rows[i][genus + i] = 1
        rows[genus + i][i] = -1
    return SpMatrix(genus, tuple(tuple(r) for r in rows))


def transvection(c: HClass, k: int = 1) -> SpMatrix:
    """Matrix of T_c^k on homology: v ↦ v + k·î(v, c)·c."""
    g = c.genus
    surface = SurfaceConfig(g)
    cols = []
    for e in surface.basis():
        cols.append((e + k * intersection_pairing(e, c) * c).coords)
    return SpMatrix(g, tuple(zip(*cols)))


def word_to_sp(word: Iterable[tuple[HClass, int]], genus: int | None = None) -> SpMatrix:
    """Product of transvections in word order (leftmost factor is applied last)."""
    word = list(word)
    if genus is None:
        if not word:
            raise DimensionError("genus is required for an empty word")
        genus = word[0][0].genus
    result = SpMatrix.identity(genus)
    for cls, exp in word:
        if cls.genus != genus:
            raise DimensionError(f"genus mismatch: {genus} vs {cls.genus}")
        result = result @ transvection(cls, exp)
    return result


def is_torelli_shadow(word: Iterable[tuple[HClass, int]], genus: int | None = None) -> bool:
    return word_to_sp(word, genus).is_identity()


def mod2_reduce(v: HClass) -> tuple[int, ...]:
    return tuple(x % 2 for x in v.coords)


def random_sp(genus: int, rng: random.Random, steps: int = 6, spread: int = 1) -> SpMatrix:
    """A random element of Sp(2g, Z) built from transvections of small vectors."""
    surface = SurfaceConfig(genus)
    m = SpMatrix.identity(genus)
    for _ in range(steps):
        coords = [rng.randint(-spread, spread) for _ in range(surface.rank)]
        if not any(coords):
            coords[rng.randrange(surface.rank)] = 1
        m = m @ transvection(surface.vector(coords), rng.choice((-1, 1)))
    return m


def embed(v: HClass, genus: int) -> HClass:
    """Include a class into a surface of larger genus (new a_i, b_i get coefficient 0)."""
    if genus < v.genus:
        raise DimensionError(f"cannot embed genus {v.genus} into genus {genus}")
    g = v.genus
    pad = (0,) * (genus - g)
    return HClass(genus, v.coords[:g] + pad + v.coords[g:] + pad)
