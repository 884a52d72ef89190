"""Johnson and Birman–Craggs–Johnson homomorphisms on factored Torelli elements.

Both homomorphisms are *defined* by their values on bounding pair maps and
separating twists; everything else (SIP-maps, words) is evaluated by summing
over a supplied factorization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .boolean import (
    BoolPoly,
    Mod2Matrix,
    bar,
    mod2_identity,
    mod2_matmul,
    mod2_transvection,
    multiply,
    sp2_action,
)
from .errors import DimensionError, InvariantError, MissingFactorizationError
from .homology import HClass, SurfaceConfig, intersection_pairing, mod2_reduce
from .wedge import Wedge3, contraction, wedge3

SymplecticPairs = tuple[tuple[HClass, HClass], ...]


def _check_symplectic_pairs(basis: SymplecticPairs, genus: int, what: str):
    flat = [v for pair in basis for v in pair]
    for v in flat:
        if v.genus != genus:
            raise DimensionError(f"{what}: basis vector of genus {v.genus} on a genus {genus} surface")
    for i, (ai, bi) in enumerate(basis):
        for j, (aj, bj) in enumerate(basis):
            want = int(i == j)
            if (intersection_pairing(ai, bj) != want
                    or intersection_pairing(ai, aj) != 0
                    or intersection_pairing(bi, bj) != 0):
                raise InvariantError(f"{what}: basis pairs {i} and {j} are not symplectic")


@dataclass(frozen=True)
class BPData:
    """A bounding pair T_c T_d^{-1}: the shared oriented class [c] = [d] and a
    symplectic basis of the subsurface the pair cobounds (genus = len(basis))."""

    pair_class: HClass
    basis: SymplecticPairs = ()
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(tuple(p) for p in self.basis))
        if self.sign not in (1, -1):
            raise InvariantError(f"sign must be ±1, got {self.sign}")
        g = self.pair_class.genus
        _check_symplectic_pairs(self.basis, g, "bounding pair")
        for a, b in self.basis:
            if intersection_pairing(a, self.pair_class) or intersection_pairing(b, self.pair_class):
                raise InvariantError("bounding pair: basis is not orthogonal to the pair class")

    @property
    def genus(self) -> int:
        return len(self.basis)

    @property
    def surface_genus(self) -> int:
        return self.pair_class.genus

    def inverse(self) -> BPData:
        return BPData(self.pair_class, self.basis, -self.sign)


@dataclass(frozen=True)
class SepTwistData:
    """A twist about a separating curve bounding a subsurface with the given basis."""

    surface_genus: int
    basis: SymplecticPairs = ()
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(tuple(p) for p in self.basis))
        if self.sign not in (1, -1):
            raise InvariantError(f"sign must be ±1, got {self.sign}")
        _check_symplectic_pairs(self.basis, self.surface_genus, "separating twist")

    @property
    def genus(self) -> int:
        return len(self.basis)

    def inverse(self) -> SepTwistData:
        return SepTwistData(self.surface_genus, self.basis, -self.sign)


@dataclass(frozen=True)
class SIPData:
    """An SIP-map [T_a, T_b] described by the boundary (w, x, y, z) of its lantern.

    ``five_bp`` is the five bounding-pair factorization, ``two_bp`` the
    two-factor one; either entry of ``two_bp`` may be ``None`` when the
    subsurface basis of that factor is unknown.
    """

    boundary: tuple[HClass, HClass, HClass, HClass]
    five_bp: tuple[BPData, ...] | None = None
    two_bp: tuple[BPData | None, BPData | None] | None = None
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(self.boundary))
        if self.five_bp is not None:
            object.__setattr__(self, "five_bp", tuple(self.five_bp))
            if len(self.five_bp) != 5:
                raise InvariantError(f"five_bp needs 5 items, got {len(self.five_bp)}")
        if self.two_bp is not None:
            object.__setattr__(self, "two_bp", tuple(self.two_bp))
            if len(self.two_bp) != 2:
                raise InvariantError(f"two_bp needs 2 items, got {len(self.two_bp)}")
        if self.sign not in (1, -1):
            raise InvariantError(f"sign must be ±1, got {self.sign}")
        if len(self.boundary) != 4:
            raise InvariantError("an SIP lantern has exactly four boundary classes")
        g = self.boundary[0].genus
        total = SurfaceConfig(g).zero()
        for v in self.boundary:
            total = total + v
        if not total.is_zero():
            raise InvariantError("lantern boundary classes must sum to zero")
        for i in range(4):
            for j in range(i + 1, 4):
                if intersection_pairing(self.boundary[i], self.boundary[j]):
                    raise InvariantError("lantern boundary classes must pair to zero")
        for bp in (self.five_bp or ()) + tuple(x for x in (self.two_bp or ()) if x is not None):
            if bp.surface_genus != g:
                raise DimensionError("factorization lives on a different surface")

    @property
    def surface_genus(self) -> int:
        return self.boundary[0].genus

    def inverse(self) -> SIPData:
        return SIPData(self.boundary, self.five_bp, self.two_bp, -self.sign)

    def transform(self, m) -> SIPData:
        """Image under an integral symplectic change of coordinates."""
        def move(bp):
            if bp is None:
                return None
            return BPData(m.apply(bp.pair_class),
                          tuple((m.apply(a), m.apply(b)) for a, b in bp.basis), bp.sign)
        return SIPData(
            tuple(m.apply(v) for v in self.boundary),
            None if self.five_bp is None else tuple(move(bp) for bp in self.five_bp),
            None if self.two_bp is None else tuple(move(bp) for bp in self.two_bp),
            self.sign,
        )


@dataclass(frozen=True)
class SSIPData:
    """A separating SIP-map [T_c, T_d] with c separating, given by the bases of
    the subsurfaces bounded by c and by T_d(c)."""

    curve: SepTwistData
    image: SepTwistData
    sign: int = 1

    def __post_init__(self):
        if self.curve.surface_genus != self.image.surface_genus:
            raise DimensionError("curve and its image live on different surfaces")

    @property
    def surface_genus(self) -> int:
        return self.curve.surface_genus


Item = Union[BPData, SepTwistData, SIPData, SSIPData]


@dataclass(frozen=True)
class TorelliFactorization:
    genus: int
    items: tuple[Item, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        for item in self.items:
            if item.surface_genus != self.genus:
                raise DimensionError(f"item on genus {item.surface_genus} in a genus {self.genus} word")

    def __add__(self, other: TorelliFactorization) -> TorelliFactorization:
        if other.genus != self.genus:
            raise DimensionError(f"genus mismatch: {self.genus} vs {other.genus}")
        return TorelliFactorization(self.genus, self.items + other.items)

    def inverse(self) -> TorelliFactorization:
        return TorelliFactorization(self.genus, tuple(_inverse_item(i) for i in reversed(self.items)))


def _inverse_item(item: Item) -> Item:
    if isinstance(item, SSIPData):
        return SSIPData(item.curve, item.image, -item.sign)
    return item.inverse()


# ---------------------------------------------------------------- Johnson τ

def tau_bp(b: BPData, sign: int | None = None) -> Wedge3:
    """τ(T_c T_d^{-1}) = Σ a_i ∧ b_i ∧ [c]."""
    sign = b.sign if sign is None else sign
    total = Wedge3.zero(b.surface_genus)
    for a, bb in b.basis:
        total = total + wedge3(a, bb, b.pair_class)
    return total * sign


def tau_sep(s: SepTwistData) -> Wedge3:
    return Wedge3.zero(s.surface_genus)


def tau_sip(s: SIPData) -> Wedge3:
    if s.five_bp is not None:
        parts = s.five_bp
    elif s.two_bp is not None and all(bp is not None for bp in s.two_bp):
        parts = s.two_bp
    else:
        raise MissingFactorizationError("τ of an SIP-map needs a complete factorization")
    total = Wedge3.zero(s.surface_genus)
    for bp in parts:
        total = total + tau_bp(bp)
    return total * s.sign


def tau_boundary(s: SIPData) -> Wedge3:
    """x∧y∧z for the boundary (w, x, y, z); equals τ(s) up to sign."""
    _, x, y, z = s.boundary
    return wedge3(x, y, z)


def tau_item(item: Item) -> Wedge3:
    if isinstance(item, BPData):
        return tau_bp(item)
    if isinstance(item, SepTwistData):
        return tau_sep(item)
    if isinstance(item, SIPData):
        return tau_sip(item)
    if isinstance(item, SSIPData):
        return Wedge3.zero(item.surface_genus)
    raise TypeError(f"not a Torelli generator: {item!r}")


def tau_word(f: TorelliFactorization) -> Wedge3:
    total = Wedge3.zero(f.genus)
    for item in f.items:
        total = total + tau_item(item)
    return total


# ------------------------------------------------- Birman–Craggs–Johnson σ

def _bar_or_zero(v: HClass) -> BoolPoly:
    # bar(u + u) = ū + ū + u·u = 0, so a class that vanishes mod 2 contributes 0
    if not any(mod2_reduce(v)):
        return BoolPoly.zero(v.genus)
    return bar(v)


def _symplectic_sum(basis: SymplecticPairs, genus: int) -> BoolPoly:
    total = BoolPoly.zero(genus)
    for a, b in basis:
        total = total + multiply(bar(a), bar(b))
    return total


def sigma_bp(b: BPData, sign: int | None = None) -> BoolPoly:
    """σ(T_c T_d^{-1}) = Σ ā_i b̄_i (1 + c̄).  The sign plays no role mod 2."""
    g = b.surface_genus
    factor = BoolPoly.one(g) + _bar_or_zero(b.pair_class)
    return multiply(_symplectic_sum(b.basis, g), factor)


def sigma_sep(s: SepTwistData) -> BoolPoly:
    return _symplectic_sum(s.basis, s.surface_genus)


def sigma_boundary(s: SIPData, which: Sequence[int] = (1, 2, 3)) -> BoolPoly:
    """Product of the boundary bars picked by ``which``; 0 if one of them is 0 mod 2."""
    polys = [_bar_or_zero(s.boundary[i]) for i in which]
    result = BoolPoly.one(s.surface_genus)
    for p in polys:
        result = multiply(result, p)
    return result


def _has_even_boundary(s: SIPData) -> bool:
    return any(not any(mod2_reduce(v)) for v in s.boundary)


def sigma_sip(s: SIPData) -> BoolPoly:
    """σ of an SIP-map.

    With a five-factor factorization the bounding pair images are summed;
    otherwise the boundary bar product x̄ȳz̄ is used.  Either way the result
    is checked against the vanishing criterion for lanterns with a boundary
    class that is zero mod 2.
    """
    g = s.surface_genus
    if s.five_bp is not None:
        total = BoolPoly.zero(g)
        for bp in s.five_bp:
            total = total + sigma_bp(bp)
    elif s.two_bp is not None and all(bp is not None for bp in s.two_bp):
        total = sigma_bp(s.two_bp[0]) + sigma_bp(s.two_bp[1])
    else:
        total = sigma_boundary(s)
    if _has_even_boundary(s) and not total.is_zero():
        raise InvariantError("SIP with a boundary class zero mod 2 must lie in ker σ")
    return total


def sigma_separating_sip(c: SepTwistData, image_c: SepTwistData) -> BoolPoly:
    """σ([T_c, T_d]) = σ(T_c) + σ(T_{T_d(c)}) for a separating curve c."""
    if c.surface_genus != image_c.surface_genus:
        raise DimensionError("curve and image on different surfaces")
    return sigma_sep(c) + sigma_sep(image_c)


def sigma_item(item: Item) -> BoolPoly:
    if isinstance(item, BPData):
        return sigma_bp(item)
    if isinstance(item, SepTwistData):
        return sigma_sep(item)
    if isinstance(item, SIPData):
        return sigma_sip(item)
    if isinstance(item, SSIPData):
        return sigma_separating_sip(item.curve, item.image)
    raise TypeError(f"not a Torelli generator: {item!r}")


def sigma_word(f: TorelliFactorization) -> BoolPoly:
    total = BoolPoly.zero(f.genus)
    for item in f.items:
        total = total + sigma_item(item)
    return total


# ------------------------------------------------------- kernel predicates

def sip_in_johnson_kernel(s: SIPData) -> bool:
    """Membership of an SIP-map in ker τ.

    Uses the factorization when one is present.  Without one, x∧y∧z decides,
    since it agrees with τ up to a sign.
    """
    try:
        return tau_sip(s).is_zero()
    except MissingFactorizationError:
        return tau_boundary(s).is_zero()


def sip_in_bcj_kernel(s: SIPData) -> bool:
    in_kernel = sigma_sip(s).is_zero()
    if in_kernel != _has_even_boundary(s):
        raise InvariantError("σ vanishing disagrees with the even-boundary criterion")
    return in_kernel


def chillingworth_closed_form(f: TorelliFactorization | Iterable[Item], genus: int | None = None) -> HClass:
    """Σ sign·2·genus·[γ] over bounding pairs; separating twists and SIP-maps add 0."""
    if isinstance(f, TorelliFactorization):
        genus, items = f.genus, f.items
    else:
        items = tuple(f)
        if genus is None:
            genus = items[0].surface_genus
    total = SurfaceConfig(genus).zero()
    for item in items:
        if isinstance(item, BPData):
            total = total + (item.sign * 2 * item.genus) * item.pair_class
    return total


def chillingworth_membership(f: TorelliFactorization) -> bool:
    """True iff the word lies in the Chillingworth subgroup ker(C∘τ)."""
    closed = chillingworth_closed_form(f)
    via_tau = contraction(tau_word(f))
    if closed != via_tau:
        raise InvariantError(f"Chillingworth class mismatch: {closed} vs {via_tau}")
    return closed.is_zero()


def putman_first_factor(s: SIPData) -> dict[tuple[int, int], int]:
    """Recover τ of the factor T_{T_a(b)}T_e^{-1} when only T_e T_b^{-1} is known.

    Returns the 2-form ω with τ(s) − τ(T_e T_b^{-1}) = ω ∧ [b]; raises
    :class:`InvariantError` if the residual does not have that shape.
    """
    if s.two_bp is None or s.two_bp[1] is None:
        raise MissingFactorizationError("need the second Putman factor")
    second = s.two_bp[1]
    residual = tau_sip(s) - tau_bp(second)
    omega = divide_wedge(residual, second.pair_class)
    if omega is None:
        raise InvariantError("residual is not of the form ω ∧ [b]")
    return omega


def divide_wedge(x: Wedge3, v: HClass) -> dict[tuple[int, int], int] | None:
    """Solve x = ω ∧ v for a 2-form ω (as a dict of index pairs), or return None.

    Contracting with a functional φ, φ(v) = 1, gives the candidate ω = ι_φ x;
    it works exactly when x is divisible by v.  Needs a coordinate of v equal
    to ±1 so that φ is integral.
    """
    pivot = next((i for i, c in enumerate(v.coords) if abs(c) == 1), None)
    if pivot is None:
        return None
    s = v.coords[pivot]
    omega: dict[tuple[int, int], int] = {}
    for (i, j, k), c in x.terms:
        for pos, rest in ((i, (j, k)), (j, (i, k)), (k, (i, j))):
            if pos == pivot:
                sign = -1 if pos == j else 1
                omega[rest] = omega.get(rest, 0) + sign * s * c
    omega = {key: c for key, c in omega.items() if c}
    if wedge2_times(omega, v) != x:
        return None
    return omega


def wedge2_times(omega: dict[tuple[int, int], int], v: HClass) -> Wedge3:
    """ω ∧ v for a 2-form given as a dict of index pairs."""
    surface = SurfaceConfig(v.genus)
    basis = surface.basis()
    total = Wedge3.zero(v.genus)
    for (i, j), c in omega.items():
        total = total + wedge3(basis[i], basis[j], v) * c
    return total


# ------------------------------------------------------------- SSIP span

def _quadratic_monomials(genus: int) -> list[int]:
    n = 2 * genus
    monos = [0] + [1 << i for i in range(n)]
    monos += [(1 << i) | (1 << j) for i in range(n) for j in range(i + 1, n)]
    return monos


def gf2_basis(polys: Iterable[BoolPoly], genus: int) -> list[BoolPoly]:
    """Reduced row echelon basis of the Z/2 span of ``polys``."""
    order = sorted(_quadratic_monomials(genus), key=lambda m: (bin(m).count("1"), m))
    index = {m: i for i, m in enumerate(order)}
    pivots: dict[int, int] = {}  # pivot bit -> row bitmask
    for p in polys:
        row = 0
        for m in p.monomials:
            if m not in index:
                raise InvariantError("span is restricted to degree ≤ 2")
            row ^= 1 << index[m]
        while row:
            top = row.bit_length() - 1
            if top in pivots:
                row ^= pivots[top]
            else:
                pivots[top] = row
                break
    # back-substitute to reduced form
    for top in sorted(pivots):
        for other in pivots:
            if other != top and (pivots[other] >> top) & 1:
                pivots[other] ^= pivots[top]
    basis = []
    for top in sorted(pivots, reverse=True):
        row = pivots[top]
        monos = frozenset(order[i] for i in range(len(order)) if (row >> i) & 1)
        basis.append(BoolPoly(genus, monos))
    return basis


def random_mod2_symplectic(genus: int, rng: random.Random, steps: int = 8) -> Mod2Matrix:
    m = mod2_identity(genus)
    n = 2 * genus
    for _ in range(steps):
        d = [rng.randint(0, 1) for _ in range(n)]
        m = mod2_matmul(m, mod2_transvection(genus, d))
    return m


def ssip_fixture_images(genus: int) -> list[BoolPoly]:
    """σ images of the three separating SIP configurations, embedded in genus ``genus``."""
    from .fixtures import ssip_fixtures  # local import: fixtures depends on this module

    return [sigma_item(item) for item in ssip_fixtures(genus).values()]


def ssip_span(genus: int, samples: int = 0, seed: int = 0) -> list[BoolPoly]:
    """Basis of the span of the SSIP fixture images and their images under
    ``samples`` random mod-2 symplectic changes of coordinates."""
    if genus < 2:
        raise InvariantError("separating SIP-maps need genus at least 2")
    rng = random.Random(seed)
    base = ssip_fixture_images(genus)
    polys = list(base)
    for _ in range(samples):
        m = random_mod2_symplectic(genus, rng)
        polys.extend(sp2_action(m, p) for p in base)
    return gf2_basis(polys, genus)


def symplectic_weight(p: BoolPoly) -> int:
    """Number of symplectic monomials ā_i b̄_i present in p."""
    g = p.genus
    return sum(p.coefficient(i, g + i) for i in range(g))
