"""Random valid Torelli data for property tests."""

import random

from torelli.calculus import BPData, SepTwistData, SIPData, TorelliFactorization
from torelli.fixtures import embed_sip, standard_sip
from torelli.homology import HClass, SpMatrix, SurfaceConfig, random_sp


def transform_bp(bp: BPData, m: SpMatrix) -> BPData:
    return BPData(m.apply(bp.pair_class), tuple((m.apply(a), m.apply(b)) for a, b in bp.basis), bp.sign)


def random_bp(genus: int, rng: random.Random, k: int | None = None) -> BPData:
    """A BP-map of subsurface genus k < genus in general position."""
    s = SurfaceConfig(genus)
    k = rng.randrange(genus) if k is None else k
    basis = tuple((s.a(i), s.b(i)) for i in range(1, k + 1))
    coords = [0] * (2 * genus)
    for i in range(k, genus):
        coords[i] = rng.randint(-2, 2)
        coords[genus + i] = rng.randint(-2, 2)
    if not any(coords):
        coords[k] = 1
    bp = BPData(s.vector(coords), basis, rng.choice((1, -1)))
    return transform_bp(bp, random_sp(genus, rng))


def random_sep(genus: int, rng: random.Random) -> SepTwistData:
    s = SurfaceConfig(genus)
    k = rng.randrange(genus + 1)
    m = random_sp(genus, rng)
    basis = tuple((m.apply(s.a(i)), m.apply(s.b(i))) for i in range(1, k + 1))
    return SepTwistData(genus, basis, rng.choice((1, -1)))


def random_sip(rng: random.Random, genus: int | None = None) -> SIPData:
    """Image of the standard fixture under a random integral symplectic matrix (g = 4 or 5)."""
    genus = rng.choice((4, 5)) if genus is None else genus
    s = standard_sip()
    if genus > 4:
        s = embed_sip(s, genus)
    s = s.transform(random_sp(genus, rng, steps=8))
    return s if rng.random() < 0.5 else s.inverse()


def random_boundary_sip(rng: random.Random, genus: int) -> SIPData:
    """Boundary-only SIP data: isotropic x, y, z with w = -(x+y+z), moved by a random Sp matrix."""
    s = SurfaceConfig(genus)

    def lag():
        return HClass(genus, tuple(rng.randint(-2, 2) for _ in range(genus)) + (0,) * genus)
    x, y, z = lag(), lag(), lag()
    m = random_sp(genus, rng)
    return SIPData(tuple(m.apply(v) for v in (-(x + y + z), x, y, z)))


def rebase(basis, m: SpMatrix):
    """New symplectic basis of the same subspace: columns of m in the old basis coordinates."""
    k = len(basis)
    old = [p[0] for p in basis] + [p[1] for p in basis]
    zero = old[0] * 0
    new = []
    for j in range(2 * k):
        v = zero
        for i in range(2 * k):
            if m.rows[i][j]:
                v = v + m.rows[i][j] * old[i]
        new.append(v)
    return tuple((new[i], new[k + i]) for i in range(k))


def random_word(genus: int, rng: random.Random, length: int) -> TorelliFactorization:
    items = []
    for _ in range(length):
        r = rng.random()
        if r < 0.6:
            bp = random_bp(genus, rng)
            items.append(bp)
            if rng.random() < 0.3:
                items.append(bp.inverse())
        elif r < 0.8:
            items.append(random_sep(genus, rng))
        elif genus >= 4:
            items.append(random_sip(rng, genus))
    rng.shuffle(items)
    return TorelliFactorization(genus, tuple(items))
