"""Fixture configurations shipped with the package.

The Python builders below are the source of truth; the JSON files in
``torelli/fixtures/`` are generated from them (``python3 -m torelli.fixtures``)
and a test keeps the two in sync.
"""

from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path
from typing import Any

from .calculus import BPData, SepTwistData, SIPData, SSIPData, TorelliFactorization
from .errors import SchemaError
from .homology import HClass, SpMatrix, SurfaceConfig, embed
from .schema import factorization_to_json
from .words import (
    DerivationScript,
    Lantern,
    RelationEnv,
    Step,
    parse_env,
    parse_script,
    script_to_json,
    curve_class,
    word,
    word_to_json,
)

FIXTURE_DIR = "fixtures"


def _pairs(surface: SurfaceConfig, *pairs: tuple[str, str]):
    return tuple((surface.parse(a), surface.parse(b)) for a, b in pairs)


# ------------------------------------------------------------ SIP fixtures

def standard_sip() -> SIPData:
    """The g=4 SIP-map of the standard lantern picture.

    Boundary classes (w, x, y, z) = (-a4, a2, a3-a2, a4-a3), so that
    x∧y∧z = a2∧a3∧a4.  The five bounding pairs are (x,u), (w,v), (f,c),
    (d,a), (e,b); the Putman factorization only knows its second factor,
    which is the (e,b) pair.
    """
    s = SurfaceConfig(4)
    bp = [
        BPData(s.parse("-a2"), _pairs(s, ("a1", "b1"))),
        BPData(s.parse("-a4"), _pairs(s, ("a1", "b1"), ("a2", "b2"), ("a3", "b3"))),
        BPData(s.parse("a2-a3+a4"), _pairs(s, ("a1", "b1"), ("a2", "b2-a3+b3"))),
        BPData(s.parse("a3"), _pairs(s, ("a1", "b1"), ("a2", "b2"))),
        BPData(s.parse("-a2+a4"), _pairs(s, ("-a2+a3", "b3"))),
    ]
    boundary = tuple(s.parse(t) for t in ("-a4", "a2", "a3-a2", "a4-a3"))
    return SIPData(boundary, tuple(bp), (None, bp[4]))


def _linear_image(s: SIPData, images: dict[int, HClass]) -> SIPData:
    """Push every class of ``s`` through the linear map sending basis index i to images[i]."""
    g = s.surface_genus
    cols = [images.get(i, SurfaceConfig(g).basis_vector(i)).coords for i in range(2 * g)]
    m = SpMatrix(g, tuple(zip(*cols)))  # not symplectic in general; only .apply is used
    return s.transform(m)


def null_boundary_sip() -> SIPData:
    """Standard fixture with a4 sent to 0: the boundary class w becomes null-homologous."""
    s = standard_sip()
    return _linear_image(s, {3: SurfaceConfig(4).zero()})


def even_boundary_sip() -> SIPData:
    """Standard fixture with a4 sent to 2a4: w = -2a4 is nonzero over Z but zero mod 2."""
    s = standard_sip()
    return _linear_image(s, {3: SurfaceConfig(4).parse("2a4")})


def homologous_boundaries_sip() -> SIPData:
    """Boundary-only SIP data with x = -w and z = -y.  No factorization is known."""
    s = SurfaceConfig(4)
    return SIPData(tuple(s.parse(t) for t in ("-a2", "a2", "a3", "-a3")))


def sip_variant(name: str) -> SIPData:
    return SIP_BUILDERS[name]()


SIP_BUILDERS = {
    "standard_sip": standard_sip,
    "sip_null_boundary": null_boundary_sip,
    "sip_even_boundary": even_boundary_sip,
    "sip_homologous_boundaries": homologous_boundaries_sip,
}


def embed_sip(s: SIPData, genus: int) -> SIPData:
    def move(bp):
        if bp is None:
            return None
        return BPData(embed(bp.pair_class, genus), tuple((embed(a, genus), embed(b, genus)) for a, b in bp.basis),
                      bp.sign)
    return SIPData(
        tuple(embed(v, genus) for v in s.boundary),
        None if s.five_bp is None else tuple(move(bp) for bp in s.five_bp),
        None if s.two_bp is None else tuple(move(bp) for bp in s.two_bp),
        s.sign,
    )


# ----------------------------------------------------------- SSIP fixtures

def _sep(s: SurfaceConfig, *pairs) -> SepTwistData:
    return SepTwistData(s.genus, _pairs(s, *pairs))


def ssip_fixtures(genus: int = 2) -> dict[str, SSIPData]:
    """Separating SIP-maps of Types 2, 3 and 4, drawn on the first two handles.

    Pairs are ordered so that î(first, second) = +1; only their mod 2 bars matter.
    """
    s = SurfaceConfig(genus)
    return {
        "ssip_type2": SSIPData(_sep(s, ("a1", "b1")), _sep(s, ("a1+b2", "b1"))),
        "ssip_type3": SSIPData(_sep(s, ("b1+a2+b2", "b2")), _sep(s, ("a1+b1+a2+b2", "b2"))),
        "ssip_type4": SSIPData(_sep(s, ("a1", "b1")), _sep(s, ("a1+a2+b2", "b1+a2+b2"))),
    }


# ------------------------------------------------------- lantern fixtures

def standard_lantern() -> dict[str, Any]:
    """Lantern on three handles: boundary a1, a2, a3, -(a1+a2+a3); interior pairwise sums."""
    s = SurfaceConfig(3)
    classes = {
        "a": s.parse("a1"), "b": s.parse("a2"), "c": s.parse("a3"), "d": s.parse("-a1-a2-a3"),
        "x": s.parse("a1+a2"), "y": s.parse("a2+a3"), "z": s.parse("a1+a3"),
    }
    return {
        "genus": 3,
        "classes": classes,
        "env": RelationEnv.build(lanterns=[Lantern(("a", "b", "c", "d"), ("x", "y", "z"))]),
        "lhs": word("a b c d"),
        "rhs": word("x y z"),
    }


# ----------------------------------------------------- derivation scripts

def _steps(*raw: dict) -> tuple[Step, ...]:
    return tuple(Step.from_json(r) for r in raw)


def _sip_classes() -> dict[str, HClass]:
    """Homology classes of the curves in the two-lantern picture (g = 4).

    Each bounding pair of the factorization shares one class; T_a(b) and
    other conjugated ids are derived from these by the twist formula.
    """
    s = SurfaceConfig(4)
    names = {
        "x": "-a2", "y": "a2-a3", "z": "a3-a4", "w": "a4",
        "a": "a3", "b": "-a2+a4", "c": "a2-a3+a4",
        "u": "-a2", "v": "-a4",
        "f": "a2-a3+a4", "d": "a3", "e": "-a2+a4",
    }
    return {k: s.parse(v) for k, v in names.items()}


def _factorsip_env(extra_isotopies=()) -> RelationEnv:
    return RelationEnv.build(
        commuting=[("w", "e"), ("w", "d"), ("w", "f"), ("w", "v"), ("c", "e"), ("c", "d"), ("a", "e")],
        lanterns=[
            Lantern(("x", "y", "z", "w"), ("a", "b", "c")),
            Lantern(("y", "z", "v", "u"), ("f", "d", "e")),
        ],
        isotopies=extra_isotopies,
    )


def _factorsip_steps(offset: int = 0) -> list[dict]:
    return [
        {"rule": "lantern", "instance": 0, "position": offset, "length": 2,
         "replacement": word_to_json(word("x y z w c^-1"))},
        {"rule": "lantern", "instance": 1, "position": offset + 1, "length": 2,
         "replacement": word_to_json(word("v^-1 u^-1 f d e"))},
    ]


def lemma_factorsip() -> dict[str, Any]:
    script = DerivationScript(
        word("a b a^-1 b^-1"),
        _steps(
            *_factorsip_steps(),
            {"rule": "reorder", "to": word_to_json(word("x u^-1 w v^-1 f c^-1 d a^-1 e b^-1"))},
        ),
        word("x u^-1 w v^-1 f c^-1 d a^-1 e b^-1"),
        "five bounding pair factorization of [T_a, T_b]",
    )
    return {"genus": 4, "classes": _sip_classes(), "env": _factorsip_env(), "scripts": [script]}


def putman_f5() -> dict[str, Any]:
    script = DerivationScript(
        word("a b a^-1 b^-1"),
        _steps(
            {"rule": "conjugation-fold", "position": 0},
            {"rule": "free-insert", "position": 1, "id": "e", "exp": -1},
        ),
        word("T_a(b) e^-1 e b^-1"),
        "[T_a, T_b] = (T_{T_a(b)} T_e^-1)(T_e T_b^-1)",
    )
    return {"genus": 4, "classes": _sip_classes(), "env": _factorsip_env(), "scripts": [script]}


def johnson_lemma10() -> dict[str, Any]:
    """Johnson's six-twist identity, from comparing the two factorizations of [T_a, T_b].

    ``labels`` maps Johnson's curve names to the ids used here; ``d'`` is T_a(b).
    """
    script = DerivationScript(
        word("v w^-1 u x^-1 d' e^-1"),
        _steps(
            {"rule": "isotopy-replace", "from": "d'", "to": "T_a(b)"},
            {"rule": "conjugation-unfold", "position": 4},
            {"rule": "free-insert", "position": 7, "id": "b", "exp": -1},
            *_factorsip_steps(offset=4),
            {"rule": "free-cancel", "position": 3},
            {"rule": "free-cancel", "position": 11},
            {"rule": "reorder", "to": word_to_json(word("v v^-1 w^-1 u u^-1 w f c^-1 d a^-1 e e^-1"))},
            {"rule": "free-cancel", "position": 0},
            {"rule": "free-cancel", "position": 1},
            {"rule": "free-cancel", "position": 0},
            {"rule": "free-cancel", "position": 4},
        ),
        word("f c^-1 d a^-1"),
        "bounding pair identity from Putman's and the lantern factorization",
    )
    classes = dict(_sip_classes())
    classes["d'"] = curve_class("T_a(b)", classes)
    return {
        "genus": 4,
        "classes": classes,
        "env": _factorsip_env(extra_isotopies=[("d'", "T_a(b)")]),
        "scripts": [script],
        "labels": {"a": "v", "a'": "w", "b": "u", "b'": "x", "c": "b", "c'": "e", "c1": "y", "c3": "z",
                   "d": "d'", "e": "f", "e'": "c", "f": "d", "f'": "a"},
    }


def _lantern_env() -> RelationEnv:
    return RelationEnv.build(lanterns=[Lantern(("a", "b", "c", "d"), ("x", "y", "z"))])


def sip_equality() -> dict[str, Any]:
    script = DerivationScript(
        word("T_y^-1(x) y T_y^-1(x)^-1 y^-1"),
        _steps(
            {"rule": "conjugation-unfold", "position": 0},
            {"rule": "conjugation-unfold", "position": 4},
            {"rule": "free-cancel", "position": 3},
            {"rule": "free-cancel", "position": 4},
            {"rule": "lantern", "instance": 0, "position": 0, "length": 1,
             "replacement": word_to_json(word("a^-1 b^-1 c^-1 d^-1 z x"))},
            {"rule": "lantern", "instance": 0, "position": 7, "length": 1,
             "replacement": word_to_json(word("a b c d x^-1 z^-1"))},
            {"rule": "reorder",
             "to": word_to_json(word("z x x d^-1 d c^-1 c b^-1 b a^-1 a x^-1 z^-1 x^-1"))},
            *({"rule": "free-cancel", "position": 3} for _ in range(4)),
            {"rule": "free-cancel", "position": 2},
        ),
        word("z x z^-1 x^-1"),
        "[T_{T_y^-1(x)}, T_y] = [T_z, T_x]",
    )
    return {"genus": 3, "classes": standard_lantern()["classes"], "env": _lantern_env(), "scripts": [script]}


def sip_distinctness() -> dict[str, Any]:
    """[T_x, T_y] and [T_y, T_z] rewritten to words that differ in one twist.

    Whether T_x(z) and T_y^-1(z) are different curves is a geometric fact the
    word calculus cannot see; it is listed under ``axioms``.
    """
    first = DerivationScript(
        word("x y x^-1 y^-1"),
        _steps(
            {"rule": "lantern", "instance": 0, "position": 0, "length": 2,
             "replacement": word_to_json(word("a b c d z^-1"))},
            {"rule": "free-insert", "position": 4, "id": "x", "exp": -1},
            {"rule": "conjugation-fold", "position": 5},
        ),
        word("a b c d x^-1 T_x(z)^-1 y^-1"),
        "[T_x, T_y]",
    )
    second = DerivationScript(
        word("y z y^-1 z^-1"),
        _steps(
            {"rule": "lantern", "instance": 0, "position": 0, "length": 2,
             "replacement": word_to_json(word("x^-1 a b c d"))},
            {"rule": "reorder", "to": word_to_json(word("a b c d x^-1 y^-1 z^-1"))},
            {"rule": "free-insert", "position": 7, "id": "y", "exp": 1},
            {"rule": "conjugation-fold", "position": 5},
        ),
        word("a b c d x^-1 T_y^-1(z)^-1 y^-1"),
        "[T_y, T_z]",
    )
    return {
        "genus": 3,
        "classes": standard_lantern()["classes"],
        "env": _lantern_env(),
        "scripts": [first, second],
        "axioms": ["T_x(z) != T_y^-1(z)"],
    }


DERIVATION_BUILDERS = {
    "lemma_factorsip": lemma_factorsip,
    "putman_f5": putman_f5,
    "johnson_lemma10": johnson_lemma10,
    "sip_equality": sip_equality,
    "sip_distinctness": sip_distinctness,
}


# ------------------------------------------------------ JSON round trips

def _env_to_json(env: RelationEnv) -> dict:
    return {
        "commuting": sorted(sorted(p) for p in env.commuting_pairs),
        "lanterns": [{"boundary": list(l.boundary), "interior": list(l.interior)} for l in env.lanterns],
        "isotopies": sorted(sorted(p) for p in env.isotopies),
    }


def derivation_to_json(fx: dict[str, Any]) -> dict:
    out = {
        "genus": fx["genus"],
        "classes": {k: v.to_json() for k, v in fx["classes"].items()},
        "env": _env_to_json(fx["env"]),
        "scripts": [script_to_json(s) for s in fx["scripts"]],
    }
    for key in ("labels", "axioms"):
        if key in fx:
            out[key] = fx[key]
    return out


def derivation_from_json(doc: dict) -> dict[str, Any]:
    """Parse a derivation document; ``classes`` become HClass values."""
    if not isinstance(doc, dict) or "scripts" not in doc:
        raise SchemaError("derivation document needs a 'scripts' list")
    genus = doc.get("genus")
    out: dict[str, Any] = {
        "genus": genus,
        "env": parse_env(doc.get("env", {})),
        "scripts": [parse_script(s) for s in doc["scripts"]],
        "classes": {},
    }
    if genus is not None:
        surface = SurfaceConfig(genus)
        for k, v in doc.get("classes", {}).items():
            if not isinstance(v, list) or len(v) != 2 * genus:
                raise SchemaError(f"class of {k!r} must be an integer array of length {2 * genus}")
            out["classes"][k] = surface.vector(v)
    for key in ("labels", "axioms"):
        if key in doc:
            out[key] = doc[key]
    return out


def lantern_to_json(fx: dict[str, Any]) -> dict:
    return {
        "genus": fx["genus"],
        "classes": {k: v.to_json() for k, v in fx["classes"].items()},
        "env": _env_to_json(fx["env"]),
        "lhs": word_to_json(fx["lhs"]),
        "rhs": word_to_json(fx["rhs"]),
    }


def build_documents() -> dict[str, dict]:
    docs: dict[str, dict] = {}
    for name, build in SIP_BUILDERS.items():
        docs[name] = factorization_to_json(TorelliFactorization(4, (build(),)))
    for name, item in ssip_fixtures(2).items():
        docs[name] = factorization_to_json(TorelliFactorization(2, (item,)))
    docs["lantern"] = lantern_to_json(standard_lantern())
    for name, build in DERIVATION_BUILDERS.items():
        docs[name] = derivation_to_json(build())
    return docs


def fixture_names() -> list[str]:
    return sorted(p.name[:-5] for p in resources.files(__package__).joinpath(FIXTURE_DIR).iterdir()
                  if p.name.endswith(".json"))


def load_fixture(name: str) -> dict:
    """Raw JSON document of a shipped fixture (``name`` with or without ``.json``)."""
    if name.endswith(".json"):
        name = name[:-5]
    path = resources.files(__package__).joinpath(FIXTURE_DIR, f"{name}.json")
    if not path.is_file():
        raise SchemaError(f"no shipped fixture named {name!r}; known: {', '.join(fixture_names())}")
    return json.loads(path.read_text())


def write_documents(target: Path) -> list[Path]:
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for name, doc in build_documents().items():
        path = target / f"{name}.json"
        path.write_text(json.dumps(doc, indent=1) + "\n")
        written.append(path)
    return written


if __name__ == "__main__":
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).with_name(FIXTURE_DIR)
    for p in write_documents(out):
        print(p)
