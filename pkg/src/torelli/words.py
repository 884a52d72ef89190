"""Formal words in Dehn twists and a checker for word-level derivations.

A word is a tuple of :class:`Twist` symbols.  Curve ids are opaque strings
except for ids of the form ``T_f(a)`` / ``T_f^-1(a)``, which name the image of
curve ``a`` under a twist about ``f``; these arise from folding a conjugate
``T_f T_a T_f^{-1}`` into a single twist.

Nothing here decides equality in the mapping class group.  A derivation is
replayed step by step, and each step must apply a rule that the relation
environment licenses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, NamedTuple, Sequence

from .errors import DerivationError, DimensionError, SchemaError
from .homology import HClass, SpMatrix, intersection_pairing, word_to_sp


class Twist(NamedTuple):
    id: str
    exp: int = 1

    def inverse(self) -> Twist:
        return Twist(self.id, -self.exp)

    def __str__(self) -> str:
        return self.id if self.exp == 1 else f"{self.id}^-1"


Word = tuple[Twist, ...]


def word(text: str) -> Word:
    """Parse whitespace separated symbols, a trailing ``^-1`` marking an inverse."""
    out = []
    for token in text.split():
        if token.endswith("^-1"):
            out.append(Twist(token[:-3], -1))
        else:
            out.append(Twist(token, 1))
    return tuple(out)


def render(w: Sequence[Twist]) -> str:
    return " ".join(str(t) for t in w) if w else "1"


def inverse(w: Sequence[Twist]) -> Word:
    return tuple(t.inverse() for t in reversed(w))


def conjugate_id(f: str, exp: int, a: str) -> str:
    return f"T_{f}({a})" if exp == 1 else f"T_{f}^-1({a})"


def split_conjugate_id(cid: str) -> tuple[str, int, str] | None:
    """Inverse of :func:`conjugate_id`; None for plain ids."""
    if not (cid.startswith("T_") and cid.endswith(")")):
        return None
    depth = 0
    for i in range(len(cid) - 1, -1, -1):
        ch = cid[i]
        if ch == ")":
            depth += 1
        elif ch == "(":
            depth -= 1
            if depth == 0:
                head, inner = cid[2:i], cid[i + 1:-1]
                if not head or not inner:
                    return None
                if head.endswith("^-1"):
                    return head[:-3], -1, inner
                return head, 1, inner
    return None


# ------------------------------------------------------------ reductions

def free_reduce(w: Sequence[Twist]) -> Word:
    out: list[Twist] = []
    for t in w:
        if out and out[-1].id == t.id and out[-1].exp == -t.exp:
            out.pop()
        else:
            out.append(t)
    return tuple(out)


def cyclic_reduce(w: Sequence[Twist]) -> Word:
    w = list(free_reduce(w))
    while len(w) >= 2 and w[0].id == w[-1].id and w[0].exp == -w[-1].exp:
        w = w[1:-1]
    return tuple(w)


def rotations(w: Sequence[Twist]) -> list[Word]:
    w = tuple(w)
    return [w[i:] + w[:i] for i in range(len(w))] or [()]


def lantern_classify(w: Sequence[Twist], a: str = "a", b: str = "b") -> str:
    """Nielsen–Thurston type of a word in T_a, T_b on the lantern.

    Reducible classes on the four-holed sphere are the conjugates of nonzero
    powers of T_a, T_b and T_a T_b; conjugacy in the free group on T_a, T_b
    is decided on cyclically reduced words.
    """
    for t in w:
        if t.id not in (a, b):
            raise SchemaError(f"symbol {t.id!r} is not one of {a!r}, {b!r}")
    c = cyclic_reduce(w)
    if not c:
        return "finite-order"
    if all(t == c[0] for t in c):
        return "reducible"
    if len(c) % 2 == 0:
        k = len(c) // 2
        for unit in ((Twist(a, 1), Twist(b, 1)), (Twist(b, -1), Twist(a, -1))):
            if c in rotations(unit * k):
                return "reducible"
    return "pseudo-Anosov"


# ------------------------------------------------------ relation environment

@dataclass(frozen=True)
class Lantern:
    """Instance of T_a T_b T_c T_d = T_x T_y T_z (boundary a..d, interior x, y, z)."""

    boundary: tuple[str, str, str, str]
    interior: tuple[str, str, str]

    def __post_init__(self):
        ids = tuple(self.boundary) + tuple(self.interior)
        if len(self.boundary) != 4 or len(self.interior) != 3 or len(set(ids)) != 7:
            raise SchemaError(f"lantern needs 4 + 3 distinct curves, got {ids}")

    def relator(self) -> Word:
        return tuple(Twist(c) for c in self.boundary) + tuple(Twist(c, -1) for c in reversed(self.interior))


@dataclass(frozen=True)
class RelationEnv:
    commuting_pairs: frozenset[frozenset[str]] = frozenset()
    lanterns: tuple[Lantern, ...] = ()
    isotopies: frozenset[frozenset[str]] = frozenset()
    _implied: frozenset[frozenset[str]] = field(default=frozenset(), init=False, repr=False, compare=False)

    def __post_init__(self):
        implied = set()
        for lan in self.lanterns:
            # boundary curves are disjoint from everything else in the lantern
            for c in lan.boundary:
                for d in lan.boundary + lan.interior:
                    if c != d:
                        implied.add(frozenset((c, d)))
        object.__setattr__(self, "_implied", frozenset(implied))

    @classmethod
    def build(cls, commuting: Iterable[Sequence[str]] = (), lanterns: Iterable[Lantern] = (),
              isotopies: Iterable[Sequence[str]] = ()) -> RelationEnv:
        return cls(frozenset(frozenset(p) for p in commuting), tuple(lanterns),
                   frozenset(frozenset(p) for p in isotopies))

    def commute(self, x: str, y: str) -> bool:
        if x == y:
            return True
        pair = frozenset((x, y))
        return pair in self.commuting_pairs or pair in self._implied


def trace_normal_form(env: RelationEnv, w: Sequence[Twist]) -> Word:
    """Lexicographically least word in the commutation class of ``w``.

    Greedy: repeatedly emit the smallest symbol that commutes with every symbol
    before it.
    """
    rest = list(w)
    out = []
    while rest:
        best = None
        for i, t in enumerate(rest):
            if all(env.commute(rest[j].id, t.id) for j in range(i)):
                if best is None or (t.id, t.exp) < (rest[best].id, rest[best].exp):
                    best = i
        out.append(rest.pop(best))
    return tuple(out)


def commutation_equivalent(env: RelationEnv, u: Sequence[Twist], v: Sequence[Twist]) -> bool:
    return trace_normal_form(env, u) == trace_normal_form(env, v)


def _trivial_by_relator(env: RelationEnv, candidate: Word, relator: Word) -> bool:
    """Is the cyclic word ``candidate`` a commutation-rearranged rotation of ``relator``^{±1}?"""
    cand = cyclic_reduce(candidate)
    targets = [cyclic_reduce(relator), cyclic_reduce(inverse(relator))]
    if any(len(cand) != len(t) for t in targets):
        return False
    target_forms = {trace_normal_form(env, r) for t in targets for r in rotations(t)}
    return any(trace_normal_form(env, r) in target_forms for r in rotations(cand))


# ------------------------------------------------------------ derivations

@dataclass(frozen=True)
class Step:
    rule: str
    args: Mapping[str, Any]

    @classmethod
    def from_json(cls, raw: Mapping[str, Any]) -> Step:
        if "rule" not in raw:
            raise SchemaError(f"step without a rule: {raw!r}")
        return cls(raw["rule"], {k: v for k, v in raw.items() if k != "rule"})


@dataclass(frozen=True)
class DerivationScript:
    start: Word
    steps: tuple[Step, ...]
    end: Word
    name: str = ""


@dataclass(frozen=True)
class DerivationReport:
    ok: bool
    failed_step: int | None = None
    rule: str | None = None
    message: str = ""
    final: Word = ()

    def __bool__(self) -> bool:
        return self.ok


class _Illegal(Exception):
    pass


def _word_arg(raw) -> Word:
    if isinstance(raw, str):
        return word(raw)
    return parse_word(raw)


def _position(args, w, span) -> int:
    i = args.get("position")
    if not isinstance(i, int) or i < 0 or i + span > len(w):
        raise _Illegal(f"position {i!r} out of range for a word of length {len(w)}")
    return i


def apply_step(env: RelationEnv, w: Word, step: Step) -> Word:
    """Apply one rewriting step, raising :class:`DerivationError` if it is not legal."""
    try:
        return _apply(env, w, step)
    except _Illegal as exc:
        raise DerivationError(str(exc)) from None


def _apply(env: RelationEnv, w: Word, step: Step) -> Word:
    args = step.args
    rule = step.rule
    if rule == "free-cancel":
        i = _position(args, w, 2)
        if not (w[i].id == w[i + 1].id and w[i].exp == -w[i + 1].exp):
            raise _Illegal(f"{w[i]} {w[i + 1]} is not an inverse pair")
        return w[:i] + w[i + 2:]
    if rule == "free-insert":
        i = _position(args, w, 0)
        t = Twist(args["id"], args.get("exp", 1))
        return w[:i] + (t, t.inverse()) + w[i:]
    if rule == "commute":
        i = _position(args, w, 2)
        if not env.commute(w[i].id, w[i + 1].id):
            raise _Illegal(f"{w[i].id} and {w[i + 1].id} are not declared disjoint")
        return w[:i] + (w[i + 1], w[i]) + w[i + 2:]
    if rule == "reorder":
        target = _word_arg(args["to"])
        if not commutation_equivalent(env, w, target):
            raise _Illegal("target is not reachable by commuting disjoint twists")
        return target
    if rule == "lantern":
        k = args.get("instance")
        if not isinstance(k, int) or not 0 <= k < len(env.lanterns):
            raise _Illegal(f"no lantern instance {k!r}")
        n = args.get("length")
        if not isinstance(n, int) or n < 0:
            raise _Illegal("lantern step needs a nonnegative length")
        i = _position(args, w, n)
        replacement = _word_arg(args["replacement"])
        old = w[i:i + n]
        if not _trivial_by_relator(env, old + inverse(replacement), env.lanterns[k].relator()):
            raise _Illegal(f"{render(old)} -> {render(replacement)} is not an instance of lantern {k}")
        return w[:i] + replacement + w[i + n:]
    if rule == "conjugation-fold":
        i = _position(args, w, 3)
        f, t, g = w[i:i + 3]
        if not (f.id == g.id and f.exp == -g.exp) or t.id == f.id:
            raise _Illegal(f"{f} {t} {g} is not a conjugate by a single twist")
        return w[:i] + (Twist(conjugate_id(f.id, f.exp, t.id), t.exp),) + w[i + 3:]
    if rule == "conjugation-unfold":
        i = _position(args, w, 1)
        parts = split_conjugate_id(w[i].id)
        if parts is None:
            raise _Illegal(f"{w[i].id} is not of the form T_f(a)")
        f, e, a = parts
        return w[:i] + (Twist(f, e), Twist(a, w[i].exp), Twist(f, -e)) + w[i + 1:]
    if rule == "isotopy-replace":
        src, dst = args.get("from"), args.get("to")
        if frozenset((src, dst)) not in env.isotopies:
            raise _Illegal(f"isotopy {src} ~ {dst} is not a declared axiom")
        if not any(t.id == src for t in w):
            raise _Illegal(f"{src} does not occur in the word")
        return tuple(Twist(dst, t.exp) if t.id == src else t for t in w)
    raise _Illegal(f"unknown rule {rule!r}")


def check_derivation(env: RelationEnv, script: DerivationScript) -> DerivationReport:
    w = tuple(script.start)
    for n, step in enumerate(script.steps):
        try:
            w = _apply(env, w, step)
        except (_Illegal, KeyError, TypeError) as exc:
            return DerivationReport(False, n, step.rule, str(exc), w)
    if w != tuple(script.end):
        return DerivationReport(False, len(script.steps), "end",
                                f"derived {render(w)}, declared {render(script.end)}", w)
    return DerivationReport(True, final=w)


# --------------------------------------------------------- homology shadow

def curve_class(cid: str, classes: Mapping[str, HClass]) -> HClass:
    """Homology class of a curve id, following T_f^{±1}(a) through the twist formula."""
    if cid in classes:
        return classes[cid]
    parts = split_conjugate_id(cid)
    if parts is None:
        raise KeyError(cid)
    f, e, a = parts
    cf, ca = curve_class(f, classes), curve_class(a, classes)
    return ca + (e * intersection_pairing(ca, cf)) * cf


def word_matrix(w: Sequence[Twist], classes: Mapping[str, HClass], genus: int) -> SpMatrix:
    try:
        pairs = [(curve_class(t.id, classes), t.exp) for t in w]
    except KeyError as exc:
        raise SchemaError(f"no homology class assigned to curve {exc.args[0]!r}") from None
    for cls, _ in pairs:
        if cls.genus != genus:
            raise DimensionError(f"class of genus {cls.genus} on a genus {genus} surface")
    return word_to_sp(pairs, genus)


def sp_shadow_check(env: RelationEnv | None, lhs: Sequence[Twist], rhs: Sequence[Twist],
                    classes: Mapping[str, HClass], genus: int) -> bool:
    """Necessary condition for lhs = rhs: equal images in Sp(2g, Z)."""
    return word_matrix(lhs, classes, genus) == word_matrix(rhs, classes, genus)


# ------------------------------------------------------------- JSON

def parse_word(raw: Any) -> Word:
    if not isinstance(raw, list):
        raise SchemaError(f"word must be a list of symbols, got {raw!r}")
    out = []
    for sym in raw:
        if not isinstance(sym, dict) or "id" not in sym:
            raise SchemaError(f"bad symbol {sym!r}")
        exp = sym.get("exp", 1)
        if exp not in (1, -1):
            raise SchemaError(f"exponent must be ±1, got {exp!r}")
        out.append(Twist(str(sym["id"]), exp))
    return tuple(out)


def word_to_json(w: Sequence[Twist]) -> list[dict]:
    return [{"id": t.id, "exp": t.exp} for t in w]


def parse_env(raw: Mapping[str, Any]) -> RelationEnv:
    lanterns = []
    for lan in raw.get("lanterns", []):
        lanterns.append(Lantern(tuple(lan["boundary"]), tuple(lan["interior"])))
    return RelationEnv.build(raw.get("commuting", []), lanterns, raw.get("isotopies", []))


def parse_script(raw: Mapping[str, Any]) -> DerivationScript:
    try:
        return DerivationScript(
            parse_word(raw["start"]),
            tuple(Step.from_json(s) for s in raw["steps"]),
            parse_word(raw["end"]),
            raw.get("name", ""),
        )
    except KeyError as exc:
        raise SchemaError(f"derivation script is missing {exc.args[0]!r}") from None


def step_to_json(step: Step) -> dict:
    out = {"rule": step.rule}
    for k, v in step.args.items():
        if isinstance(v, tuple):
            v = word_to_json(v)
        out[k] = v
    return out


def script_to_json(script: DerivationScript) -> dict:
    return {
        "name": script.name,
        "start": word_to_json(script.start),
        "steps": [step_to_json(s) for s in script.steps],
        "end": word_to_json(script.end),
    }


# ---------------------------------------------------- words in a and b

def classify_text(text: str) -> Word:
    """Parse words like ``"[a,b]"``, ``"B^-1 (ab)^3 b"`` or ``"a b A B"``.

    Capital letters denote inverses.  Commutators ``[u,v]`` and parenthesised
    groups may carry an integer exponent.
    """
    parser = _AbParser(text.replace(" ", ""))
    w = parser.parse_word()
    if parser.pos != len(parser.text):
        raise SchemaError(f"unexpected {parser.text[parser.pos:]!r} in {text!r}")
    return w


class _AbParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise SchemaError(f"expected {ch!r} at position {self.pos} in {self.text!r}")
        self.pos += 1

    def parse_word(self) -> Word:
        out: Word = ()
        while self.peek() and self.peek() not in ",)]":
            out += self.parse_factor()
        return out

    def parse_factor(self) -> Word:
        ch = self.peek()
        if ch in "abAB":
            self.pos += 1
            base: Word = (Twist(ch.lower(), 1 if ch.islower() else -1),)
        elif ch == "[":
            self.pos += 1
            u = self.parse_word()
            self.expect(",")
            v = self.parse_word()
            self.expect("]")
            base = u + v + inverse(u) + inverse(v)
        elif ch == "(":
            self.pos += 1
            base = self.parse_word()
            self.expect(")")
        else:
            raise SchemaError(f"unexpected {ch!r} at position {self.pos} in {self.text!r}")
        if self.peek() == "^":
            self.pos += 1
            start = self.pos
            if self.peek() == "-":
                self.pos += 1
            while self.peek().isdigit():
                self.pos += 1
            try:
                k = int(self.text[start:self.pos])
            except ValueError:
                raise SchemaError(f"bad exponent in {self.text!r}") from None
            base = base * k if k >= 0 else inverse(base) * (-k)
        return base


def all_reduced_words(max_len: int, a: str = "a", b: str = "b") -> list[Word]:
    letters = [Twist(a, 1), Twist(a, -1), Twist(b, 1), Twist(b, -1)]
    out: list[Word] = [()]
    frontier: list[Word] = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for t in letters:
                if w and w[-1] == t.inverse():
                    continue
                nxt.append(w + (t,))
        out.extend(nxt)
        frontier = nxt
    return out


