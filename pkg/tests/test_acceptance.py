"""The ten acceptance criteria, each run at exact equality.

Every criterion records a PASS/FAIL line in ``conftest.ACCEPTANCE`` (shown in the
terminal summary) and prints it. Run ``python tests/test_acceptance.py`` for the
lines alone.
"""

import dataclasses
import itertools
import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import conftest  # noqa: E402
from _gen import random_bp, random_sep, random_sip, random_word, rebase  # noqa: E402
from test_calculus import _rank, _stated_span, poly  # noqa: E402
from torelli.boolean import (  # noqa: E402
    BoolPoly,
    bar,
    bar_vector,
    degree,
    is_symplectic_mod2,
    mod2_transvection,
    sp2_action,
)
from torelli.calculus import (  # noqa: E402
    BPData,
    SepTwistData,
    TorelliFactorization,
    chillingworth_closed_form,
    chillingworth_membership,
    random_mod2_symplectic,
    sigma_bp,
    sigma_sep,
    sigma_separating_sip,
    sigma_sip,
    sip_in_bcj_kernel,
    sip_in_johnson_kernel,
    ssip_span,
    tau_boundary,
    tau_bp,
    tau_sip,
    tau_word,
)
from torelli.fixtures import (  # noqa: E402
    DERIVATION_BUILDERS,
    homologous_boundaries_sip,
    null_boundary_sip,
    ssip_fixtures,
    standard_sip,
)
from torelli.homology import SpMatrix, SurfaceConfig, form_matrix, intersection_pairing, random_sp  # noqa: E402
from torelli.wedge import contraction, wedge3  # noqa: E402
from torelli.words import (  # noqa: E402
    Step,
    all_reduced_words,
    check_derivation,
    inverse,
    lantern_classify,
    sp_shadow_check,
    word,
    word_to_json,
)

S2, S4 = SurfaceConfig(2), SurfaceConfig(4)
TYPE4_PRINTED = "a1 a2 + a1 b2 + a2 b1 + b1 b2 + b1 + a2 + b2 + 1"
TYPE4_COMPUTED = "a1 a2 + a1 b2 + a2 b1 + b1 b2 + a1 + b1 + a2 + b2 + 1"


def record(n: int, checks: dict[str, bool], note: str = "") -> None:
    failed = [k for k, ok in checks.items() if not ok]
    ok = not failed
    detail = f"{len(checks) - len(failed)}/{len(checks)} checks"
    if failed:
        detail += "; failed: " + ", ".join(failed)
    if note:
        detail += f" ({note})"
    conftest.ACCEPTANCE[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")


# ------------------------------------------------------------------ 1

def test_criterion_1_tau_standard_sip():
    s = standard_sip()
    w, x, y, z = s.boundary
    t = tau_sip(s)
    checks = {
        "tau = -a2^a3^a4": t == -wedge3(S4.a(2), S4.a(3), S4.a(4)),
        "tau = -wedge3(x,y,z)": t == -wedge3(x, y, z),
        "render": t.render() == "-1·a2^a3^a4",
    }
    record(1, checks)
    assert all(checks.values())


# ------------------------------------------------------------------ 2

def test_criterion_2_sigma_standard_sip():
    s = standard_sip()
    want = bar(S4.a(2)) * bar(S4.a(4)) + bar(S4.a(2)) * bar(S4.a(3)) * bar(S4.a(4))
    got = sigma_sip(s)
    checks = {"sigma = a2a4 + a2a3a4": got == want}
    for trip in itertools.combinations(range(4), 3):
        prod = BoolPoly.one(4)
        for i in trip:
            prod = prod * bar(s.boundary[i])
        checks[f"triple {trip}"] = prod == want
    record(2, checks)
    assert all(checks.values())


# ------------------------------------------------------------------ 3

def test_criterion_3_contraction_of_sip_vanishes():
    rng = random.Random(20240603)
    checks = {}
    for n in range(100):
        s = random_sip(rng)
        valid = (sum(s.boundary[1:], s.boundary[0]).is_zero()
                 and all(intersection_pairing(u, v) == 0 for u, v in itertools.combinations(s.boundary, 2))
                 and s.surface_genus <= 5)
        checks[f"sip {n}"] = valid and contraction(tau_sip(s)).is_zero()
    record(3, checks)
    assert all(checks.values())


# ------------------------------------------------------------------ 4

def test_criterion_4_kernel_predicates():
    checks = {}
    cases = {
        "standard": (standard_sip(), (False, False)),
        "null boundary": (null_boundary_sip(), (True, True)),
    }
    h = homologous_boundaries_sip()
    even = any(all(c % 2 == 0 for c in v.coords) for v in h.boundary)
    cases["homologous boundaries"] = (h, (True, even))
    for name, (s, want) in cases.items():
        got = (sip_in_johnson_kernel(s), sip_in_bcj_kernel(s))
        checks[f"{name} predicates"] = got == want
        t = tau_sip(s) if s.five_bp is not None else tau_boundary(s)
        checks[f"{name} vs tau"] = got[0] == t.is_zero()
        checks[f"{name} vs sigma"] = got[1] == sigma_sip(s).is_zero()
    record(4, checks)
    assert all(checks.values())


# ------------------------------------------------------------------ 5

def _type1_laws(g: int = 3) -> bool:
    for d in itertools.product((0, 1), repeat=2 * g):
        alpha, beta = d[:g], d[g:]
        m = mod2_transvection(g, d)
        p = sp2_action(m, BoolPoly.from_monomials(g, [[0, g]]))
        q = sp2_action(m, BoolPoly.from_monomials(g, [[0, g + 1]]))
        ok = (p.coefficient(0, g) == 1
              and all(p.coefficient(i, g + i) == 0 for i in range(1, g))
              and q.coefficient(0, g) == q.coefficient(1, g + 1) == alpha[1] * beta[0]
              and all(q.coefficient(i, g + i) == 0 for i in range(2, g))
              and all(degree(sp2_action(m, BoolPoly.var(g, i))) <= 1 for i in range(2 * g)))
        if not ok:
            return False
    return True


def _ssip_values():
    fx = ssip_fixtures(2)
    return {k: sigma_separating_sip(v.curve, v.image) for k, v in fx.items()}


def test_criterion_5_separating_sip_images():
    got = _ssip_values()
    basis = ssip_span(2, 40, seed=7)
    oracle = _stated_span(2)
    checks = {
        "type 2 = b1b2": got["ssip_type2"] == poly(S2, "b1 b2"),
        "type 3 = a1b2 + b2": got["ssip_type3"] == poly(S2, "a1 b2 + b2"),
        "type 4 printed 8-term value": got["ssip_type4"] == poly(S2, TYPE4_PRINTED),
        "type 1 laws, all d at g=3": _type1_laws(3),
        "span inside stated span": _rank(oracle + basis, 2) == _rank(oracle, 2),
        "span reaches oracle dimension": len(basis) == _rank(oracle, 2) == 10,
    }
    record(5, checks, note="type 4 evaluates to the 9-term " + got["ssip_type4"].render())
    # everything except the printed Type (4) value must hold
    assert all(ok for k, ok in checks.items() if k != "type 4 printed 8-term value")
    assert got["ssip_type4"] == poly(S2, TYPE4_COMPUTED)


@pytest.mark.xfail(strict=True, reason="the printed Type (4) polynomial drops the lone a1 term; "
                                      "no Type (4) configuration yields it (see decisions ledger)")
def test_criterion_5_type4_printed_value():
    assert _ssip_values()["ssip_type4"] == poly(S2, TYPE4_PRINTED)


# ------------------------------------------------------------------ 6

def test_criterion_6_chillingworth():
    checks = {}
    for k in range(1, 5):
        s = SurfaceConfig(k + 1)
        gamma = s.a(k + 1)
        bp = BPData(gamma, tuple((s.a(i), s.b(i)) for i in range(1, k + 1)))
        f = TorelliFactorization(k + 1, (bp,))
        closed = chillingworth_closed_form(f)
        checks[f"genus {k} closed form"] = closed == 2 * k * gamma
        checks[f"genus {k} via contraction"] = contraction(tau_bp(bp)) == closed
    rng = random.Random(6)
    for n in range(50):
        g = rng.choice((3, 4, 5))
        w = random_word(g, rng, rng.randint(1, 4))
        if n % 2:
            w = w + w.inverse()
        checks[f"word {n}"] = chillingworth_membership(w) == contraction(tau_word(w)).is_zero()
    record(6, checks)
    assert all(checks.values())


# ------------------------------------------------------------------ 7

def test_criterion_7_derivations():
    checks = {}
    for name in ("lemma_factorsip", "putman_f5", "sip_equality", "johnson_lemma10"):
        fx = DERIVATION_BUILDERS[name]()
        for n, script in enumerate(fx["scripts"]):
            checks[f"{name}[{n}] derivation"] = check_derivation(fx["env"], script).ok
            checks[f"{name}[{n}] shadow"] = sp_shadow_check(
                fx["env"], script.start, script.end, fx["classes"], fx["genus"])
    fx = DERIVATION_BUILDERS["lemma_factorsip"]()
    script = fx["scripts"][0]
    steps = list(script.steps)
    steps[1] = Step(steps[1].rule, {**steps[1].args, "replacement": word_to_json(word("v^-1 x^-1 f d e"))})
    rep = check_derivation(fx["env"], dataclasses.replace(script, steps=tuple(steps)))
    checks["corrupted script fails at step 1"] = (not rep.ok) and rep.failed_step == 1
    record(7, checks)
    assert all(checks.values())


# ------------------------------------------------------------------ 8

def _reduce(w):
    out = []
    for t in w:
        if out and out[-1] == t.inverse():
            out.pop()
        else:
            out.append(t)
    return tuple(out)


def test_criterion_8_lantern_classification():
    checks = {"[a,b] pseudo-Anosov": lantern_classify(word("a b a^-1 b^-1")) == "pseudo-Anosov"}
    for base in ("a", "b", "a b"):
        for k in (1, 2, 3, -2):
            w = word(base) * k if k > 0 else inverse(word(base)) * -k
            conj = word("b^-1 a") + w + word("a^-1 b")
            checks[f"({base})^{k}"] = lantern_classify(w) == "reducible"
            checks[f"conjugated ({base})^{k}"] = lantern_classify(conj) == "reducible"
    a, b = word("a")[0], word("b")[0]
    targets = set()
    for k in range(1, 7):
        for t in (a, a.inverse(), b, b.inverse()):
            targets.add((t,) * k)
    for k in range(1, 4):
        targets.add((a, b) * k)
        targets.add((b.inverse(), a.inverse()) * k)
    conjugators = all_reduced_words(4)
    agree = True
    for w in all_reduced_words(6):
        if not w:
            expect = "finite-order"
        else:
            # rotation enumeration: conjugates by short words reach every rotation
            hit = any(_reduce(c + w + inverse(c)) in targets for c in conjugators)
            expect = "reducible" if hit else "pseudo-Anosov"
        agree = agree and lantern_classify(w) == expect
    checks["exhaustive length <= 6"] = agree
    record(8, checks)
    assert all(checks.values())


# ------------------------------------------------------------------ 9

def _pair2(g, u, v):
    return sum(u[i] * v[g + i] + u[g + i] * v[i] for i in range(g)) % 2


def _bar_by_expansion(g, v, order):
    idx = [i for i in order if v[i]]
    acc = [int(k == idx[0]) for k in range(2 * g)]
    p = BoolPoly.var(g, idx[0])
    for i in idx[1:]:
        e = [int(k == i) for k in range(2 * g)]
        p = p + BoolPoly.var(g, i)
        if _pair2(g, acc, e):
            p = p + BoolPoly.one(g)
        acc = [(x + y) % 2 for x, y in zip(acc, e)]
    return p


def test_criterion_9_algebra_laws():
    checks = {}
    bar_ok = True
    for g in (1, 2):
        for v in itertools.product((0, 1), repeat=2 * g):
            if any(v):
                want = bar_vector(g, v)
                bar_ok = bar_ok and all(_bar_by_expansion(g, v, o) == want
                                        for o in itertools.permutations(range(2 * g)))
    checks["bar well defined, g <= 2"] = bar_ok

    rng = random.Random(9)
    auto_ok = True
    for _ in range(200):
        g = rng.choice((2, 3))
        m = random_mod2_symplectic(g, rng)
        monos = range(4 ** g)
        p = BoolPoly(g, frozenset(rng.sample(monos, 4)))
        q = BoolPoly(g, frozenset(rng.sample(monos, 4)))
        auto_ok = auto_ok and is_symplectic_mod2(m, g) and sp2_action(m, p * q) == sp2_action(m, p) * sp2_action(m, q)
    checks["sp2 automorphism x200"] = auto_ok

    wedge_ok = True
    for _ in range(200):
        g = rng.choice((2, 3, 4))
        s = SurfaceConfig(g)
        u, v, w, t = (s.vector([rng.randint(-3, 3) for _ in range(2 * g)]) for _ in range(4))
        k = rng.randint(-4, 4)
        x = wedge3(u, v, w)
        wedge_ok = wedge_ok and (
            wedge3(v, u, w) == -x and wedge3(u, w, v) == -x and wedge3(w, v, u) == -x
            and wedge3(u, u, w).is_zero()
            and contraction(x + wedge3(u, v, t) * k) == contraction(x) + k * contraction(wedge3(u, v, t)))
    checks["wedge alternation, contraction linearity x200"] = wedge_ok

    sp_ok = True
    for _ in range(200):
        g = rng.choice((1, 2, 3, 4, 5))
        m = random_sp(g, rng, steps=rng.randint(0, 8))
        j = form_matrix(g)
        sp_ok = sp_ok and m.transpose() @ j @ m == j and isinstance(m, SpMatrix)
    checks["M^T J M = J x200"] = sp_ok
    record(9, checks)
    assert all(checks.values())


# ----------------------------------------------------------------- 10

def test_criterion_10_basis_independence():
    checks = {}
    rng = random.Random(10)
    bps = {f"standard bp {i}": bp for i, bp in enumerate(standard_sip().five_bp) if bp.basis}
    bps["random bp"] = random_bp(4, rng, k=2)
    seps = {name: item.image for name, item in ssip_fixtures(2).items()}
    seps["random sep"] = random_sep(4, rng)
    if not seps["random sep"].genus:
        seps["random sep"] = SepTwistData(4, ((S4.a(1), S4.b(1)),))
    for name, bp in bps.items():
        ok = True
        for _ in range(50):
            m = random_sp(len(bp.basis), rng)
            moved = BPData(bp.pair_class, rebase(bp.basis, m), bp.sign)
            ok = ok and tau_bp(moved) == tau_bp(bp) and sigma_bp(moved) == sigma_bp(bp)
        checks[f"{name} x50"] = ok
    for name, sep in seps.items():
        ok = True
        for _ in range(50):
            m = random_sp(sep.genus, rng)
            ok = ok and sigma_sep(SepTwistData(sep.surface_genus, rebase(sep.basis, m), sep.sign)) == sigma_sep(sep)
        checks[f"{name} x50"] = ok
    record(10, checks)
    assert all(checks.values())


if __name__ == "__main__":
    runs = [(int(n.split("_")[2]), f) for n, f in globals().items()
            if n.startswith("test_criterion_") and not n.endswith("printed_value")]
    for _, fn in sorted(runs, key=lambda r: r[0]):
        try:
            fn()
        except AssertionError:
            pass
