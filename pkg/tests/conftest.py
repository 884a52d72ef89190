import random

import pytest
from hypothesis import strategies as st

from torelli.homology import HClass, SurfaceConfig, random_sp

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def classes(genus: int, bound: int = 3):
    return st.lists(st.integers(-bound, bound), min_size=2 * genus, max_size=2 * genus).map(
        lambda c: HClass(genus, tuple(c)))


genera = st.integers(1, 4)


@st.composite
def class_pairs(draw, bound: int = 3):
    g = draw(genera)
    return draw(classes(g, bound)), draw(classes(g, bound))


@st.composite
def class_triples(draw, bound: int = 3):
    g = draw(st.integers(2, 4))
    return draw(classes(g, bound)), draw(classes(g, bound)), draw(classes(g, bound))


@st.composite
def sp_matrices(draw, genus: int | None = None):
    g = genus if genus is not None else draw(genera)
    seed = draw(st.integers(0, 2**32 - 1))
    return random_sp(g, random.Random(seed), steps=draw(st.integers(0, 6)))


@pytest.fixture
def s4():
    return SurfaceConfig(4)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
