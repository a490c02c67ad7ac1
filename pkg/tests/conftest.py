import pytest
from hypothesis import settings, strategies as st

from skeinquot.qlaurent import QLaurent
from skeinquot.ringcore import SkeinPoly, XPoly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

small_ints = st.integers(-6, 6)


@st.composite
def qlaurents(draw, span=12, max_terms=4):
    keys = draw(st.lists(st.integers(-span, span), max_size=max_terms))
    return QLaurent({k: draw(small_ints) for k in keys})


@st.composite
def nonzero_qlaurents(draw, span=8, max_terms=3):
    a = draw(qlaurents(span, max_terms))
    return a if a else QLaurent.monomial(draw(st.integers(-span, span)), draw(st.sampled_from([-2, -1, 1, 3])))


@st.composite
def xpolys(draw, max_exp=3, max_terms=3):
    keys = draw(st.lists(st.tuples(st.integers(0, max_exp), st.integers(0, max_exp)), max_size=max_terms))
    return XPoly({k: draw(qlaurents(8, 2)) for k in keys})


@st.composite
def skeinpolys(draw, max_ey=4, max_terms=4):
    keys = draw(st.lists(
        st.tuples(st.integers(0, max_ey), st.integers(0, 3), st.integers(0, 3)), max_size=max_terms))
    return SkeinPoly.from_terms([(k, draw(qlaurents(10, 3))) for k in keys])


@st.composite
def span_elements(draw, max_index=6):
    """Random element of the R[x1,x2]-span of G_1..G_max_index."""
    from skeinquot.generators import gen_G
    g = SkeinPoly()
    for n in draw(st.lists(st.integers(1, max_index), max_size=3)):
        g = g + gen_G(n) * draw(xpolys(2, 2))
    return g


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    def record(line):
        _ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
