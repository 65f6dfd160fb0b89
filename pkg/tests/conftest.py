import pytest
from hypothesis import settings, strategies as st

from lambdacl.chartab import CATALOG, load_table

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

SMALL_TABLES = ("c2", "c3", "c4", "c5", "c2xc2", "s3", "d4", "q8", "a4")

ACCEPTANCE_LINES: list[str] = []


def coords_for(table):
    return st.lists(st.integers(-3, 3), min_size=table.rank, max_size=table.rank)


@st.composite
def table_and_chars(draw, n=2, names=SMALL_TABLES):
    t = load_table(draw(st.sampled_from(names)))
    return (t,) + tuple(t.character(draw(coords_for(t))) for _ in range(n))


@pytest.fixture(params=CATALOG)
def catalog_table(request):
    return load_table(request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
