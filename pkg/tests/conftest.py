import sys
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from sigcircles.graph import SignedGraph  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


@st.composite
def signed_graphs(draw, n_min=0, n_max=7, p_edge=None):
    n = draw(st.integers(n_min, n_max))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=len(pairs), max_size=len(pairs)))
    return SignedGraph(n, tuple((u, v, s) for (u, v), c, s in zip(pairs, chosen, signs) if c))


@st.composite
def graph_and_switching(draw, n_max=7):
    g = draw(signed_graphs(n_max=n_max))
    x = draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    return g, x


# -- acceptance summary -------------------------------------------------------

_ACCEPTANCE: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marks = getattr(report, "acceptance", None)
    if marks:
        _ACCEPTANCE[marks] = report.outcome


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return None
    from _pytest.runner import TestReport

    rep = TestReport.from_item_and_call(item, call)
    rep.acceptance = mark.args
    return rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria (tolerance 0)")
    for (num, title), outcome in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"criterion {num:>2} {'PASS' if outcome == 'passed' else 'FAIL'}  {title}")
