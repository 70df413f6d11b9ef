from hypothesis import strategies as st

from burnkit.graph import Graph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def connected_graphs(draw, min_n=1, max_n=12, max_extra=None):
    """Random parent array for a spanning tree plus a drawn set of extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    if n >= 2:
        others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
        cap = len(others) if max_extra is None else min(max_extra, len(others))
        if others and cap:
            extra = draw(st.lists(st.sampled_from(others), max_size=cap, unique=True))
            edges.update(extra)
    return Graph(n, edges)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
