import sys

import hypothesis.strategies as st
from hypothesis import settings

from rootpoly.digraph import Digraph, is_eulerian

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def int_matrices(max_rows=4, max_cols=4, lo=-3, hi=3, square=False):
    @st.composite
    def build(draw):
        r = draw(st.integers(1, max_rows))
        c = r if square else draw(st.integers(1, max_cols))
        return [draw(st.lists(st.integers(lo, hi), min_size=c, max_size=c)) for _ in range(r)]
    return build()


@st.composite
def eulerian_digraphs(draw, n_max=4, m_max=7):
    """Superpositions of directed cycles, each meeting the vertices used so far."""
    n = draw(st.integers(2, n_max))
    first = draw(st.permutations(range(1, n + 1)).map(lambda p: p[:]))
    k = draw(st.integers(2, n))
    cycles = [list(first[:k])]
    used = set(cycles[0])
    total = k
    while total < m_max and draw(st.booleans()):
        perm = draw(st.permutations(range(1, n + 1)))
        length = draw(st.integers(2, n))
        cyc = list(perm[:length])
        if total + length > m_max:
            break
        if not used & set(cyc):
            continue
        cycles.append(cyc)
        used |= set(cyc)
        total += length
    relabel = {v: i for i, v in enumerate(sorted(used), 1)}
    edges = [(relabel[c[i]], relabel[c[(i + 1) % len(c)]]) for c in cycles for i in range(len(c))]
    order = draw(st.permutations(range(len(edges))))
    G = Digraph(len(used), tuple(edges[i] for i in order))
    assert is_eulerian(G)
    return G


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
