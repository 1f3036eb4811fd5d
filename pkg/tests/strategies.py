from hypothesis import strategies as st

from edgeideal.graph import build_graph


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def graph_and_subset(draw, min_n=1, max_n=6):
    G = draw(graphs(min_n, max_n))
    return G, draw(st.integers(0, (1 << G.n) - 1))
