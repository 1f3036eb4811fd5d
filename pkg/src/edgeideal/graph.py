"""Finite simple graphs on at most 24 vertices, with vertex sets as bit-masks.

Vertex ``i`` (0-based) corresponds to bit ``1 << i``; the default label of
vertex ``i`` is ``"x{i+1}"``.  A suspension vertex is always appended last
and labelled ``"z"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_VERTICES = 24
SUSPENSION_LABEL = "z"


class GraphError(ValueError):
    """Invalid graph input (bad index, loop, unknown label, size limit)."""


def popcount(mask: int) -> int:
    return mask.bit_count()


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[i]`` is the neighbourhood bit-mask of vertex ``i``.
    """

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.adj) != n:
            raise GraphError("adjacency length does not match label count")
        if n > MAX_VERTICES:
            raise GraphError(f"{n} vertices exceeds the limit of {MAX_VERTICES}")
        if len(set(self.labels)) != n:
            raise GraphError("vertex labels must be pairwise distinct")
        full = (1 << n) - 1
        for i, a in enumerate(self.adj):
            if a & ~full:
                raise GraphError(f"vertex {i} has a neighbour out of range")
            if a >> i & 1:
                raise GraphError(f"loop at vertex {self.labels[i]}")
            for j in bits(a):
                if not self.adj[j] >> i & 1:
                    raise GraphError("adjacency is not symmetric")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """0-based edges ``(i, j)`` with ``i < j``, sorted."""
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i]) if i < j]

    @property
    def edge_count(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def index(self, vertex: int | str) -> int:
        """0-based index of a vertex given by label or by 1-based position."""
        if isinstance(vertex, str):
            try:
                return self.labels.index(vertex)
            except ValueError:
                raise GraphError(f"unknown vertex {vertex!r}") from None
        if not 1 <= vertex <= self.n:
            raise GraphError(f"vertex index {vertex} out of range 1..{self.n}")
        return vertex - 1

    def vertex_set(self, vertices: Iterable[int | str]) -> int:
        """Bit-mask of the given vertices (labels or 1-based indices)."""
        return mask_of(self.index(v) for v in vertices)

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]

    def isolated_vertices(self) -> int:
        return mask_of(i for i, a in enumerate(self.adj) if a == 0)

    def __str__(self) -> str:
        es = ", ".join(f"{self.labels[i]}{self.labels[j]}" for i, j in self.edges())
        return f"Graph(n={self.n}, edges=[{es}])"


def _from_edges(labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [0] * len(labels)
    for i, j in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(tuple(labels), tuple(adj))


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    """Graph on ``n`` vertices from 1-based edge pairs; duplicates collapse."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    if n > MAX_VERTICES:
        raise GraphError(f"{n} vertices exceeds the limit of {MAX_VERTICES}")
    zero_based = []
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v}) is not allowed")
        zero_based.append((u - 1, v - 1))
    return _from_edges(labels or default_labels(n), zero_based)


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def family(kind: str, n: int) -> Graph:
    """``path`` or ``cycle`` on vertices x1..xn."""
    if kind == "path":
        return path_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    raise GraphError(f"unknown family {kind!r}")


def edgeless_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def induced_subgraph(G: Graph, W: int) -> Graph:
    """``G|_W``; vertices keep their labels and relative order."""
    if W & ~G.full_mask:
        raise GraphError("vertex set is not contained in the graph")
    keep = bits(W)
    pos = {v: k for k, v in enumerate(keep)}
    adj = tuple(mask_of(pos[u] for u in bits(G.adj[v] & W)) for v in keep)
    return Graph(tuple(G.labels[v] for v in keep), adj)


def delete_vertices(G: Graph, X: int) -> Graph:
    return induced_subgraph(G, G.full_mask & ~X)


def closed_neighborhood(G: Graph, v: int | str) -> int:
    i = G.index(v)
    return G.adj[i] | 1 << i


def suspend(G: Graph, C: int) -> Graph:
    """Adjoin a last vertex ``z`` adjacent exactly to the vertices in ``C``."""
    if C & ~G.full_mask:
        raise GraphError("suspension set is not contained in the graph")
    if SUSPENSION_LABEL in G.labels:
        raise GraphError("graph already has a vertex labelled 'z'")
    n = G.n
    adj = [a | (1 << n if C >> i & 1 else 0) for i, a in enumerate(G.adj)]
    adj.append(C)
    return Graph(G.labels + (SUSPENSION_LABEL,), tuple(adj))


def full_suspension(G: Graph) -> Graph:
    return suspend(G, G.full_mask)


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    """Concatenate vertex lists; labels are renumbered x1..x(n1+n2)."""
    shift = G1.n
    adj = G1.adj + tuple(a << shift for a in G2.adj)
    return Graph(default_labels(G1.n + G2.n), adj)


def is_independent(G: Graph, X: int) -> bool:
    return all(G.adj[v] & X == 0 for v in bits(X))


def dominated(G: Graph, X: int) -> int:
    """``X`` together with every neighbour of ``X``."""
    out = X
    for v in bits(X):
        out |= G.adj[v]
    return out


def is_maximal_independent(G: Graph, X: int) -> bool:
    return is_independent(G, X) and dominated(G, X) == G.full_mask


def is_vertex_cover(G: Graph, C: int) -> bool:
    return is_independent(G, G.full_mask & ~C)


def is_minimal_vertex_cover(G: Graph, C: int) -> bool:
    return is_maximal_independent(G, G.full_mask & ~C)


def independent_sets(G: Graph, within: int | None = None) -> list[int]:
    """Every independent subset of ``within`` (default: all vertices), sorted."""
    out: list[int] = []

    def grow(current: int, allowed: int) -> None:
        out.append(current)
        while allowed:
            low = allowed & -allowed
            v = low.bit_length() - 1
            allowed ^= low
            grow(current | low, allowed & ~G.adj[v])

    grow(0, G.full_mask if within is None else within)
    out.sort()
    return out


def _check_limit(G: Graph, limit: int) -> None:
    if G.n > limit:
        raise GraphError(f"{G.n} vertices exceeds the configured limit {limit}")


def enumerate_maximal_independent_sets(G: Graph, limit: int = MAX_VERTICES) -> list[int]:
    """All maximal independent sets, ascending by mask value."""
    _check_limit(G, limit)
    return [X for X in independent_sets(G) if dominated(G, X) == G.full_mask]


def minimal_vertex_covers(G: Graph, limit: int = MAX_VERTICES) -> list[int]:
    """Complements of the maximal independent sets, ascending by mask value."""
    full = G.full_mask
    return sorted(full & ~X for X in enumerate_maximal_independent_sets(G, limit))


def big_height(G: Graph) -> int:
    return max(popcount(C) for C in minimal_vertex_covers(G))


def independence_number(G: Graph) -> int:
    return max(popcount(X) for X in enumerate_maximal_independent_sets(G))


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """First data line is ``n``; each further line is a 1-based pair ``u v``.

    An optional ``# labels: a b c`` comment names the vertices in order.
    """
    rows = []
    labels = None
    for raw in text.splitlines():
        if raw.strip().startswith("# labels:"):
            labels = raw.split(":", 1)[1].split()
            continue
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphError("edge list is empty")
    try:
        if len(rows[0]) != 1:
            raise GraphError("first line must hold the vertex count")
        n = int(rows[0][0])
        edges = []
        for row in rows[1:]:
            if len(row) != 2:
                raise GraphError(f"expected 'u v', got {' '.join(row)!r}")
            edges.append((int(row[0]), int(row[1])))
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if labels is not None and len(labels) != n:
        raise GraphError("label header does not match the vertex count")
    return build_graph(n, edges, labels)


def format_edge_list(G: Graph) -> str:
    lines = [str(G.n)] + [f"{i + 1} {j + 1}" for i, j in G.edges()]
    if G.labels != default_labels(G.n):
        lines.insert(0, "# labels: " + " ".join(G.labels))
    return "\n".join(lines) + "\n"


def all_graphs(n: int) -> list[Graph]:
    """Every labelled graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    labels = default_labels(n)
    out = []
    for code in range(1 << len(pairs)):
        out.append(_from_edges(labels, [pairs[b] for b in bits(code)]))
    return out


def random_graph(n: int, rng, p: float = 0.5) -> Graph:
    """Erdos-Renyi sample; ``rng`` is a ``random.Random``."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return _from_edges(default_labels(n), pairs)
