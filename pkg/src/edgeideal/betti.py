"""Graded Betti tables of R/I(G) via Hochster's formula.

beta_{i,j} = sum over |W| = j of dim H̃_{j-i-1}(Δ(G|_W)).  The homology of
each induced independence complex is memoised on the relabelled adjacency
of G|_W, so isomorphic-by-position subgraphs across graphs share work.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb

from .complexes import independence_homology
from .graph import Graph, big_height, bits, disjoint_union, popcount
from .linalg import RATIONALS, check_field, field_name

HOCHSTER_LIMIT = 24


class BettiError(ValueError):
    pass


def compress(adj: tuple[int, ...], W: int) -> tuple[int, ...]:
    """Adjacency of G|_W relabelled to 0..|W|-1."""
    keep = bits(W)
    pos = {v: k for k, v in enumerate(keep)}
    out = []
    for v in keep:
        m = 0
        nb = adj[v] & W
        while nb:
            low = nb & -nb
            m |= 1 << pos[low.bit_length() - 1]
            nb ^= low
        out.append(m)
    return tuple(out)


def subset_homology(G: Graph, W: int, field: int = RATIONALS) -> tuple[int, ...]:
    """Reduced homology dims (from degree -1) of Δ(G|_W)."""
    adj = G.adj
    if W and any(adj[v] & W == 0 for v in bits(W)):
        return (0,)  # an isolated vertex makes the complex a cone
    return independence_homology(compress(adj, W), field)


@dataclass
class BettiTable:
    """Map (i, j) -> beta_{i,j}(R/I(G)); zero entries are not stored."""

    n: int
    field: int = RATIONALS
    entries: dict[tuple[int, int], int] = dc_field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def add(self, i: int, j: int, value: int) -> None:
        if value:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + value

    @property
    def pdim(self) -> int:
        return max((i for (i, _), b in self.entries.items() if b), default=0)

    @property
    def reg(self) -> int:
        return max((j - i for (i, j), b in self.entries.items() if b), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        strip = lambda e: {k: v for k, v in e.items() if v}  # noqa: E731
        return self.n == other.n and strip(self.entries) == strip(other.entries)

    def total(self, i: int) -> int:
        return sum(b for (ii, _), b in self.entries.items() if ii == i)

    def k_polynomial(self) -> dict[int, int]:
        """Coefficients of sum_{i,j} (-1)^i beta_{i,j} t^j."""
        out: Counter[int] = Counter()
        for (i, j), b in self.entries.items():
            out[j] += (-1) ** i * b
        return {j: c for j, c in sorted(out.items()) if c}

    def to_records(self) -> list[dict[str, int]]:
        return [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(self.entries.items()) if b]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "field": self.field, "table": self.to_records()})

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        data = json.loads(text)
        t = cls(data["n"], data.get("field", RATIONALS))
        for rec in data["table"]:
            t.add(rec["i"], rec["j"], rec["beta"])
        return t

    def to_text(self) -> str:
        """Macaulay-style display: row r = j - i, column i."""
        if not self.entries:
            return "(zero table)\n"
        cols = range(self.pdim + 1)
        rows = range(self.reg + 1)
        cells = [[str(self[i, i + r]) if self[i, i + r] else "." for i in cols] for r in rows]
        width = max(len(c) for row in cells for c in row + [str(self.pdim)])
        head = "       " + " ".join(str(i).rjust(width) for i in cols)
        total = "total: " + " ".join(str(self.total(i)).rjust(width) for i in cols)
        body = [f"{r:>5}: " + " ".join(c.rjust(width) for c in row) for r, row in zip(rows, cells)]
        return "\n".join([head, total] + body) + "\n"

    def __str__(self) -> str:
        return f"BettiTable over {field_name(self.field)}\n" + self.to_text()


def _check_size(G: Graph, limit: int) -> None:
    if G.n > limit:
        raise BettiError(f"{G.n} vertices exceeds the Hochster limit {limit}")


def _table_chunk(args) -> Counter:
    G, field, lo, hi = args
    acc: Counter = Counter()
    for W in range(lo, hi):
        dims = subset_homology(G, W, field)
        j = popcount(W)
        for k, d in enumerate(dims):
            if d:
                acc[(j - k, j)] += d  # r = k - 1, i = j - r - 1
    return acc


def _chunks(G: Graph, field: int, jobs: int):
    total = 1 << G.n
    step = max(1, -(-total // (jobs * 4)))
    return [(G, field, lo, min(total, lo + step)) for lo in range(0, total, step)]


def hochster_betti_table(G: Graph, field: int = RATIONALS, jobs: int = 1,
                         limit: int = HOCHSTER_LIMIT) -> BettiTable:
    """Exact Betti table of R/I(G); subsets W run in increasing mask order.

    With ``jobs > 1`` the subset range is split across processes and the
    partial tables are summed, which is order independent.
    """
    check_field(field)
    _check_size(G, limit)
    if jobs > 1:
        acc: Counter = Counter()
        with ProcessPoolExecutor(jobs) as ex:
            for part in ex.map(_table_chunk, _chunks(G, field, jobs)):
                acc.update(part)
    else:
        acc = _table_chunk((G, field, 0, 1 << G.n))
    table = BettiTable(G.n, field)
    for (i, j), b in sorted(acc.items()):
        table.add(i, j, b)
    return table


def homological_invariants(G: Graph, field: int = RATIONALS,
                           limit: int = HOCHSTER_LIMIT) -> tuple[int, int]:
    """``(reg, pdim)`` of R/I(G) straight from induced-subcomplex homology."""
    check_field(field)
    _check_size(G, limit)
    reg = pdim = 0
    for W in range(1 << G.n):
        dims = subset_homology(G, W, field)
        size = popcount(W)
        for k, d in enumerate(dims):
            if d:
                reg = max(reg, k)  # 1 + r with r = k - 1
                pdim = max(pdim, size - k)
    return reg, pdim


@dataclass(frozen=True)
class BoundCheck:
    lhs: int
    rhs: int
    holds: bool


def check_bight_bound(G: Graph, field: int = RATIONALS) -> BoundCheck:
    """``pdim R/I(G) >= bight I(G)`` as ``BoundCheck(pdim, bight, holds)``."""
    _, pdim = homological_invariants(G, field)
    bight = big_height(G) if G.edge_count else 0
    return BoundCheck(pdim, bight, pdim >= bight)


def full_suspension_betti_predict(G: Graph, field: int = RATIONALS) -> BettiTable:
    """Betti table of the full suspension predicted from that of ``G``.

    Off the linear strand beta'_{i,j} = beta_{i,j} + beta_{i-1,j-1}; on it
    (j = i + 1, i >= 1) add binom(n, i).  Intended for graphs without
    isolated vertices; see :func:`has_isolated_vertices`.
    """
    base = hochster_betti_table(G, field)
    n = G.n
    out = BettiTable(n + 1, field)
    out.add(0, 0, 1)
    for i in range(1, n + 2):
        for j in range(i + 1, n + 2):
            b = base[i, j] + base[i - 1, j - 1]
            if j == i + 1:
                b += comb(n, i)
            out.add(i, j, b)
    return out


def has_isolated_vertices(G: Graph) -> bool:
    return G.isolated_vertices() != 0


def check_reg_additivity(G1: Graph, G2: Graph, field: int = RATIONALS) -> BoundCheck:
    """reg of a disjoint union against the sum of the parts' regs."""
    lhs = homological_invariants(disjoint_union(G1, G2), field)[0]
    rhs = homological_invariants(G1, field)[0] + homological_invariants(G2, field)[0]
    return BoundCheck(lhs, rhs, lhs == rhs)
