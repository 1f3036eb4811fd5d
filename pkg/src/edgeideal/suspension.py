"""Suspension-specific constructions: squarefree monomial ideals with colon
and sum by a variable, 0/1-string profiles of maximal independent sets of
paths and cycles, extremal suspension sets and independence-polynomial
identities for suspended graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import (
    Graph,
    GraphError,
    bits,
    enumerate_maximal_independent_sets,
    family,
    induced_subgraph,
    is_maximal_independent,
    is_vertex_cover,
    mask_of,
    popcount,
    suspend,
)
from .indpoly import ONE_PLUS_2X, ONE_PLUS_X, X, IntPolynomial, independence_polynomial


class PreconditionError(ValueError):
    pass


def minimalize(generators: Iterable[int]) -> frozenset[int]:
    """Drop every support that contains another support."""
    gens = sorted(set(generators), key=popcount)
    kept: list[int] = []
    for g in gens:
        if not any(k & g == k for k in kept):
            kept.append(g)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal; each generator is the support bit-mask of a
    monomial over ``ambient``."""

    ambient: tuple[str, ...]
    generators: frozenset[int]

    def __post_init__(self):
        if 0 in self.generators:
            raise ValueError("the unit ideal is not a squarefree monomial ideal here")
        if minimalize(self.generators) != self.generators:
            raise ValueError("generators are not minimal")

    @classmethod
    def from_supports(cls, ambient: Sequence[str], supports: Iterable[int]) -> "MonomialIdeal":
        return cls(tuple(ambient), minimalize(supports))

    @classmethod
    def from_labels(cls, ambient: Sequence[str], monomials: Iterable[Iterable[str]]) -> "MonomialIdeal":
        amb = tuple(ambient)
        return cls.from_supports(amb, (mask_of(amb.index(x) for x in m) for m in monomials))

    def var(self, v: int | str) -> int:
        return self.ambient.index(v) if isinstance(v, str) else v

    def colon_var(self, v: int | str) -> "MonomialIdeal":
        """``(I : x_v)``: strip ``v`` from every support, then minimalize."""
        b = 1 << self.var(v)
        return MonomialIdeal.from_supports(self.ambient, (g & ~b for g in self.generators))

    def plus_var(self, v: int | str) -> "MonomialIdeal":
        """``(I, x_v)``."""
        b = 1 << self.var(v)
        return MonomialIdeal.from_supports(self.ambient, set(self.generators) | {b})

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.ambient != other.ambient:
            raise ValueError("ideals live in different rings")
        return MonomialIdeal.from_supports(self.ambient, self.generators | other.generators)

    def monomials(self) -> list[str]:
        return sorted("".join(self.ambient[i] for i in bits(g)) for g in self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(self.monomials()) + ")"


def edge_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal.from_supports(G.labels, (1 << i | 1 << j for i, j in G.edges()))


def variable_ideal(ambient: Sequence[str], C: int) -> MonomialIdeal:
    """``(x_i : i in C)``."""
    return MonomialIdeal.from_supports(ambient, (1 << i for i in bits(C)))


def extend_ambient(I: MonomialIdeal, labels: Sequence[str]) -> MonomialIdeal:
    """The same generators viewed in a ring with extra trailing variables."""
    if tuple(labels[: len(I.ambient)]) != I.ambient:
        raise ValueError("new ambient must extend the old one")
    return MonomialIdeal(tuple(labels), I.generators)


# -- profiles of maximal independent sets -------------------------------------

@dataclass(frozen=True)
class CoverProfile:
    """Structure of a maximal independent set C of a path or cycle.

    ``ell`` and ``e`` are read off the graph P = G - N[z] (edges and isolated
    vertices); ``delta``, ``p``, ``q`` come from the 0/1 string of C (endpoint
    zeros, gaps ``01`` and gaps ``001``).
    """

    kind: str
    n: int
    C: int
    t: int
    ell: int
    e: int
    delta: int
    p: int
    q: int

    def word(self) -> str:
        return indicator_string(self.n, self.C)


def indicator_string(n: int, C: int) -> str:
    return "".join("1" if C >> i & 1 else "0" for i in range(n))


def _gap_counts(word: str, cyclic: bool) -> tuple[int, int, int]:
    ones = [i for i, ch in enumerate(word) if ch == "1"]
    gaps = [b - a for a, b in zip(ones, ones[1:])]
    if cyclic and ones:
        gaps.append(ones[0] + len(word) - ones[-1])
    p = sum(1 for g in gaps if g == 2)
    q = sum(1 for g in gaps if g == 3)
    delta = 0 if cyclic else int(word[0] == "0") + int(word[-1] == "0")
    return p, q, delta


def cover_profile(kind: str, n: int, C: int) -> CoverProfile:
    G = family(kind, n)
    if not is_maximal_independent(G, C):
        raise PreconditionError(f"{G.names(C)} is not a maximal independent set of {kind} {n}")
    rest = induced_subgraph(G, G.full_mask & ~C)
    ell = rest.edge_count
    e = popcount(rest.isolated_vertices())
    p, q, delta = _gap_counts(indicator_string(n, C), cyclic=kind == "cycle")
    return CoverProfile(kind, n, C, popcount(C), ell, e, delta, p, q)


def canonical_extremal_set(kind: str, n: int) -> int:
    """The explicit extremal set: x1, x4, x7, ... (for paths with n = 3k also x_n)."""
    C = mask_of(range(0, n, 3))
    if kind == "path" and n % 3 == 0:
        C |= 1 << (n - 1)
    if kind == "cycle" and n % 3:
        raise GraphError("wide-spoke sets need n divisible by 3")
    return C


def extremal_sets(kind: str, n: int) -> list[int]:
    """Cycles (n = 3k): the three minimum maximal independent sets
    {x1,x4,...}, {x2,x5,...}, {x3,x6,...}.  Paths: every maximal independent
    set whose complement spans floor((n-1)/3) edges, ascending by mask."""
    if kind == "cycle":
        if n < 3 or n % 3:
            raise GraphError("wide-spoke sets need n divisible by 3")
        return sorted(mask_of(range(s, n, 3)) for s in range(3))
    if kind == "path":
        if n < 1:
            raise GraphError("path length must be positive")
        bound = (n - 1) // 3
        return [C for C in enumerate_maximal_independent_sets(family("path", n))
                if cover_profile("path", n, C).ell == bound]
    raise GraphError(f"unknown family {kind!r}")


def is_exceptional_path_set(n: int, C: int) -> bool:
    """n = 1 mod 3 and C = {x1, x4, ..., xn}."""
    return n % 3 == 1 and C == mask_of(range(0, n, 3))


def dominating_partner(n: int, C: int) -> int:
    """The independent dominating set D used against a maximal independent
    set C of P_n: {x1, x4, ...} if x1 in C, else {x2, x5, ...} plus x_n when
    n = 1 mod 3."""
    if C & 1:
        return mask_of(range(0, n, 3))
    D = mask_of(range(1, n, 3))
    if n % 3 == 1:
        D |= 1 << (n - 1)
    return D


# -- independence-polynomial identities ---------------------------------------

@dataclass(frozen=True)
class PolyIdentityReport:
    identity: str
    lhs: IntPolynomial
    rhs: IntPolynomial

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def suspension_poly_identity_check(G: Graph, C: int, identity: str = "cover") -> PolyIdentityReport:
    """Compare P of the C-suspension with a closed right-hand side.

    ``cover``: C a vertex cover, rhs = P_G + x (1+x)^u with u = n - |C|.
    ``cycle``: G = C_n, C maximal independent,
        rhs = P_G + x (1+x)^(|C|-ell) (1+2x)^ell with ell = n - 2|C|.
    ``path``: G = P_n, C maximal independent,
        rhs = P_G + x (1+x)^e (1+2x)^ell with ell = q, e = |C| - ell - 1 + delta.
    """
    n = G.n
    lhs = independence_polynomial(suspend(G, C))
    base = independence_polynomial(G)
    if identity == "cover":
        if not is_vertex_cover(G, C):
            raise PreconditionError("C must be a vertex cover")
        rhs = base + X * ONE_PLUS_X ** (n - popcount(C))
    elif identity in ("cycle", "path"):
        if G != family(identity, n):
            raise PreconditionError(f"graph is not the standard {identity} on {n} vertices")
        if not is_maximal_independent(G, C):
            raise PreconditionError("C must be a maximal independent set")
        t = popcount(C)
        if identity == "cycle":
            ell = n - 2 * t
            e = t - ell
        else:
            p, q, delta = _gap_counts(indicator_string(n, C), cyclic=False)
            ell = q
            e = t - ell - 1 + delta
        rhs = base + X * ONE_PLUS_X ** e * ONE_PLUS_2X ** ell
    else:
        raise ValueError(f"unknown identity {identity!r}")
    return PolyIdentityReport(identity, lhs, rhs)
