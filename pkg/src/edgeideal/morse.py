"""Discrete Morse matchings on face posets.

The empty face takes part in the poset (dimension -1), so critical cells are
compared against reduced homology throughout.  A directed cycle in the
modified Hasse diagram can only live between two consecutive dimensions,
hence acyclicity is checked one layer at a time.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from graphlib import CycleError, TopologicalSorter

from .complexes import ComplexError, HomologyProfile, SimplicialComplex, _lex_key, reduced_homology
from .graph import bits, popcount
from .linalg import RATIONALS, check_field, rank

DEFAULT_MAX_CRITICAL = 2_000


class MatchingError(ValueError):
    pass


def _sign(sigma: int, tau: int) -> int:
    """Incidence [tau : sigma] for sigma = tau minus one vertex."""
    v = tau & ~sigma
    return -1 if popcount(tau & (v - 1)) % 2 else 1


@dataclass(frozen=True)
class MorseMatching:
    """Pairs ``(sigma, tau)`` with sigma a codimension-one face of tau."""

    complex: SimplicialComplex
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        seen: set[int] = set()
        faces = self.complex.face_set
        for s, t in self.pairs:
            if s not in faces or t not in faces:
                raise MatchingError("pair references a face outside the complex")
            if s & ~t or popcount(t) != popcount(s) + 1:
                raise MatchingError("paired faces must differ by exactly one vertex")
            if s in seen or t in seen:
                raise MatchingError("a face occurs in more than one pair")
            seen.update((s, t))

    @cached_property
    def up(self) -> dict[int, int]:
        return {s: t for s, t in self.pairs}

    @cached_property
    def down(self) -> dict[int, int]:
        return {t: s for s, t in self.pairs}

    def critical(self) -> list[int]:
        return [f for f in self.complex.faces if f not in self.up and f not in self.down]

    def critical_counts(self) -> dict[int, int]:
        """Critical cells per dimension (from -1 up to dim)."""
        out = {d: 0 for d in range(-1, self.complex.dim + 1)}
        for f in self.critical():
            out[popcount(f) - 1] += 1
        return out

    def to_json(self) -> list[list[list[str]]]:
        D = self.complex
        return [[list(D.labels_of(s)), list(D.labels_of(t))]
                for s, t in sorted(self.pairs, key=lambda p: (popcount(p[0]), _lex_key(p[0])))]

    @classmethod
    def from_json(cls, D: SimplicialComplex, data) -> "MorseMatching":
        return cls(D, frozenset((D.mask(s), D.mask(t)) for s, t in data))


def _layer_graph(M: MorseMatching, k: int) -> dict[int, set[int]]:
    """Dependencies among faces with k vertices: alpha -> alpha' when alpha
    is matched up to beta and alpha' is another facet of beta.  Returned as
    predecessor sets for ``TopologicalSorter``."""
    preds: dict[int, set[int]] = {f: set() for f in M.complex.faces if popcount(f) == k}
    for alpha, beta in M.pairs:
        if popcount(alpha) != k:
            continue
        for v in bits(beta):
            other = beta & ~(1 << v)
            if other != alpha:
                preds[other].add(alpha)
    return preds


def verify_acyclic_matching(M: MorseMatching) -> bool:
    """True iff the modified Hasse diagram has no directed cycle."""
    for k in range(0, M.complex.dim + 2):
        try:
            tuple(TopologicalSorter(_layer_graph(M, k)).static_order())
        except CycleError:
            return False
    return True


def restrict_matching(M: MorseMatching, Y: SimplicialComplex) -> MorseMatching:
    """Pairs of M with both faces in the subcomplex Y, in Y's coordinates."""
    D = M.complex
    try:
        to_y = {f: Y.mask(D.labels_of(f)) for f in D.faces if set(D.labels_of(f)) <= set(Y.ground)}
    except ComplexError:
        raise MatchingError("Y is not a subcomplex") from None
    if not {D.mask(Y.labels_of(f)) for f in Y.faces} <= D.face_set:
        raise MatchingError("Y is not a subcomplex")
    ys = Y.face_set
    pairs = frozenset((to_y[s], to_y[t]) for s, t in M.pairs
                      if s in to_y and t in to_y and to_y[s] in ys and to_y[t] in ys)
    return MorseMatching(Y, pairs)


def greedy_acyclic_matching(D: SimplicialComplex, seed: int | None = None,
                            include_empty: bool = True, max_faces: int = 200_000) -> MorseMatching:
    """Greedy matching: scan candidate pairs (lexicographic, or shuffled with
    ``seed``) and keep each pair whose addition leaves its layer acyclic.

    ``include_empty=False`` never matches the empty face.  No optimality claim.
    """
    if len(D.faces) > max_faces:
        raise ComplexError(f"{len(D.faces)} faces exceeds the limit {max_faces}")
    cands = []
    for t in D.faces:
        for v in bits(t):
            s = t & ~(1 << v)
            if s == 0 and not include_empty:
                continue
            cands.append((s, t))
    cands.sort(key=lambda p: (popcount(p[0]), _lex_key(p[0]), _lex_key(p[1])))
    if seed is not None:
        random.Random(seed).shuffle(cands)
    matched: set[int] = set()
    by_layer: dict[int, dict[int, int]] = {}
    for s, t in cands:
        if s in matched or t in matched:
            continue
        layer = by_layer.setdefault(popcount(s), {})
        layer[s] = t
        if _layer_acyclic(layer):
            matched.update((s, t))
        else:
            del layer[s]
    pairs = frozenset((s, t) for layer in by_layer.values() for s, t in layer.items())
    M = MorseMatching(D, pairs)
    if not verify_acyclic_matching(M):
        raise AssertionError("greedy construction produced a cyclic matching")
    return M


def _layer_acyclic(up: dict[int, int]) -> bool:
    preds: dict[int, set[int]] = {}
    for alpha, beta in up.items():
        for v in bits(beta):
            other = beta & ~(1 << v)
            if other != alpha:
                preds.setdefault(other, set()).add(alpha)
    try:
        tuple(TopologicalSorter(preds).static_order())
    except CycleError:
        return False
    return True


def best_greedy_matching(D: SimplicialComplex, tries: int = 20, seed: int = 0,
                         include_empty: bool = True) -> MorseMatching:
    """Fewest critical cells among the lexicographic run and ``tries`` shuffles."""
    best = greedy_acyclic_matching(D, None, include_empty)
    rng = random.Random(seed)
    for _ in range(tries):
        M = greedy_acyclic_matching(D, rng.randrange(1 << 30), include_empty)
        if len(M.critical()) < len(best.critical()):
            best = M
    return best


@dataclass(frozen=True)
class MorseRow:
    dim: int
    critical: int
    homology: int

    @property
    def slack(self) -> int:
        return self.critical - self.homology


def morse_inequality_report(M: MorseMatching, field: int = RATIONALS) -> list[MorseRow]:
    """Per dimension: critical count c_p, reduced Betti number d_p, slack c_p - d_p."""
    if not verify_acyclic_matching(M):
        raise MatchingError("matching is not acyclic")
    H = reduced_homology(M.complex, field)
    counts = M.critical_counts()
    return [MorseRow(d, counts[d], H[d]) for d in sorted(counts)]


def morse_boundary(M: MorseMatching, tau: int, field: int = RATIONALS) -> dict[int, int]:
    """Morse differential of a critical face: gradient paths from the facets
    of ``tau`` to critical faces one dimension down, with signed weights."""
    k = popcount(tau) - 1
    chain: dict[int, int] = {}
    for v in bits(tau):
        s = tau & ~(1 << v)
        chain[s] = chain.get(s, 0) + _sign(s, tau)
    order = TopologicalSorter(_layer_graph(M, k)).static_order()
    out: dict[int, int] = {}
    for alpha in order:
        w = chain.pop(alpha, 0)
        if field:
            w %= field
        if not w:
            continue
        if alpha in M.up:
            beta = M.up[alpha]
            inc = _sign(alpha, beta)
            for u in bits(beta):
                other = beta & ~(1 << u)
                if other != alpha:
                    # flow alpha -> beta -> other carries -[beta:other]/[beta:alpha]
                    chain[other] = chain.get(other, 0) - w * _sign(other, beta) * inc
        elif alpha not in M.down:
            out[alpha] = w
    return out


def morse_complex_homology(M: MorseMatching, field: int = RATIONALS,
                           max_critical: int = DEFAULT_MAX_CRITICAL) -> HomologyProfile:
    """Reduced homology of the Morse complex of an acyclic matching."""
    check_field(field)
    if not verify_acyclic_matching(M):
        raise MatchingError("matching is not acyclic")
    crit = M.critical()
    if len(crit) > max_critical:
        raise MatchingError(f"{len(crit)} critical cells exceeds the limit {max_critical}")
    top = M.complex.dim
    if top < -1:
        return HomologyProfile(field, (0,))
    by_dim: dict[int, list[int]] = {d: [] for d in range(-1, top + 1)}
    for f in crit:
        by_dim[popcount(f) - 1].append(f)
    ranks = {d: 0 for d in range(-1, top + 2)}
    for d in range(0, top + 1):
        lower = {f: i for i, f in enumerate(by_dim[d - 1])}
        rows = []
        for tau in by_dim[d]:
            row = [0] * len(lower)
            for s, c in morse_boundary(M, tau, field).items():
                row[lower[s]] = int(c)
            rows.append(row)
        ranks[d] = rank(rows, field) if rows and lower else 0
    dims = tuple(len(by_dim[d]) - ranks[d] - ranks[d + 1] for d in range(-1, top + 1))
    return HomologyProfile(field, dims)


def critical_faces_labelled(M: MorseMatching, dim: int) -> list[tuple[str, ...]]:
    return [M.complex.labels_of(f) for f in M.critical() if popcount(f) == dim + 1]
