"""Simplicial complexes on labelled ground sets and their reduced homology.

Faces are bit-masks over the complex's own ``ground`` tuple.  The empty face
(mask 0) belongs to every non-void complex and sits in dimension -1, so
homology here is always *reduced*: the complex ``{∅}`` has a one-dimensional
H_{-1}, the void complex (no faces at all) has none.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .graph import Graph, bits, independent_sets, mask_of, popcount
from .linalg import RATIONALS, check_field, field_name, nullspace, rank

DEFAULT_MAX_FACES = 200_000


class ComplexError(ValueError):
    pass


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of faces.  Use :meth:`from_facets` to build one."""

    ground: tuple[str, ...]
    faces: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.ground)) != len(self.ground):
            raise ComplexError("ground labels must be distinct")
        face_set = set(self.faces)
        full = (1 << len(self.ground)) - 1
        for f in self.faces:
            if f & ~full:
                raise ComplexError("face uses a vertex outside the ground set")
            for v in bits(f):
                if f & ~(1 << v) not in face_set:
                    raise ComplexError("face family is not downward closed")

    @classmethod
    def from_faces(cls, ground: Sequence[str], faces: Iterable[int]) -> "SimplicialComplex":
        return cls(tuple(ground), tuple(sorted(set(faces), key=lambda f: (popcount(f), _lex_key(f)))))

    @classmethod
    def from_facets(cls, ground: Sequence[str], facets: Iterable[int]) -> "SimplicialComplex":
        faces: set[int] = set()
        for F in facets:
            sub = F
            while True:  # every submask of F
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & F
        return cls.from_faces(ground, faces)

    @classmethod
    def void(cls, ground: Sequence[str] = ()) -> "SimplicialComplex":
        return cls(tuple(ground), ())

    @classmethod
    def simplex(cls, ground: Sequence[str]) -> "SimplicialComplex":
        return cls.from_facets(ground, [(1 << len(ground)) - 1])

    @cached_property
    def face_set(self) -> frozenset[int]:
        return frozenset(self.faces)

    @cached_property
    def facets(self) -> tuple[int, ...]:
        fs = self.face_set
        full = (1 << len(self.ground)) - 1
        out = [f for f in self.faces if not any(f | 1 << v in fs for v in bits(full & ~f))]
        return tuple(out)

    @property
    def dim(self) -> int:
        """Dimension; the void complex reports -2."""
        if not self.faces:
            return -2
        return max(popcount(f) for f in self.faces) - 1

    def faces_of_dim(self, d: int) -> list[int]:
        """Faces of dimension ``d`` in lexicographic order of sorted vertex index."""
        return sorted((f for f in self.faces if popcount(f) == d + 1), key=_lex_key)

    def f_vector(self) -> list[int]:
        """Face counts f_{-1}, f_0, ..., f_dim."""
        out = [0] * (self.dim + 2)
        for f in self.faces:
            out[popcount(f)] += 1
        return out

    def labels_of(self, face: int) -> tuple[str, ...]:
        return tuple(self.ground[i] for i in bits(face))

    def label_faces(self) -> frozenset[frozenset[str]]:
        """Faces as sets of labels, for comparisons independent of ground order."""
        return frozenset(frozenset(self.labels_of(f)) for f in self.faces)

    def mask(self, labels: Iterable[str]) -> int:
        try:
            return mask_of(self.ground.index(x) for x in labels)
        except ValueError:
            raise ComplexError(f"unknown vertex among {list(labels)!r}") from None

    def __contains__(self, face: int) -> bool:
        return face in self.face_set

    def __len__(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology dimensions ``dims[r + 1] = dim H̃_r`` for r >= -1."""

    field: int
    dims: tuple[int, ...] = dc_field(default=(0,))

    def __getitem__(self, r: int) -> int:
        if r < -1 or r + 1 >= len(self.dims):
            return 0
        return self.dims[r + 1]

    def nonzero(self) -> dict[int, int]:
        return {r - 1: d for r, d in enumerate(self.dims) if d}

    def is_zero(self) -> bool:
        return not any(self.dims)

    def euler(self) -> int:
        """Reduced Euler characteristic sum_r (-1)^r dim H̃_r."""
        return sum((-1) ** (r - 1) * d for r, d in enumerate(self.dims))

    def __str__(self) -> str:
        parts = ", ".join(f"H{r}={d}" for r, d in self.nonzero().items()) or "acyclic"
        return f"HomologyProfile({field_name(self.field)}: {parts})"


# -- constructions -------------------------------------------------------------

def independence_complex(G: Graph) -> SimplicialComplex:
    """Faces are the independent sets of ``G``; ground is ``G.labels``."""
    return SimplicialComplex.from_faces(G.labels, independent_sets(G))


def induced_subcomplex(D: SimplicialComplex, W: int) -> SimplicialComplex:
    """``D|_W`` on the ground set ``W`` (labels kept, indices compressed)."""
    keep = bits(W)
    pos = {v: k for k, v in enumerate(keep)}
    faces = [mask_of(pos[v] for v in bits(f)) for f in D.faces if f & ~W == 0]
    return SimplicialComplex.from_faces([D.ground[v] for v in keep], faces)


def _check_fresh(a: Sequence[str], b: Sequence[str]) -> None:
    clash = set(a) & set(b)
    if clash:
        raise ComplexError(f"ground sets overlap in {sorted(clash)}")


def join(D1: SimplicialComplex, D2: SimplicialComplex) -> SimplicialComplex:
    _check_fresh(D1.ground, D2.ground)
    s = len(D1.ground)
    faces = [f1 | f2 << s for f1 in D1.faces for f2 in D2.faces]
    return SimplicialComplex.from_faces(D1.ground + D2.ground, faces)


def cone(D: SimplicialComplex, apex: str = "z") -> SimplicialComplex:
    """Cone with the apex appended as the last ground vertex."""
    return join(D, SimplicialComplex.simplex((apex,)))


def union(D1: SimplicialComplex, D2: SimplicialComplex) -> SimplicialComplex:
    """Union of two complexes, matched by label; ground order is D1's then new labels."""
    ground = list(D1.ground) + [x for x in D2.ground if x not in D1.ground]
    out = SimplicialComplex.from_faces(ground, ())
    faces = set(D1.faces)
    faces.update(out.mask(D2.labels_of(f)) for f in D2.faces)
    return SimplicialComplex.from_faces(ground, faces)


def is_subcomplex(A: SimplicialComplex, D: SimplicialComplex) -> bool:
    return A.label_faces() <= D.label_faces()


# -- homology ------------------------------------------------------------------

def _boundary_rows(upper: list[int], lower_index: dict[int, int]) -> list[list[int]]:
    """One row per face in ``upper``: its boundary over ``lower_index``."""
    width = len(lower_index)
    rows = []
    for f in upper:
        row = [0] * width
        for i, v in enumerate(bits(f)):
            row[lower_index[f & ~(1 << v)]] = -1 if i % 2 else 1
        rows.append(row)
    return rows


def _chain_layers(faces: Iterable[int]) -> list[list[int]]:
    layers: list[list[int]] = []
    for f in faces:
        k = popcount(f)
        while len(layers) <= k:
            layers.append([])
        layers[k].append(f)
    for layer in layers:
        layer.sort(key=_lex_key)
    return layers


def _homology_dims(faces: Iterable[int], field: int) -> tuple[int, ...]:
    layers = _chain_layers(faces)
    if not layers:
        return (0,)
    # ranks[k] = rank of the boundary map from layer k (faces with k vertices) to layer k-1
    ranks = [0] * (len(layers) + 1)
    for k in range(1, len(layers)):
        index = {f: i for i, f in enumerate(layers[k - 1])}
        ranks[k] = rank(_boundary_rows(layers[k], index), field) if layers[k] else 0
    return tuple(len(layers[k]) - ranks[k] - ranks[k + 1] for k in range(len(layers)))


def reduced_homology(D: SimplicialComplex, field: int = RATIONALS,
                     max_faces: int = DEFAULT_MAX_FACES) -> HomologyProfile:
    check_field(field)
    if len(D.faces) > max_faces:
        raise ComplexError(f"{len(D.faces)} faces exceeds the limit {max_faces}")
    return HomologyProfile(field, _homology_dims(D.faces, field))


@lru_cache(maxsize=1 << 18)
def _independence_dims(adj: tuple[int, ...], field: int) -> tuple[int, ...]:
    G = Graph(tuple(str(i) for i in range(len(adj))), adj)
    return _homology_dims(independent_sets(G), field)


def independence_homology(adj: tuple[int, ...], field: int = RATIONALS) -> tuple[int, ...]:
    """Reduced homology dims of the independence complex of a graph given by
    its adjacency masks.  Memoized on ``(adj, field)``."""
    return _independence_dims(adj, field)


def induced_homology_map_rank(D: SimplicialComplex, A: SimplicialComplex, r: int,
                              field: int = RATIONALS) -> int:
    """Rank of H̃_r(A) -> H̃_r(D) induced by the inclusion ``A ⊆ D``.

    Cycles of A are computed in D's coordinates so both chain groups share one
    orientation convention; the rank is ``dim(Z_r(A) + B_r(D)) - dim B_r(D)``.
    """
    check_field(field)
    try:
        a_faces = {D.mask(A.labels_of(f)) for f in A.faces}
    except ComplexError:
        raise ComplexError("A is not a subcomplex of D") from None
    if not a_faces <= D.face_set:
        raise ComplexError("A is not a subcomplex of D")
    layers = _chain_layers(D.faces)

    def layer(k: int) -> list[int]:
        return layers[k] if 0 <= k < len(layers) else []

    r_faces = layer(r + 1)
    r_index = {f: i for i, f in enumerate(r_faces)}
    a_r = [f for f in r_faces if f in a_faces]
    if not a_r:
        return 0
    if r >= 0:
        lower = {f: i for i, f in enumerate(layer(r))}
        rows = _boundary_rows(a_r, lower)
        # columns = A's r-faces; null space gives cycle coefficient vectors
        cols = [list(c) for c in zip(*rows)]
        cycles_a = nullspace(cols, len(a_r), field)
    else:
        cycles_a = [[1]]
    z = []
    for vec in cycles_a:
        full = [0] * len(r_faces)
        for f, c in zip(a_r, vec):
            full[r_index[f]] = c
        z.append(full)
    b = _boundary_rows(layer(r + 2), r_index) if layer(r + 2) else []
    rank_b = rank(b, field) if b else 0
    return rank(z + b, field) - rank_b


def compare_fields(D: SimplicialComplex, prime: int = 32003) -> tuple[HomologyProfile, HomologyProfile, bool]:
    """Homology over the rationals and over GF(prime); a mismatch signals torsion."""
    hq = reduced_homology(D, RATIONALS)
    hp = reduced_homology(D, prime)
    return hq, hp, hq.dims == hp.dims


# -- facet-list text format ----------------------------------------------------

def parse_facets(text: str) -> SimplicialComplex:
    """One facet per line as whitespace-separated labels.  No facet lines at
    all gives the complex ``{∅}``."""
    ground: list[str] = []
    facets = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        for x in line:
            if x not in ground:
                ground.append(x)
        facets.append(mask_of(ground.index(x) for x in line))
    return SimplicialComplex.from_facets(ground, facets or [0])


def format_facets(D: SimplicialComplex) -> str:
    return "".join(" ".join(D.labels_of(F)) + "\n" for F in sorted(D.facets, key=_lex_key))
