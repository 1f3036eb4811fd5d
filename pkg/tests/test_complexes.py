import random

import pytest
from hypothesis import given, settings, strategies as st

from edgeideal.complexes import (
    ComplexError,
    SimplicialComplex,
    compare_fields,
    cone,
    format_facets,
    independence_complex,
    induced_homology_map_rank,
    induced_subcomplex,
    is_subcomplex,
    join,
    parse_facets,
    reduced_homology,
    union,
)
from edgeideal.graph import (
    all_graphs,
    build_graph,
    cycle_graph,
    edgeless_graph,
    induced_subgraph,
    path_graph,
    random_graph,
    suspend,
)

import oracles
from strategies import graph_and_subset, graphs


def matching(k):
    return build_graph(2 * k, [(2 * i + 1, 2 * i + 2) for i in range(k)])


def S0(a="a", b="b"):
    return SimplicialComplex.from_facets((a, b), [0b01, 0b10])


def test_independence_complex_examples():
    D = independence_complex(build_graph(2, [(1, 2)]))
    assert sorted(D.facets) == [1, 2]
    assert reduced_homology(D).nonzero() == {0: 1}
    assert reduced_homology(independence_complex(matching(3))).nonzero() == {2: 1}
    assert reduced_homology(independence_complex(edgeless_graph(3))).is_zero()


def test_minimal_nonfaces_are_edges():
    G = cycle_graph(5)
    D = independence_complex(G)
    for i in range(G.n):
        for j in range(i + 1, G.n):
            assert ((1 << i | 1 << j) in D) == (not G.adj[i] >> j & 1)


def test_induced_subcomplex_examples():
    C6 = cycle_graph(6)
    D = independence_complex(C6)
    Y = induced_subcomplex(D, C6.vertex_set([2, 3, 5, 6]))
    assert reduced_homology(Y).nonzero() == {1: 1}
    assert induced_subcomplex(D, C6.full_mask).label_faces() == D.label_faces()
    P4 = path_graph(4)
    E = induced_subcomplex(independence_complex(P4), P4.vertex_set([1, 4]))
    assert E.dim == 1 and reduced_homology(E).is_zero()


def test_cone_and_join_examples():
    assert reduced_homology(cone(S0())).is_zero()
    assert reduced_homology(join(S0(), S0("c", "d"))).nonzero() == {1: 1}
    with pytest.raises(ComplexError):
        join(S0(), S0())


def test_homology_examples():
    assert reduced_homology(independence_complex(cycle_graph(6))).nonzero() == {1: 2}
    assert reduced_homology(independence_complex(matching(3))).nonzero() == {2: 1}


def test_empty_face_conventions():
    assert SimplicialComplex.void().dim == -2
    assert reduced_homology(SimplicialComplex.void()).is_zero()
    empty = SimplicialComplex.from_faces((), [0])
    assert reduced_homology(empty).nonzero() == {-1: 1}
    point = SimplicialComplex.simplex(("p",))
    assert reduced_homology(point).is_zero()


def test_path_complexes():
    # contractible exactly for n = 1 mod 3; a single sphere otherwise
    for n in range(2, 11):
        G = path_graph(n)
        got = reduced_homology(independence_complex(G)).nonzero()
        brute = oracles.reduced_betti_numbers(oracles.independent_subsets(n, G.edges()))
        assert got == brute
        if n % 3 == 1:
            assert got == {}
        else:
            assert got == {(n - 1) // 3 if n % 3 == 2 else n // 3 - 1: 1}


def test_induced_map_rank_examples():
    C6 = cycle_graph(6)
    D = independence_complex(C6)
    A = independence_complex(induced_subgraph(C6, C6.vertex_set([2, 3, 5, 6])))
    assert induced_homology_map_rank(D, A, 1) == 1
    for r in range(-1, 3):
        assert induced_homology_map_rank(D, D, r) == reduced_homology(D)[r]
    C3 = cycle_graph(3)
    edge = SimplicialComplex.from_facets(("x2", "x3"), [0b11])
    with pytest.raises(ComplexError):
        induced_homology_map_rank(independence_complex(C3), edge, 0)
    pts = SimplicialComplex.from_facets(("x2", "x3"), [0b01, 0b10])
    assert induced_homology_map_rank(independence_complex(C3), pts, 0) == 1


def test_induced_map_rank_zero_when_target_acyclic():
    P4 = path_graph(4)
    D = independence_complex(P4)
    A = independence_complex(induced_subgraph(P4, P4.vertex_set([2, 3])))
    assert reduced_homology(A)[0] == 1
    assert induced_homology_map_rank(D, A, 0) == 0


def test_partial_cone_decomposition():
    def check(G, C):
        lhs = independence_complex(suspend(G, C))
        A = independence_complex(induced_subgraph(G, G.full_mask & ~C))
        rhs = union(independence_complex(G), cone(A, "z"))
        assert lhs.label_faces() == rhs.label_faces()
        inter = independence_complex(G).label_faces() & cone(A, "z").label_faces()
        assert inter == A.label_faces()

    for n in range(1, 5):
        for G in all_graphs(n):
            for C in range(1 << n):
                check(G, C)
    rng = random.Random(11)
    for G in all_graphs(6)[::37]:
        check(G, rng.randrange(1 << 6))


def test_induced_commutes_exhaustive_small():
    for n in range(1, 5):
        for G in all_graphs(n):
            D = independence_complex(G)
            for W in range(1 << n):
                a = induced_subcomplex(D, W)
                b = independence_complex(induced_subgraph(G, W))
                assert a.label_faces() == b.label_faces()
                assert reduced_homology(a) == reduced_homology(b)


@given(graph_and_subset(min_n=5, max_n=7))
@settings(max_examples=60, deadline=None)
def test_induced_commutes_random(pair):
    G, W = pair
    D = independence_complex(G)
    assert reduced_homology(induced_subcomplex(D, W)) == reduced_homology(
        independence_complex(induced_subgraph(G, W)))


@given(graphs(max_n=7))
@settings(max_examples=80, deadline=None)
def test_euler_characteristic(G):
    D = independence_complex(G)
    f = D.f_vector()
    assert sum((-1) ** (k - 1) * c for k, c in enumerate(f)) == reduced_homology(D).euler()


@given(graphs(max_n=6))
@settings(max_examples=50, deadline=None)
def test_homology_matches_sympy_oracle(G):
    got = reduced_homology(independence_complex(G)).nonzero()
    assert got == oracles.reduced_betti_numbers(oracles.independent_subsets(G.n, G.edges()))


@st.composite
def complexes(draw):
    m = draw(st.integers(1, 6))
    facets = draw(st.lists(st.integers(1, (1 << m) - 1), min_size=1, max_size=6))
    return SimplicialComplex.from_facets([f"v{i}" for i in range(m)], facets)


@given(complexes())
@settings(max_examples=50, deadline=None)
def test_cone_is_acyclic(D):
    assert reduced_homology(cone(D, "apex")).is_zero()


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_join_shift(k):
    assert reduced_homology(independence_complex(matching(k))).nonzero() == {k - 1: 1}


def test_fields_agree_small_graphs():
    for n in range(1, 6):
        for G in all_graphs(n):
            assert compare_fields(independence_complex(G))[2]
    rng = random.Random(5)
    for n in (6, 7):
        for _ in range(40):
            assert compare_fields(independence_complex(random_graph(n, rng)))[2]


def test_fields_disagree_on_projective_plane():
    # 6-vertex triangulation of RP^2: H_1 has 2-torsion
    tri = ["124", "126", "135", "136", "145", "234", "235", "256", "346", "456"]
    D = SimplicialComplex.from_facets([str(i) for i in range(1, 7)],
                                      [sum(1 << int(c) - 1 for c in t) for t in tri])
    hq, h2, same = compare_fields(D, prime=2)
    assert hq.is_zero() and h2.nonzero() == {1: 1, 2: 1} and not same


def test_facet_round_trip():
    D = independence_complex(cycle_graph(6))
    E = parse_facets(format_facets(D))
    assert E.label_faces() == D.label_faces()
    assert parse_facets("# nothing\n").faces == (0,)
    assert is_subcomplex(induced_subcomplex(D, 0b000111), D)


def test_face_limit():
    with pytest.raises(ComplexError):
        reduced_homology(independence_complex(edgeless_graph(8)), max_faces=100)


def test_downward_closure_enforced():
    with pytest.raises(ComplexError):
        SimplicialComplex(("a", "b"), (0, 0b11))
