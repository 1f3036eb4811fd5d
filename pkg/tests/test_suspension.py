import pytest
from hypothesis import given, settings

from edgeideal.graph import (
    all_graphs,
    build_graph,
    cycle_graph,
    enumerate_maximal_independent_sets,
    family,
    is_maximal_independent,
    is_vertex_cover,
    path_graph,
    suspend,
)
from edgeideal.indpoly import IntPolynomial, a_invariant, independence_polynomial
from edgeideal.suspension import (
    MonomialIdeal,
    PreconditionError,
    cover_profile,
    dominating_partner,
    edge_ideal,
    extend_ambient,
    extremal_sets,
    indicator_string,
    is_exceptional_path_set,
    minimalize,
    suspension_poly_identity_check,
    variable_ideal,
)
from edgeideal.theorems import _ainv_cover

from strategies import graph_and_subset


def test_edge_ideal_examples():
    assert edge_ideal(build_graph(2, [(1, 2)])).monomials() == ["x1x2"]
    assert edge_ideal(path_graph(3)).monomials() == ["x1x2", "x2x3"]
    P3 = path_graph(3)
    assert edge_ideal(suspend(P3, P3.vertex_set([2]))).monomials() == ["x1x2", "x2x3", "x2z"]


def test_colon_examples():
    P3 = path_graph(3)
    I = edge_ideal(suspend(P3, P3.vertex_set([2])))
    assert I.colon_var("z").monomials() == ["x2"]
    C6 = cycle_graph(6)
    I = edge_ideal(suspend(C6, C6.vertex_set([1, 4])))
    assert I.colon_var("z").monomials() == ["x1", "x2x3", "x4", "x5x6"]
    J = edge_ideal(P3)
    assert extend_ambient(J, P3.labels + ("w",)).colon_var("w").generators == J.generators


def test_monomial_ideal_invariants():
    assert minimalize([0b11, 0b1, 0b110]) == frozenset({0b1, 0b110})
    with pytest.raises(ValueError):
        MonomialIdeal(("a", "b"), frozenset({0b1, 0b11}))
    with pytest.raises(ValueError):
        MonomialIdeal(("a",), frozenset({0}))
    I = MonomialIdeal.from_labels("abc", [["a", "b"], ["b", "c"]])
    assert I.plus_var("b").monomials() == ["b"]
    assert (I + variable_ideal("abc", 0b100)).monomials() == ["ab", "c"]


@given(graph_and_subset(max_n=6))
@settings(max_examples=150, deadline=None)
def test_colon_plus_identities_every_cover(pair):
    G, C = pair
    if not is_vertex_cover(G, C):
        return
    H = suspend(G, C)
    I = edge_ideal(H)
    assert I.colon_var("z") == variable_ideal(H.labels, C)
    assert I.plus_var("z") == extend_ambient(edge_ideal(G), H.labels).plus_var("z")


def test_profile_examples():
    p = cover_profile("path", 4, 0b1001)
    assert (p.t, p.ell, p.e, p.delta) == (2, 1, 0, 0)
    p = cover_profile("cycle", 6, 0b001001)
    assert (p.ell, p.e) == (2, 0)
    p = cover_profile("path", 5, path_graph(5).vertex_set([2, 5]))
    assert (p.ell, p.delta, p.e) == (1, 1, 1)
    with pytest.raises(PreconditionError):
        cover_profile("path", 4, 0b0001)


def test_profile_identities_paths_to_fifteen():
    for n in range(1, 16):
        for C in enumerate_maximal_independent_sets(path_graph(n)):
            p = cover_profile("path", n, C)
            w = indicator_string(n, C)
            assert "11" not in w and "000" not in w
            assert not w.startswith("00") and not w.endswith("00")
            assert p.t == p.p + p.q + 1 and p.ell == p.q
            assert n == p.delta + 1 + 2 * p.p + 3 * p.q
            assert p.e == p.t - p.ell - 1 + p.delta
            assert 2 * (p.ell + p.t) == n + 1 - p.delta + p.q
            assert p.ell <= (n - 1) // 3


def test_cycle_profile_identity():
    for n in range(3, 13):
        for C in enumerate_maximal_independent_sets(cycle_graph(n)):
            p = cover_profile("cycle", n, C)
            assert p.ell == n - 2 * p.t and p.e == p.t - p.ell


def test_extremal_examples():
    C9 = cycle_graph(9)
    assert [C9.names(C) for C in extremal_sets("cycle", 9)] == [
        ["x1", "x4", "x7"], ["x2", "x5", "x8"], ["x3", "x6", "x9"]]
    P7 = path_graph(7)
    assert [P7.names(C) for C in extremal_sets("path", 7)] == [["x1", "x4", "x7"]]
    P6 = path_graph(6)
    assert P6.vertex_set([1, 4, 6]) in extremal_sets("path", 6)
    with pytest.raises(ValueError):
        extremal_sets("cycle", 7)


def test_extremal_uniqueness():
    for n in range(1, 14, 3):
        assert extremal_sets("path", n) == [sum(1 << i for i in range(0, n, 3))]
        assert is_exceptional_path_set(n, extremal_sets("path", n)[0])


def test_dominating_partner():
    """The partner set D of a maximal independent set C of P_n.

    It is an independent set of size ceil(n/3) meeting C in every case.  It
    dominates the suspended path except when n = 0 mod 3 and x1 is in C:
    then x_n has no neighbour in D.
    """
    for n in range(1, 16):
        G = path_graph(n)
        for C in enumerate_maximal_independent_sets(G):
            D = dominating_partner(n, C)
            H = suspend(G, C)
            assert bin(D).count("1") == -(-n // 3)
            assert D & C
            gap = n % 3 == 0 and C & 1
            assert is_maximal_independent(H, D) == (not gap), (n, bin(C))
            if gap:
                assert not D >> (n - 1) & 1 and not D >> (n - 2) & 1


def test_dominating_partner_gap_cannot_be_fixed_at_three():
    # for P3 suspended over {x1, x3} no maximal independent set of size 1 exists
    G = suspend(path_graph(3), 0b101)
    assert min(bin(S).count("1") for S in enumerate_maximal_independent_sets(G)) == 2


def test_poly_identity_examples():
    rep = suspension_poly_identity_check(path_graph(4), 0b1001, "path")
    assert rep.lhs == IntPolynomial([1, 5, 5]) and rep.holds
    C6 = cycle_graph(6)
    assert suspension_poly_identity_check(C6, C6.vertex_set([1, 3, 5]), "cover").holds
    assert suspension_poly_identity_check(C6, C6.vertex_set([1, 4]), "cycle").holds
    with pytest.raises(PreconditionError):
        suspension_poly_identity_check(C6, C6.vertex_set([1, 4]), "cover")
    with pytest.raises(PreconditionError):
        suspension_poly_identity_check(C6, C6.vertex_set([1, 3]), "cycle")


def test_cover_identity_all_small_graphs():
    for n in range(1, 6):
        for G in all_graphs(n):
            for C in range(1 << n):
                if is_vertex_cover(G, C):
                    assert suspension_poly_identity_check(G, C, "cover").holds


def test_family_identities_to_fourteen():
    for kind, lo in (("path", 1), ("cycle", 3)):
        for n in range(lo, 15):
            G = family(kind, n)
            for C in enumerate_maximal_independent_sets(G):
                assert suspension_poly_identity_check(G, C, kind).holds


def test_ainv_cover_branch_above_u():
    edges = [(0, 4), (0, 5), (0, 6), (0, 7), (1, 3), (1, 6), (1, 7), (2, 4), (2, 6),
             (3, 6), (4, 5), (4, 6), (5, 6), (6, 7)]
    G = build_graph(8, [(a + 1, b + 1) for a, b in edges])
    records = _ainv_cover((G,))
    cases = {r.instance["case"] for r in records}
    assert cases == {"M<u", "M>u", "M=u"}
    assert all(r.holds for r in records)
    above = [r for r in records if r.instance["case"] == "M>u"]
    assert all(r.computed["M"] == r.instance["u"] for r in above)


def test_ainv_cover_cancellation_clause():
    # with isolated vertices the M = u case can strictly increase M
    seen = 0
    for n in range(1, 6):
        for G in all_graphs(n):
            for r in _ainv_cover((G,)):
                assert r.holds
                if r.computed["exceeds_u"]:
                    seen += 1
                    assert r.instance["case"] == "M=u" and r.instance["q0"] == 1
    assert seen > 0


def test_exceptional_path_a_invariant():
    P4 = path_graph(4)
    assert a_invariant(P4).a == -1
    assert a_invariant(suspend(P4, 0b1001)).a == 0
    assert independence_polynomial(suspend(P4, 0b1001)) == IntPolynomial([1, 5, 5])
