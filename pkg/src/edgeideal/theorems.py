"""Instance-by-instance verification of the suspension results.

Every suite expands a parameter window into concrete instances (a graph,
possibly a suspension set), computes both sides independently and emits one
flat record per instance.  Records carry the graph's edges and the set as a
bit-mask, so any failing line can be replayed on its own.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field, replace
from typing import Callable, Iterator

from .betti import full_suspension_betti_predict, hochster_betti_table, homological_invariants
from .complexes import (
    independence_complex,
    induced_homology_map_rank,
    induced_subcomplex,
    reduced_homology,
)
from .graph import (
    Graph,
    all_graphs,
    bits,
    build_graph,
    enumerate_maximal_independent_sets,
    family,
    full_suspension,
    induced_subgraph,
    is_maximal_independent,
    mask_of,
    minimal_vertex_covers,
    popcount,
    random_graph,
    suspend,
)
from .indpoly import a_invariant, cofactor_at_minus_one, independence_polynomial
from .linalg import RATIONALS, check_field
from .morse import (
    greedy_acyclic_matching,
    morse_complex_homology,
    morse_inequality_report,
    restrict_matching,
    verify_acyclic_matching,
)
from .suspension import (
    MonomialIdeal,
    cover_profile,
    dominating_partner,
    edge_ideal,
    extend_ambient,
    extremal_sets,
    indicator_string,
    is_exceptional_path_set,
    suspension_poly_identity_check,
    variable_ideal,
)

EXHAUSTIVE_MAX = 5
HOCHSTER_MAX_N = 13  # base graph size; the suspension adds one vertex
POLY_MAX_N = 23


class WindowError(ValueError):
    pass


@dataclass(frozen=True)
class VerifyParams:
    """Instance window.  ``None`` fields fall back to the suite's defaults."""

    n_min: int | None = None
    n_max: int | None = None
    samples: int | None = None  # random graphs per n above the exhaustive range
    seed: int = 0
    field: int = RATIONALS
    jobs: int = 1


@dataclass
class InstanceRecord:
    id: str
    theorem: str
    instance: dict
    expected: dict
    computed: dict
    holds: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "InstanceRecord":
        return cls(**json.loads(line))


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    records: list[InstanceRecord] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.holds for r in self.records)

    def failures(self) -> list[InstanceRecord]:
        return [r for r in self.records if not r.holds]

    def to_jsonl(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.records)

    @classmethod
    def from_jsonl(cls, theorem: str, params: dict, text: str) -> "VerificationReport":
        return cls(theorem, params, [InstanceRecord.from_json(l) for l in text.splitlines() if l.strip()])

    def summary(self) -> str:
        total = len(self.records)
        bad = len(self.failures())
        rows = [("theorem", "instances", "held", "failed", "status"),
                (self.theorem, str(total), str(total - bad), str(bad), "PASS" if not bad else "FAIL")]
        widths = [max(len(r[k]) for r in rows) for k in range(5)]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n"


# -- instance populations ------------------------------------------------------

def graph_code(G: Graph) -> list[list[int]]:
    return [[i + 1, j + 1] for i, j in G.edges()]


def _edge_tag(G: Graph) -> str:
    m = 0
    for k, (i, j) in enumerate((i, j) for j in range(G.n) for i in range(j)):
        if G.adj[i] >> j & 1:
            m |= 1 << k
    return f"n{G.n}e{m:x}"


def graph_population(n_min: int, n_max: int, samples: int, seed: int,
                     drop_isolated: bool = True) -> Iterator[Graph]:
    """All labelled graphs for n <= 5, then ``samples`` seeded random graphs
    per n (redrawn while they have isolated vertices, when asked)."""
    for n in range(max(1, n_min), n_max + 1):
        if n <= EXHAUSTIVE_MAX:
            for G in all_graphs(n):
                if not (drop_isolated and G.isolated_vertices()):
                    yield G
        else:
            rng = random.Random(f"{seed}:{n}")
            got = 0
            while got < samples:
                G = random_graph(n, rng)
                if drop_isolated and G.isolated_vertices():
                    continue
                got += 1
                yield G


def _record(theorem: str, ident: str, instance: dict, expected: dict, computed: dict,
            holds: bool | None = None) -> InstanceRecord:
    if holds is None:
        holds = expected == computed
    return InstanceRecord(f"{theorem}/{ident}", theorem, instance, expected, computed, bool(holds))


def _set_names(G: Graph, C: int) -> list[str]:
    return list(G.names(C))


# -- predicates (each takes one picklable task and returns records) -----------

def _full_suspension(task) -> list[InstanceRecord]:
    G, field = task
    H = full_suspension(G)
    predicted = full_suspension_betti_predict(G, field)
    direct = hochster_betti_table(H, field)
    base = hochster_betti_table(G, field)
    inst = {"n": G.n, "edges": graph_code(G), "isolated": bool(G.isolated_vertices())}
    expected = {"table": predicted.to_records(), "reg": base.reg, "pdim": G.n, "beta01": 0}
    computed = {"table": direct.to_records(), "reg": direct.reg, "pdim": direct.pdim,
                "beta01": direct[0, 1]}
    return [_record("full-suspension", _edge_tag(G), inst, expected, computed)]


def _colon_plus(G: Graph, C: int) -> tuple[dict, dict]:
    H = suspend(G, C)
    I = edge_ideal(H)
    colon = I.colon_var("z")
    plus = I.plus_var("z")
    want_colon = variable_ideal(H.labels, C)
    want_plus = extend_ambient(edge_ideal(G), H.labels).plus_var("z")
    return ({"colon": want_colon.monomials(), "plus": want_plus.monomials()},
            {"colon": colon.monomials(), "plus": plus.monomials()})


def _cover_suspension(task) -> list[InstanceRecord]:
    G, field = task
    reg, pdim = homological_invariants(G, field)
    out = []
    for C in minimal_vertex_covers(G):
        reg2, pdim2 = homological_invariants(suspend(G, C), field)
        exp_ideal, got_ideal = _colon_plus(G, C)
        out.append(_record(
            "cover-suspension", f"{_edge_tag(G)}/c{C:x}",
            {"n": G.n, "edges": graph_code(G), "C": C, "C_labels": _set_names(G, C)},
            {"reg": reg, "pdim": pdim + 1, **exp_ideal},
            {"reg": reg2, "pdim": pdim2, **got_ideal}))
    return out


def _ainv_cover(task) -> list[InstanceRecord]:
    (G,) = task
    P = independence_polynomial(G)
    m, q0 = cofactor_at_minus_one(P)
    out = []
    for C in minimal_vertex_covers(G):
        u = G.n - popcount(C)
        H = suspend(G, C)
        rep = a_invariant(H)
        M2 = rep.M
        ident = suspension_poly_identity_check(G, C, "cover")
        if m < u:
            case, ok_case, want = "M<u", M2 == m, m
        elif m > u:
            case, ok_case, want = "M>u", M2 == u, u
        else:
            case, ok_case, want = "M=u", M2 >= u, f">={u}"
        ok_q = (M2 > u) == (m == u and q0 == 1)
        holds = ok_case and ok_q and ident.holds and rep.a == -M2
        out.append(_record(
            "ainv-cover", f"{_edge_tag(G)}/c{C:x}",
            {"n": G.n, "edges": graph_code(G), "C": C, "u": u, "M_G": m, "q0": q0, "case": case},
            {"M": want, "exceeds_u": m == u and q0 == 1, "a": -M2, "poly": ident.rhs.to_json()},
            {"M": M2, "exceeds_u": M2 > u, "a": rep.a, "poly": ident.lhs.to_json()},
            holds))
    return out


def _cycle_like(kind: str, n: int, C: int, field: int) -> tuple[dict, dict, dict]:
    """Shared base/suspension invariants for path and cycle suites."""
    G = family(kind, n)
    reg, pdim = homological_invariants(G, field)
    H = suspend(G, C)
    reg2, pdim2 = homological_invariants(H, field)
    a, a2 = a_invariant(G).a, a_invariant(H).a
    ident = suspension_poly_identity_check(G, C, kind)
    inst = {"kind": kind, "n": n, "C": C, "C_labels": _set_names(G, C), "word": indicator_string(n, C)}
    base = {"reg": reg, "pdim": pdim, "a": a}
    susp = {"reg": reg2, "pdim": pdim2, "a": a2, "poly_identity": ident.holds}
    inst["base"] = base
    return inst, base, susp


def _wide_spokes(task) -> list[InstanceRecord]:
    n, field = task
    out = []
    for C in extremal_sets("cycle", n):
        G = family("cycle", n)
        reg = homological_invariants(G, field)[0]
        reg2 = homological_invariants(suspend(G, C), field)[0]
        out.append(_record("wide-spokes", f"n{n}/c{C:x}",
                           {"n": n, "C": C, "C_labels": _set_names(G, C), "canonical": C & 1 == 1},
                           {"reg": reg}, {"reg": reg2}))
    return out


def _baseline(kind: str, n: int, field: int) -> InstanceRecord:
    reg, pdim = homological_invariants(family(kind, n), field)
    if kind == "path":
        exp = {"reg": (n + 1) // 3, "pdim": -(-2 * (n - 1) // 3)}
        got = {"reg": reg, "pdim": pdim}
    else:
        k, r = divmod(n, 3)
        exp = {"reg": k + 1 if r == 2 else k}
        got = {"reg": reg}
    return _record(f"{kind}-suspension", f"n{n}/baseline", {"kind": kind, "n": n, "baseline": True}, exp, got)


def _cycle_suspension(task) -> list[InstanceRecord]:
    n, field = task
    out = [_baseline("cycle", n, field)]
    for C in enumerate_maximal_independent_sets(family("cycle", n)):
        inst, base, susp = _cycle_like("cycle", n, C, field)
        inst["wide_spoke"] = n % 3 == 0 and popcount(C) == n // 3
        expected = {"reg": base["reg"], "pdim": base["pdim"] + 1, "a": 0, "a_base": 0, "poly_identity": True}
        computed = {"reg": susp["reg"], "pdim": susp["pdim"], "a": susp["a"], "a_base": base["a"],
                    "poly_identity": susp["poly_identity"]}
        out.append(_record("cycle-suspension", f"n{n}/c{C:x}", inst, expected, computed))
    return out


def _path_suspension(task) -> list[InstanceRecord]:
    n, field = task
    out = [_baseline("path", n, field)]
    for C in enumerate_maximal_independent_sets(family("path", n)):
        inst, base, susp = _cycle_like("path", n, C, field)
        exc = is_exceptional_path_set(n, C)
        inst["exceptional"] = exc
        expected = {"reg": base["reg"] + exc, "pdim": base["pdim"] + 1, "a": base["a"] + exc,
                    "poly_identity": True}
        out.append(_record("path-suspension", f"n{n}/c{C:x}", inst, expected,
                           {k: susp[k] for k in ("reg", "pdim", "a", "poly_identity")}))
    return out


def _inclusion_injectivity(task) -> list[InstanceRecord]:
    n, field = task
    k = n // 3
    G = family("cycle", n)
    C1 = extremal_sets("cycle", n)[0]
    D = independence_complex(G)
    A = independence_complex(induced_subgraph(G, G.full_mask & ~C1))
    dim_a = reduced_homology(A, field)[k - 1]
    r = induced_homology_map_rank(D, A, k - 1, field)
    return [_record("inclusion-injectivity", f"k{k}", {"n": n, "k": k, "degree": k - 1},
                    {"rank": 1, "dim_A": 1}, {"rank": r, "dim_A": dim_a})]


def _sigma(n: int, start: int) -> int:
    return mask_of(range(start, n, 3))


def _critical_homology(task) -> list[InstanceRecord]:
    n, field = task
    k = n // 3
    D = independence_complex(family("cycle", n))
    H = reduced_homology(D, field)
    kk2 = build_graph(2 * k, [(2 * i + 1, 2 * i + 2) for i in range(k)])
    H2 = reduced_homology(independence_complex(kk2), field)
    M = greedy_acyclic_matching(D)
    crit = sorted(f for f in M.critical() if popcount(f) == k)
    sig = sorted((_sigma(n, 1), _sigma(n, 2)))
    # whether greedy recovers sigma_1, sigma_2 is reported, not part of ``holds``
    return [_record("critical-homology", f"k{k}", {"n": n, "k": k},
                    {"cycle": {str(k - 1): 2}, "kK2": {str(k - 1): 1}},
                    {"cycle": {str(r): d for r, d in H.nonzero().items()},
                     "kK2": {str(r): d for r, d in H2.nonzero().items()},
                     "greedy_top_critical": [list(D.labels_of(f)) for f in crit],
                     "greedy_matches_sigmas": crit == sig},
                    H.nonzero() == {k - 1: 2} and H2.nonzero() == {k - 1: 1})]


def _colon_identity(task) -> list[InstanceRecord]:
    G, kind = task
    out = []
    if kind is None:
        for C in range(1 << G.n):
            if any((C >> i & 1) == 0 and (C >> j & 1) == 0 for i, j in G.edges()):
                continue
            exp, got = _colon_plus(G, C)
            out.append(_record("colon-identity", f"{_edge_tag(G)}/c{C:x}",
                               {"n": G.n, "edges": graph_code(G), "C": C}, exp, got))
        return out
    for C in enumerate_maximal_independent_sets(G):
        H = suspend(G, C)
        # I(P) + (x_i : x_i in C) with P = G - C; z is last, so indices agree
        rest = {1 << i | 1 << j for i, j in G.edges() if not C >> i & 1 and not C >> j & 1}
        want = MonomialIdeal.from_supports(H.labels, rest | {1 << i for i in bits(C)})
        got = edge_ideal(H).colon_var("z")
        out.append(_record("colon-identity", f"{kind}{G.n}/c{C:x}",
                           {"kind": kind, "n": G.n, "C": C, "C_labels": _set_names(G, C)},
                           {"colon": want.monomials()}, {"colon": got.monomials()}))
    return out


def _ell_bounds(task) -> list[InstanceRecord]:
    (n,) = task
    G = family("path", n)
    out = []
    achievers = []
    for C in enumerate_maximal_independent_sets(G):
        prof = cover_profile("path", n, C)
        w = indicator_string(n, C)
        exc = is_exceptional_path_set(n, C)
        if prof.ell == (n - 1) // 3:
            achievers.append(C)
        D = dominating_partner(n, C)
        H = suspend(G, C)
        checks = {
            "ell_bound": prof.ell <= (n - 1) // 3,
            "ell_plus_t_bound": prof.ell + prof.t <= (2 * n + 1) // 3,
            "sharper_bound": not (n % 3 == 1 and not exc) or prof.ell + prof.t <= 2 * (n // 3),
            "t_pq": prof.t == prof.p + prof.q + 1,
            "ell_q": prof.ell == prof.q,
            "n_split": n == prof.delta + 1 + 2 * prof.p + 3 * prof.q,
            "e_formula": prof.e == prof.t - prof.ell - 1 + prof.delta,
            "ell_plus_t": 2 * (prof.ell + prof.t) == n + 1 - prof.delta + prof.q,
            "word_shape": "11" not in w and "000" not in w
                          and not w.startswith("00") and not w.endswith("00"),
        }
        # the dominating-partner construction is recorded, not asserted: it
        # misses x_n when n = 0 mod 3 and x1 is in C
        d_valid = is_maximal_independent(H, D) and popcount(D) == -(-n // 3)
        out.append(_record("ell-bounds", f"n{n}/c{C:x}",
                           {"n": n, "C": C, "word": w, "exceptional": exc, "t": prof.t, "ell": prof.ell,
                            "e": prof.e, "delta": prof.delta, "p": prof.p, "q": prof.q,
                            "D": D, "D_valid": d_valid},
                           {k: True for k in checks}, checks))
    if n % 3 == 1:
        out.append(_record("ell-bounds", f"n{n}/unique", {"n": n, "uniqueness": True},
                           {"achievers": [_sigma(n, 0)]}, {"achievers": achievers}))
    return out


def _morse_consistency(task) -> list[InstanceRecord]:
    G, field, seed = task
    D = independence_complex(G)
    rng = random.Random(seed)
    M = greedy_acyclic_matching(D, seed=rng.randrange(1 << 30) if seed else None)
    acyclic = verify_acyclic_matching(M)
    hom = reduced_homology(D, field)
    morse = morse_complex_homology(M, field)
    slack_ok = all(row.slack >= 0 for row in morse_inequality_report(M, field))
    W = rng.randrange(1 << G.n)
    Y = induced_subcomplex(D, W)
    MY = restrict_matching(M, Y)
    crit_y = {Y.mask(D.labels_of(f)) for f in M.critical() if f & ~W == 0}
    still_critical = crit_y <= set(MY.critical())
    checks = {"acyclic": acyclic, "homology_equal": hom.nonzero() == morse.nonzero(),
              "morse_inequalities": slack_ok, "restriction_acyclic": verify_acyclic_matching(MY),
              "restriction_keeps_critical": still_critical}
    return [_record("morse-consistency", f"{_edge_tag(G)}/s{seed}/w{W:x}",
                    {"n": G.n, "edges": graph_code(G), "seed": seed, "W": W,
                     "critical": {str(d): c for d, c in M.critical_counts().items()}},
                    {k: True for k in checks}, checks)]


# -- registry ------------------------------------------------------------------

@dataclass(frozen=True)
class Suite:
    check: Callable
    n_min: int
    n_max: int
    samples: int
    max_n: int
    tasks: Callable  # (params) -> list of task tuples


def _graph_tasks(drop_isolated: bool, with_field: bool = True):
    def make(p: VerifyParams) -> list:
        pop = graph_population(p.n_min, p.n_max, p.samples, p.seed, drop_isolated)
        return [(G, p.field) if with_field else (G,) for G in pop]
    return make


def _n_tasks(step3: bool = False, with_field: bool = True, lo: int = 1):
    def make(p: VerifyParams) -> list:
        ns = [n for n in range(max(lo, p.n_min), p.n_max + 1) if not step3 or n % 3 == 0]
        return [(n, p.field) if with_field else (n,) for n in ns]
    return make


def _colon_tasks(p: VerifyParams) -> list:
    tasks = [(G, None) for G in graph_population(p.n_min, p.n_max, p.samples, p.seed, False)]
    tasks += [(family("path", n), "path") for n in range(max(1, p.n_min), p.n_max + 1)]
    tasks += [(family("cycle", n), "cycle") for n in range(max(3, p.n_min), p.n_max + 1)]
    return tasks


def _morse_tasks(p: VerifyParams) -> list:
    tasks = []
    for n in range(max(1, p.n_min), p.n_max + 1):
        rng = random.Random(f"{p.seed}:morse:{n}")
        for r in range(p.samples):
            tasks.append((random_graph(n, rng), p.field, p.seed * 1000 + r + 1))
    for n in range(max(3, p.n_min), p.n_max + 1, 1):
        if n % 3 == 0:
            tasks.append((family("cycle", n), p.field, 0))
    return tasks


SUITES: dict[str, Suite] = {
    "full-suspension": Suite(_full_suspension, 2, 5, 10, HOCHSTER_MAX_N - 1, _graph_tasks(True)),
    "cover-suspension": Suite(_cover_suspension, 2, 5, 10, HOCHSTER_MAX_N - 1, _graph_tasks(True)),
    "ainv-cover": Suite(_ainv_cover, 2, 5, 10, POLY_MAX_N, _graph_tasks(True, with_field=False)),
    "wide-spokes": Suite(_wide_spokes, 3, 9, 0, HOCHSTER_MAX_N, _n_tasks(step3=True, lo=3)),
    "cycle-suspension": Suite(_cycle_suspension, 3, 9, 0, HOCHSTER_MAX_N, _n_tasks(lo=3)),
    "path-suspension": Suite(_path_suspension, 3, 10, 0, HOCHSTER_MAX_N, _n_tasks(lo=2)),
    "inclusion-injectivity": Suite(_inclusion_injectivity, 3, 9, 0, 15, _n_tasks(step3=True, lo=3)),
    "critical-homology": Suite(_critical_homology, 3, 9, 0, 15, _n_tasks(step3=True, lo=3)),
    "colon-identity": Suite(_colon_identity, 1, 6, 20, POLY_MAX_N, _colon_tasks),
    "ell-bounds": Suite(_ell_bounds, 1, 15, 0, POLY_MAX_N, _n_tasks(with_field=False)),
    "morse-consistency": Suite(_morse_consistency, 2, 6, 20, 9, _morse_tasks),
}

THEOREM_IDS = tuple(SUITES)


def resolve_params(theorem: str, params: VerifyParams | None = None) -> VerifyParams:
    if theorem not in SUITES:
        raise KeyError(f"unknown theorem id {theorem!r}; choose from {', '.join(THEOREM_IDS)}")
    s = SUITES[theorem]
    p = params or VerifyParams()
    p = replace(p, n_min=s.n_min if p.n_min is None else p.n_min,
                n_max=s.n_max if p.n_max is None else p.n_max,
                samples=s.samples if p.samples is None else p.samples)
    check_field(p.field)
    if p.n_min > p.n_max:
        raise WindowError(f"empty window {p.n_min}..{p.n_max}")
    if p.n_max > s.max_n:
        raise WindowError(f"{theorem}: n = {p.n_max} exceeds the size limit {s.max_n}")
    if p.samples < 0 or p.jobs < 1:
        raise WindowError("samples must be >= 0 and jobs >= 1")
    return p


def verify_theorem(theorem: str, params: VerifyParams | None = None, **overrides) -> VerificationReport:
    """Run one suite.  Records come back in task order whatever ``jobs`` is."""
    if overrides:
        params = replace(params or VerifyParams(), **overrides)
    p = resolve_params(theorem, params)
    suite = SUITES[theorem]
    tasks = suite.tasks(p)
    if p.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(p.jobs) as ex:
            chunks = list(ex.map(suite.check, tasks, chunksize=max(1, len(tasks) // (8 * p.jobs))))
    else:
        chunks = [suite.check(t) for t in tasks]
    records = [r for chunk in chunks for r in chunk]
    return VerificationReport(theorem, asdict(p), records)
