"""Independence polynomials, the multiplicity of -1 as a root, h-polynomials
and a-invariants.  All arithmetic is on Python integers."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .graph import Graph, GraphError, bits, full_suspension, independence_number, popcount


class InexactDivision(ArithmeticError):
    pass


class IntPolynomial:
    """Univariate polynomial with integer coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> float:
        """Degree; the zero polynomial has degree ``-inf``."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> "IntPolynomial":
        return IntPolynomial([other]) if isinstance(other, int) else other

    def __add__(self, other) -> "IntPolynomial":
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPolynomial(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "IntPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "IntPolynomial":
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def exact_div_int(self, d: int) -> "IntPolynomial":
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise InexactDivision(f"coefficient {c} is not divisible by {d}")
            out.append(q)
        return IntPolynomial(out)

    def div_x_plus_one(self) -> tuple["IntPolynomial", int]:
        """Synthetic division by ``1 + x``: returns ``(quotient, remainder)``."""
        if not self.coeffs:
            return IntPolynomial(), 0
        # Horner at x = -1 on descending coefficients
        desc = list(reversed(self.coeffs))
        q = [desc[0]]
        for c in desc[1:]:
            q.append(c - q[-1])
        rem = q.pop()
        return IntPolynomial(reversed(q)), rem

    def compose_linear(self, a: int, b: int) -> "IntPolynomial":
        """``p(a + b*x)``."""
        lin = IntPolynomial([a, b])
        out = IntPolynomial()
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "IntPolynomial":
        return cls(data)

    def format(self, var: str = "x") -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = var if k == 1 else f"{var}^{k}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


ONE = IntPolynomial([1])
X = IntPolynomial([0, 1])
ONE_PLUS_X = IntPolynomial([1, 1])
ONE_PLUS_2X = IntPolynomial([1, 2])
ONE_MINUS_T = IntPolynomial([1, -1])


def independence_polynomial(G: Graph) -> IntPolynomial:
    """Deletion-contraction at a maximum-degree vertex, memoised on the
    vertex mask of the induced subgraph of ``G``."""
    memo: dict[int, IntPolynomial] = {}

    def rec(W: int) -> IntPolynomial:
        hit = memo.get(W)
        if hit is not None:
            return hit
        best, best_deg = -1, 0
        for v in bits(W):
            d = popcount(G.adj[v] & W)
            if d > best_deg:
                best, best_deg = v, d
        if best_deg == 0:
            out = ONE_PLUS_X ** popcount(W)
        else:
            out = rec(W & ~(1 << best)) + X * rec(W & ~(G.adj[best] | 1 << best))
        memo[W] = out
        return out

    return rec(G.full_mask)


def family_poly(kind: str, n: int) -> IntPolynomial:
    """Path/cycle polynomials from the linear recurrences (P_0 = 1)."""
    if kind == "path":
        if n < 0:
            raise GraphError("path length must be non-negative")
        prev, cur = ONE, ONE_PLUS_X  # P_0, P_1
        if n == 0:
            return prev
        for _ in range(n - 1):
            prev, cur = cur, cur + X * prev
        return cur
    if kind == "cycle":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return family_poly("path", n - 1) + X * family_poly("path", n - 3)
    raise GraphError(f"unknown family {kind!r}")


def closed_form_poly(kind: str, n: int) -> IntPolynomial:
    """Binomial expansion of the closed forms in s = sqrt(1 + 4x).

    With (1 + s)^n = E + s*O, the cycle polynomial is 2E / 2^n and the path
    polynomial is ((1 + 2x) O + E) / 2^n, where E and O only involve s^2.
    """
    s2 = IntPolynomial([1, 4])
    even = sum((comb(n, 2 * i) * s2 ** i for i in range(n // 2 + 1)), IntPolynomial())
    odd = sum((comb(n, 2 * i + 1) * s2 ** i for i in range((n - 1) // 2 + 1)), IntPolynomial())
    if kind == "cycle":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return (2 * even).exact_div_int(2 ** n)
    if kind == "path":
        if n < 0:
            raise GraphError("path length must be non-negative")
        return (ONE_PLUS_2X * odd + even).exact_div_int(2 ** n)
    raise GraphError(f"unknown family {kind!r}")


def multiplicity_at_minus_one(p: IntPolynomial) -> int:
    """Largest M with (1 + x)^M dividing ``p``."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root multiplicity")
    m = 0
    while True:
        q, rem = p.div_x_plus_one()
        if rem:
            return m
        p = q
        m += 1


def cofactor_at_minus_one(p: IntPolynomial) -> tuple[int, int]:
    """``(M, q(0))`` where p = (1 + x)^M q(x) written in y = 1 + x; q(0) is
    the value at x = -1 of p / (1 + x)^M."""
    m = multiplicity_at_minus_one(p)
    q = p
    for _ in range(m):
        q, _ = q.div_x_plus_one()
    return m, q(-1)


def h_polynomial_from_faces(f: Sequence[int], d: int) -> IntPolynomial:
    """h(t) = sum_i f_{i-1} t^i (1 - t)^(d - i), where ``f[i]`` counts i-sets."""
    out = IntPolynomial()
    for i, fi in enumerate(f):
        if fi:
            out = out + fi * IntPolynomial.monomial(i) * ONE_MINUS_T ** (d - i)
    return out


def h_polynomial(G: Graph) -> IntPolynomial:
    """Numerator of the Hilbert series of R/I(G) over (1 - t)^alpha."""
    P = independence_polynomial(G)
    return h_polynomial_from_faces(P.coeffs, P.degree)


@dataclass(frozen=True)
class AInvariantReport:
    alpha: int
    M: int
    a: int
    hdeg: int

    @property
    def consistent(self) -> bool:
        return self.a == -self.M and self.hdeg == self.alpha - self.M


def a_invariant(G: Graph) -> AInvariantReport:
    """a-invariant from the Hilbert series, with M(G) alongside for comparison.

    ``a`` is computed as deg h - alpha from the h-polynomial, and ``M`` from
    the independence polynomial, so :attr:`AInvariantReport.consistent` is a
    genuine cross-check.
    """
    P = independence_polynomial(G)
    alpha = P.degree
    h = h_polynomial_from_faces(P.coeffs, alpha)
    return AInvariantReport(alpha=alpha, M=multiplicity_at_minus_one(P),
                            a=h.degree - alpha, hdeg=h.degree)


@dataclass(frozen=True)
class FullSuspensionHilbertReport:
    d: int
    h_graph: IntPolynomial
    h_suspension: IntPolynomial
    predicted: IntPolynomial
    a_graph: int
    a_suspension: int
    identity_holds: bool
    trichotomy_holds: bool

    @property
    def holds(self) -> bool:
        return self.identity_holds and self.trichotomy_holds


def hilbert_full_suspension_check(G: Graph) -> FullSuspensionHilbertReport:
    """Compare h of the full suspension against h_G(t) + t(1 - t)^(d-1)."""
    d = independence_number(G)
    hg = h_polynomial(G)
    hs = h_polynomial(full_suspension(G))
    predicted = hg + IntPolynomial.monomial(1) * ONE_MINUS_T ** (d - 1)
    a_g = hg.degree - d
    a_s = hs.degree - d
    if a_g < 0:
        tri = a_s == 0
    else:
        tri = a_s <= 0
        if hg[d] != (-1) ** d:
            tri = tri and a_s == 0
    tri = tri and a_s == predicted.degree - d
    return FullSuspensionHilbertReport(d, hg, hs, predicted, a_g, a_s, hs == predicted, tri)


def path_minus_one_sequences(m_max: int) -> tuple[list[int], list[int]]:
    """a_m = P_{P_m}(-1) and b_m = P'_{P_m}(-1) for m = 0..m_max.

    Built by the recurrences a_m = a_{m-1} - a_{m-2} and
    b_m = b_{m-1} + a_{m-2} - b_{m-2}, then checked against direct evaluation
    of the path polynomials; a mismatch raises ``AssertionError``.
    """
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    a, b = [1, 0], [0, 1]
    for m in range(2, m_max + 1):
        a.append(a[m - 1] - a[m - 2])
        b.append(b[m - 1] + a[m - 2] - b[m - 2])
    for m in range(m_max + 1):
        P = family_poly("path", m)
        if P(-1) != a[m] or P.derivative()(-1) != b[m]:
            raise AssertionError(f"recurrence disagrees with evaluation at m={m}")
    return a, b

