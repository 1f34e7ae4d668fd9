"""ADE Coxeter-Dynkin graphs in finite, affine, and semi-affine form.

Undirected edges are stored as pairs of opposed directed edges in an integer
multiplicity matrix. The semi-affine form is the affine form with the row of
the affine node zeroed, which turns node 0 into a sink.

Canonical node order: node 0 is the affine node, nodes 1..k walk the longest
chain away from it, and the leftover branch/tip nodes come last (D: the near
tip then the second far tip; E6: the mirror arm; E7/E8: the branch node).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import InvalidParameter
from .poly import Polynomial, cox

_E_COXETER = {6: 12, 7: 18, 8: 30}
_E_ORDER = {6: 24, 7: 48, 8: 120}
_E_AB = {6: (6, 8), 7: (8, 12), 8: (12, 20)}
_E_CONDUCTOR = {6: 12, 7: 24, 8: 60}

_TYPE_RE = re.compile(r"^([ADE])(\d+)$")


@dataclass(frozen=True, order=True)
class DynkinType:
    """One of A_m (m>=1), D_m (m>=4), E_6, E_7, E_8."""

    family: str
    m: int

    def __post_init__(self):
        if self.family == "A":
            ok = self.m >= 1
        elif self.family == "D":
            ok = self.m >= 4
        elif self.family == "E":
            ok = self.m in (6, 7, 8)
        else:
            ok = False
        if not ok:
            raise InvalidParameter(f"no ADE type {self.family}{self.m}")

    @classmethod
    def parse(cls, text: str) -> DynkinType:
        m = _TYPE_RE.match(text.strip())
        if not m:
            raise InvalidParameter(f"cannot parse Dynkin type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.m}"

    @property
    def rank(self) -> int:
        return self.m

    @property
    def coxeter_number(self) -> int:
        if self.family == "A":
            return self.m + 1
        if self.family == "D":
            return 2 * self.m - 2
        return _E_COXETER[self.m]

    @property
    def group_order(self) -> int:
        if self.family == "A":
            return self.m + 1
        if self.family == "D":
            return 4 * (self.m - 2)
        return _E_ORDER[self.m]

    @property
    def standard_ab(self) -> tuple[int, int]:
        h = self.coxeter_number
        if self.family == "A":
            return (2, h)
        if self.family == "D":
            return (4, h - 2)
        return _E_AB[self.m]

    @property
    def conductor(self) -> int:
        """Exponent of the attached SU(2) subgroup."""
        if self.family == "A":
            return self.m + 1
        if self.family == "D":
            return lcm(4, 2 * (self.m - 2))
        return _E_CONDUCTOR[self.m]


FORMS = ("finite", "affine", "semiaffine")


@dataclass(frozen=True)
class DirectedGraph:
    n: int
    mult: tuple[tuple[int, ...], ...]
    affine_index: int | None
    labels: tuple[str, ...]
    dynkin: DynkinType | None = None
    form: str | None = None

    def out_degree(self, i: int) -> int:
        return sum(self.mult[i])

    def is_symmetric(self) -> bool:
        return all(self.mult[i][j] == self.mult[j][i]
                   for i in range(self.n) for j in range(self.n))

    def undirected_neighbors(self, i: int) -> list[int]:
        return [j for j in range(self.n) if self.mult[i][j] or self.mult[j][i]]

    def distances_from(self, start: int) -> list[int]:
        """BFS distance treating every edge as undirected."""
        dist = [-1] * self.n
        dist[start] = 0
        frontier = [start]
        while frontier:
            nxt = []
            for i in frontier:
                for j in self.undirected_neighbors(i):
                    if dist[j] < 0:
                        dist[j] = dist[i] + 1
                        nxt.append(j)
            frontier = nxt
        return dist

    def to_json(self) -> dict:
        edges = [{"from": i, "to": j, "mult": self.mult[i][j]}
                 for i in range(self.n) for j in range(self.n) if self.mult[i][j]]
        return {"nodes": self.n, "affine_index": self.affine_index, "edges": edges}

    @classmethod
    def from_json(cls, obj: dict) -> DirectedGraph:
        n = obj["nodes"]
        mult = [[0] * n for _ in range(n)]
        for e in obj["edges"]:
            mult[e["from"]][e["to"]] = e["mult"]
        return cls(n, tuple(tuple(r) for r in mult), obj["affine_index"],
                   tuple(str(i) for i in range(n)))

    def to_dot(self, name: str = "g") -> str:
        lines = [f'digraph "{name}" {{']
        for i in range(self.n):
            shape = ", shape=doublecircle" if i == self.affine_index else ""
            lines.append(f'  {i} [label="{self.labels[i]}"{shape}];')
        for i in range(self.n):
            for j in range(self.n):
                lines.extend([f"  {i} -> {j};"] * self.mult[i][j])
        lines.append("}")
        return "\n".join(lines) + "\n"


def _affine_edges(dt: DynkinType) -> list[tuple[int, int]]:
    """Undirected edges of the affine graph in canonical node order.

    The A1 double bond is returned as a repeated edge.
    """
    m = dt.m
    if dt.family == "A":
        if m == 1:
            return [(0, 1), (0, 1)]
        return [(i, i + 1) for i in range(m)] + [(m, 0)]
    if dt.family == "D":
        # 0 affine tip - c1 .. c_{m-3} - farA(m-2); near(m-1) on c1; farB(m) on c_{m-3}
        edges = [(0, 1)]
        edges += [(i, i + 1) for i in range(1, m - 2)]
        edges += [(1, m - 1), (m - 3, m)]
        return edges
    if m == 6:
        return [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]
    if m == 7:
        return [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)]
    return [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)]


def build_graph(dt: DynkinType, form: str) -> DirectedGraph:
    if form not in FORMS:
        raise InvalidParameter(f"unknown graph form {form!r}")
    n = dt.rank + 1
    mult = [[0] * n for _ in range(n)]
    for i, j in _affine_edges(dt):
        mult[i][j] += 1
        mult[j][i] += 1
    if form == "finite":
        sub = [row[1:] for row in mult[1:]]
        return DirectedGraph(n - 1, tuple(tuple(r) for r in sub), None,
                             tuple(str(i) for i in range(n - 1)), dt, form)
    if form == "semiaffine":
        mult[0] = [0] * n
    return DirectedGraph(n, tuple(tuple(r) for r in mult), 0,
                         tuple(str(i) for i in range(n)), dt, form)


def char_poly(g: DirectedGraph) -> Polynomial:
    """Characteristic polynomial det(tI - mult) by the Faddeev-LeVerrier
    trace recursion over exact integers."""
    n = g.n
    M = [list(row) for row in g.mult]
    B = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cs = [1]
    for k in range(1, n + 1):
        MB = [[sum(M[i][l] * B[l][j] for l in range(n)) for j in range(n)]
              for i in range(n)]
        tr = sum(MB[i][i] for i in range(n))
        assert tr % k == 0
        ck = -(tr // k)
        cs.append(ck)
        B = [[MB[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    # char(t) = t^n + cs[1] t^(n-1) + ... + cs[n]
    return Polynomial("t", list(reversed(cs)))


@lru_cache(maxsize=None)
def graph_marks(dt: DynkinType) -> tuple[int, ...]:
    """Integer eigenvector of the affine adjacency at eigenvalue 2,
    normalized so the affine node carries 1 (the marks)."""
    g = build_graph(dt, "affine")
    n = g.n
    # solve (A - 2I) x = 0 with x_0 = 1 pinned
    rows = [[Fraction(g.mult[i][j] - (2 if i == j else 0)) for j in range(1, n)]
            for i in range(n)]
    rhs = [Fraction(-(g.mult[i][0] - (2 if i == 0 else 0))) for i in range(n)]
    # Gaussian elimination on the n x (n-1) overdetermined system
    pivot_row = 0
    where = [-1] * (n - 1)
    for col in range(n - 1):
        sel = next((r for r in range(pivot_row, n) if rows[r][col] != 0), None)
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        rhs[pivot_row], rhs[sel] = rhs[sel], rhs[pivot_row]
        inv = 1 / rows[pivot_row][col]
        rows[pivot_row] = [v * inv for v in rows[pivot_row]]
        rhs[pivot_row] *= inv
        for r in range(n):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * p for v, p in zip(rows[r], rows[pivot_row])]
                rhs[r] -= f * rhs[pivot_row]
        where[col] = pivot_row
        pivot_row += 1
    assert all(w >= 0 for w in where), "affine marks system lost rank"
    assert all(rhs[r] == 0 for r in range(pivot_row, n)), "marks system inconsistent"
    x = [rhs[where[col]] for col in range(n - 1)]
    marks = [Fraction(1)] + x
    assert all(v.denominator == 1 and v > 0 for v in marks)
    return tuple(int(v) for v in marks)


@dataclass(frozen=True)
class CharPolyReport:
    dynkin: DynkinType
    d: int
    cofactor: Polynomial
    cox: Polynomial
    claim_holds: bool
    char_semiaffine: Polynomial
    char_finite: Polynomial
    structural_ok: bool

    def to_json(self) -> dict:
        return {
            "type": str(self.dynkin),
            "d": self.d,
            "cofactor": self.cofactor.to_json(),
            "cox": self.cox.to_json(),
            "claim_holds": self.claim_holds,
            "char_semiaffine": self.char_semiaffine.to_json(),
            "char_finite": self.char_finite.to_json(),
            "structural_ok": self.structural_ok,
        }


def charpoly_report(dt: DynkinType) -> CharPolyReport:
    """Factor the semi-affine characteristic polynomial as t^d * cofactor and
    compare the cofactor against cox(h); also assert the structural identity
    char(semiaffine) = t * char(finite)."""
    semi = char_poly(build_graph(dt, "semiaffine"))
    fin = char_poly(build_graph(dt, "finite"))
    structural_ok = semi == fin.shifted(1)
    assert structural_ok
    d = semi.min_exponent()
    cofactor = Polynomial("t", semi.coeffs[d:])
    h = dt.coxeter_number
    coxh = cox(h)
    claim = (cofactor == coxh) and (d == dt.rank + 1 - coxh.degree)
    return CharPolyReport(dt, d, cofactor, coxh, claim, semi, fin, structural_ok)


def parse_type_selector(text: str) -> list[DynkinType]:
    """Expand a selector like "D4", "E6,E7", or "A1..A12" (inclusive ranges
    within one family). Invalid members raise before any computation."""
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise InvalidParameter("empty type selector token")
        if ".." in token:
            lo_s, hi_s = token.split("..", 1)
            lo = DynkinType.parse(lo_s)
            hi = DynkinType.parse(hi_s)
            if lo.family != hi.family or lo.m > hi.m:
                raise InvalidParameter(f"bad range {token!r}")
            out.extend(DynkinType(lo.family, m) for m in range(lo.m, hi.m + 1))
        else:
            out.append(DynkinType.parse(token))
    return out
