"""Finite subgroups of SU(2) attached to the ADE types.

Each group is enumerated as exact 2x2 unitary matrices over a cyclotomic
field whose conductor is the group exponent. Conjugacy classes, character
tables, the McKay matrix, generalized Molien series, and symmetric-power
multiplicities are all computed over the same field and collapsed to Q
where the theory says they must be rational.

Character tables: the A and D families are written down directly (cyclic
characters; four linear characters plus the induced two-dimensional ones).
The E types are built constructively: linear characters from the
abelianization, symmetric powers of the defining character, tensor peeling
against the known rows, and a regular-character completion for the last row.
Every table must pass ``validate_table`` before use.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .cyclo import CycNumber, minimal_polynomial
from .errors import (ClosureOverflow, NoIsomorphism, NonPolynomialResult,
                     ValidationFailed)
from .graphs import DirectedGraph, DynkinType, build_graph, graph_marks
from .poly import Polynomial, RationalFunction


class Matrix2:
    """Immutable 2x2 matrix over a fixed-conductor cyclotomic field."""

    __slots__ = ("a", "b", "c", "d", "_hash")

    def __init__(self, a: CycNumber, b: CycNumber, c: CycNumber, d: CycNumber):
        self.a, self.b, self.c, self.d = a, b, c, d
        self._hash = hash((a, b, c, d))

    @property
    def conductor(self) -> int:
        return self.a.N

    @classmethod
    def identity(cls, N: int) -> Matrix2:
        one, zero = CycNumber.one(N), CycNumber.zero(N)
        return cls(one, zero, zero, one)

    def __matmul__(self, other: Matrix2) -> Matrix2:
        return Matrix2(self.a * other.a + self.b * other.c,
                       self.a * other.b + self.b * other.d,
                       self.c * other.a + self.d * other.c,
                       self.c * other.b + self.d * other.d)

    def conj_transpose(self) -> Matrix2:
        return Matrix2(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())

    def det(self) -> CycNumber:
        return self.a * self.d - self.b * self.c

    def trace(self) -> CycNumber:
        return self.a + self.d

    def is_unitary(self) -> bool:
        m = self.conj_transpose() @ self
        return (self.det() == 1 and m.a == 1 and m.d == 1
                and m.b.is_zero() and m.c.is_zero())

    def __eq__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return (self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Matrix2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def quaternion(N: int, a, b, c, d) -> Matrix2:
    """Unit quaternion a + b i + c j + d k as an SU(2) matrix (4 | N)."""
    i = CycNumber.root_of_unity(N, N // 4)

    def lift(v):
        return v if isinstance(v, CycNumber) else CycNumber.from_rational(N, v)

    a, b, c, d = lift(a), lift(b), lift(c), lift(d)
    return Matrix2(a + b * i, c + d * i, -c + d * i, a - b * i)


def generators(dt: DynkinType) -> list[Matrix2]:
    """Standard generators: cyclic rotations for A, a rotation plus the
    quaternion j for D, Hurwitz units for E6, adding zeta_8 for E7, and an
    icosian pair for E8."""
    N = dt.conductor
    if dt.family == "A":
        z = CycNumber.root_of_unity(N, 1)
        zero = CycNumber.zero(N)
        return [Matrix2(z, zero, zero, z.conj())]
    if dt.family == "D":
        k = dt.m - 2
        z = CycNumber.root_of_unity(N, N // (2 * k))
        zero, one = CycNumber.zero(N), CycNumber.one(N)
        rot = Matrix2(z, zero, zero, z.conj())
        s = Matrix2(zero, one, -one, zero)
        return [rot, s]
    half = Fraction(1, 2)
    if dt.m == 6:
        return [quaternion(N, 0, 1, 0, 0), quaternion(N, 0, 0, 1, 0),
                quaternion(N, -half, half, half, half)]
    if dt.m == 7:
        z8 = CycNumber.root_of_unity(N, N // 8)
        zero = CycNumber.zero(N)
        return [quaternion(N, 0, 1, 0, 0), quaternion(N, 0, 0, 1, 0),
                quaternion(N, -half, half, half, half),
                Matrix2(z8, zero, zero, z8.conj())]
    # E8: golden ratio lives in Q(zeta_5) inside Q(zeta_60)
    phi = -(CycNumber.root_of_unity(N, 24) + CycNumber.root_of_unity(N, 36))
    return [quaternion(N, -half, half, half, half),
            quaternion(N, half * phi, half, 0, half * (phi - 1))]


@dataclass(frozen=True)
class ConjClass:
    rep: int
    members: tuple[int, ...]
    size: int
    trace: CycNumber
    order: int
    eigen_exp: int  # trace = zeta^e + zeta^(-e)


class FiniteSubgroup:
    """Enumerated subgroup with its conjugacy class partition."""

    def __init__(self, dynkin: DynkinType, conductor: int, gens: list[Matrix2],
                 elements: list[Matrix2], index: dict[Matrix2, int],
                 classes: list[ConjClass], class_of: list[int]):
        self.dynkin = dynkin
        self.conductor = conductor
        self.generators = tuple(gens)
        self.elements = tuple(elements)
        self.index = index
        self.classes = tuple(classes)
        self.class_of = tuple(class_of)
        self.identity_index = 0

    @property
    def order(self) -> int:
        return len(self.elements)

    def classes_to_json(self) -> list[dict]:
        return [{"order": c.order, "size": c.size, "trace": c.trace.to_json(),
                 "trace_min_poly": minimal_polynomial(c.trace).to_json()}
                for c in self.classes]


def _element_order(m: Matrix2) -> int:
    ident = Matrix2.identity(m.conductor)
    p = m
    k = 1
    while p != ident:
        p = p @ m
        k += 1
    return k


def _eigen_exponent(trace: CycNumber) -> int:
    N = trace.N
    for e in range(N):
        if CycNumber.root_of_unity(N, e) + CycNumber.root_of_unity(N, N - e) == trace:
            return e
    raise ValueError(f"trace {trace} is not a sum zeta^e + zeta^-e")


def enumerate_subgroup(gens: list[Matrix2], dt: DynkinType) -> FiniteSubgroup:
    """Breadth-first closure under multiplication, then conjugacy classes as
    orbits of generator conjugation."""
    N = gens[0].conductor
    for g in gens:
        if not g.is_unitary():
            raise ValueError(f"generator is not special unitary: {g!r}")
    limit = 2 * dt.group_order
    ident = Matrix2.identity(N)
    elements = [ident]
    index = {ident: 0}
    pos = 0
    while pos < len(elements):
        x = elements[pos]
        pos += 1
        for g in gens:
            y = x @ g
            if y not in index:
                if len(elements) >= limit:
                    raise ClosureOverflow(
                        f"closure of {dt} exceeded {limit} elements")
                index[y] = len(elements)
                elements.append(y)
    assert len(elements) == dt.group_order, \
        f"{dt}: closure has {len(elements)} elements, expected {dt.group_order}"

    ginv = [g.conj_transpose() for g in gens]
    class_of = [-1] * len(elements)
    classes: list[ConjClass] = []
    for i in range(len(elements)):
        if class_of[i] >= 0:
            continue
        orbit = {i}
        stack = [i]
        while stack:
            x = stack.pop()
            for g, gi in zip(gens, ginv):
                j = index[(g @ elements[x]) @ gi]
                if j not in orbit:
                    orbit.add(j)
                    stack.append(j)
        cid = len(classes)
        for j in orbit:
            class_of[j] = cid
        trace = elements[i].trace()
        classes.append(ConjClass(i, tuple(sorted(orbit)), len(orbit), trace,
                                 _element_order(elements[i]),
                                 _eigen_exponent(trace)))
    assert len(classes) == dt.rank + 1, \
        f"{dt}: {len(classes)} classes, expected {dt.rank + 1}"
    return FiniteSubgroup(dt, N, gens, elements, index, classes, class_of)


def build_group(dt: DynkinType) -> FiniteSubgroup:
    return enumerate_subgroup(generators(dt), dt)


@dataclass(frozen=True)
class CharTable:
    """Rows are irreducible characters (row 0 trivial), columns follow the
    aligned ``classes`` tuple."""

    conductor: int
    group_order: int
    degrees: tuple[int, ...]
    values: tuple[tuple[CycNumber, ...], ...]
    classes: tuple[ConjClass, ...]

    def to_json(self) -> dict:
        return {"degrees": list(self.degrees),
                "values": [[v.to_json() for v in row] for row in self.values]}


def _ip(values_a, values_b, classes, order) -> Fraction:
    """Hermitian inner product of class functions, collapsed to Q."""
    acc = CycNumber.zero(values_a[0].N)
    for va, vb, c in zip(values_a, values_b, classes):
        acc = acc + va * vb.conj() * c.size
    return acc.to_rational() / order


def _dlog_table(N: int, n: int) -> dict[CycNumber, int]:
    """Map zeta_n^j -> j at conductor N (n | N)."""
    step = N // n
    return {CycNumber.root_of_unity(N, step * j): j for j in range(n)}


def char_table(dt: DynkinType, G: FiniteSubgroup) -> CharTable:
    if dt.family == "A":
        rows, degrees = _cyclic_table(dt, G)
    elif dt.family == "D":
        rows, degrees = _binary_dihedral_table(dt, G)
    else:
        rows, degrees = _e_type_table(dt, G)
    table = CharTable(G.conductor, G.order, tuple(degrees),
                      tuple(tuple(r) for r in rows), G.classes)
    problem = table_violation(table, G)
    if problem is not None:
        raise ValidationFailed(problem)
    return table


def _cyclic_table(dt: DynkinType, G: FiniteSubgroup):
    n = G.order
    N = G.conductor
    dlog = _dlog_table(N, n)
    exps = [dlog[G.elements[c.rep].a] for c in G.classes]
    rows = [[CycNumber.root_of_unity(N, (i * j) % n) for j in exps]
            for i in range(n)]
    return rows, [1] * n


def _binary_dihedral_table(dt: DynkinType, G: FiniteSubgroup):
    k = dt.m - 2
    N = G.conductor
    dlog = _dlog_table(N, 2 * k)
    tags = []  # ("r", j) or ("s", j) per class
    for c in G.classes:
        m = G.elements[c.rep]
        if m.b.is_zero() and m.c.is_zero():
            tags.append(("r", dlog[m.a]))
        else:
            tags.append(("s", dlog[-m.c]))
    one = CycNumber.one(N)
    if k % 2 == 0:
        deltas = (one, -one)
    else:
        i4 = CycNumber.root_of_unity(N, N // 4)
        deltas = (i4, -i4)
    rows = []
    degrees = []
    for eps, delta in ((one, one), (one, -one), (-one, deltas[0]), (-one, deltas[1])):
        row = []
        for kind, j in tags:
            v = eps if j % 2 else one
            row.append(v if kind == "r" else delta * v)
        rows.append(row)
        degrees.append(1)
    zero = CycNumber.zero(N)
    step = N // (2 * k)
    for ell in range(1, k):
        row = []
        for kind, j in tags:
            if kind == "s":
                row.append(zero)
            else:
                row.append(CycNumber.root_of_unity(N, (step * ell * j) % N)
                           + CycNumber.root_of_unity(N, (-step * ell * j) % N))
        rows.append(row)
        degrees.append(2)
    return rows, degrees


def _subgroup_indices(G: FiniteSubgroup, seed: list[int]) -> set[int]:
    """Subgroup generated by the given element indices (BFS over words)."""
    gens = sorted(set(seed) - {0})
    members = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            z = G.index[G.elements[x] @ G.elements[g]]
            if z not in members:
                members.add(z)
                frontier.append(z)
    return members


def _derived_subgroup(G: FiniteSubgroup) -> set[int]:
    gens = G.generators
    seed = []
    for g in gens:
        for h in gens:
            comm = g @ h @ g.conj_transpose() @ h.conj_transpose()
            seed.append(G.index[comm])
    members = _subgroup_indices(G, seed)
    # normal closure: conjugate by the group generators until stable
    changed = True
    while changed:
        changed = False
        extra = []
        for g in gens:
            gi = g.conj_transpose()
            for x in members:
                j = G.index[(g @ G.elements[x]) @ gi]
                if j not in members:
                    extra.append(j)
        if extra:
            members = _subgroup_indices(G, list(members) + extra)
            changed = True
    return members


def _linear_characters(G: FiniteSubgroup) -> list[list[CycNumber]]:
    """Characters of the (cyclic, for these groups) abelianization."""
    N = G.conductor
    n = G.order
    derived = _derived_subgroup(G)
    d = n // len(derived)
    ones = [CycNumber.one(N)] * len(G.classes)
    if d == 1:
        return [ones]
    assert N % d == 0
    coset_of = [-1] * n
    reps: list[int] = []
    for i in range(n):
        if coset_of[i] < 0:
            cid = len(reps)
            reps.append(i)
            for x in derived:
                coset_of[G.index[G.elements[i] @ G.elements[x]]] = cid
    assert len(reps) == d
    gen_cid = None
    dlog = {}
    for cid in range(d):
        walk = {0: 0}
        y = G.elements[reps[cid]]
        cur = coset_of[G.index[y]]
        power = 1
        while cur not in walk:
            walk[cur] = power
            y = y @ G.elements[reps[cid]]
            cur = coset_of[G.index[y]]
            power += 1
        if len(walk) == d:
            gen_cid = cid
            dlog = walk
            break
    assert gen_cid is not None, "abelianization is not cyclic"
    out = []
    for j in range(d):
        out.append([CycNumber.root_of_unity(N, (N // d) * j * dlog[coset_of[c.rep]])
                    for c in G.classes])
    return out


def sym_power_values(G: FiniteSubgroup, m: int) -> list[CycNumber]:
    """Character of the m-th symmetric power of the defining representation,
    from the eigenvalue power sums lambda^(m-2j) per class."""
    N = G.conductor
    out = []
    for c in G.classes:
        acc = CycNumber.zero(N)
        for j in range(m + 1):
            acc = acc + CycNumber.root_of_unity(N, (c.eigen_exp * (m - 2 * j)) % N)
        out.append(acc)
    return out


def _e_type_table(dt: DynkinType, G: FiniteSubgroup):
    k = len(G.classes)
    order = G.order
    chi_v = [c.trace for c in G.classes]
    linear = _linear_characters(G)
    known: list[tuple[CycNumber, ...]] = [tuple(row) for row in linear]

    def peel(cand):
        rem = list(cand)
        for psi in known:
            mult = _ip(rem, psi, G.classes, order)
            assert mult.denominator == 1 and mult >= 0
            if mult:
                rem = [a - mult * b for a, b in zip(rem, psi)]
        return tuple(rem)

    def push_products(row):
        queue.append(tuple(a * b for a, b in zip(row, chi_v)))
        for lin in linear[1:]:
            queue.append(tuple(a * b for a, b in zip(row, lin)))

    queue: deque = deque([tuple(chi_v)])
    sym_m = 1
    max_sym = 2 * dt.coxeter_number + 2
    while len(known) < k:
        if len(known) == k - 1:
            known.append(_regular_completion(G, known))
            break
        if not queue:
            sym_m += 1
            if sym_m > max_sym:
                raise ValidationFailed(f"{dt}: irreducible search did not saturate")
            queue.append(tuple(sym_power_values(G, sym_m)))
            continue
        cand = queue.popleft()
        rem = peel(cand)
        if any(not v.is_zero() for v in rem):
            if _ip(rem, rem, G.classes, order) == 1 and rem not in known:
                known.append(rem)
                push_products(rem)

    id_col = next(i for i, c in enumerate(G.classes) if c.order == 1)
    def degree(row):
        val = row[id_col].to_rational()
        assert val.denominator == 1 and val > 0
        return int(val)

    trivial = known[0]
    rest = sorted(known[1:], key=lambda r: (degree(r),
                                            tuple(v.sort_key() for v in r)))
    rows = [list(trivial)] + [list(r) for r in rest]
    return rows, [degree(tuple(r)) for r in rows]


def _regular_completion(G: FiniteSubgroup, known) -> tuple[CycNumber, ...]:
    """The one missing irreducible, read off the regular character."""
    N = G.conductor
    id_col = next(i for i, c in enumerate(G.classes) if c.order == 1)
    degs = [int(row[id_col].to_rational()) for row in known]
    d2 = G.order - sum(d * d for d in degs)
    d = isqrt(d2)
    assert d * d == d2 and d > 0
    out = []
    for col, c in enumerate(G.classes):
        reg = CycNumber.from_rational(N, G.order if col == id_col else 0)
        for deg, row in zip(degs, known):
            reg = reg - row[col] * deg
        out.append(reg * Fraction(1, d))
    return tuple(out)


def table_violation(table: CharTable, G: FiniteSubgroup) -> str | None:
    """First violated relation, or None when the table is valid."""
    k = len(table.classes)
    order = table.group_order
    values = table.values
    if len(values) != k:
        return f"{len(values)} rows for {k} classes"
    if any(not v == 1 for v in values[0]):
        return "row 0 is not the trivial character"
    id_col = next((i for i, c in enumerate(table.classes) if c.order == 1), None)
    if id_col is None:
        return "no identity class"
    for i, row in enumerate(values):
        if row[id_col] != table.degrees[i] or table.degrees[i] <= 0:
            return f"chi_{i}(1) != degree {table.degrees[i]}"
    if sum(d * d for d in table.degrees) != order:
        return "degree squares do not sum to |G|"
    for i in range(k):
        for j in range(i, k):
            got = _ip(values[i], values[j], table.classes, order)
            if got != (1 if i == j else 0):
                return f"row orthogonality fails at ({i},{j}): {got}"
    for ci in range(k):
        for cj in range(ci, k):
            acc = CycNumber.zero(table.conductor)
            for row in values:
                acc = acc + row[ci] * row[cj].conj()
            want = Fraction(order, table.classes[ci].size) if ci == cj else 0
            if acc != want:
                return f"column orthogonality fails at ({ci},{cj})"
    # conjugate symmetry: chi(x^-1) = conj(chi(x))
    col_of_class = {c.rep: i for i, c in enumerate(table.classes)}
    for ci, c in enumerate(table.classes):
        inv = G.elements[c.rep].conj_transpose()
        cj = col_of_class[G.classes[G.class_of[G.index[inv]]].rep]
        for i, row in enumerate(values):
            if row[cj] != row[ci].conj():
                return f"chi_{i} not conjugate-symmetric on class {ci}"
    # the defining character decomposes with nonnegative integer multiplicities
    tau = [c.trace for c in table.classes]
    mults = []
    for row in values:
        m = _ip(tau, row, table.classes, order)
        if m.denominator != 1 or m < 0:
            return f"defining character has multiplicity {m}"
        mults.append(int(m))
    for col in range(k):
        acc = CycNumber.zero(table.conductor)
        for m, row in zip(mults, values):
            acc = acc + row[col] * m
        if acc != tau[col]:
            return "defining character does not match its decomposition"
    return None


def validate_table(table: CharTable, G: FiniteSubgroup) -> bool:
    return table_violation(table, G) is None


@dataclass(frozen=True)
class McKayResult:
    matrix: tuple[tuple[int, ...], ...]
    bijection: tuple[int, ...]  # table row -> affine node


def mckay_matrix(G: FiniteSubgroup, table: CharTable) -> McKayResult:
    """Multiplicities of chi_j inside V tensor chi_i, plus the node bijection
    onto the affine graph (trivial character -> node 0)."""
    k = len(table.classes)
    tau = [c.trace for c in table.classes]
    rows = []
    for i in range(k):
        tv = [t * v for t, v in zip(tau, table.values[i])]
        row = []
        for j in range(k):
            m = _ip(tv, table.values[j], table.classes, table.group_order)
            assert m.denominator == 1 and m >= 0
            row.append(int(m))
        rows.append(tuple(row))
    matrix = tuple(rows)
    assert all(matrix[i][j] == matrix[j][i] for i in range(k) for j in range(k))
    g = build_graph(G.dynkin, "affine")
    marks = graph_marks(G.dynkin)
    bijection = _match_affine(matrix, table.degrees, g, marks)
    return McKayResult(matrix, bijection)


def _match_affine(A, degrees, g: DirectedGraph, marks) -> tuple[int, ...]:
    k = g.n
    order = [0]
    seen = {0}
    pos = 0
    while pos < len(order):
        i = order[pos]
        pos += 1
        for j in range(k):
            if A[i][j] and j not in seen:
                seen.add(j)
                order.append(j)
    if len(order) != k:
        raise NoIsomorphism("McKay graph is disconnected")
    assign: list[int | None] = [None] * k
    used = [False] * k
    assign[0] = 0
    used[0] = True

    def extend(p: int) -> bool:
        if p == len(order):
            return True
        row = order[p]
        for node in range(k):
            if used[node] or marks[node] != degrees[row]:
                continue
            if all(A[row][order[q]] == g.mult[node][assign[order[q]]]
                   and A[order[q]][row] == g.mult[assign[order[q]]][node]
                   for q in range(p)):
                assign[row] = node
                used[node] = True
                if extend(p + 1):
                    return True
                assign[row] = None
                used[node] = False
        return False

    if degrees[0] != marks[0] or not extend(1):
        raise NoIsomorphism(f"no bijection onto affine {g.dynkin}")
    return tuple(assign)  # type: ignore[arg-type]


@dataclass(frozen=True)
class MolienSet:
    """Per irreducible character: the Molien series over Q and its
    standard-form numerator against (1-q^a)(1-q^b)."""

    dynkin: DynkinType
    h: int
    a: int
    b: int
    degrees: tuple[int, ...]
    numerators: tuple[Polynomial, ...]
    series: tuple[RationalFunction, ...]

    def to_json(self) -> dict:
        return {"type": str(self.dynkin), "h": self.h, "a": self.a, "b": self.b,
                "characters": [{"degree": d, "numerator": n.to_json(),
                                "molien": s.to_json()}
                               for d, n, s in zip(self.degrees, self.numerators,
                                                  self.series)]}


def _one_minus_q(k: int) -> Polynomial:
    return Polynomial("q", (1,) + (0,) * (k - 1) + (-1,))


def molien_series(G: FiniteSubgroup, table: CharTable) -> MolienSet:
    """Average of chi_i(x)/det(I - x q) over the group, done per class with
    det(I - x q) = 1 - trace(x) q + q^2, then collapsed to Q."""
    dt = G.dynkin
    N = G.conductor
    h = dt.coxeter_number
    a, b = dt.standard_ab
    one = CycNumber.one(N)
    quads = [Polynomial("q", (one, -c.trace, one)) for c in G.classes]
    denom = Polynomial.one("q")
    for qd in quads:
        denom = denom * qd
    partial = [denom.exact_div(qd) for qd in quads]
    std = _one_minus_q(a) * _one_minus_q(b)
    numerators = []
    series = []
    for row in table.values:
        acc = Polynomial.zero("q")
        for val, c, part in zip(row, G.classes, partial):
            acc = acc + part.scaled(val * c.size)
        quo, rem = divmod(acc * std, denom)
        if not rem.is_zero():
            raise NonPolynomialResult(
                f"{dt}: standard form does not clear for a character")
        coeffs = []
        for cy in quo.coeffs:
            v = cy.to_rational() / G.order if isinstance(cy, CycNumber) \
                else cy / G.order
            if v.denominator != 1 or v < 0:
                raise NonPolynomialResult(
                    f"{dt}: numerator coefficient {v} is not a nonnegative integer")
            coeffs.append(v)
        num = Polynomial("q", coeffs)
        numerators.append(num)
        series.append(RationalFunction(num, std))
    expected0 = Polynomial("q", (1,) + (0,) * (h - 1) + (1,))
    assert numerators[0] == expected0, "trivial numerator is not 1 + q^h"
    return MolienSet(dt, h, a, b, table.degrees, tuple(numerators), tuple(series))


def sym_power_multiplicities(G: FiniteSubgroup, table: CharTable,
                             mmax: int) -> tuple[tuple[int, ...], ...]:
    """Row m lists the multiplicity of each irreducible inside Sym^m of the
    defining representation, via eigenvalue power sums per class."""
    N = G.conductor
    k = len(G.classes)
    weights = [[row[c].conj() * G.classes[c].size for c in range(k)]
               for row in table.values]
    exps = [c.eigen_exp for c in G.classes]
    tcache: list[dict[int, CycNumber]] = [{} for _ in range(k)]

    def tval(i: int, s: int) -> CycNumber:
        s %= N
        if s not in tcache[i]:
            acc = CycNumber.zero(N)
            for w, e in zip(weights[i], exps):
                acc = acc + w.times_zeta((s * e) % N)
            tcache[i][s] = acc
        return tcache[i][s]

    rows = []
    prev2: list[CycNumber] = []
    prev1: list[CycNumber] = []
    for m in range(mmax + 1):
        if m == 0:
            vals = [tval(i, 0) for i in range(k)]
        elif m == 1:
            vals = [tval(i, 1) + tval(i, -1) for i in range(k)]
        else:
            vals = [prev2[i] + tval(i, m) + tval(i, -m) for i in range(k)]
        row = []
        for v in vals:
            f = v.to_rational() / G.order
            assert f.denominator == 1 and f >= 0
            row.append(int(f))
        rows.append(tuple(row))
        prev2, prev1 = prev1, vals
    return tuple(rows)


def recurrence_check(mset: MolienSet, matrix) -> bool:
    """(q + 1/q) m_i = sum over successors of m_j, as exact rational
    functions.

    Successor sums live on the semi-affine graph, so the identity binds every
    row except the trivial one (its node is a sink); there the defect is
    forced to be exactly 1/q by the specialization identity, and that is
    checked too.
    """
    tq = RationalFunction(Polynomial("q", (1, 0, 1)), Polynomial.monomial("q", 1))
    inv_q = RationalFunction(Polynomial.one("q"), Polynomial.monomial("q", 1))
    for i, mi in enumerate(mset.series):
        acc = RationalFunction.zero("q")
        for j, mj in enumerate(mset.series):
            if matrix[i][j]:
                acc = acc + mj * matrix[i][j]
        defect = tq * mi - acc
        if defect != (inv_q if i == 0 else RationalFunction.zero("q")):
            return False
    return True
