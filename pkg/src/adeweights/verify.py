"""Cross-check orchestration: one machine-readable report over a type list.

Every identity the library computes twice (graph side vs group side, solver
vs closed form, characteristic polynomial factorizations, ...) is run per
type and recorded as a CheckResult. Failures are data, not exceptions; the
charpoly claim is informational by design. A seeded fault-injection hook
perturbs one numerator coefficient at the cross-match boundary so the suite
can prove it is not vacuous.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .graphs import (DirectedGraph, DynkinType, build_graph, char_poly,
                     charpoly_report, graph_marks)
from .groups import (CharTable, FiniteSubgroup, McKayResult, MolienSet,
                     build_group, char_table, mckay_matrix, molien_series,
                     recurrence_check, sym_power_multiplicities, validate_table)
from .poly import Polynomial, cox, series_coefficients
from .weights import (QNumerators, TWeights, check_notes, closed_form,
                      common_denominator, finite_reduction_check,
                      solve_semiaffine, specialization_identity,
                      to_q_numerators)

DEFAULT_SUITE = tuple(
    [DynkinType("A", m) for m in range(1, 13)]
    + [DynkinType("D", m) for m in range(4, 13)]
    + [DynkinType("E", m) for m in (6, 7, 8)]
)

CHECK_NAMES = (
    "CROSS_MATCH", "CLOSED_FORM", "AB_RELATIONS", "SPECIALIZATION",
    "FINITE_REDUCTION", "PALINDROME", "NOTES123", "LCD_COX", "MCKAY_ADJ",
    "SMITH_EIGEN", "SYM_ORACLE", "CHARPOLY_CLAIM", "STRUCTURAL_CHARPOLY",
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    type_name: str
    status: str  # pass | fail | informational
    detail: str
    payload: dict | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "type": self.type_name,
               "status": self.status, "detail": self.detail}
        if self.payload is not None:
            out["payload"] = self.payload
        return out


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    checks: tuple[CheckResult, ...]
    summary: dict

    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_json(self) -> dict:
        return {"suite": self.suite,
                "checks": [c.to_json() for c in self.checks],
                "summary": self.summary}


@dataclass(frozen=True)
class FaultSpec:
    """Coefficient perturbation applied to one graph-side numerator, only on
    the copy fed to the cross-match comparison."""

    type_name: str
    node: int
    exponent: int
    delta: int = 1

    @classmethod
    def from_seed(cls, seed: int, types) -> FaultSpec:
        rng = random.Random(seed)
        dt = types[rng.randrange(len(types))]
        node = rng.randrange(dt.rank + 1)
        exponent = rng.randrange(dt.coxeter_number + 1)
        return cls(str(dt), node, exponent)


@dataclass
class TypeBundle:
    """Everything both sides compute for one type."""

    dynkin: DynkinType
    finite: DirectedGraph
    affine: DirectedGraph
    semiaffine: DirectedGraph
    tweights: TWeights
    numerators: QNumerators
    group: FiniteSubgroup
    table: CharTable
    mckay: McKayResult
    molien: MolienSet


@lru_cache(maxsize=None)
def build_bundle(dt: DynkinType) -> TypeBundle:
    finite = build_graph(dt, "finite")
    affine = build_graph(dt, "affine")
    semi = build_graph(dt, "semiaffine")
    w = solve_semiaffine(semi)
    group = build_group(dt)
    table = char_table(dt, group)
    return TypeBundle(dt, finite, affine, semi, w,
                      to_q_numerators(w), group, table,
                      mckay_matrix(group, table), molien_series(group, table))


def _result(name, dt, ok, detail_ok, detail_fail, payload=None) -> CheckResult:
    return CheckResult(name, str(dt), "pass" if ok else "fail",
                       detail_ok if ok else detail_fail, payload)


def _check_cross_match(b: TypeBundle, fault: FaultSpec | None) -> CheckResult:
    graph_side = list(b.numerators.N)
    noted = ""
    if fault is not None and fault.type_name == str(b.dynkin):
        p = graph_side[fault.node]
        coeffs = list(p.coeffs) + [Fraction(0)] * (fault.exponent + 1 - len(p.coeffs))
        coeffs[fault.exponent] += fault.delta
        graph_side[fault.node] = Polynomial("q", coeffs)
        noted = (f" (fault injected at node {fault.node}, "
                 f"q^{fault.exponent} {fault.delta:+d})")
    mismatches = [i for i, num in enumerate(b.molien.numerators)
                  if num != graph_side[b.mckay.bijection[i]]]
    return _result(
        "CROSS_MATCH", b.dynkin, not mismatches,
        f"all {len(b.molien.numerators)} Molien numerators equal the graph "
        f"weights under the node bijection{noted}",
        f"numerator mismatch at character rows {mismatches}{noted}")


def _check_closed_form(b: TypeBundle) -> CheckResult:
    expected = closed_form(b.dynkin)
    ok = b.numerators.N == expected.N
    return _result("CLOSED_FORM", b.dynkin, ok,
                   "solver numerators equal the tabulated exponent lists",
                   "solver numerators differ from the tabulated exponent lists")


def _check_ab(b: TypeBundle) -> CheckResult:
    dt = b.dynkin
    a, g_b = dt.standard_ab
    h = dt.coxeter_number
    ok = (a * g_b == 2 * b.group.order) and (a + g_b == h + 2)
    return _result("AB_RELATIONS", dt, ok,
                   f"a*b = 2|G| = {2 * b.group.order} and a+b = h+2 = {h + 2}",
                   f"standard form broken: a={a} b={g_b} |G|={b.group.order} h={h}")


def _check_specialization(b: TypeBundle) -> CheckResult:
    return _result("SPECIALIZATION", b.dynkin,
                   specialization_identity(b.numerators),
                   "q[(q+1/q)N_0 - neighbor sum] = (1-q^a)(1-q^b)",
                   "specialization identity fails")


def _check_finite_reduction(b: TypeBundle) -> CheckResult:
    return _result("FINITE_REDUCTION", b.dynkin,
                   finite_reduction_check(b.numerators),
                   "finite-type equations hold modulo 1+q^h",
                   "finite-type reduction fails modulo 1+q^h")


def _check_palindrome(b: TypeBundle) -> CheckResult:
    h = b.numerators.h
    bad = [i for i, p in enumerate(b.numerators.N)
           if not all(p.coefficient(k) == p.coefficient(h - k)
                      for k in range(h + 1))]
    return _result("PALINDROME", b.dynkin, not bad,
                   "q^h N(1/q) = N(q) at every node",
                   f"nodes {bad} are not self-reciprocal over span h")


def _check_notes(b: TypeBundle) -> CheckResult:
    rep = check_notes(b.numerators)
    return _result(
        "NOTES123", b.dynkin, rep.all_ok(),
        f"exponent chain, parity ({rep.h_parity} h), and doubling counts hold",
        f"notes violated: chain={rep.chain_ok} parity={rep.parity_ok} "
        f"count={rep.count_ok}")


def _check_lcd(b: TypeBundle) -> CheckResult:
    lcd = common_denominator(b.tweights)
    expected = cox(b.dynkin.coxeter_number)
    return _result("LCD_COX", b.dynkin, lcd == expected,
                   f"common denominator is cox(h) = {expected}",
                   f"common denominator {lcd} differs from cox(h) = {expected}")


def _check_mckay(b: TypeBundle) -> CheckResult:
    k = b.affine.n
    ok = all(b.mckay.matrix[i][j] ==
             b.affine.mult[b.mckay.bijection[i]][b.mckay.bijection[j]]
             for i in range(k) for j in range(k))
    return _result("MCKAY_ADJ", b.dynkin, ok,
                   "McKay matrix equals the affine adjacency",
                   "McKay matrix differs from the affine adjacency")


def _check_smith(b: TypeBundle) -> CheckResult:
    ones = [p.evaluate(Fraction(1)) for p in b.numerators.N]
    if any(v % 2 for v in ones):
        return _result("SMITH_EIGEN", b.dynkin, False, "",
                       "some N_i(1) is odd; marks are not integral")
    marks = [v / 2 for v in ones]
    g = b.affine
    ok = all(sum(g.mult[i][j] * marks[j] for j in range(g.n)) == 2 * marks[i]
             for i in range(g.n))
    ok = ok and list(graph_marks(b.dynkin)) == [int(v) for v in marks]
    return _result("SMITH_EIGEN", b.dynkin, ok,
                   "adjacency * (N(1)/2) = 2 * (N(1)/2), the Perron vector",
                   "marks vector is not the eigenvalue-2 eigenvector")


def _check_sym_oracle(b: TypeBundle) -> CheckResult:
    h = b.dynkin.coxeter_number
    mmax = 2 * h + 1
    sym = sym_power_multiplicities(b.group, b.table, mmax)
    k = len(b.table.classes)
    ok = True
    for i in range(k):
        coeffs = series_coefficients(b.molien.series[i], mmax + 1)
        if any(coeffs[m] != sym[m][i] for m in range(mmax + 1)):
            ok = False
    return _result("SYM_ORACLE", b.dynkin, ok,
                   f"symmetric-power multiplicities match the series to q^{mmax}",
                   "symmetric-power multiplicities disagree with the series")


def _check_charpoly_claim(b: TypeBundle) -> CheckResult:
    rep = charpoly_report(b.dynkin)
    payload = {"d": rep.d, "cofactor": rep.cofactor.to_json(),
               "cox": rep.cox.to_json(), "claim_holds": rep.claim_holds}
    word = "matches" if rep.claim_holds else "exceeds"
    return CheckResult("CHARPOLY_CLAIM", str(b.dynkin), "informational",
                       f"cofactor {rep.cofactor} {word} cox(h) = {rep.cox}, "
                       f"d = {rep.d}", payload)


def _check_structural(b: TypeBundle) -> CheckResult:
    semi = char_poly(b.semiaffine)
    fin = char_poly(b.finite)
    ok = semi == fin.shifted(1)
    ok = ok and semi.degree == b.dynkin.rank + 1
    ok = ok and b.semiaffine.mult != tuple(zip(*b.semiaffine.mult))
    return _result("STRUCTURAL_CHARPOLY", b.dynkin, ok,
                   "char(semiaffine) = t * char(finite), degree rank+1, "
                   "matrix asymmetric",
                   "structural characteristic-polynomial identity fails")


def _type_checks(b: TypeBundle, fault: FaultSpec | None) -> list[CheckResult]:
    return [
        _check_cross_match(b, fault),
        _check_closed_form(b),
        _check_ab(b),
        _check_specialization(b),
        _check_finite_reduction(b),
        _check_palindrome(b),
        _check_notes(b),
        _check_lcd(b),
        _check_mckay(b),
        _check_smith(b),
        _check_sym_oracle(b),
        _check_charpoly_claim(b),
        _check_structural(b),
    ]


def run_suite(types, fault: FaultSpec | None = None) -> VerificationReport:
    """Run every check on every type, in canonical type order."""
    ordered = sorted(set(types))
    checks: list[CheckResult] = []
    for dt in ordered:
        try:
            bundle = build_bundle(dt)
        except Exception as exc:  # a failure to build is data, not a crash
            checks.extend(CheckResult(name, str(dt), "fail",
                                      f"bundle construction failed: {exc}")
                          for name in CHECK_NAMES)
            continue
        checks.extend(_type_checks(bundle, fault))
    summary = {
        "pass": sum(c.status == "pass" for c in checks),
        "fail": sum(c.status == "fail" for c in checks),
        "info": sum(c.status == "informational" for c in checks),
    }
    desc = "ADE semi-affine verification: " + \
        (",".join(str(t) for t in ordered) if ordered else "(empty)")
    if fault is not None:
        desc += (f" [fault: {fault.type_name} node {fault.node} "
                 f"q^{fault.exponent} {fault.delta:+d}]")
    return VerificationReport(desc, tuple(checks), summary)


def report_json(report: VerificationReport) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"


def report_text(report: VerificationReport) -> str:
    lines = [report.suite]
    for c in report.checks:
        lines.append(f"{c.status.upper():>13}  {c.type_name:>4}  {c.name:<20} {c.detail}")
    s = report.summary
    lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['info']} informational")
    return "\n".join(lines) + "\n"
