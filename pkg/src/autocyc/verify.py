"""Mechanical verifiers: each rule checks its hypotheses on a concrete
(group, action) pair, computes both sides from the graph and the group, and
returns a verdict carrying a witness when something fails.

Rule ids (also the CLI selectors):

* A - center divisible by two primes forces a connected graph of diameter <= 4
* B - p-groups: components correspond to action orbits on order-p subgroups
* C - nilpotent groups: component counts and diameter bounds (<= 2 / <= 3)
* D - (sub)inner actions: universal vertex iff a central prime has a unique
      minimal subgroup
* E - (sub)inner actions: complete iff cyclic
* F - complete iff nilpotent with one orbit on cyclic subgroups per order
* G - empty iff prime-order elements, normalizer transitivity, and one of:
      exponent-p p-group / Frobenius(prime-exponent kernel, prime complement)
      / the simple group of order 60 under an action closure of size 24 or 120
* H - full inner action: empty iff elementary abelian 2-group or
      Frobenius(elementary abelian 3-kernel, complement of order 2)
* diam6 - nontrivial p-group center with no p-group centralizer of an
      order-p element forces diameter <= 6
* dominating - universal-vertex equivalences around Cyc and K
* nilpotency - cross-prime adjacency everywhere forces nilpotency
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import props
from .actions import (
    KIND_INNER,
    KIND_TRIVIAL,
    AutAction,
    cyclic_subgroups_order_transitive,
    element_orbits,
    normalizer_transitive_on_cyclic,
    subgroup_orbits_order_p,
)
from .delta import AnalysisReport, DeltaGraph, analyze, build_delta
from .errors import ActionNotInner
from .perm import FiniteGroup

SUB_INNER_KINDS = (KIND_TRIVIAL, KIND_INNER)


@dataclass(frozen=True)
class Verdict:
    theorem_id: str
    hypotheses_hold: bool
    conclusion_holds: bool | None
    witness: dict | None = None

    def __post_init__(self) -> None:
        if (self.conclusion_holds is not None) != self.hypotheses_hold:
            raise AssertionError("conclusion must be present iff hypotheses hold")

    @property
    def failed(self) -> bool:
        return self.hypotheses_hold and self.conclusion_holds is False

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion_holds": self.conclusion_holds,
            "witness": self.witness,
        }


def _graph(group: FiniteGroup, action: AutAction) -> tuple[DeltaGraph, AnalysisReport]:
    graph = build_delta(group, action)
    return graph, analyze(graph)


def _connected(report: AnalysisReport) -> bool:
    return len(report.components) <= 1


def _diameter(report: AnalysisReport) -> int:
    return max(report.diameters, default=0)


def _skip(theorem_id: str, reason: str) -> Verdict:
    return Verdict(theorem_id, False, None, {"skipped": reason})


# -- connectivity rules ------------------------------------------------------


def verify_theorem_a(group: FiniteGroup, action: AutAction) -> Verdict:
    """Center not a p-group => connected with diameter <= 4."""
    center_size = len(group.center())
    hyp = len(props.prime_factorization(center_size)) >= 2
    if not hyp:
        return Verdict("A", False, None)
    graph, report = _graph(group, action)
    ok = _connected(report) and _diameter(report) <= 4
    witness = None
    if not ok:
        witness = {"components": len(report.components), "diameter": _diameter(report)}
    return Verdict("A", True, ok, witness)


def verify_theorem_b(group: FiniteGroup, action: AutAction) -> Verdict:
    """p-groups: components correspond one-to-one to the A-orbits on
    subgroups of order p, and orbit-representative vertices are adjacent to
    their whole component."""
    p = props.is_p_group(group)
    if p is None or group.order == 1:
        return Verdict("B", False, None)
    graph, report = _graph(group, action)
    orbits = subgroup_orbits_order_p(group, action, p)

    comp_of = {}
    for cid, comp in enumerate(report.components):
        for v in comp:
            comp_of[v] = cid

    assigned: list[int] = []
    for orbit in orbits:
        rep_sub = orbit[0]
        comps = {comp_of[graph.vertex_of_element(x)] for x in rep_sub if x != 0}
        if len(comps) != 1:
            return Verdict(
                "B", True, False, {"subgroup": sorted(rep_sub), "components": sorted(comps)}
            )
        assigned.append(comps.pop())

    bijection = len(orbits) == len(report.components) and len(set(assigned)) == len(assigned)
    if not bijection:
        return Verdict(
            "B",
            True,
            False,
            {"orbits": len(orbits), "components": len(report.components)},
        )

    for orbit, cid in zip(orbits, assigned):
        rep_sub = orbit[0]
        for x in rep_sub:
            if x == 0:
                continue
            v = graph.vertex_of_element(x)
            for w in report.components[cid]:
                if w != v and not graph.adjacent(v, w):
                    return Verdict(
                        "B",
                        True,
                        False,
                        {"subgroup_element": x, "vertex": v, "not_adjacent_to": w},
                    )
    return Verdict("B", True, True)


def verify_theorem_c(
    group: FiniteGroup, action: AutAction, classification: dict | None = None
) -> Verdict:
    """Nilpotent groups: orbit/component correspondence with diameter <= 2
    for p-groups, connected with diameter <= 3 otherwise (<= 2 when every
    prime has a single orbit of minimal subgroups)."""
    if group.order == 1 or not props.is_nilpotent(group):
        return Verdict("C", False, None)
    graph, report = _graph(group, action)
    p = props.is_p_group(group)
    witness: dict | None = None
    if p is not None:
        orbits = subgroup_orbits_order_p(group, action, p)
        ok = len(orbits) == len(report.components)
        if ok and _connected(report):
            ok = _diameter(report) <= 2
        if ok and action.kind == "full" and classification is not None:
            expect_connected = bool(
                classification.get("homocyclic")
                or classification.get("generalized_quaternion")
                or (
                    classification.get("two_automorphic")
                    and sum(1 for i in range(1, group.order) if group.element_order(i) == 2) > 1
                )
            )
            ok = _connected(report) == expect_connected
            if not ok:
                witness = {
                    "connected": _connected(report),
                    "classification_expects": expect_connected,
                }
    else:
        ok = _connected(report) and _diameter(report) <= 3
        if ok:
            single = all(
                len(subgroup_orbits_order_p(group, action, q)) == 1
                for q in props.prime_factorization(group.order)
            )
            if single:
                ok = _diameter(report) <= 2
    if witness is None and not ok:
        witness = {"components": len(report.components), "diameter": _diameter(report)}
    return Verdict("C", True, ok, witness if not ok else None)


# -- universal vertices and completeness -------------------------------------


def _require_sub_inner(theorem_id: str, action: AutAction) -> None:
    if action.kind not in SUB_INNER_KINDS:
        raise ActionNotInner(
            f"rule {theorem_id} needs a trivial or inner action, got {action.kind!r}"
        )


def verify_theorem_d(group: FiniteGroup, action: AutAction) -> Verdict:
    """Sub-inner actions: a universal vertex exists iff some prime dividing
    the center order has a unique subgroup of that order."""
    _require_sub_inner("D", action)
    graph, report = _graph(group, action)
    lhs = len(report.universal) > 0
    center_size = len(group.center())
    rhs = any(
        props.unique_subgroup_of_order_p(group, q)
        for q in props.prime_factorization(center_size)
    )
    ok = lhs == rhs
    return Verdict(
        "D", True, ok, None if ok else {"universal": lhs, "unique_central_prime": rhs}
    )


def verify_theorem_e(group: FiniteGroup, action: AutAction) -> Verdict:
    """Sub-inner actions: the graph is complete iff the group is cyclic."""
    _require_sub_inner("E", action)
    _, report = _graph(group, action)
    lhs = report.is_complete
    rhs = props.is_cyclic(group)
    ok = lhs == rhs
    return Verdict("E", True, ok, None if ok else {"complete": lhs, "cyclic": rhs})


def verify_theorem_f(group: FiniteGroup, action: AutAction) -> Verdict:
    """Complete iff nilpotent and, for every prime-power element order, the
    cyclic subgroups of that order form a single A-orbit."""
    _, report = _graph(group, action)
    lhs = report.is_complete
    rhs = props.is_nilpotent(group)
    culprit: int | None = None
    if rhs:
        orders = {
            group.element_order(i)
            for i in range(1, group.order)
            if len(props.prime_factorization(group.element_order(i))) == 1
        }
        for n in sorted(orders):
            if not cyclic_subgroups_order_transitive(group, action, n):
                rhs = False
                culprit = n
                break
    ok = lhs == rhs
    witness = None
    if not ok:
        witness = {"complete": lhs, "rhs": rhs}
        if culprit is not None:
            witness["intransitive_order"] = culprit
    return Verdict("F", True, ok, witness)


# -- empty graphs ------------------------------------------------------------


def _subgroup_exponent(group: FiniteGroup, subgroup: frozenset[int]) -> int:
    exp = 1
    for i in subgroup:
        o = group.element_order(i)
        exp = exp * o // gcd(exp, o)
    return exp


def _normalizers_all_transitive(group: FiniteGroup, action: AutAction) -> bool:
    part = element_orbits(group, action)
    return all(
        normalizer_transitive_on_cyclic(group, action, rep)
        for rep in part.representatives
    )


def _is_simple_order_60(group: FiniteGroup) -> bool:
    if group.order != 60:
        return False
    return len(props.normal_subgroups(group)) == 2


def verify_theorem_g(group: FiniteGroup, action: AutAction) -> Verdict:
    """Empty iff every element has prime order, the normalizer of every
    cyclic subgroup is transitive on its nonidentity part, and the group is
    an exponent-p p-group, a Frobenius group with prime-exponent kernel and
    prime-order complement, or simple of order 60 with action closure 24 or
    120."""
    if group.order == 1:
        return Verdict("G", False, None)
    _, report = _graph(group, action)
    lhs = report.is_empty

    rhs = props.all_elements_prime_order(group)
    if rhs:
        rhs = _normalizers_all_transitive(group, action)
    if rhs:
        p = props.is_p_group(group)
        branch = p is not None and group.exponent() == p
        if not branch:
            wit = props.frobenius_witness(group)
            if wit is not None:
                kernel_exp = _subgroup_exponent(group, wit.kernel)
                branch = props.is_prime(kernel_exp) and props.is_prime(wit.complement_order)
        if not branch:
            branch = _is_simple_order_60(group) and len(action.closure()) in (24, 120)
        rhs = branch
    ok = lhs == rhs
    return Verdict("G", True, ok, None if ok else {"empty": lhs, "rhs": rhs})


def verify_theorem_h(group: FiniteGroup, action: AutAction) -> Verdict:
    """Full inner action: empty iff elementary abelian 2-group, or Frobenius
    with elementary abelian 3-group kernel and complement of order 2.

    The backwards direction needs the inverting conjugations, so this rule
    requires the full inner action rather than an arbitrary sub-inner one.
    """
    if action.kind != KIND_INNER:
        raise ActionNotInner(f"rule H needs the inner action, got {action.kind!r}")
    _, report = _graph(group, action)
    lhs = report.is_empty

    rhs = props.elementary_abelian_prime(group) == 2
    if not rhs:
        wit = props.frobenius_witness(group)
        if wit is not None and wit.complement_order == 2:
            kernel = wit.kernel
            abelian_kernel = all(
                group.commutes(a, b) for a in kernel for b in kernel
            )
            rhs = abelian_kernel and _subgroup_exponent(group, kernel) == 3
    ok = lhs == rhs
    return Verdict("H", True, ok, None if ok else {"empty": lhs, "rhs": rhs})


# -- auxiliary rules ---------------------------------------------------------


def verify_diameter_six(group: FiniteGroup, action: AutAction) -> Verdict:
    """Nontrivial p-group center, no order-p element with p-group
    centralizer => connected with diameter <= 6."""
    center_size = len(group.center())
    fact = props.prime_factorization(center_size)
    if center_size == 1 or len(fact) != 1:
        return Verdict("diam6", False, None)
    p = next(iter(fact))
    for i in range(1, group.order):
        if group.element_order(i) == p:
            csize = len(group.centralizer(i))
            if len(props.prime_factorization(csize)) == 1:
                return Verdict("diam6", False, None)
    _, report = _graph(group, action)
    ok = _connected(report) and _diameter(report) <= 6
    witness = None
    if not ok:
        witness = {"components": len(report.components), "diameter": _diameter(report)}
    return Verdict("diam6", True, ok, witness)


def verify_dominating_vertex(group: FiniteGroup, action: AutAction, i: int) -> Verdict:
    """Equivalences around a universal vertex.

    x^A is universal iff the A-translates of Cyc(x) cover G.  When
    universal: every element of order dividing o(x) has an A-conjugate in
    <x>, and the A-translates of the centralizer cover G.  When the class
    x^G is additionally A-invariant, x lies in K(G); conversely any
    nonidentity member of K(G) is universal and generates the unique cyclic
    subgroup of its order.
    """
    if i == 0:
        raise ValueError("identity has no vertex")
    graph, _ = _graph(group, action)
    v = graph.vertex_of_element(i)
    universal = graph.degree(v) == graph.n - 1

    closure = action.closure()
    cyc = props.cyc_set(group, i)
    covered: set[int] = set()
    for a in closure:
        covered.update(a.table[x] for x in cyc)
    cover = len(covered) == group.order

    checks: dict[str, bool] = {"universal_iff_cyc_cover": universal == cover}

    if universal:
        sub = group.cyclic_subgroup(i)
        part = element_orbits(group, action)
        o_x = group.element_order(i)
        ok_sub = True
        for y in range(1, group.order):
            if o_x % group.element_order(y) == 0:
                oid = part.orbit_of[y]
                if not any(m in sub for m in part.members[oid]):
                    ok_sub = False
                    break
        checks["divisor_orders_conjugate_into_cyclic"] = ok_sub

        cent = group.centralizer(i)
        cent_cover: set[int] = set()
        for a in closure:
            cent_cover.update(a.table[x] for x in cent)
        checks["centralizer_translates_cover"] = len(cent_cover) == group.order

        cls = frozenset(group.conj(i, g) for g in range(group.order))
        class_invariant = all(a.apply_set(cls) == cls for a in action.generators)
        if class_invariant:
            checks["invariant_class_forces_kernel"] = i in props.kernel_k(group)

    if i in props.kernel_k(group):
        sub = group.cyclic_subgroup(i)
        o_x = group.element_order(i)
        unique_cyclic = all(
            group.cyclic_subgroup(y) == sub
            for y in range(1, group.order)
            if group.element_order(y) == o_x
        )
        checks["kernel_member_is_universal"] = universal and unique_cyclic

    ok = all(checks.values())
    witness = None if ok else {"element": i, "checks": checks}
    return Verdict("dominating", True, ok, witness)


def verify_dominating_all(group: FiniteGroup, action: AutAction) -> Verdict:
    """verify_dominating_vertex over every orbit representative."""
    part = element_orbits(group, action)
    for rep in part.representatives:
        verdict = verify_dominating_vertex(group, action, rep)
        if verdict.failed:
            return verdict
    return Verdict("dominating", True, True)


def verify_nilpotency_criterion(group: FiniteGroup, action: AutAction) -> Verdict:
    """Adjacency between every p-element and q-element vertex (p != q)
    forces nilpotency."""
    graph, _ = _graph(group, action)
    part = element_orbits(group, action)

    def prime_of(rep: int) -> int | None:
        fact = props.prime_factorization(group.element_order(rep))
        return next(iter(fact)) if len(fact) == 1 else None

    reps = [(rep, prime_of(rep)) for rep in part.representatives]
    hyp = True
    for k, (r1, p1) in enumerate(reps):
        if p1 is None:
            continue
        for r2, p2 in reps[k + 1 :]:
            if p2 is None or p1 == p2:
                continue
            u, v = graph.vertex_of_element(r1), graph.vertex_of_element(r2)
            if u != v and not graph.adjacent(u, v):
                hyp = False
                break
        if not hyp:
            break
    if not hyp:
        return Verdict("nilpotency", False, None)
    ok = props.is_nilpotent(group)
    return Verdict("nilpotency", True, ok, None if ok else {"nilpotent": False})


# -- the suite ---------------------------------------------------------------

RULE_IDS = ("A", "B", "C", "D", "E", "F", "G", "H", "diam6", "dominating", "nilpotency")


@dataclass(frozen=True)
class CorpusPair:
    label: str
    group: FiniteGroup
    action: AutAction
    classification: dict | None = None


@dataclass(frozen=True)
class SuiteResult:
    label: str
    verdict: Verdict

    def as_dict(self) -> dict:
        return {"pair": self.label, **self.verdict.as_dict()}


def run_rule(pair: CorpusPair, rule: str, strict: bool = False) -> Verdict:
    """One verdict; action-kind gates become hypotheses-fail verdicts unless
    strict, where they raise ActionNotInner as the direct verifiers do."""
    group, action = pair.group, pair.action
    if rule == "A":
        return verify_theorem_a(group, action)
    if rule == "B":
        return verify_theorem_b(group, action)
    if rule == "C":
        return verify_theorem_c(group, action, pair.classification)
    if rule == "D":
        if not strict and action.kind not in SUB_INNER_KINDS:
            return _skip("D", f"needs a sub-inner action, got {action.kind}")
        return verify_theorem_d(group, action)
    if rule == "E":
        if not strict and action.kind not in SUB_INNER_KINDS:
            return _skip("E", f"needs a sub-inner action, got {action.kind}")
        return verify_theorem_e(group, action)
    if rule == "F":
        return verify_theorem_f(group, action)
    if rule == "G":
        return verify_theorem_g(group, action)
    if rule == "H":
        if not strict and action.kind != KIND_INNER:
            return _skip("H", f"needs the inner action, got {action.kind}")
        return verify_theorem_h(group, action)
    if rule == "diam6":
        return verify_diameter_six(group, action)
    if rule == "dominating":
        return verify_dominating_all(group, action)
    if rule == "nilpotency":
        return verify_nilpotency_criterion(group, action)
    raise ValueError(f"unknown rule {rule!r}")


def run_suite(
    corpus: list[CorpusPair],
    rules: tuple[str, ...] = RULE_IDS,
    strict: bool = False,
) -> list[SuiteResult]:
    results = []
    for pair in corpus:
        for rule in rules:
            results.append(SuiteResult(pair.label, run_rule(pair, rule, strict=strict)))
    return results


def failures(results: list[SuiteResult]) -> list[SuiteResult]:
    return [r for r in results if r.verdict.failed]
