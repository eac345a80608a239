"""Executable checks of the ordinal-sum results on concrete families.

``verify`` checks a result's hypotheses on a family and, when they hold,
its conclusion on a grid. ``falsify`` runs the converse direction of the
"if and only if" results: on a family that breaks the hypothesis it looks
for a point where the conclusion breaks too. ``run_suite`` drives both over
seeded random families and produces the CSV battery.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass, field

import numpy as np

from .analysis import AnalysisBudget, classify_negation, equilibrium_point, grid, is_strict
from .config import family_digest
from .connectives import Base, Connective, Kind, make_connective, n_dual
from .natural_negation import (
    SupInfOracleConfig,
    closed_form_natneg_tconorm_sum,
    closed_form_natneg_tnorm_sum,
    known_natural_negation,
    natural_negation_implication,
    natural_negation_tconorm,
    natural_negation_tnorm,
)
from .ordinal_sum import (
    Summand,
    SummandFamily,
    left_ordinal_sum_implication,
    mirror_family,
    ordinal_sum_implication_rescher,
    ordinal_sum_negation,
    ordinal_sum_tconorm,
    ordinal_sum_tnorm,
)

__all__ = [
    "TheoremId",
    "VerificationError",
    "VerifyReport",
    "broken_mirror_family",
    "check_axioms",
    "dominance_family",
    "equilibrium_family",
    "falsify",
    "mirror_hypothesis",
    "random_family",
    "run_suite",
    "suite_csv",
    "verify",
]

PASS, FAIL, UNMET = "pass", "fail", "hypotheses_not_met"
# strict comparison threshold used when hunting for dominance witnesses
DOMINANCE_MARGIN = 1e-12
# matching tolerance for mirrored interval endpoints
ENDPOINT_TOL = 1e-12


class VerificationError(ValueError):
    pass


class TheoremId(str, enum.Enum):
    NEGATION_AXIOMS = "negation_axioms"
    RANGE_CONFINEMENT = "range_confinement"
    EQUILIBRIUM = "equilibrium"
    LEQ_STANDARD_IFF = "leq_standard_iff"
    GEQ_STANDARD_IFF = "geq_standard_iff"
    CONTINUITY_STRICTNESS_IFF = "continuity_strictness_iff"
    FRONTIER_SUFFICIENT = "frontier_sufficient"
    FRONTIER_NECESSARY = "frontier_necessary"
    STRONG_SUFFICIENT = "strong_sufficient"
    STRONG_NECESSARY = "strong_necessary"
    INVERSE_CONSTRUCTION = "inverse_construction"
    NATNEG_TNORM_CLOSED_FORM = "natneg_tnorm_closed_form"
    NATNEG_TCONORM_CLOSED_FORM = "natneg_tconorm_closed_form"
    COMMUTING_DIAGRAM = "commuting_diagram"


@dataclass
class VerifyReport:
    theorem: str
    family_digest: str
    verdict: str
    max_deviation: float = 0.0
    witnesses: list[tuple] = field(default_factory=list)
    notes: str = ""

    def __post_init__(self):
        if self.verdict == FAIL and not self.witnesses:
            raise AssertionError("a failing report needs witnesses")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def render(self) -> str:
        lines = [f"{self.theorem}: {self.verdict}  (max deviation {self.max_deviation:.3g}, "
                 f"family {self.family_digest})"]
        for point, expected, observed in self.witnesses[:10]:
            lines.append(f"  at {_fmt(point)}: expected {_fmt(expected)}, observed {_fmt(observed)}")
        if self.notes:
            lines.append(f"  note: {self.notes}")
        return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(_fmt(u) for u in v) + ")"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _report(theorem, family, verdict, dev=0.0, witnesses=(), notes=""):
    return VerifyReport(TheoremId(theorem).value if isinstance(theorem, TheoremId) else theorem,
                        family_digest(family), verdict, float(dev), list(witnesses), notes)


def _need(family: SummandFamily, kind: Kind, theorem):
    if family.kind is not kind:
        raise VerificationError(
            f"{TheoremId(theorem).value} needs a family of {kind.value}s, got {family.kind.value}s"
        )


# -- helpers on negation families -------------------------------------------


def _worst(dev: np.ndarray, points, expected, observed, tol, limit=5):
    """Max deviation and witnesses for entries exceeding ``tol``."""
    if not dev.size:
        return 0.0, []
    bad = np.nonzero(dev > tol)[0]
    order = bad[np.argsort(-dev[bad], kind="stable")][:limit]
    wit = [(_plain(points[k]), float(expected[k]), float(observed[k])) for k in order]
    return float(dev.max()), wit


def _plain(p):
    if isinstance(p, tuple):
        return tuple(float(u) for u in p)
    return float(p)


def _is_standard(n: Connective, x: np.ndarray, tol: float) -> bool:
    return bool(np.max(np.abs(n._eval(x.copy()) - (1.0 - x))) <= tol)


def mirror_hypothesis(family: SummandFamily, budget: AnalysisBudget | None = None) -> str | None:
    """Check "every summand strict with a mirrored inverse partner".

    Returns None when it holds, else a description of the first failure.
    """
    budget = budget or AnalysisBudget()
    t = grid(budget.grid_points)
    for s in family:
        if not is_strict(s.connective, budget):
            return f"summand on [{s.a:g}, {s.b:g}] is not strict"
    for s in family:
        ok = False
        for p in family:
            if abs(p.a - (1.0 - s.b)) > ENDPOINT_TOL or abs(p.b - (1.0 - s.a)) > ENDPOINT_TOL:
                continue
            tol = budget.tol_for(s.connective, p.connective)
            fwd = p.connective._eval(s.connective._eval(t.copy()))
            back = s.connective._eval(p.connective._eval(t.copy()))
            if max(np.abs(fwd - t).max(), np.abs(back - t).max()) <= tol:
                ok = True
                break
        if not ok:
            return f"summand on [{s.a:g}, {s.b:g}] has no mirrored inverse partner"
    return None


# -- theorem checks ----------------------------------------------------------


def _negation_axioms(family, budget, oracle):
    x = grid(budget.grid_points)
    for s in family:
        v = s.connective._eval(np.array([0.0, 1.0]))
        if v[0] != 1.0 or v[1] != 0.0:
            return _report("negation_axioms", family, UNMET,
                           notes=f"summand on [{s.a:g}, {s.b:g}] violates N1")
    n = ordinal_sum_negation(family)
    v = n._eval(x.copy())
    wit = []
    if v[0] != 1.0:
        wit.append((0.0, 1.0, float(v[0])))
    if v[-1] != 0.0:
        wit.append((1.0, 0.0, float(v[-1])))
    running = np.minimum.accumulate(v)
    rise = v - running
    dev2, w2 = _worst(rise, x, running, v, 0.0)
    dev = max(dev2, abs(v[0] - 1.0), abs(v[-1]))
    wit += w2
    return _report("negation_axioms", family, FAIL if wit else PASS, dev, wit,
                   f"N(0)={v[0]:.17g}, N(1)={v[-1]:.17g}")


def _range_confinement(family, budget, oracle):
    x = grid(budget.grid_points)
    v = ordinal_sum_negation(family)._eval(x.copy())
    dev = np.zeros_like(x)
    expected = np.zeros_like(x)
    covered = np.zeros(x.shape, dtype=bool)
    for s in family:
        m = (x >= s.a) & (x <= s.b)
        covered |= m
        lo, hi = 1.0 - s.b, 1.0 - s.a
        dev[m] = np.maximum(dev[m], np.maximum(lo - v[m], v[m] - hi))
        expected[m] = np.clip(v[m], lo, hi)
    out = ~covered
    for s in family:
        lo, hi = 1.0 - s.b, 1.0 - s.a
        inside = out & (v > lo) & (v < hi)
        dev[inside] = np.maximum(dev[inside], np.minimum(v[inside] - lo, hi - v[inside]))
        expected[inside] = 1.0 - x[inside]
    dev = np.maximum(dev, 0.0)
    worst, wit = _worst(dev, x, expected, v, 0.0)
    return _report("range_confinement", family, FAIL if wit else PASS, worst, wit)


def _equilibrium(family, budget, oracle):
    n = ordinal_sum_negation(family)
    tol = budget.tol_for(n)
    checked, wit, dev = 0, [], 0.0
    for s in family:
        if abs(s.b - (1.0 - s.a)) > ENDPOINT_TOL:
            continue
        e = equilibrium_point(s.connective, budget)
        if e is None:
            continue
        checked += 1
        p = s.a + (s.b - s.a) * e
        val = float(n._eval(np.array([p]))[0])
        d = abs(val - p)
        dev = max(dev, d)
        if d > tol:
            wit.append((p, p, val))
    if not checked:
        return _report("equilibrium", family, UNMET,
                       notes="no summand with b = 1 - a whose negation has an equilibrium point")
    return _report("equilibrium", family, FAIL if wit else PASS, dev, wit,
                   f"{checked} predicted fixed point(s) checked")


def _dominance(family, budget, sign, theorem):
    """sign=+1: N <= N^S; sign=-1: N >= N^S. Returns (hyp_ok, report)."""
    t = grid(budget.grid_points)
    for s in family:
        tol = budget.tol_for(s.connective)
        excess = sign * (s.connective._eval(t.copy()) - (1.0 - t))
        if excess.max() > tol:
            return _report(theorem, family, UNMET,
                           notes=f"summand on [{s.a:g}, {s.b:g}] is not "
                                 f"{'below' if sign > 0 else 'above'} the standard negation")
    n = ordinal_sum_negation(family)
    tol = budget.tol_for(n)
    v = n._eval(t.copy())
    excess = sign * (v - (1.0 - t))
    dev, wit = _worst(np.maximum(excess, 0.0), t, 1.0 - t, v, tol)
    return _report(theorem, family, FAIL if wit else PASS, dev, wit)


def _leq(family, budget, oracle):
    return _dominance(family, budget, +1, "leq_standard_iff")


def _geq(family, budget, oracle):
    return _dominance(family, budget, -1, "geq_standard_iff")


def _anchoring(n, family):
    pts = np.array([p for s in family for p in (s.a, s.b)])
    if not pts.size:
        return 0.0, []
    v = n._eval(pts.copy())
    dev = np.abs(v - (1.0 - pts))
    return _worst(dev, pts, 1.0 - pts, v, 0.0)


def _continuity_strictness(family, budget, oracle):
    for s in family:
        if not is_strict(s.connective, budget):
            return _report("continuity_strictness_iff", family, UNMET,
                           notes=f"summand on [{s.a:g}, {s.b:g}] is not strict")
    n = ordinal_sum_negation(family)
    rep = classify_negation(n, budget)
    dev, wit = _anchoring(n, family)
    for cls in ("strict", "continuous"):
        if not rep.holds(cls):
            w = rep.witness(cls)
            wit.append((w.points, f"{cls} holds", w.values))
    return _report("continuity_strictness_iff", family, FAIL if wit else PASS, dev, wit,
                   f"strict: {rep.flags['strict'].value}, continuous: {rep.flags['continuous'].value}")


def _frontier_sufficient(family, budget, oracle):
    for s in family:
        rep = None
        if s.a == 0.0 or s.b == 1.0:
            rep = classify_negation(s.connective, budget)
        if s.a == 0.0 and not rep.holds("non_filling"):
            return _report("frontier_sufficient", family, UNMET,
                           notes=f"summand on [{s.a:g}, {s.b:g}] starts at 0 but is filling")
        if s.b == 1.0 and not rep.holds("non_vanishing"):
            return _report("frontier_sufficient", family, UNMET,
                           notes=f"summand on [{s.a:g}, {s.b:g}] ends at 1 but is vanishing")
    n = ordinal_sum_negation(family)
    rep = classify_negation(n, budget)
    x = grid(budget.grid_points)[1:-1]
    v = n._eval(x.copy())
    margin = float(np.minimum(v, 1.0 - v).min()) if v.size else 0.0
    wit = []
    if not rep.holds("frontier"):
        w = rep.witness("frontier")
        wit.append((w.points, "value in ]0, 1[", w.values))
    return _report("frontier_sufficient", family, FAIL if wit else PASS, 0.0, wit,
                   f"frontier: {rep.flags['frontier'].value}; closest interior value to {{0, 1}}: {margin:.3g}")


def _boundary_hits(n, family, x, tol):
    """Grid points other than a_i (b_i) where N_I takes the value 1 - a_i (1 - b_i)."""
    v = n._eval(x.copy())
    hits = []
    for s in family:
        for end, other in ((s.a, s.b), (s.b, s.a)):
            m = (np.abs(v - (1.0 - end)) <= tol) & (x != end)
            for k in np.nonzero(m)[0][:3]:
                hits.append((float(x[k]), f"only at x={end:.12g}", float(v[k])))
    return hits


def _frontier_necessary(family, budget, oracle):
    n = ordinal_sum_negation(family)
    x = grid(budget.grid_points)
    if _boundary_hits(n, family, x, budget.tol_for(n)):
        return _report("frontier_necessary", family, UNMET,
                       notes="the ordinal sum reaches a boundary value 1 - a_i or 1 - b_i away from a_i, b_i")
    wit = []
    for s in family:
        rep = classify_negation(s.connective, budget)
        if not rep.holds("frontier"):
            w = rep.witness("frontier")
            wit.append(((s.a, s.b), "frontier summand", w.points))
    return _report("frontier_necessary", family, FAIL if wit else PASS, 0.0, wit)


def _strong_sufficient(family, budget, oracle):
    reason = mirror_hypothesis(family, budget)
    if reason:
        return _report("strong_sufficient", family, UNMET, notes=reason)
    return _involution_report("strong_sufficient", family, budget)


def _involution_report(theorem, family, budget):
    n = ordinal_sum_negation(family)
    x = grid(budget.grid_points)
    v = n._eval(x.copy())
    vv = n._eval(np.clip(v, 0.0, 1.0))
    tol = budget.tol_for(n)
    dev, wit = _worst(np.abs(vv - x), x, x, vv, tol)
    return _report(theorem, family, FAIL if wit else PASS, dev, wit, f"tolerance {tol:g}")


def _side_conditions(family, budget) -> list[str]:
    x = grid(budget.grid_points)
    missing = []
    if family.touching():
        missing.append("some a_i equals some b_j")
    if any(_is_standard(s.connective, x, budget.tol_for(s.connective)) for s in family):
        missing.append("some summand is the standard negation")
    return missing


def _strong_necessary(family, budget, oracle):
    strong = _involution_report("strong_necessary", family, budget)
    if not strong.passed:
        return _report("strong_necessary", family, UNMET,
                       notes=f"ordinal sum is not strong (deviation {strong.max_deviation:.3g})")
    missing = _side_conditions(family, budget)
    reason = mirror_hypothesis(family, budget)
    notes = "side conditions of the conditional form hold" if not missing else (
        "unconditional reading; side conditions fail: " + ", ".join(missing))
    if reason:
        return _report("strong_necessary", family, FAIL, strong.max_deviation,
                       [("family", "strict summands with mirrored inverses", reason)], notes)
    return _report("strong_necessary", family, PASS, strong.max_deviation, notes=notes)


def _inverse_construction(family, budget, oracle):
    for s in family:
        if not is_strict(s.connective, budget):
            return _report("inverse_construction", family, UNMET,
                           notes=f"summand on [{s.a:g}, {s.b:g}] is not invertible")
    n = ordinal_sum_negation(family)
    m = ordinal_sum_negation(mirror_family(family))
    x = grid(budget.grid_points)
    tol = budget.tol_for(n, m)
    a = n._eval(np.clip(m._eval(x.copy()), 0.0, 1.0))
    b = m._eval(np.clip(n._eval(x.copy()), 0.0, 1.0))
    dev = np.maximum(np.abs(a - x), np.abs(b - x))
    observed = np.where(np.abs(a - x) >= np.abs(b - x), a, b)
    worst, wit = _worst(dev, x, x, observed, tol)
    return _report("inverse_construction", family, FAIL if wit else PASS, worst, wit,
                   f"tolerance {tol:g}")


def _natneg_closed_form(family, budget, oracle, kind):
    theorem = "natneg_tnorm_closed_form" if kind is Kind.TNORM else "natneg_tconorm_closed_form"
    _need(family, kind, theorem)
    x = grid(budget.grid_points)
    if kind is Kind.TNORM:
        closed = closed_form_natneg_tnorm_sum(family, cfg=oracle)
        sup = natural_negation_tnorm(ordinal_sum_tnorm(family), oracle)
    else:
        closed = closed_form_natneg_tconorm_sum(family, cfg=oracle)
        sup = natural_negation_tconorm(ordinal_sum_tconorm(family), oracle)
    c = closed._eval(x.copy())
    o = sup._eval(x.copy())
    tol = budget.bisection_tol
    dev, wit = _worst(np.abs(c - o), x, o, c, tol)
    notes = ""
    if kind is Kind.TNORM and any(s.a == 0.0 and s.b < 1.0 for s in family):
        unscaled = closed_form_natneg_tnorm_sum(family, closed.subs, scaled=False)
        u = unscaled._eval(x.copy())
        k = int(np.argmax(np.abs(u - o)))
        notes = (f"unscaled form N_i(x/b_i) deviates from the sup oracle by {abs(u[k] - o[k]):.6g} "
                 f"(at x={x[k]:.6g}: {u[k]:.6g} vs {o[k]:.6g}); scaled form b_i*N_i(x/b_i) used")
    return _report(theorem, family, FAIL if wit else PASS, dev, wit, notes)


def _commuting_diagram(family, budget, oracle):
    _need(family, Kind.IMPLICATION, "commuting_diagram")
    if any(s.b >= 1.0 for s in family):
        raise VerificationError("commuting_diagram needs every b_i < 1")
    lhs = natural_negation_implication(left_ordinal_sum_implication(family))
    rhs = ordinal_sum_negation(SummandFamily(Kind.NEGATION, tuple(
        Summand(s.a, s.b, natural_negation_implication(s.connective)) for s in family)))
    x = grid(budget.grid_points)
    u, v = lhs._eval(x.copy()), rhs._eval(x.copy())
    tol = budget.tol_for(lhs, rhs)
    dev, wit = _worst(np.abs(u - v), x, v, u, tol)
    return _report("commuting_diagram", family, FAIL if wit else PASS, dev, wit)


_VERIFY = {
    TheoremId.NEGATION_AXIOMS: _negation_axioms,
    TheoremId.RANGE_CONFINEMENT: _range_confinement,
    TheoremId.EQUILIBRIUM: _equilibrium,
    TheoremId.LEQ_STANDARD_IFF: _leq,
    TheoremId.GEQ_STANDARD_IFF: _geq,
    TheoremId.CONTINUITY_STRICTNESS_IFF: _continuity_strictness,
    TheoremId.FRONTIER_SUFFICIENT: _frontier_sufficient,
    TheoremId.FRONTIER_NECESSARY: _frontier_necessary,
    TheoremId.STRONG_SUFFICIENT: _strong_sufficient,
    TheoremId.STRONG_NECESSARY: _strong_necessary,
    TheoremId.INVERSE_CONSTRUCTION: _inverse_construction,
    TheoremId.NATNEG_TNORM_CLOSED_FORM: lambda f, b, o: _natneg_closed_form(f, b, o, Kind.TNORM),
    TheoremId.NATNEG_TCONORM_CLOSED_FORM: lambda f, b, o: _natneg_closed_form(f, b, o, Kind.TCONORM),
    TheoremId.COMMUTING_DIAGRAM: _commuting_diagram,
}

_OTHER_KINDS = {
    TheoremId.NATNEG_TNORM_CLOSED_FORM,
    TheoremId.NATNEG_TCONORM_CLOSED_FORM,
    TheoremId.COMMUTING_DIAGRAM,
}


def verify(theorem, family: SummandFamily, budget: AnalysisBudget | None = None,
           oracle: SupInfOracleConfig | None = None) -> VerifyReport:
    """Check one result on one family."""
    theorem = TheoremId(theorem)
    budget = budget or AnalysisBudget()
    oracle = oracle or SupInfOracleConfig()
    if theorem not in _OTHER_KINDS:
        _need(family, Kind.NEGATION, theorem)
    return _VERIFY[theorem](family, budget, oracle)


# -- converse directions -----------------------------------------------------


def _falsify_dominance(family, budget, sign, theorem):
    t = grid(budget.grid_points)
    culprit = None
    for s in family:
        excess = sign * (s.connective._eval(t.copy()) - (1.0 - t))
        if excess.max() > budget.tol_for(s.connective):
            culprit = s
            break
    if culprit is None:
        return _report(theorem, family, UNMET,
                       notes="every summand satisfies the dominance; nothing to falsify")
    v = ordinal_sum_negation(family)._eval(t.copy())
    excess = sign * (v - (1.0 - t))
    dev, wit = _worst(np.maximum(excess, 0.0), t, 1.0 - t, v, DOMINANCE_MARGIN)
    if not wit:
        return _report(theorem, family, FAIL, dev,
                       [((culprit.a, culprit.b), "grid witness", "none found")],
                       "summand breaks the dominance but the ordinal sum does not")
    return _report(theorem, family, PASS, dev, wit,
                   f"summand on [{culprit.a:g}, {culprit.b:g}] breaks the dominance")


def _falsify_continuity(family, budget):
    bad = [s for s in family if not is_strict(s.connective, budget)]
    if not bad:
        return _report("continuity_strictness_iff", family, UNMET, notes="every summand is strict")
    rep = classify_negation(ordinal_sum_negation(family), budget)
    if rep.holds("strict"):
        s = bad[0]
        return _report("continuity_strictness_iff", family, FAIL, 0.0,
                       [((s.a, s.b), "non-strict ordinal sum", "strict on grid")])
    w = rep.witness("strict")
    return _report("continuity_strictness_iff", family, PASS, 0.0, [(w.points, "strict", w.values)],
                   w.note)


def _falsify_frontier(family, budget):
    n = ordinal_sum_negation(family)
    tol = budget.tol_for(n)
    x = grid(budget.grid_points)
    culprits = []
    for s in family:
        rep = classify_negation(s.connective, budget)
        if not rep.holds("frontier"):
            culprits.append((s, rep))
    if not culprits:
        return _report("frontier_necessary", family, UNMET, notes="every summand is frontier")
    hits = []
    for s, rep in culprits:
        # a summand value 0 away from t=1 lands on 1 - b_i before b_i; a
        # value 1 away from t=0 lands on 1 - a_i after a_i
        for cls in ("non_vanishing", "non_filling"):
            w = rep.witness(cls)
            if w is None:
                continue
            p = s.a + (s.b - s.a) * w.points[0]
            val = float(n._eval(np.array([p]))[0])
            target = 1.0 - s.b if cls == "non_vanishing" else 1.0 - s.a
            end = s.b if cls == "non_vanishing" else s.a
            if abs(val - target) <= tol and p != end:
                hits.append((p, f"only at x={end:.12g}", val))
    hits += _boundary_hits(n, family, x, tol)
    if not hits:
        s = culprits[0][0]
        return _report("frontier_necessary", family, FAIL, 0.0,
                       [((s.a, s.b), "boundary value away from endpoint", "none found")])
    return _report("frontier_necessary", family, PASS, 0.0, hits[:5])


def _falsify_strong(family, budget):
    reason = mirror_hypothesis(family, budget)
    if reason is None:
        return _report("strong_necessary", family, UNMET,
                       notes="summands are strict with mirrored inverses; nothing to falsify")
    rep = _involution_report("strong_necessary", family, budget)
    x = grid(budget.grid_points)
    n = ordinal_sum_negation(family)
    vv = n._eval(np.clip(n._eval(x.copy()), 0.0, 1.0))
    dev, wit = _worst(np.abs(vv - x), x, x, vv, budget.bisection_tol)
    missing = _side_conditions(family, budget)
    notes = reason + ("" if not missing else "; side conditions fail: " + ", ".join(missing))
    if not wit:
        return _report("strong_necessary", family, FAIL, rep.max_deviation,
                       [("family", "involution violation", "none found")], notes)
    return _report("strong_necessary", family, PASS, dev, wit, notes)


def falsify(theorem, family: SummandFamily, budget: AnalysisBudget | None = None) -> VerifyReport:
    """Corroborate the necessity direction of an iff result on one family.

    ``pass`` means the hypothesis is broken and a grid point breaking the
    conclusion was found.
    """
    theorem = TheoremId(theorem)
    budget = budget or AnalysisBudget()
    _need(family, Kind.NEGATION, theorem)
    if theorem is TheoremId.LEQ_STANDARD_IFF:
        return _falsify_dominance(family, budget, +1, theorem.value)
    if theorem is TheoremId.GEQ_STANDARD_IFF:
        return _falsify_dominance(family, budget, -1, theorem.value)
    if theorem is TheoremId.CONTINUITY_STRICTNESS_IFF:
        return _falsify_continuity(family, budget)
    if theorem is TheoremId.FRONTIER_NECESSARY:
        return _falsify_frontier(family, budget)
    if theorem is TheoremId.STRONG_NECESSARY:
        return _falsify_strong(family, budget)
    raise VerificationError(f"{theorem.value} has no converse direction to falsify")


# -- axiom suites for binary connectives ------------------------------------


def check_axioms(expr: Connective, points: int = 101, triple_points: int = 11,
                 tol: float = 1e-12) -> VerifyReport:
    """Axioms of the expression's kind on a grid.

    Negations: N1 exactly and N2 on ``points`` samples. T-norms and
    t-conorms: identity, symmetry and monotonicity on a ``points`` square
    grid, associativity on a ``triple_points`` cube. Implications: J1-J5.
    """
    g = grid(points)
    wit: list[tuple] = []
    devs = [0.0]
    name = f"{expr.kind.value}_axioms"

    def monotone(label, M, axis, sign):
        """sign=+1: non-decreasing along ``axis``; -1: non-increasing."""
        step = sign * np.diff(M, axis=axis)
        drop = np.maximum(-step, 0.0)
        devs.append(float(drop.max()) if drop.size else 0.0)
        for idx in np.argwhere(drop > tol)[:2]:
            i, j = (int(u) for u in idx)
            i2, j2 = (i + 1, j) if axis == 0 else (i, j + 1)
            wit.append((f"{label} ({g[i]:.12g}, {g[j]:.12g}) -> ({g[i2]:.12g}, {g[j2]:.12g})",
                        float(M[i, j]), float(M[i2, j2])))

    def record(label, dev, pts, expected, observed):
        d, w = _worst(dev.ravel(), pts, expected.ravel(), observed.ravel(), tol, limit=2)
        devs.append(d)
        wit.extend((f"{label} {p}", e, o) for p, e, o in w)

    if expr.kind is Kind.NEGATION:
        v = expr._eval(g.copy())
        if v[0] != 1.0 or v[-1] != 0.0:
            wit.append(("N1", (1.0, 0.0), (float(v[0]), float(v[-1]))))
        run = np.minimum.accumulate(v)
        record("N2", v - run, g, run, v)
        return VerifyReport(name, "-", FAIL if wit else PASS, max(devs), wit)

    X, Y = np.meshgrid(g, g, indexing="ij")
    flat_pts = list(zip(X.ravel().tolist(), Y.ravel().tolist()))
    M = expr._eval(X.ravel().copy(), Y.ravel().copy()).reshape(X.shape)
    out_of_range = np.maximum(-M, M - 1.0).clip(min=0.0)
    record("range", out_of_range, flat_pts, M.clip(0, 1), M)

    if expr.kind in (Kind.TNORM, Kind.TCONORM):
        e = 1.0 if expr.kind is Kind.TNORM else 0.0
        ident = expr._eval(g.copy(), np.full_like(g, e))
        record("identity", np.abs(ident - g), g, g, ident)
        record("symmetry", np.abs(M - M.T), flat_pts, M.T, M)
        monotone("monotone in x", M, 0, +1)
        monotone("monotone in y", M, 1, +1)
        g3 = grid(triple_points)
        A, B, C = (u.ravel() for u in np.meshgrid(g3, g3, g3, indexing="ij"))
        left = expr._eval(A.copy(), expr._eval(B.copy(), C.copy()))
        right = expr._eval(expr._eval(A.copy(), B.copy()), C.copy())
        trip = list(zip(A.tolist(), B.tolist(), C.tolist()))
        record("associativity", np.abs(left - right), trip, right, left)
    else:
        monotone("J1", M, 0, -1)
        monotone("J2", M, 1, +1)
        corners = expr._eval(np.array([0.0, 1.0, 1.0]), np.array([0.0, 1.0, 0.0]))
        for label, got, want in zip(("J3", "J4", "J5"), corners, (1.0, 1.0, 0.0)):
            if got != want:
                wit.append((label, want, float(got)))
                devs.append(abs(got - want))
    return VerifyReport(name, "-", FAIL if wit else PASS, max(devs), wit)


# -- random families ---------------------------------------------------------

LATTICE = 128
_PARAMS = (1.25, 1.5, 1.75, 2.0, 2.25, 2.5)


def _intervals(rng, n, lo=0, hi=LATTICE, *, no_touch=False, min_width=2, tries=1000):
    """``n`` disjoint lattice intervals inside ``[lo, hi] / LATTICE``."""
    if n == 0:
        return []
    for _ in range(tries):
        pts = np.sort(rng.integers(lo, hi + 1, size=2 * n))
        widths = pts[1::2] - pts[0::2]
        gaps = pts[2::2] - pts[1:-1:2]
        if widths.min() >= min_width and (not no_touch or not gaps.size or gaps.min() >= 1):
            return [(int(p) / LATTICE, int(q) / LATTICE) for p, q in zip(pts[0::2], pts[1::2])]
    raise VerificationError(f"cannot place {n} intervals in [{lo}, {hi}]/{LATTICE}")


def _neg(name, *params):
    return make_connective(Kind.NEGATION, name, params)


def _random_negation(rng, category: str, depth: int = 0) -> Connective:
    k = float(rng.choice(_PARAMS))
    nested = depth < 1 and rng.random() < 0.15
    if category in ("strict", "strict_nonstandard", "continuous"):
        if nested:
            return _nested_negation(rng, "strict_nonstandard", depth)
        options = [_neg("power_complement", k), _neg("root_complement", k),
                   invert_power(k)]
        if category != "strict_nonstandard":
            options.append(_neg("standard"))
        return options[rng.integers(len(options))]
    if category == "strong":
        return [_neg("standard"), _neg("root_complement", k)][rng.integers(2)]
    if category == "leq":
        if nested:
            return _nested_negation(rng, "leq", depth)
        choice = rng.integers(4)
        if choice == 0:
            return _neg("least")
        if choice == 1:
            return _neg("standard")
        return _natural_of_sum(rng, Kind.TNORM)
    if category == "geq":
        if nested:
            return _nested_negation(rng, "geq", depth)
        options = [_neg("standard"), _neg("power_complement", k), _neg("root_complement", k),
                   _neg("greatest"), invert_power(k)]
        if rng.random() < 0.3:
            return _natural_of_sum(rng, Kind.TCONORM)
        return options[rng.integers(len(options))]
    if category == "crisp":
        return [_neg("least"), _neg("greatest")][rng.integers(2)]
    if category == "any":
        r = rng.random()
        if r < 0.45:
            return _random_negation(rng, "strict", depth)
        if r < 0.65:
            return _random_negation(rng, "crisp", depth)
        if r < 0.75:
            t = [make_connective(Kind.TNORM, n) for n in ("lukasiewicz", "godel", "drastic")]
            return natural_negation_tnorm(t[rng.integers(3)])
        if r < 0.85:
            return _natural_of_sum(rng, [Kind.TNORM, Kind.TCONORM][rng.integers(2)])
        if depth < 1:
            return _nested_negation(rng, "any", depth)
        return _neg("standard")
    raise VerificationError(f"unknown negation category {category!r}")


def invert_power(k: float) -> Connective:
    from .analysis import Inverse
    return Inverse(_neg("power_complement", k))


def _nested_negation(rng, category, depth):
    n = int(rng.integers(1, 3))
    spans = _intervals(rng, n)
    return ordinal_sum_negation(SummandFamily.of(
        Kind.NEGATION, [(a, b, _random_negation(rng, category, depth + 1)) for a, b in spans]))


def _natural_of_sum(rng, kind):
    """Exact natural negation of a small t-norm (t-conorm) ordinal sum."""
    if kind is Kind.TNORM:
        b = int(rng.integers(16, LATTICE)) / LATTICE
        fam = SummandFamily.of(kind, [(0.0, b, make_connective(kind, "lukasiewicz"))])
        return closed_form_natneg_tnorm_sum(fam)
    a = int(rng.integers(1, LATTICE - 16)) / LATTICE
    fam = SummandFamily.of(kind, [(a, 1.0, make_connective(kind, "lukasiewicz"))])
    return closed_form_natneg_tconorm_sum(fam)


_TNORMS = ("godel", "product", "lukasiewicz", "drastic")
_TCONORMS = ("godel", "probabilistic_sum", "lukasiewicz", "drastic")
_IMPLICATIONS = ("godel", "rescher", "kleene_dienes")


def _random_binary(rng, kind, depth=0) -> Connective:
    r = rng.random()
    if kind is Kind.IMPLICATION:
        # left sums are not implications in general, so only Rescher sums nest
        if depth < 1 and r < 0.15:
            spans = _intervals(rng, int(rng.integers(1, 3)), 1, LATTICE, no_touch=True)
            return ordinal_sum_implication_rescher(SummandFamily.of(
                kind, [(a, b, _random_binary(rng, kind, depth + 1)) for a, b in spans]))
        return make_connective(kind, _IMPLICATIONS[rng.integers(3)])
    names = _TNORMS if kind is Kind.TNORM else _TCONORMS
    if depth < 1 and r < 0.1:
        spans = _intervals(rng, int(rng.integers(1, 3)))
        fam = SummandFamily.of(kind, [(a, b, _random_binary(rng, kind, depth + 1)) for a, b in spans])
        return ordinal_sum_tnorm(fam) if kind is Kind.TNORM else ordinal_sum_tconorm(fam)
    if r < 0.2:
        other = Kind.TCONORM if kind is Kind.TNORM else Kind.TNORM
        other_names = _TCONORMS if kind is Kind.TNORM else _TNORMS
        return n_dual(make_connective(other, other_names[rng.integers(4)]), _neg("standard"))
    return make_connective(kind, names[rng.integers(4)])


def random_family(seed: int, kind, max_summands: int = 3, *, mirrored: bool = False,
                  b_lt_1: bool = False, a_gt_0: bool = False, strict_only: bool = False,
                  no_touch: bool = False) -> SummandFamily:
    """Deterministic random family.

    Endpoints sit on a 1/128 lattice so interval arithmetic (1 - b, b - a)
    is exact. ``mirrored`` pairs every off-centre strict summand with its
    mirror image carrying the inverse negation; a single summand is then
    necessarily centred with a strong negation.
    """
    kind = Kind(kind)
    if max_summands < 1:
        raise VerificationError("max_summands must be at least 1")
    rng = np.random.default_rng(seed)
    lo = 1 if a_gt_0 else 0
    hi = LATTICE - 1 if b_lt_1 else LATTICE
    if mirrored:
        if kind is not Kind.NEGATION:
            raise VerificationError("mirrored families are negation families")
        return _mirrored_family(rng, max_summands, lo, no_touch)
    n = int(rng.integers(1, max_summands + 1))
    if kind is Kind.IMPLICATION and a_gt_0:
        no_touch = True
    spans = _intervals(rng, n, lo, hi, no_touch=no_touch)
    if kind is Kind.NEGATION:
        cat = "strict" if strict_only else "any"
        triples = [(a, b, _random_negation(rng, cat)) for a, b in spans]
    else:
        triples = [(a, b, _random_binary(rng, kind)) for a, b in spans]
    return SummandFamily.of(kind, triples)


def _mirrored_family(rng, max_summands, lo, no_touch):
    half = LATTICE // 2
    pairs = int(rng.integers(0, max_summands // 2 + 1))
    centred = pairs == 0 or (max_summands - 2 * pairs >= 1 and rng.random() < 0.5)
    triples = []
    top = half - 1 if no_touch else half
    if centred:
        c = int(rng.integers(lo, half - 2 * pairs - 1))
        triples.append((c / LATTICE, (LATTICE - c) / LATTICE, _random_negation(rng, "strong")))
        top = c - 1 if no_touch else c
    from .analysis import invert_strict_negation
    for a, b in _intervals(rng, pairs, lo, top, no_touch=no_touch):
        n = _random_negation(rng, "strict")
        triples.append((a, b, n))
        triples.append((1.0 - b, 1.0 - a, invert_strict_negation(n)))
    return SummandFamily.of(Kind.NEGATION, triples)


def dominance_family(seed: int, direction: str, violate: bool = False,
                     max_summands: int = 5) -> SummandFamily:
    """Family whose summands all lie below (``"leq"``) or above (``"geq"``)
    the standard negation; with ``violate`` one summand is swapped for one
    that clearly does not."""
    if direction not in ("leq", "geq"):
        raise VerificationError("direction is 'leq' or 'geq'")
    rng = np.random.default_rng(seed)
    spans = _intervals(rng, int(rng.integers(1, max_summands + 1)))
    negs = [_random_negation(rng, direction) for _ in spans]
    if violate:
        k = float(rng.choice(_PARAMS))
        if direction == "leq":
            bad = [_neg("power_complement", k), _neg("root_complement", k), _neg("greatest")]
        else:
            bad = [_neg("least"), _natural_of_sum(rng, Kind.TNORM)]
        negs[int(rng.integers(len(negs)))] = bad[rng.integers(len(bad))]
    return SummandFamily.of(Kind.NEGATION, [(a, b, n) for (a, b), n in zip(spans, negs)])


def equilibrium_family(seed: int, max_summands: int = 5) -> SummandFamily:
    """Family with a summand on ``[c, 1 - c]`` carrying a continuous negation."""
    rng = np.random.default_rng(seed)
    half = LATTICE // 2
    c = int(rng.integers(0, half - 8))
    triples = [(c / LATTICE, (LATTICE - c) / LATTICE, _random_negation(rng, "continuous"))]
    rest = int(rng.integers(0, max_summands))
    left = int(rng.integers(0, rest + 1)) if c >= 4 else 0
    if c >= 4:
        for a, b in _intervals(rng, min(left, c // 8), 0, c):
            triples.append((a, b, _random_negation(rng, "any")))
        for a, b in _intervals(rng, min(rest - left, c // 8), LATTICE - c, LATTICE):
            triples.append((a, b, _random_negation(rng, "any")))
    return SummandFamily.of(Kind.NEGATION, triples)


def broken_mirror_family(seed: int, max_summands: int = 5,
                         budget: AnalysisBudget | None = None) -> SummandFamily:
    """Non-touching family with no standard summand violating the mirror
    hypothesis (some summand non-strict or without a mirrored inverse)."""
    rng = np.random.default_rng(seed)
    budget = budget or AnalysisBudget()
    for _ in range(100):
        spans = _intervals(rng, int(rng.integers(1, max_summands + 1)), no_touch=True)
        cats = ["strict_nonstandard"] * 4 + ["crisp"]
        fam = SummandFamily.of(Kind.NEGATION, [
            (a, b, _random_negation(rng, cats[rng.integers(len(cats))])) for a, b in spans])
        if mirror_hypothesis(fam, budget) is not None:
            return fam
    raise VerificationError("could not draw a family breaking the mirror hypothesis")


def frontier_breaking_family(seed: int, max_summands: int = 4) -> SummandFamily:
    """Family with at least one crisp (hence non-frontier) summand."""
    rng = np.random.default_rng(seed)
    spans = _intervals(rng, int(rng.integers(1, max_summands + 1)))
    negs = [_random_negation(rng, "strict") for _ in spans]
    negs[int(rng.integers(len(negs)))] = _random_negation(rng, "crisp")
    return SummandFamily.of(Kind.NEGATION, [(a, b, n) for (a, b), n in zip(spans, negs)])


# -- the battery -------------------------------------------------------------


@dataclass
class SuiteRow:
    criterion: str
    check: str
    seed: int
    report: VerifyReport


def _seed(base: int, block: int, i: int) -> int:
    return int(np.random.SeedSequence([base, block, i]).generate_state(1)[0])


def _sum_for(kind, family, variant=None):
    if kind is Kind.TNORM:
        return ordinal_sum_tnorm(family)
    if kind is Kind.TCONORM:
        return ordinal_sum_tconorm(family)
    if variant == "rescher":
        return ordinal_sum_implication_rescher(family)
    return left_ordinal_sum_implication(family)


SUITE_SIZES = {
    "negation_families": 200,
    "binary_families": 200,
    "strong": 50,
    "broken": 50,
    "inverse": 50,
    "equilibrium": 30,
    "dominance": 50,
    "closed_form": 100,
    "commuting": 50,
    "extra": 20,
}


def run_suite(seed: int = 42, budget: AnalysisBudget | None = None,
              oracle: SupInfOracleConfig | None = None, sizes: dict | None = None,
              progress=None) -> list[SuiteRow]:
    """Run the whole randomized battery; rows come out in a fixed order."""
    budget = budget or AnalysisBudget()
    oracle = oracle or SupInfOracleConfig()
    sz = {**SUITE_SIZES, **(sizes or {})}
    rows: list[SuiteRow] = []

    def block(no, criterion, count, make, check):
        for i in range(count):
            s = _seed(seed, no, i)
            label, rep = check(make(s))
            rows.append(SuiteRow(criterion, label, s, rep))
        if progress:
            progress(criterion, rows)

    def theorem(t, converse=False):
        def run(fam):
            if converse:
                return f"{TheoremId(t).value}/converse", falsify(t, fam, budget)
            return TheoremId(t).value, verify(t, fam, budget, oracle)
        return run

    def axioms(kind, variant=None):
        def run(fam):
            rep = check_axioms(_sum_for(kind, fam, variant))
            rep.family_digest = family_digest(fam)
            label = rep.theorem if variant is None else f"{rep.theorem}/{variant}"
            return label, rep
        return run

    neg = lambda s: random_family(s, Kind.NEGATION, 5)
    n = sz["negation_families"]
    block(1, "1", n, neg, theorem(TheoremId.NEGATION_AXIOMS))
    block(2, "2", n, neg, theorem(TheoremId.RANGE_CONFINEMENT))
    m = sz["binary_families"]
    block(3, "1", m, lambda s: random_family(s, Kind.TNORM, 5), axioms(Kind.TNORM))
    block(4, "1", m, lambda s: random_family(s, Kind.TCONORM, 5), axioms(Kind.TCONORM))
    block(5, "1", m, lambda s: random_family(s, Kind.IMPLICATION, 5, a_gt_0=True),
          axioms(Kind.IMPLICATION, "rescher"))
    block(6, "1", m, lambda s: random_family(s, Kind.IMPLICATION, 5, b_lt_1=True),
          axioms(Kind.IMPLICATION, "left"))
    block(7, "3", sz["strong"], lambda s: random_family(s, Kind.NEGATION, 5, mirrored=True),
          theorem(TheoremId.STRONG_SUFFICIENT))
    block(8, "4", sz["broken"], lambda s: broken_mirror_family(s, budget=budget),
          theorem(TheoremId.STRONG_NECESSARY, converse=True))
    block(9, "5", sz["inverse"], lambda s: random_family(s, Kind.NEGATION, 5, strict_only=True),
          theorem(TheoremId.INVERSE_CONSTRUCTION))
    block(10, "6", sz["equilibrium"], equilibrium_family, theorem(TheoremId.EQUILIBRIUM))
    d = sz["dominance"]
    block(11, "7", d, lambda s: dominance_family(s, "leq"), theorem(TheoremId.LEQ_STANDARD_IFF))
    block(12, "7", d, lambda s: dominance_family(s, "leq", violate=True),
          theorem(TheoremId.LEQ_STANDARD_IFF, converse=True))
    block(13, "7", d, lambda s: dominance_family(s, "geq"), theorem(TheoremId.GEQ_STANDARD_IFF))
    block(14, "7", d, lambda s: dominance_family(s, "geq", violate=True),
          theorem(TheoremId.GEQ_STANDARD_IFF, converse=True))
    c = sz["closed_form"]
    block(15, "8", c, lambda s: random_family(s, Kind.TNORM, 5),
          theorem(TheoremId.NATNEG_TNORM_CLOSED_FORM))
    block(16, "8", c, lambda s: random_family(s, Kind.TCONORM, 5),
          theorem(TheoremId.NATNEG_TCONORM_CLOSED_FORM))
    block(17, "9", sz["commuting"], lambda s: random_family(s, Kind.IMPLICATION, 5, b_lt_1=True),
          theorem(TheoremId.COMMUTING_DIAGRAM))
    e = sz["extra"]
    strict = lambda s: random_family(s, Kind.NEGATION, 4, strict_only=True)
    block(18, "-", e, strict, theorem(TheoremId.CONTINUITY_STRICTNESS_IFF))
    block(19, "-", e, frontier_breaking_family, theorem(TheoremId.CONTINUITY_STRICTNESS_IFF, converse=True))
    block(20, "-", e, strict, theorem(TheoremId.FRONTIER_SUFFICIENT))
    block(21, "-", e, strict, theorem(TheoremId.FRONTIER_NECESSARY))
    block(22, "-", e, frontier_breaking_family, theorem(TheoremId.FRONTIER_NECESSARY, converse=True))
    return rows


CSV_HEADER = ("theorem", "seed", "verdict", "max_deviation", "witness_count")


def suite_csv(rows: list[SuiteRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow((r.check, r.seed, r.report.verdict, format(r.report.max_deviation, ".17g"),
                    len(r.report.witnesses)))
    return buf.getvalue()
