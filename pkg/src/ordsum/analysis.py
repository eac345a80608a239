"""Classification of negations, equilibrium points and inverses.

Grid checks can only refute a class; symbolic certificates carried by the
expression tree are what certify it. Both are reported side by side.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .connectives import Base, Connective, ConnectiveError, Kind

__all__ = [
    "CLASSES",
    "AnalysisBudget",
    "ClassReport",
    "Inverse",
    "Verdict",
    "Witness",
    "classify_negation",
    "equilibrium_point",
    "find_jumps",
    "grid",
    "invert_strict_negation",
    "is_strict",
]

CLASSES = (
    "N1",
    "N2",
    "strict",
    "strong",
    "crisp",
    "non_vanishing",
    "non_filling",
    "frontier",
    "leq_standard",
    "geq_standard",
    "continuous",
)


@dataclass(frozen=True)
class AnalysisBudget:
    grid_points: int = 1001
    continuity_probe_pairs: int = 4096
    equality_tol: float = 1e-9
    # looser tolerance used wherever a numerical root search feeds a value
    bisection_tol: float = 1e-6

    def __post_init__(self):
        if self.grid_points < 3:
            raise ValueError("grid_points must be at least 3")
        if not self.equality_tol > 0 or not self.bisection_tol > 0:
            raise ValueError("tolerances must be positive")
        if self.continuity_probe_pairs < 0:
            raise ValueError("continuity_probe_pairs must be non-negative")

    def tol_for(self, *exprs: Connective) -> float:
        return self.bisection_tol if any(e.bisects() for e in exprs) else self.equality_tol


def grid(points: int) -> np.ndarray:
    return np.linspace(0.0, 1.0, points)


class Verdict(str, enum.Enum):
    HOLDS = "holds_on_grid"
    REFUTED = "refuted"
    CERTIFIED = "certified_symbolically"


@dataclass(frozen=True)
class Witness:
    cls: str
    points: tuple[float, ...]
    values: tuple[float, ...]
    note: str = ""


@dataclass
class ClassReport:
    flags: dict[str, Verdict]
    witnesses: list[Witness] = field(default_factory=list)
    grid_size: int = 0

    def holds(self, cls: str) -> bool:
        return self.flags[cls] is not Verdict.REFUTED

    def witness(self, cls: str) -> Witness | None:
        return next((w for w in self.witnesses if w.cls == cls), None)

    def to_records(self) -> list[dict]:
        records = []
        for cls in CLASSES:
            rec = {"class": cls, "verdict": self.flags[cls].value, "grid_size": self.grid_size}
            w = self.witness(cls)
            if w is not None:
                rec["points"] = list(w.points)
                rec["values"] = list(w.values)
                if w.note:
                    rec["note"] = w.note
            records.append(rec)
        return records

    def render(self) -> str:
        lines = [f"negation classes on a {self.grid_size}-point grid"]
        for cls in CLASSES:
            line = f"  {cls:<14} {self.flags[cls].value}"
            w = self.witness(cls)
            if w is not None:
                pts = ", ".join(f"{p:.12g}" for p in w.points)
                vals = ", ".join(f"{v:.12g}" for v in w.values)
                line += f"   at ({pts}) -> ({vals})"
                if w.note:
                    line += f"  [{w.note}]"
            lines.append(line)
        return "\n".join(lines)


# -- inverses ----------------------------------------------------------------


# enough halvings to reach adjacent doubles anywhere in [0, 1]
_MAX_STEPS = 1100


@dataclass(frozen=True)
class Inverse(Connective):
    """Inverse of a strict negation.

    ``1 - x**k`` is inverted in closed form; anything else by bisection of
    the decreasing map ``x -> N(x)``. The bracket is always narrowed below
    ``tol`` and then on until it cannot shrink any further in doubles, so
    ``N(N^-1(y))`` stays accurate where ``N`` is steep.
    """

    inner: Connective
    tol: float = 1e-9

    def __post_init__(self):
        if self.inner.kind is not Kind.NEGATION:
            raise ConnectiveError("only negations can be inverted")
        object.__setattr__(self, "_steps", max(1, math.ceil(math.log2(1.0 / self.tol))))

    kind = Kind.NEGATION

    def _analytic(self) -> bool:
        return isinstance(self.inner, Base) and self.inner.name == "power_complement"

    def children(self):
        return (self.inner,)

    def bisects(self):
        return not self._analytic() or self.inner.bisects()

    def certificates(self):
        inner = self.inner.certificates()
        if "strict" not in inner:
            return frozenset()
        certs = {"N1", "N2", "strict", "continuous", "non_vanishing", "non_filling", "frontier"}
        certs |= inner & {"strong", "leq_standard", "geq_standard"}
        return frozenset(certs)

    def _eval(self, y):
        if self._analytic():
            return np.power(1.0 - y, 1.0 / self.inner.params[0])
        f = self.inner._eval
        lo, hi = np.zeros_like(y), np.ones_like(y)
        for step in range(_MAX_STEPS):
            mid = 0.5 * (lo + hi)
            if step >= self._steps and not ((mid > lo) & (mid < hi)).any():
                break
            above = f(mid) > y
            lo = np.where(above, mid, lo)
            hi = np.where(above, hi, mid)
        out = 0.5 * (lo + hi)
        out[y == 1.0] = 0.0
        out[y == 0.0] = 1.0
        return out


def is_strict(n: Connective, budget: AnalysisBudget | None = None) -> bool:
    if "strict" in n.certificates():
        return True
    return classify_negation(n, budget or AnalysisBudget()).holds("strict")


def invert_strict_negation(
    n: Connective, budget: AnalysisBudget | None = None, *, check: bool = True
) -> Connective:
    """Inverse of a strict negation.

    Self-inverse catalog entries come back unchanged and ``Inverse(N)``
    unwraps to ``N``.
    """
    budget = budget or AnalysisBudget()
    if n.kind is not Kind.NEGATION:
        raise ConnectiveError("only negations can be inverted")
    if check and not is_strict(n, budget):
        raise ConnectiveError(f"{n!r} is not strict and has no inverse")
    if isinstance(n, Inverse):
        return n.inner
    if isinstance(n, Base) and "strong" in n.certificates():
        return n
    return Inverse(n, budget.equality_tol)


# -- classification ----------------------------------------------------------


def find_jumps(f, xs: np.ndarray, vs: np.ndarray, threshold: float, max_cells: int = 4096):
    """Locate jump discontinuities between consecutive samples.

    Every cell whose endpoint values differ by more than ``threshold`` is
    split repeatedly; halves still exceeding the threshold are kept. A
    continuous function sheds all cells long before the cells reach float
    resolution, a jump survives. Returns ``(lo, hi, f(lo), f(hi))`` tuples.
    """
    d = np.abs(np.diff(vs))
    cells = np.nonzero(d > threshold)[0][:max_cells]
    lo, hi = xs[cells], xs[cells + 1]
    flo, fhi = vs[cells], vs[cells + 1]
    for _ in range(80):
        if not lo.size:
            return []
        mid = 0.5 * (lo + hi)
        done = (mid <= lo) | (mid >= hi)
        if done.all():
            break
        fm = f(mid)
        lo = np.concatenate([lo[~done], mid[~done], lo[done]])
        flo_new = np.concatenate([flo[~done], fm[~done], flo[done]])
        hi = np.concatenate([mid[~done], hi[~done], hi[done]])
        fhi = np.concatenate([fm[~done], fhi[~done], fhi[done]])
        flo = flo_new
        keep = np.abs(fhi - flo) > threshold
        lo, hi, flo, fhi = lo[keep][:max_cells], hi[keep][:max_cells], flo[keep][:max_cells], fhi[keep][:max_cells]
    return list(zip(lo.tolist(), hi.tolist(), flo.tolist(), fhi.tolist()))


def classify_negation(n: Connective, budget: AnalysisBudget | None = None) -> ClassReport:
    """Check every negation class on a grid plus random probes."""
    budget = budget or AnalysisBudget()
    if n.kind is not Kind.NEGATION:
        raise ConnectiveError(f"expected a negation, got a {n.kind.value}")
    tol = budget.tol_for(n)
    x = grid(budget.grid_points)
    v = n._eval(x.copy())
    h = 1.0 / (budget.grid_points - 1)
    found: dict[str, Witness] = {}

    def refute(cls, points, values, note=""):
        found.setdefault(cls, Witness(cls, tuple(map(float, points)), tuple(map(float, values)), note))

    if v[0] != 1.0:
        refute("N1", (0.0,), (v[0],))
    elif v[-1] != 0.0:
        refute("N1", (1.0,), (v[-1],))

    rng = np.random.default_rng(0)
    probes = rng.random(budget.continuity_probe_pairs)
    xs = np.union1d(x, probes)
    vs = n._eval(xs.copy())
    running = np.minimum.accumulate(vs)
    bad = np.nonzero(vs - running > tol)[0]
    if bad.size:
        j = bad[0]
        i = int(np.argmin(vs[: j + 1]))
        refute("N2", (xs[i], xs[j]), (vs[i], vs[j]))

    threshold = 10.0 * (h + tol)
    jumps = find_jumps(n._eval, xs, vs, threshold)
    if jumps:
        lo, hi, flo, fhi = jumps[0]
        refute("continuous", (lo, hi), (flo, fhi), "jump survives refinement")

    d = v[:-1] - v[1:]
    flat = (d <= 0.0)[:-1] & (d <= 0.0)[1:]
    if flat.any():
        k = int(np.argmax(flat))
        refute("strict", (x[k], x[k + 2]), (v[k], v[k + 2]), "plateau")

    vv = n._eval(np.clip(v, 0.0, 1.0))
    dev = np.abs(vv - x)
    k = int(np.argmax(dev))
    if dev[k] > tol:
        refute("strong", (x[k],), (v[k], vv[k]), "N(N(x)) != x")

    dist = np.minimum(np.abs(v), np.abs(1.0 - v))
    k = int(np.argmax(dist))
    if dist[k] > tol:
        refute("crisp", (x[k],), (v[k],))

    hits = np.nonzero((x < 1.0) & (v <= tol))[0]
    if hits.size:
        refute("non_vanishing", (x[hits[0]],), (v[hits[0]],))
    hits = np.nonzero((x > 0.0) & (v >= 1.0 - tol))[0]
    if hits.size:
        refute("non_filling", (x[hits[-1]],), (v[hits[-1]],))

    excess = v - (1.0 - x)
    k = int(np.argmax(excess))
    if excess[k] > tol:
        refute("leq_standard", (x[k],), (v[k],))
    k = int(np.argmin(excess))
    if excess[k] < -tol:
        refute("geq_standard", (x[k],), (v[k],))

    # Class implications: strong => strict => continuous, N1 and N2.
    for cls, needs in (("frontier", ("non_vanishing", "non_filling")),
                       ("strict", ("N1", "N2", "continuous")),
                       ("strong", ("strict",))):
        for need in needs:
            if need in found and cls not in found:
                w = found[need]
                refute(cls, w.points, w.values, f"{need} refuted")

    certs = n.certificates()
    flags = {}
    for cls in CLASSES:
        if cls in found:
            flags[cls] = Verdict.REFUTED
        elif cls in certs:
            flags[cls] = Verdict.CERTIFIED
        else:
            flags[cls] = Verdict.HOLDS
    return ClassReport(flags, [found[c] for c in CLASSES if c in found], budget.grid_points)


def equilibrium_point(n: Connective, budget: AnalysisBudget | None = None) -> float | None:
    """The point ``e`` with ``N(e) = e``, or None when there is none.

    ``N(x) - x`` is strictly decreasing, so there is at most one root; a
    sign change across a jump is not a root.
    """
    budget = budget or AnalysisBudget()
    if n.kind is not Kind.NEGATION:
        raise ConnectiveError(f"expected a negation, got a {n.kind.value}")
    tol = budget.equality_tol
    x = grid(budget.grid_points)
    f = n._eval(x.copy()) - x
    zeros = np.nonzero(np.abs(f) <= tol)[0]
    if zeros.size > 1:
        raise ConnectiveError("N(x) - x has several roots; not a negation")
    if zeros.size:
        return float(x[zeros[0]])
    change = np.nonzero((f[:-1] > 0.0) & (f[1:] < 0.0))[0]
    if not change.size:
        return None
    if change.size > 1:
        raise ConnectiveError("N(x) - x changes sign twice; not a negation")
    k = int(change[0])
    lo, hi = np.array([x[k]]), np.array([x[k + 1]])
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid[0] <= lo[0] or mid[0] >= hi[0]:
            break
        if n._eval(mid.copy())[0] - mid[0] > 0.0:
            lo = mid
        else:
            hi = mid
    cands = np.concatenate([lo, hi])
    vals = n._eval(cands.copy())
    if abs(vals[0] - vals[1]) > tol:
        # the sign change sits on a jump
        return None
    resid = np.abs(vals - cands)
    best = int(np.argmin(resid))
    return float(cands[best]) if resid[best] <= tol else None
