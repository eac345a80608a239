"""Natural negations of t-norms, t-conorms and implications.

``N_T(x) = sup{y : T(x, y) = 0}``, ``N_S(x) = inf{y : S(x, y) = 1}`` and
``N_J(x) = J(x, 0)``. The first two are computed by bisection on the
boundary of the zero (one) set; for ordinal sums there are closed forms in
terms of the summands' natural negations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .connectives import Base, Connective, ConnectiveError, Kind
from .ordinal_sum import FamilyError, OrdinalSum, SummandFamily

__all__ = [
    "ClosedFormNatural",
    "NaturalNegation",
    "SupInfOracleConfig",
    "closed_form_natneg_tconorm_sum",
    "closed_form_natneg_tnorm_sum",
    "known_natural_negation",
    "natural_negation",
    "natural_negation_implication",
    "natural_negation_tconorm",
    "natural_negation_tnorm",
]


@dataclass(frozen=True)
class SupInfOracleConfig:
    tolerance: float = 1e-8
    max_bisection_steps: int = 60
    zero_test_epsilon: float = 0.0

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        need = math.ceil(math.log2(1.0 / self.tolerance))
        if self.max_bisection_steps < need:
            raise ValueError(
                f"{self.max_bisection_steps} bisection steps cannot reach tolerance "
                f"{self.tolerance:g}; need at least {need}"
            )
        if self.zero_test_epsilon < 0:
            raise ValueError("zero_test_epsilon must be non-negative")


_PROBES = np.linspace(0.0, 1.0, 8)


def _boundary(member, x, cfg: SupInfOracleConfig, prefix: bool):
    """Bisect for the boundary of ``{y : member(x, y)}``.

    With ``prefix`` the set is ``[0, y*]`` and the sup is returned,
    otherwise it is ``[y*, 1]`` and the inf is returned. The interior is
    only searched once quick probes at ``tol/2`` from either end have not
    already settled the answer within tolerance.
    """
    tol = cfg.tolerance
    inside = np.stack([member(x, np.full_like(x, p)) for p in _PROBES])
    if prefix:
        broken = (~inside[:-1] & inside[1:]).any(axis=0)
    else:
        broken = (inside[:-1] & ~inside[1:]).any(axis=0)
    if broken.any():
        k = int(np.argmax(broken))
        raise ConnectiveError(
            f"the {'zero' if prefix else 'one'} set at x={x[k]!r} is not an interval; "
            "argument is not monotone"
        )
    near0 = member(x, np.full_like(x, 0.5 * tol))
    near1 = member(x, np.full_like(x, 1.0 - 0.5 * tol))
    if prefix:
        out = np.where(near1, 1.0, np.where(near0, np.nan, 0.0))
    else:
        out = np.where(~near0, np.where(near1, np.nan, 1.0), 0.0)
    todo = np.isnan(out)
    if todo.any():
        xs = x[todo]
        lo = np.full_like(xs, 0.5 * tol)
        hi = np.full_like(xs, 1.0 - 0.5 * tol)
        for _ in range(cfg.max_bisection_steps):
            if (hi - lo).max() <= tol:
                break
            mid = 0.5 * (lo + hi)
            hit = member(xs, mid)
            go_up = hit if prefix else ~hit
            lo = np.where(go_up, mid, lo)
            hi = np.where(go_up, hi, mid)
        out[todo] = 0.5 * (lo + hi)
    return out


@dataclass(frozen=True)
class NaturalNegation(Connective):
    inner: Connective
    config: SupInfOracleConfig = SupInfOracleConfig()

    def __post_init__(self):
        if self.inner.kind is Kind.NEGATION:
            raise ConnectiveError("natural negations come from t-norms, t-conorms or implications")

    kind = Kind.NEGATION

    def children(self):
        return (self.inner,)

    def bisects(self):
        return self.inner.kind is not Kind.IMPLICATION or self.inner.bisects()

    def certificates(self):
        return frozenset({"N1", "N2"})

    def _eval(self, x):
        inner, eps = self.inner, self.config.zero_test_epsilon
        if inner.kind is Kind.IMPLICATION:
            return inner._eval(x, np.zeros_like(x))
        if inner.kind is Kind.TNORM:
            out = _boundary(lambda u, y: inner._eval(u, y) <= eps, x, self.config, prefix=True)
        else:
            out = _boundary(lambda u, y: inner._eval(u, y) >= 1.0 - eps, x, self.config, prefix=False)
        out[x == 0.0] = 1.0
        out[x == 1.0] = 0.0
        return out


def _require(expr: Connective, kind: Kind):
    if expr.kind is not kind:
        raise ConnectiveError(f"expected a {kind.value}, got a {expr.kind.value}")


def natural_negation_tnorm(t: Connective, cfg: SupInfOracleConfig | None = None) -> NaturalNegation:
    _require(t, Kind.TNORM)
    return NaturalNegation(t, cfg or SupInfOracleConfig())


def natural_negation_tconorm(s: Connective, cfg: SupInfOracleConfig | None = None) -> NaturalNegation:
    _require(s, Kind.TCONORM)
    return NaturalNegation(s, cfg or SupInfOracleConfig())


def natural_negation_implication(j: Connective) -> NaturalNegation:
    """``x -> J(x, 0)``, exact."""
    _require(j, Kind.IMPLICATION)
    return NaturalNegation(j)


_KNOWN = {
    (Kind.TNORM, "lukasiewicz"): "standard",
    (Kind.TNORM, "godel"): "least",
    (Kind.TNORM, "product"): "least",
    (Kind.TNORM, "drastic"): "greatest",
    (Kind.TCONORM, "lukasiewicz"): "standard",
    (Kind.TCONORM, "godel"): "greatest",
    (Kind.TCONORM, "probabilistic_sum"): "greatest",
    (Kind.TCONORM, "drastic"): "least",
}


def known_natural_negation(c: Connective, cfg: SupInfOracleConfig | None = None) -> Connective:
    """Natural negation in the cheapest exact form available.

    Catalog t-norms and t-conorms map to catalog negations, ordinal sums to
    their closed forms; anything else falls back to the oracle.
    """
    if isinstance(c, Base) and (c.kind, c.name) in _KNOWN:
        return Base(Kind.NEGATION, _KNOWN[c.kind, c.name])
    if isinstance(c, OrdinalSum) and c.variant == "tnorm":
        return closed_form_natneg_tnorm_sum(c.family, cfg=cfg)
    if isinstance(c, OrdinalSum) and c.variant == "tconorm":
        return closed_form_natneg_tconorm_sum(c.family, cfg=cfg)
    return natural_negation(c, cfg)


def natural_negation(c: Connective, cfg: SupInfOracleConfig | None = None) -> NaturalNegation:
    if c.kind is Kind.IMPLICATION:
        return natural_negation_implication(c)
    if c.kind is Kind.TNORM:
        return natural_negation_tnorm(c, cfg)
    if c.kind is Kind.TCONORM:
        return natural_negation_tconorm(c, cfg)
    raise ConnectiveError("a negation has no natural negation")


@dataclass(frozen=True)
class ClosedFormNatural(Connective):
    """Natural negation of an ordinal sum of t-norms or t-conorms.

    For t-norms only summands starting at 0 contribute:
    ``N(x) = b * N_i(x / b)`` on ``]0, b]``, 1 at 0 and 0 elsewhere.
    ``scaled=False`` drops the outer factor ``b``; it exists solely to
    measure how far that variant is from the true natural negation.

    For t-conorms only summands ending at 1 contribute:
    ``N(x) = (1 - a) * N_i((x - a) / (1 - a)) + a`` on ``[a, 1[``, 0 at 1
    and 1 elsewhere.
    """

    family: SummandFamily
    subs: tuple[Connective, ...]
    scaled: bool = True

    def __post_init__(self):
        if self.family.kind not in (Kind.TNORM, Kind.TCONORM):
            raise FamilyError("closed forms exist for t-norm and t-conorm families only")
        if len(self.subs) != len(self.family):
            raise FamilyError(
                f"{len(self.family)} summands but {len(self.subs)} natural negations"
            )
        if any(s.kind is not Kind.NEGATION for s in self.subs):
            raise FamilyError("summand natural negations must be negations")

    kind = Kind.NEGATION

    def children(self):
        return self.subs

    def certificates(self):
        return frozenset({"N1", "N2"})

    def _eval(self, x):
        fam = self.family
        where = fam.locate(x)
        if fam.kind is Kind.TNORM:
            out = np.zeros_like(x)
            for i, (s, sub) in enumerate(zip(fam, self.subs)):
                m = (where == i) & (x > 0.0)
                if s.a == 0.0 and m.any():
                    v = sub._eval(np.clip(x[m] / s.b, 0.0, 1.0))
                    out[m] = s.b * v if self.scaled else v
            out[x == 0.0] = 1.0
        else:
            out = np.ones_like(x)
            for i, (s, sub) in enumerate(zip(fam, self.subs)):
                m = (where == i) & (x < 1.0)
                if s.b == 1.0 and m.any():
                    w = 1.0 - s.a
                    v = sub._eval(np.clip((x[m] - s.a) / w, 0.0, 1.0))
                    out[m] = np.clip(w * v + s.a, s.a, 1.0)
            out[x == 1.0] = 0.0
        return out


def _closed_form(family, kind, sub_natnegs, cfg, scaled=True):
    if not isinstance(family, SummandFamily):
        family = SummandFamily.of(kind, family)
    _require_family(family, kind)
    if sub_natnegs is None:
        sub_natnegs = [known_natural_negation(s.connective, cfg) for s in family]
    return ClosedFormNatural(family, tuple(sub_natnegs), scaled)


def _require_family(family: SummandFamily, kind: Kind):
    if family.kind is not kind:
        raise FamilyError(f"expected a family of {kind.value}s, got {family.kind.value}s")


def closed_form_natneg_tnorm_sum(family, sub_natnegs=None, *, cfg=None, scaled=True) -> ClosedFormNatural:
    """Natural negation of the t-norm ordinal sum of ``family``.

    ``sub_natnegs[i]`` is the natural negation of the i-th summand; when
    omitted it is derived with :func:`known_natural_negation`.
    """
    return _closed_form(family, Kind.TNORM, sub_natnegs, cfg, scaled)


def closed_form_natneg_tconorm_sum(family, sub_natnegs=None, *, cfg=None) -> ClosedFormNatural:
    return _closed_form(family, Kind.TCONORM, sub_natnegs, cfg)
