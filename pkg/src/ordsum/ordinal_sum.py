"""Ordinal sums of negations, t-norms, t-conorms and implications.

A family is a finite list of summands ``(a, b, C)`` whose open intervals
``]a, b[`` are pairwise disjoint. Inside a summand the connective ``C`` is
rescaled onto ``[a, b]``; elsewhere a fill connective applies:

=====================  ==================================  ==================
variant                summand branch                      fill
=====================  ==================================  ==================
negation               x in [a, b]                         1 - x
tnorm                  (x, y) in [a, b]^2                  min(x, y)
tconorm                (x, y) in [a, b]^2                  max(x, y)
implication_rescher    x, y in [a, b]                      Rescher
implication_left       x in [a, b]                         Kleene-Dienes
=====================  ==================================  ==================

When two closed intervals touch (``b_i == a_j``) the lower summand wins.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .connectives import Connective, ConnectiveError, Kind

__all__ = [
    "FamilyError",
    "OrdinalSum",
    "Summand",
    "SummandFamily",
    "VARIANTS",
    "left_ordinal_sum_implication",
    "mirror_family",
    "ordinal_sum",
    "ordinal_sum_implication_rescher",
    "ordinal_sum_negation",
    "ordinal_sum_tconorm",
    "ordinal_sum_tnorm",
]

VARIANTS = {
    "negation": Kind.NEGATION,
    "tnorm": Kind.TNORM,
    "tconorm": Kind.TCONORM,
    "implication_rescher": Kind.IMPLICATION,
    "implication_left": Kind.IMPLICATION,
}


class FamilyError(ConnectiveError):
    pass


@dataclass(frozen=True)
class Summand:
    a: float
    b: float
    connective: Connective

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (0.0 <= a < b <= 1.0):
            raise FamilyError(f"summand interval [{a}, {b}] must satisfy 0 <= a < b <= 1")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def width(self) -> float:
        return self.b - self.a


@dataclass(frozen=True)
class SummandFamily:
    """Summands sorted by left endpoint with disjoint open intervals."""

    kind: Kind
    summands: tuple[Summand, ...] = ()
    _a: np.ndarray = field(init=False, repr=False, compare=False)
    _b: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        kind = Kind(self.kind)
        summands = tuple(sorted(self.summands, key=lambda s: (s.a, s.b)))
        for s in summands:
            if s.connective.kind is not kind:
                raise FamilyError(
                    f"summand on [{s.a}, {s.b}] is a {s.connective.kind.value}, "
                    f"family holds {kind.value}s"
                )
        for lo, hi in zip(summands, summands[1:]):
            if hi.a < lo.b:
                raise FamilyError(f"intervals [{lo.a}, {lo.b}] and [{hi.a}, {hi.b}] overlap")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "summands", summands)
        object.__setattr__(self, "_a", np.array([s.a for s in summands]))
        object.__setattr__(self, "_b", np.array([s.b for s in summands]))

    @classmethod
    def of(cls, kind, triples) -> SummandFamily:
        """Convenience constructor from ``(a, b, connective)`` triples."""
        return cls(Kind(kind), tuple(Summand(a, b, c) for a, b, c in triples))

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def touching(self) -> bool:
        return any(lo.b == hi.a for lo, hi in zip(self.summands, self.summands[1:]))

    def locate(self, x: np.ndarray) -> np.ndarray:
        """Index of the summand whose closed interval holds ``x``, else -1."""
        n = len(self.summands)
        if n == 0:
            return np.full(x.shape, -1, dtype=np.intp)
        idx = np.searchsorted(self._b, x, side="left")
        clipped = np.minimum(idx, n - 1)
        inside = (idx < n) & (self._a[clipped] <= x)
        return np.where(inside, clipped, -1)

    def locate_square(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Index of the summand whose square ``[a, b]^2`` holds ``(x, y)``, else -1."""
        ix, iy = self.locate(x), self.locate(y)
        if not len(self.summands):
            return ix
        a, b = self._a, self._b
        jx, jy = np.maximum(ix, 0), np.maximum(iy, 0)
        in_x = (ix >= 0) & (a[jx] <= y) & (y <= b[jx])
        in_y = (iy >= 0) & (a[jy] <= x) & (x <= b[jy])
        return np.where(in_x, ix, np.where(in_y, iy, -1))


def _squeeze(v, lo, hi, width):
    """Map ``v`` in [0, 1] affinely onto [lo, hi] keeping both ends exact.

    Clipping keeps the map monotone while guaranteeing the image stays inside
    the float interval despite rounding.
    """
    return np.where(v >= 1.0, hi, np.clip(lo + width * v, lo, hi))


def _rescale(x, s: Summand):
    return np.clip((x - s.a) / s.width, 0.0, 1.0)


@dataclass(frozen=True)
class OrdinalSum(Connective):
    family: SummandFamily
    variant: str

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise FamilyError(f"unknown ordinal-sum variant {self.variant!r}")
        if self.family.kind is not VARIANTS[self.variant]:
            raise FamilyError(
                f"{self.variant} ordinal sum needs a family of "
                f"{VARIANTS[self.variant].value}s, got {self.family.kind.value}s"
            )
        if self.variant == "implication_rescher":
            if any(s.a <= 0.0 for s in self.family):
                raise FamilyError("Rescher-filled ordinal sum needs every a_i > 0")
            if self.family.touching():
                # Two summand branches disagree at a shared corner, so the
                # function would not be well defined there.
                raise FamilyError("Rescher-filled ordinal sum needs non-touching intervals")
        if self.variant == "implication_left" and any(s.b >= 1.0 for s in self.family):
            raise FamilyError("left ordinal sum needs every b_i < 1")

    @property
    def kind(self) -> Kind:
        return self.family.kind

    def children(self):
        return tuple(s.connective for s in self.family)

    def _eval(self, x, y=None):
        return getattr(self, "_eval_" + self.variant)(x, y)

    def _eval_negation(self, x, _):
        out = 1.0 - x
        where = self.family.locate(x)
        for i, s in enumerate(self.family):
            m = where == i
            if m.any():
                v = s.connective._eval(_rescale(x[m], s))
                out[m] = _squeeze(v, 1.0 - s.b, 1.0 - s.a, s.width)
        return out

    def _eval_square(self, x, y, fill):
        out = fill(x, y)
        where = self.family.locate_square(x, y)
        for i, s in enumerate(self.family):
            m = where == i
            if m.any():
                v = s.connective._eval(_rescale(x[m], s), _rescale(y[m], s))
                out[m] = _squeeze(v, s.a, s.b, s.width)
        return out

    def _eval_tnorm(self, x, y):
        return self._eval_square(x, y, np.minimum)

    def _eval_tconorm(self, x, y):
        return self._eval_square(x, y, np.maximum)

    def _eval_implication_rescher(self, x, y):
        return self._eval_square(x, y, lambda u, v: np.where(u <= v, 1.0, 0.0))

    def _eval_implication_left(self, x, y):
        out = np.maximum(1.0 - x, y)
        where = self.family.locate(x)
        for i, s in enumerate(self.family):
            m = where == i
            if m.any():
                v = s.connective._eval(_rescale(x[m], s), y[m])
                out[m] = _squeeze(v, 1.0 - s.b, 1.0 - s.a, s.width)
        return out

    def certificates(self):
        if self.variant != "negation":
            return frozenset()
        certs = {"N1", "N2"}
        subs = [(s, s.connective.certificates()) for s in self.family]
        if all("strict" in c for _, c in subs):
            certs |= {"strict", "continuous"}
            if _mirrored_structurally(self.family):
                certs.add("strong")
        if all("non_filling" in c for s, c in subs if s.a == 0.0):
            certs.add("non_filling")
        if all("non_vanishing" in c for s, c in subs if s.b == 1.0):
            certs.add("non_vanishing")
        if {"non_filling", "non_vanishing"} <= certs:
            certs.add("frontier")
        for order in ("leq_standard", "geq_standard"):
            if all(order in c for _, c in subs):
                certs.add(order)
        return frozenset(certs)


def _mirrored_structurally(family: SummandFamily) -> bool:
    from .analysis import invert_strict_negation

    for s in family:
        partner = [
            t for t in family
            if t.a == 1.0 - s.b and t.b == 1.0 - s.a
        ]
        inv = invert_strict_negation(s.connective, check=False)
        if not any(t.connective == inv or s.connective == invert_strict_negation(t.connective, check=False)
                   for t in partner):
            return False
    return True


def _as_family(family, kind) -> SummandFamily:
    if not isinstance(family, SummandFamily):
        family = SummandFamily.of(kind, family)
    return family


def ordinal_sum(family: SummandFamily, variant: str) -> OrdinalSum:
    return OrdinalSum(_as_family(family, VARIANTS.get(variant, Kind.NEGATION)), variant)


def ordinal_sum_negation(family) -> OrdinalSum:
    """Ordinal sum of negations, standard negation outside the summands."""
    return ordinal_sum(family, "negation")


def ordinal_sum_tnorm(family) -> OrdinalSum:
    return ordinal_sum(family, "tnorm")


def ordinal_sum_tconorm(family) -> OrdinalSum:
    return ordinal_sum(family, "tconorm")


def ordinal_sum_implication_rescher(family) -> OrdinalSum:
    """Ordinal sum of implications on squares, Rescher implication elsewhere.

    Requires ``a_i > 0`` for every summand.
    """
    return ordinal_sum(family, "implication_rescher")


def left_ordinal_sum_implication(family) -> OrdinalSum:
    """Ordinal sum dispatching on the antecedent only.

    For ``x`` in ``[a_i, b_i]`` the value is
    ``(1 - b_i) + (b_i - a_i) * J_i((x - a_i) / (b_i - a_i), y)``, otherwise
    Kleene-Dienes. Requires ``b_i < 1`` for every summand.
    """
    return ordinal_sum(family, "implication_left")


def mirror_family(family: SummandFamily) -> SummandFamily:
    """The family ``(1 - b_i, 1 - a_i, N_i^-1)``; every ``N_i`` must be strict."""
    from .analysis import invert_strict_negation

    family = _as_family(family, Kind.NEGATION)
    if family.kind is not Kind.NEGATION:
        raise FamilyError("only negation families can be mirrored")
    return SummandFamily(
        Kind.NEGATION,
        tuple(
            Summand(1.0 - s.b, 1.0 - s.a, invert_strict_negation(s.connective))
            for s in family
        ),
    )
