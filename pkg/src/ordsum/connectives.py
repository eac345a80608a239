"""Base connective catalog and the expression tree they live in.

Every connective is an immutable node. Evaluation is vectorised: a node's
``_eval`` receives equally sized 1-d float64 arrays already known to lie in
[0, 1] and returns a fresh array. :func:`evaluate` is the checked public
entry point and accepts scalars or arrays.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "Base",
    "Connective",
    "ConnectiveError",
    "Kind",
    "NDual",
    "UnitValue",
    "CATALOG",
    "evaluate",
    "make_connective",
    "n_dual",
    "unit_value",
]

UnitValue = float


class ConnectiveError(ValueError):
    """Raised for malformed connectives, bad arguments or kind mismatches."""


class Kind(str, enum.Enum):
    NEGATION = "negation"
    TNORM = "tnorm"
    TCONORM = "tconorm"
    IMPLICATION = "implication"

    @property
    def arity(self) -> int:
        return 1 if self is Kind.NEGATION else 2


def unit_value(x) -> UnitValue:
    """Return ``x`` as a float, rejecting anything outside [0, 1]."""
    v = float(x)
    if not 0.0 <= v <= 1.0:
        raise ConnectiveError(f"value {x!r} is outside [0, 1]")
    return v


class Connective:
    """Common interface of expression-tree nodes."""

    kind: Kind

    def _eval(self, *args: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def children(self) -> tuple[Connective, ...]:
        return ()

    def certificates(self) -> frozenset[str]:
        """Negation classes that hold by construction (see ``analysis``)."""
        return frozenset()

    def bisects(self) -> bool:
        """True when evaluation goes through a numerical root search."""
        return any(c.bisects() for c in self.children())

    def __call__(self, *args):
        return evaluate(self, *args)


def evaluate(expr: Connective, *args):
    """Evaluate ``expr`` at ``args``.

    Scalars give a float; arrays are broadcast against each other and give
    an array of the broadcast shape.
    """
    if len(args) != expr.kind.arity:
        raise ConnectiveError(
            f"{expr.kind.value} takes {expr.kind.arity} argument(s), got {len(args)}"
        )
    arrays = [np.asarray(a, dtype=float) for a in args]
    for a in arrays:
        if a.size and not (np.all(a >= 0.0) and np.all(a <= 1.0)):
            raise ConnectiveError("arguments must lie in [0, 1]")
    arrays = np.broadcast_arrays(*arrays)
    shape = arrays[0].shape
    flat = [np.ascontiguousarray(a, dtype=float).reshape(-1) for a in arrays]
    out = expr._eval(*flat)
    if not shape:
        return float(out[0])
    return out.reshape(shape)


# -- catalog -----------------------------------------------------------------


def _standard(x):
    return 1.0 - x


def _least(x):
    return np.where(x == 0.0, 1.0, 0.0)


def _greatest(x):
    return np.where(x == 1.0, 0.0, 1.0)


def _power_complement(k):
    return lambda x: 1.0 - np.power(x, k)


def _root_complement(k):
    return lambda x: np.power(1.0 - np.power(x, k), 1.0 / k)


def _t_lukasiewicz(x, y):
    # Sorted form keeps T(x, 1) = x and symmetry exact in floating point.
    lo, hi = np.minimum(x, y), np.maximum(x, y)
    return np.maximum(0.0, lo - (1.0 - hi))


def _s_probabilistic(x, y):
    # hi + lo*(1 - hi) equals x + y - xy but rounds monotonically
    lo, hi = np.minimum(x, y), np.maximum(x, y)
    return hi + lo * (1.0 - hi)


def _t_drastic(x, y):
    return np.where((x < 1.0) & (y < 1.0), 0.0, np.minimum(x, y))


def _s_drastic(x, y):
    return np.where((x > 0.0) & (y > 0.0), 1.0, np.maximum(x, y))


def _j_godel(x, y):
    return np.where(x <= y, 1.0, y)


def _j_rescher(x, y):
    return np.where(x <= y, 1.0, 0.0)


def _j_kleene_dienes(x, y):
    return np.maximum(1.0 - x, y)


# (kind, name) -> (parameter count, factory(params) -> vectorised function)
CATALOG: dict[tuple[Kind, str], tuple[int, Callable]] = {
    (Kind.NEGATION, "standard"): (0, lambda: _standard),
    (Kind.NEGATION, "power_complement"): (1, _power_complement),
    (Kind.NEGATION, "root_complement"): (1, _root_complement),
    (Kind.NEGATION, "least"): (0, lambda: _least),
    (Kind.NEGATION, "greatest"): (0, lambda: _greatest),
    (Kind.TNORM, "godel"): (0, lambda: np.minimum),
    (Kind.TNORM, "product"): (0, lambda: np.multiply),
    (Kind.TNORM, "lukasiewicz"): (0, lambda: _t_lukasiewicz),
    (Kind.TNORM, "drastic"): (0, lambda: _t_drastic),
    (Kind.TCONORM, "godel"): (0, lambda: np.maximum),
    (Kind.TCONORM, "probabilistic_sum"): (0, lambda: _s_probabilistic),
    (Kind.TCONORM, "lukasiewicz"): (0, lambda: lambda x, y: np.minimum(x + y, 1.0)),
    (Kind.TCONORM, "drastic"): (0, lambda: _s_drastic),
    (Kind.IMPLICATION, "godel"): (0, lambda: _j_godel),
    (Kind.IMPLICATION, "rescher"): (0, lambda: _j_rescher),
    (Kind.IMPLICATION, "kleene_dienes"): (0, lambda: _j_kleene_dienes),
}

_ALL_NEGATION = frozenset({"N1", "N2"})
_STRICT = _ALL_NEGATION | {"strict", "continuous", "non_vanishing", "non_filling", "frontier"}


@dataclass(frozen=True)
class Base(Connective):
    """A catalog entry such as the Lukasiewicz t-norm or ``1 - x**k``."""

    kind: Kind
    name: str
    params: tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        key = (self.kind, self.name)
        if key not in CATALOG:
            raise ConnectiveError(f"unknown {self.kind.value} {self.name!r}")
        nparams, factory = CATALOG[key]
        if len(self.params) != nparams:
            raise ConnectiveError(
                f"{self.name} takes {nparams} parameter(s), got {len(self.params)}"
            )
        if nparams and not (self.params[0] >= 1.0 and np.isfinite(self.params[0])):
            raise ConnectiveError(f"{self.name} needs k >= 1, got {self.params[0]}")
        object.__setattr__(self, "_fn", factory(*self.params))

    def _eval(self, *args):
        return np.asarray(self._fn(*args), dtype=float)

    def certificates(self):
        if self.kind is not Kind.NEGATION:
            return frozenset()
        if self.name == "least":
            return _ALL_NEGATION | {"crisp", "non_filling", "leq_standard"}
        if self.name == "greatest":
            return _ALL_NEGATION | {"crisp", "non_vanishing", "geq_standard"}
        certs = _STRICT | {"geq_standard"}
        if self.name == "standard" or self.params == (1.0,):
            certs |= {"strong", "leq_standard"}
        if self.name == "root_complement":
            certs |= {"strong"}
        return frozenset(certs)

    def __repr__(self):
        args = ", ".join(f"{p:g}" for p in self.params)
        return f"{self.kind.value}:{self.name}({args})"


def make_connective(kind, name: str, params=()) -> Base:
    """Build a catalog connective, e.g. ``make_connective("tnorm", "product")``."""
    try:
        kind = Kind(kind)
    except ValueError:
        raise ConnectiveError(f"unknown connective kind {kind!r}") from None
    return Base(kind, name, tuple(params))


@dataclass(frozen=True)
class NDual(Connective):
    """Conjugate of a t-norm or t-conorm by a strict negation.

    ``NDual(T, N)(x, y) = N^-1(T(N(x), N(y)))``; a t-norm becomes a t-conorm
    and vice versa.
    """

    inner: Connective
    negation: Connective

    def __post_init__(self):
        from .analysis import invert_strict_negation

        if self.inner.kind not in (Kind.TNORM, Kind.TCONORM):
            raise ConnectiveError("N-dual needs a t-norm or t-conorm")
        if self.negation.kind is not Kind.NEGATION:
            raise ConnectiveError("N-dual needs a negation")
        object.__setattr__(self, "_inverse", invert_strict_negation(self.negation, check=False))

    @property
    def kind(self) -> Kind:
        return Kind.TCONORM if self.inner.kind is Kind.TNORM else Kind.TNORM

    def children(self):
        return (self.inner, self.negation, self._inverse)

    def _eval(self, x, y):
        n = self.negation._eval
        return self._inverse._eval(self.inner._eval(n(x), n(y)))


def n_dual(inner: Connective, n: Connective) -> NDual:
    """N-dual of ``inner``; ``n`` must be strict so that its inverse exists."""
    from .analysis import is_strict

    if n.kind is not Kind.NEGATION or not is_strict(n):
        raise ConnectiveError("N-dual requires a strict negation")
    return NDual(inner, n)
