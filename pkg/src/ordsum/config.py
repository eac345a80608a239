"""JSON config format for connective expressions and summand families.

An expression is a JSON object. Catalog entries are ``{"base": name,
"params": [...]}``; every other node names itself with ``"node"``::

    {"kind": "negation", "node": "ordinal_sum",
     "summands": [{"a": 0.2, "b": 0.5, "connective": {"base": "standard"}}]}

    {"kind": "implication", "node": "ordinal_sum", "variant": "left", ...}
    {"node": "n_dual", "inner": {"kind": "tnorm", "base": "product"},
     "negation": {"base": "standard"}}
    {"node": "inverse", "inner": {"base": "power_complement", "params": [2]}}
    {"node": "natural_negation", "inner": {"kind": "tnorm", "base": "lukasiewicz"}}
    {"node": "closed_form_natural", "family": {"kind": "tnorm", "summands": [...]}}

``"kind"`` may be left out wherever the context fixes it (summands inherit
the family kind; inverses and N-dual negations are negations). Ordinal sums
nest freely.
"""

from __future__ import annotations

import hashlib
import json

from .analysis import Inverse
from .connectives import Base, Connective, ConnectiveError, Kind, NDual, n_dual
from .natural_negation import ClosedFormNatural, NaturalNegation, SupInfOracleConfig
from .ordinal_sum import OrdinalSum, Summand, SummandFamily

__all__ = [
    "ConfigError",
    "dumps",
    "family_digest",
    "family_to_config",
    "loads",
    "parse_expr",
    "parse_family",
    "to_config",
]

_IMPLICATION_VARIANTS = {"rescher": "implication_rescher", "left": "implication_left"}


class ConfigError(ValueError):
    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


# -- serialization -----------------------------------------------------------


def to_config(expr: Connective) -> dict:
    if isinstance(expr, Base):
        doc = {"kind": expr.kind.value, "base": expr.name}
        if expr.params:
            doc["params"] = list(expr.params)
        return doc
    if isinstance(expr, OrdinalSum):
        doc = family_to_config(expr.family)
        doc["node"] = "ordinal_sum"
        if expr.kind is Kind.IMPLICATION:
            doc["variant"] = "rescher" if expr.variant == "implication_rescher" else "left"
        return doc
    if isinstance(expr, NDual):
        return {"kind": expr.kind.value, "node": "n_dual",
                "inner": to_config(expr.inner), "negation": to_config(expr.negation)}
    if isinstance(expr, Inverse):
        return {"kind": "negation", "node": "inverse", "inner": to_config(expr.inner), "tol": expr.tol}
    if isinstance(expr, NaturalNegation):
        cfg = expr.config
        return {"kind": "negation", "node": "natural_negation", "inner": to_config(expr.inner),
                "tolerance": cfg.tolerance, "max_bisection_steps": cfg.max_bisection_steps,
                "zero_test_epsilon": cfg.zero_test_epsilon}
    if isinstance(expr, ClosedFormNatural):
        return {"kind": "negation", "node": "closed_form_natural",
                "family": family_to_config(expr.family),
                "subs": [to_config(s) for s in expr.subs], "scaled": expr.scaled}
    raise TypeError(f"cannot serialise {type(expr).__name__}")


def family_to_config(family: SummandFamily) -> dict:
    return {
        "kind": family.kind.value,
        "summands": [{"a": s.a, "b": s.b, "connective": to_config(s.connective)} for s in family],
    }


def dumps(expr_or_family) -> str:
    if isinstance(expr_or_family, SummandFamily):
        doc = family_to_config(expr_or_family)
    else:
        doc = to_config(expr_or_family)
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def family_digest(family: SummandFamily) -> str:
    return hashlib.sha256(dumps(family).encode()).hexdigest()[:16]


# -- parsing -----------------------------------------------------------------


def loads(text: str):
    """Parse JSON text into a document, reporting line and column on error."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _kind(doc: dict, path: str, inherited: Kind | None) -> Kind:
    raw = doc.get("kind")
    if raw is None:
        if inherited is None:
            raise ConfigError("missing 'kind'", path)
        return inherited
    try:
        kind = Kind(raw)
    except ValueError:
        raise ConfigError(f"unknown kind {raw!r}", path + ".kind") from None
    if inherited is not None and kind is not inherited:
        raise ConfigError(f"expected a {inherited.value}, got a {kind.value}", path + ".kind")
    return kind


def _number(doc: dict, key: str, path: str, default=None):
    if key not in doc:
        if default is None:
            raise ConfigError(f"missing '{key}'", path)
        return default
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"'{key}' must be a number", f"{path}.{key}")
    return v


def _object(doc, path: str) -> dict:
    if not isinstance(doc, dict):
        raise ConfigError("expected an object", path)
    return doc


def parse_family(doc, path: str = "$", kind: Kind | None = None) -> SummandFamily:
    """Parse ``{"kind": ..., "summands": [...]}``; an ordinal-sum node also works."""
    doc = _object(doc, path)
    kind = _kind(doc, path, kind)
    summands = doc.get("summands")
    if not isinstance(summands, list):
        raise ConfigError("'summands' must be a list", path + ".summands")
    parsed = []
    for i, item in enumerate(summands):
        p = f"{path}.summands[{i}]"
        item = _object(item, p)
        if "connective" not in item:
            raise ConfigError("missing 'connective'", p)
        try:
            parsed.append(Summand(_number(item, "a", p), _number(item, "b", p),
                                  parse_expr(item["connective"], p + ".connective", kind)))
        except ConfigError:
            raise
        except ConnectiveError as exc:
            raise ConfigError(str(exc), p) from None
    try:
        return SummandFamily(kind, tuple(parsed))
    except ConnectiveError as exc:
        raise ConfigError(str(exc), path) from None


def parse_expr(doc, path: str = "$", kind: Kind | None = None) -> Connective:
    """Build an expression from a parsed JSON document."""
    doc = _object(doc, path)
    try:
        return _parse(doc, path, kind)
    except ConfigError:
        raise
    except ConnectiveError as exc:
        raise ConfigError(str(exc), path) from None


def _parse(doc: dict, path: str, inherited: Kind | None) -> Connective:
    if "base" in doc:
        kind = _kind(doc, path, inherited)
        params = doc.get("params", [])
        if not isinstance(params, list):
            raise ConfigError("'params' must be a list", path + ".params")
        return Base(kind, doc["base"], tuple(params))
    node = doc.get("node")
    if node == "ordinal_sum":
        family = parse_family(doc, path, inherited)
        if family.kind is Kind.IMPLICATION:
            v = doc.get("variant")
            if v not in _IMPLICATION_VARIANTS:
                raise ConfigError("implication ordinal sums need 'variant': 'rescher' or 'left'",
                                  path + ".variant")
            return OrdinalSum(family, _IMPLICATION_VARIANTS[v])
        return OrdinalSum(family, family.kind.value)
    if node == "n_dual":
        for key in ("inner", "negation"):
            if key not in doc:
                raise ConfigError(f"missing '{key}'", path)
        inner = parse_expr(doc["inner"], path + ".inner")
        neg = parse_expr(doc["negation"], path + ".negation", Kind.NEGATION)
        expr = n_dual(inner, neg)
        if inherited is not None and expr.kind is not inherited:
            raise ConfigError(f"expected a {inherited.value}, N-dual gives a {expr.kind.value}", path)
        return expr
    if node in ("inverse", "natural_negation", "closed_form_natural"):
        if inherited not in (None, Kind.NEGATION):
            raise ConfigError(f"expected a {inherited.value}, {node} gives a negation", path)
        if "kind" in doc:
            _kind(doc, path, Kind.NEGATION)
    if node == "inverse":
        if "inner" not in doc:
            raise ConfigError("missing 'inner'", path)
        inner = parse_expr(doc["inner"], path + ".inner", Kind.NEGATION)
        return Inverse(inner, _number(doc, "tol", path, 1e-9))
    if node == "natural_negation":
        if "inner" not in doc:
            raise ConfigError("missing 'inner'", path)
        inner = parse_expr(doc["inner"], path + ".inner")
        defaults = SupInfOracleConfig()
        try:
            cfg = SupInfOracleConfig(
                _number(doc, "tolerance", path, defaults.tolerance),
                int(_number(doc, "max_bisection_steps", path, defaults.max_bisection_steps)),
                _number(doc, "zero_test_epsilon", path, defaults.zero_test_epsilon),
            )
        except ValueError as exc:
            raise ConfigError(str(exc), path) from None
        return NaturalNegation(inner, cfg)
    if node == "closed_form_natural":
        if "family" not in doc:
            raise ConfigError("missing 'family'", path)
        family = parse_family(doc["family"], path + ".family")
        subs = doc.get("subs")
        if not isinstance(subs, list):
            raise ConfigError("'subs' must be a list", path + ".subs")
        subs = tuple(parse_expr(s, f"{path}.subs[{i}]", Kind.NEGATION) for i, s in enumerate(subs))
        return ClosedFormNatural(family, subs, bool(doc.get("scaled", True)))
    if node is None:
        raise ConfigError("expected 'base' or 'node'", path)
    raise ConfigError(f"unknown node {node!r}", path + ".node")
