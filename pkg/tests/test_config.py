import json

import numpy as np
import pytest

from ordsum import (
    Kind,
    SummandFamily,
    SupInfOracleConfig,
    closed_form_natneg_tnorm_sum,
    invert_strict_negation,
    left_ordinal_sum_implication,
    make_connective,
    n_dual,
    natural_negation_tnorm,
    ordinal_sum_implication_rescher,
    ordinal_sum_negation,
    ordinal_sum_tnorm,
)
from ordsum.analysis import Inverse, grid
from ordsum.config import ConfigError, dumps, family_digest, loads, parse_expr, parse_family, to_config
from ordsum.verification import random_family

G = grid(1001)
G2 = grid(41)


def same_values(a, b):
    if a.kind.arity == 1:
        return np.array_equal(a._eval(G.copy()), b._eval(G.copy()))
    X, Y = (u.ravel() for u in np.meshgrid(G2, G2, indexing="ij"))
    return np.array_equal(a._eval(X.copy(), Y.copy()), b._eval(X.copy(), Y.copy()))


def roundtrip(expr):
    return parse_expr(json.loads(dumps(expr)))


def test_ordinal_sum_document():
    doc = {"kind": "negation", "node": "ordinal_sum",
           "summands": [{"a": 0.2, "b": 0.5, "connective": {"base": "standard"}}]}
    assert parse_expr(doc)(0.35) == pytest.approx(0.65)


EXPRS = [
    make_connective(Kind.NEGATION, "power_complement", [2.5]),
    ordinal_sum_negation([(0.1, 0.4, make_connective(Kind.NEGATION, "least")),
                          (0.4, 0.7, invert_strict_negation(make_connective(Kind.NEGATION, "power_complement", [2])))]),
    ordinal_sum_tnorm([(0.0, 0.5, make_connective(Kind.TNORM, "product")),
                       (0.5, 1.0, n_dual(make_connective(Kind.TCONORM, "godel"),
                                         make_connective(Kind.NEGATION, "standard")))]),
    ordinal_sum_implication_rescher([(0.2, 0.5, make_connective(Kind.IMPLICATION, "godel"))]),
    left_ordinal_sum_implication([(0.2, 0.5, make_connective(Kind.IMPLICATION, "kleene_dienes"))]),
    natural_negation_tnorm(make_connective(Kind.TNORM, "lukasiewicz"),
                           SupInfOracleConfig(1e-6, 30, 0.0)),
    closed_form_natneg_tnorm_sum([(0.0, 0.5, make_connective(Kind.TNORM, "lukasiewicz"))]),
    Inverse(ordinal_sum_negation([(0.2, 0.5, make_connective(Kind.NEGATION, "root_complement", [3]))])),
]


@pytest.mark.parametrize("expr", EXPRS, ids=lambda e: type(e).__name__)
def test_round_trip_bit_identical(expr):
    back = roundtrip(expr)
    assert back == expr
    assert same_values(expr, back)


@pytest.mark.parametrize("seed", range(20))
def test_random_family_round_trip(seed):
    fam = random_family(seed, Kind.NEGATION, 5)
    back = parse_family(json.loads(dumps(fam)))
    assert back == fam
    assert family_digest(back) == family_digest(fam)
    assert same_values(ordinal_sum_negation(fam), ordinal_sum_negation(back))


def test_kind_inherited_by_summands():
    doc = {"kind": "tnorm", "summands": [{"a": 0, "b": 0.5, "connective": {"base": "lukasiewicz"}}]}
    fam = parse_family(doc)
    assert fam.kind is Kind.TNORM


def test_nested_sums():
    doc = {"kind": "negation", "node": "ordinal_sum", "summands": [
        {"a": 0.0, "b": 0.5, "connective": {"node": "ordinal_sum", "summands": [
            {"a": 0.5, "b": 1.0, "connective": {"base": "least"}}]}}]}
    n = parse_expr(doc)
    # outer: 0.5 + 0.5 * inner(0.8); inner(0.8) = 0 + 0.5 * least(0.6) = 0
    assert n(0.4) == pytest.approx(0.5)


@pytest.mark.parametrize("doc,path", [
    ({"base": "standard"}, "$"),
    ({"kind": "negation", "base": "nope"}, "$"),
    ({"kind": "colour", "base": "standard"}, "$.kind"),
    ({"kind": "negation", "node": "ordinal_sum", "summands": [{"a": 0.2, "b": "x",
      "connective": {"base": "standard"}}]}, "$.summands[0].b"),
    ({"kind": "negation", "node": "ordinal_sum", "summands": [
        {"a": 0.2, "b": 0.5, "connective": {"base": "standard"}},
        {"a": 0.4, "b": 0.6, "connective": {"base": "standard"}}]}, "$"),
    ({"kind": "negation", "node": "ordinal_sum", "summands": [
        {"a": 0.2, "b": 0.5, "connective": {"kind": "tnorm", "base": "godel"}}]},
     "$.summands[0].connective.kind"),
    ({"kind": "implication", "node": "ordinal_sum", "summands": []}, "$.variant"),
    ({"kind": "tnorm", "node": "inverse", "inner": {"base": "standard"}}, "$.kind"),
    ({"kind": "negation", "node": "mystery"}, "$.node"),
])
def test_errors_carry_paths(doc, path):
    with pytest.raises(ConfigError) as info:
        parse_expr(doc)
    assert info.value.path == path


def test_json_errors_report_position():
    with pytest.raises(ConfigError, match="line 2, column"):
        loads('{"kind": "negation",\n "base": }')


def test_to_config_always_names_kind():
    assert to_config(make_connective(Kind.TNORM, "godel")) == {"kind": "tnorm", "base": "godel"}
