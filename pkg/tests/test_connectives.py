import math

import numpy as np
import pytest

from ordsum import ConnectiveError, Kind, evaluate, make_connective, n_dual
from ordsum.analysis import grid

G = grid(1001)


def neg(name, *params):
    return make_connective(Kind.NEGATION, name, params)


@pytest.mark.parametrize("kind,name,params,args,expected", [
    ("negation", "standard", [], (0.3,), 0.7),
    ("negation", "power_complement", [2], (0.5,), 0.75),
    ("negation", "root_complement", [2], (0.6,), 0.8),
    ("negation", "least", [], (0.0,), 1.0),
    ("negation", "least", [], (0.2,), 0.0),
    ("negation", "greatest", [], (0.9,), 1.0),
    ("negation", "greatest", [], (1.0,), 0.0),
    ("tnorm", "lukasiewicz", [], (0.6, 0.7), 0.3),
    ("tnorm", "godel", [], (0.6, 0.7), 0.6),
    ("tnorm", "product", [], (0.5, 0.4), 0.2),
    ("tnorm", "drastic", [], (0.6, 0.7), 0.0),
    ("tnorm", "drastic", [], (1.0, 0.7), 0.7),
    ("tconorm", "godel", [], (0.6, 0.7), 0.7),
    ("tconorm", "probabilistic_sum", [], (0.5, 0.4), 0.7),
    ("tconorm", "lukasiewicz", [], (0.6, 0.7), 1.0),
    ("tconorm", "drastic", [], (0.2, 0.3), 1.0),
    ("tconorm", "drastic", [], (0.0, 0.3), 0.3),
    ("implication", "kleene_dienes", [], (0.5, 0.2), 0.5),
    ("implication", "godel", [], (0.5, 0.2), 0.2),
    ("implication", "godel", [], (0.2, 0.5), 1.0),
    ("implication", "rescher", [], (0.5, 0.2), 0.0),
    ("implication", "rescher", [], (0.2, 0.2), 1.0),
])
def test_catalog_values(kind, name, params, args, expected):
    c = make_connective(kind, name, params)
    assert evaluate(c, *args) == pytest.approx(expected, abs=1e-15)


def test_unknown_name_and_bad_param():
    with pytest.raises(ConnectiveError):
        make_connective(Kind.TNORM, "hamacher")
    with pytest.raises(ConnectiveError):
        neg("power_complement", 0.5)
    with pytest.raises(ConnectiveError):
        neg("power_complement")
    with pytest.raises(ConnectiveError):
        neg("standard", 2)


def test_arity_and_range_checks():
    t = make_connective(Kind.TNORM, "product")
    with pytest.raises(ConnectiveError):
        t(0.5)
    with pytest.raises(ConnectiveError):
        t(0.5, 1.5)
    with pytest.raises(ConnectiveError):
        neg("standard")(math.nan)


def test_vector_evaluation_matches_scalar():
    n = neg("power_complement", 3)
    xs = np.array([0.0, 0.25, 0.5, 1.0])
    out = n(xs)
    assert isinstance(out, np.ndarray)
    assert [n(float(x)) for x in xs] == list(out)
    assert isinstance(n(0.5), float)


def test_evaluation_does_not_mutate_input():
    xs = np.array([0.1, 0.2])
    neg("standard")(xs)
    assert list(xs) == [0.1, 0.2]


@pytest.mark.parametrize("name,params", [
    ("standard", ()), ("power_complement", (2,)), ("power_complement", (3.5,)),
    ("root_complement", (2,)), ("least", ()), ("greatest", ()),
])
def test_negations_satisfy_n1_n2(name, params):
    v = neg(name, *params)(G)
    assert v[0] == 1.0 and v[-1] == 0.0
    assert np.all(np.diff(v) <= 0.0)


@pytest.mark.parametrize("name", ["godel", "product", "lukasiewicz", "drastic"])
def test_tnorm_axioms_on_full_grid(name):
    t = make_connective(Kind.TNORM, name)
    X, Y = np.meshgrid(G, G, indexing="ij")
    M = t(X.ravel(), Y.ravel()).reshape(X.shape)
    assert np.array_equal(M, M.T)
    assert np.array_equal(t(G, np.ones_like(G)), G)
    assert np.all(np.diff(M, axis=0) >= 0) and np.all(np.diff(M, axis=1) >= 0)
    assert M.min() >= 0.0 and M.max() <= 1.0


@pytest.mark.parametrize("name", ["godel", "probabilistic_sum", "lukasiewicz", "drastic"])
def test_tconorm_axioms_on_full_grid(name):
    s = make_connective(Kind.TCONORM, name)
    X, Y = np.meshgrid(G, G, indexing="ij")
    M = s(X.ravel(), Y.ravel()).reshape(X.shape)
    assert np.array_equal(M, M.T)
    assert np.array_equal(s(G, np.zeros_like(G)), G)
    assert np.all(np.diff(M, axis=0) >= 0) and np.all(np.diff(M, axis=1) >= 0)


@pytest.mark.parametrize("name", ["godel", "rescher", "kleene_dienes"])
def test_implication_axioms_on_full_grid(name):
    j = make_connective(Kind.IMPLICATION, name)
    X, Y = np.meshgrid(G, G, indexing="ij")
    M = j(X.ravel(), Y.ravel()).reshape(X.shape)
    assert np.all(np.diff(M, axis=0) <= 0)
    assert np.all(np.diff(M, axis=1) >= 0)
    assert j(0.0, 0.0) == 1.0 and j(1.0, 1.0) == 1.0 and j(1.0, 0.0) == 0.0


def test_n_dual_of_product_is_probabilistic_sum():
    dual = n_dual(make_connective(Kind.TNORM, "product"), neg("standard"))
    assert dual.kind is Kind.TCONORM
    # 1 - (1 - 0.5)(1 - 0.6)
    assert dual(0.5, 0.6) == pytest.approx(0.8, abs=1e-15)


def test_n_dual_with_power_complement():
    dual = n_dual(make_connective(Kind.TNORM, "godel"), neg("power_complement", 2))
    # N^-1(min(N(x), N(y))) = max(x, y) for any strict N
    assert dual(0.3, 0.9) == pytest.approx(0.9, abs=1e-12)


def test_n_dual_rejects_non_strict_negation_and_negation_inner():
    with pytest.raises(ConnectiveError):
        n_dual(make_connective(Kind.TNORM, "godel"), neg("least"))
    with pytest.raises(ConnectiveError):
        n_dual(neg("standard"), neg("standard"))


def test_repr_is_readable():
    assert repr(neg("power_complement", 2)) == "negation:power_complement(2)"
