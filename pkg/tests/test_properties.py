"""Property tests over hypothesis-generated families."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from ordsum import (
    Kind,
    SummandFamily,
    invert_strict_negation,
    make_connective,
    mirror_family,
    ordinal_sum_negation,
    ordinal_sum_tconorm,
    ordinal_sum_tnorm,
)
from ordsum.analysis import grid

G = grid(201)
KS = st.sampled_from([1.0, 1.5, 2.0, 2.5])


@st.composite
def intervals(draw, max_n=4):
    """Disjoint lattice intervals on a 1/64 grid."""
    cuts = draw(st.lists(st.integers(0, 64), min_size=2, max_size=2 * max_n, unique=True))
    cuts = sorted(cuts)
    if len(cuts) % 2:
        cuts = cuts[:-1]
    return [(cuts[i] / 64, cuts[i + 1] / 64) for i in range(0, len(cuts), 2)]


@st.composite
def strict_negations(draw):
    k = draw(KS)
    choice = draw(st.integers(0, 3))
    if choice == 0:
        return make_connective(Kind.NEGATION, "standard")
    if choice == 1:
        return make_connective(Kind.NEGATION, "power_complement", [k])
    if choice == 2:
        return make_connective(Kind.NEGATION, "root_complement", [k])
    return invert_strict_negation(make_connective(Kind.NEGATION, "power_complement", [k]))


@st.composite
def any_negations(draw):
    if draw(st.booleans()):
        return draw(strict_negations())
    return make_connective(Kind.NEGATION, draw(st.sampled_from(["least", "greatest"])))


@st.composite
def negation_families(draw, summand=any_negations):
    spans = draw(intervals())
    return SummandFamily.of(Kind.NEGATION, [(a, b, draw(summand())) for a, b in spans])


@st.composite
def binary_families(draw, kind):
    names = (["godel", "product", "lukasiewicz", "drastic"] if kind is Kind.TNORM
             else ["godel", "probabilistic_sum", "lukasiewicz", "drastic"])
    spans = draw(intervals())
    return SummandFamily.of(kind, [(a, b, make_connective(kind, draw(st.sampled_from(names))))
                                   for a, b in spans])


@settings(max_examples=60, deadline=None)
@given(negation_families())
def test_sum_is_a_negation_confined_to_its_boxes(fam):
    n = ordinal_sum_negation(fam)
    v = n(G)
    assert v[0] == 1.0 and v[-1] == 0.0
    assert np.all(np.diff(v) <= 0.0)
    for s in fam:
        inside = (G >= s.a) & (G <= s.b)
        assert np.all(v[inside] >= 1.0 - s.b) and np.all(v[inside] <= 1.0 - s.a)
        assert n(s.a) == 1.0 - s.a and n(s.b) == 1.0 - s.b


@settings(max_examples=40, deadline=None)
@given(negation_families(strict_negations))
def test_mirror_family_inverts(fam):
    n = ordinal_sum_negation(fam)
    m = ordinal_sum_negation(mirror_family(fam))
    assert np.abs(n(m(G)) - G).max() <= 1e-9
    assert np.abs(m(n(G)) - G).max() <= 1e-9


@settings(max_examples=40, deadline=None)
@given(binary_families(Kind.TNORM), st.data())
def test_tnorm_sum_pointwise_axioms(fam, data):
    t = ordinal_sum_tnorm(fam)
    x, y, z = (data.draw(st.floats(0, 1)) for _ in range(3))
    assert t(x, y) == t(y, x)
    assert t(x, 1.0) == x
    assert abs(t(x, t(y, z)) - t(t(x, y), z)) <= 1e-12
    if x <= y:
        assert t(x, z) <= t(y, z)


@settings(max_examples=40, deadline=None)
@given(binary_families(Kind.TCONORM), st.data())
def test_tconorm_sum_pointwise_axioms(fam, data):
    s = ordinal_sum_tconorm(fam)
    x, y, z = (data.draw(st.floats(0, 1)) for _ in range(3))
    assert s(x, y) == s(y, x)
    assert s(x, 0.0) == x
    assert abs(s(x, s(y, z)) - s(s(x, y), z)) <= 1e-12
    if x <= y:
        assert s(x, z) <= s(y, z)
