import itertools

import pytest
from hypothesis import given, settings, strategies as st

from locseq import logic
from locseq.semantics import (Countermodel, Grid, Valuation, consequence, find_countermodel,
                              is_valid, pointwise_equivalent, satisfies, valuations)
from locseq.syntax import Atom, LocatedFormula, Sequent, parse_sequent

from conftest import brute_satisfies, brute_valid, located, sequents

K3, N2, N3 = logic.kleene3(), logic.nlogic(2), logic.nlogic(3)


def seq(text, sig=N3):
    return parse_sequent(text, sig)


def test_satisfies_examples():
    assert satisfies(K3, {"p": 3}, seq("p@1 |- p@1", K3))
    assert satisfies(N3, {"p": 2}, seq("|- p@1, p@2, p@3"))
    assert not satisfies(N3, {"p": 1}, seq("|- N1(p)@2"))
    assert satisfies(N3, {"p": 1}, seq("p@2 |-"))  # vacuous


def test_validity_examples():
    assert is_valid(K3, seq("p@1 |- p@1", K3))
    assert is_valid(N3, seq("|- p@1, p@2, p@3"))
    v = is_valid(N3, seq("|- p@1, p@2"))
    assert not v and dict(v.countermodel.valuation) == {"p": 3}


def test_empty_sequent():
    v = is_valid(K3, Sequent((), ()))
    assert not v and dict(v.countermodel.valuation) == {}


def test_first_countermodel_is_lexicographic():
    cm = find_countermodel(N3, seq("|- q@3, p@2"))
    assert dict(cm.valuation) == {"p": 1, "q": 1}
    cm = find_countermodel(N3, seq("p@2 |- q@1"))
    assert dict(cm.valuation) == {"p": 2, "q": 2}


def test_consequence_examples():
    pi = seq("p@1 |- q@2")
    assert consequence(N3, [pi], pi)
    assert consequence(K3, [], seq("p@1 |- p@1", K3))
    v = consequence(N2, [seq("|- p@1", N2)], seq("|- p@2", N2))
    assert not v and dict(v.countermodel.valuation) == {"p": 1}


def test_pointwise_examples():
    a = seq("p@1 |-")
    assert pointwise_equivalent(N3, a, a)
    assert pointwise_equivalent(N3, a, seq("|- p@2, p@3"))
    assert not pointwise_equivalent(N2, seq("|- p@1", N2), seq("|- p@2", N2))


def test_countermodel_guard():
    with pytest.raises(ValueError):
        Countermodel(Valuation({"p": 1}), seq("|- p@1"), N3)


def test_countermodel_render():
    cm = find_countermodel(K3, seq("|- p@1, p@3", K3))
    assert cm.render() == "p = v2 (n)\nfails: |- p@1, p@3"


def test_valuations_order():
    vals = [tuple(v.values()) for v in valuations(["q", "p"], 2)]
    assert vals == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert list(next(iter(valuations(["q", "p"], 2)))) == ["p", "q"]


def test_grid_rows_match_valuations():
    grid = Grid(N3, ["p", "q"])
    expected = list(valuations(["p", "q"], 3))
    assert [grid.valuation(r) for r in range(grid.size)] == expected


def test_grid_mask_bits():
    grid = Grid(N3, ["p"])
    assert grid.mask(LocatedFormula(Atom("p"), 2)) == 0b010


@settings(max_examples=200)
@given(sequents(K3))
def test_validity_agrees_with_brute_force(s):
    assert bool(is_valid(K3, s)) == brute_valid(K3, s)
    assert bool(is_valid(K3, s)) == bool(consequence(K3, [], s))


@settings(max_examples=200)
@given(sequents(N3), st.data())
def test_satisfies_agrees_with_oracle(s, data):
    val = {a: data.draw(st.integers(1, 3)) for a in s.atoms()}
    assert satisfies(N3, val, s) == brute_satisfies(N3, val, s)


@settings(max_examples=200)
@given(sequents(N3), st.frozensets(located(N3), max_size=2), st.frozensets(located(N3), max_size=2),
       st.data())
def test_weakening_pointwise(s, g2, d2, data):
    big = s.add(gamma=g2, delta=d2)
    val = {a: data.draw(st.integers(1, 3)) for a in big.atoms()}
    if satisfies(N3, val, s):
        assert satisfies(N3, val, big)


@pytest.mark.parametrize("sig", [K3, N3, logic.fde()])
def test_shift_equivalence(sig):
    p, q = Atom("p"), Atom("q")
    ctxs = [frozenset(), frozenset({LocatedFormula(q, 1)}), frozenset({LocatedFormula(q, sig.n)})]
    for i in sig.values:
        for g, d in itertools.product(ctxs, ctxs):
            left = Sequent(g | {LocatedFormula(p, i)}, d)
            right = Sequent(g, d | {LocatedFormula(p, j) for j in sig.values if j != i})
            assert pointwise_equivalent(sig, left, right)


def test_coordination_pointwise(n3=N3):
    p, q = Atom("p"), Atom("q")
    for i, j in itertools.permutations(n3.values, 2):
        for val in valuations(["p", "q"], 3):
            base = Sequent({LocatedFormula(q, 2)}, {LocatedFormula(q, 1)})
            a = base.add(delta=[LocatedFormula(p, i)])
            b = base.add(delta=[LocatedFormula(p, j)])
            if satisfies(n3, val, a) and satisfies(n3, val, b):
                assert satisfies(n3, val, base)


def test_restriction_to_occurring_atoms():
    # extra atoms in the valuation never change satisfaction
    s = seq("p@1 |- N1(p)@1")
    for v in N3.values:
        for extra in N3.values:
            assert satisfies(N3, {"p": v}, s) == satisfies(N3, {"p": v, "z": extra}, s)


def test_determinism():
    s = seq("p@1, q@2 |- N2(q)@1, r@3")
    assert all(find_countermodel(N3, s) == find_countermodel(N3, s) for _ in range(5))
