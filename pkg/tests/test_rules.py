import pytest

from locseq import logic
from locseq.calculus import generate_rules, join_indices
from locseq.calculus.rules import RuleSet, explain_unknown
from locseq.errors import RuleMismatch
from locseq.syntax import App, Atom, parse_sequent

P, Q = Atom("p"), Atom("q")
BIN3 = logic.make_signature("bin3", 3, [("Max", 2, tuple(max(a, b) for a in (1, 2, 3) for b in (1, 2, 3)))])
ALL = [logic.kleene3(), logic.fde(), logic.post(3), logic.post(5), logic.nlogic(2),
       logic.nlogic(4), logic.bivalent_f(), BIN3]


def kinds(rules, conn):
    I = [s for s in rules if s.kind == "I" and s.name.startswith(conn + "-")]
    E = [s for s in rules if s.kind == "E" and s.name.startswith(conn + "-")]
    return I, E


@pytest.mark.parametrize("sig", ALL, ids=lambda s: s.name)
def test_count_law(sig):
    rules = generate_rules(sig)
    for c in sig.connectives.values():
        I, E = kinds(rules, c.name)
        assert len(I) == sig.n ** c.arity
        assert len(E) == sig.n


def test_binary_n3_counts():
    I, E = kinds(generate_rules(BIN3), "Max")
    assert (len(I), len(E)) == (9, 3)
    assert {s.name for s in I} == {f"Max-I-{a}{b}-{max(a, b)}" for a in (1, 2, 3) for b in (1, 2, 3)}


def test_structural_names():
    names = set(generate_rules(logic.nlogic(3)).names)
    assert {"init", "wl", "wr", "cut", "shift-right-1", "shift-left-1-2", "coord-2-3"} <= names
    assert "coord-1-1" not in names and "shift-left-2-2" not in names
    structural = [s for s in generate_rules(logic.nlogic(3)) if s.kind == "structural"]
    assert len(structural) == 1 + 3 + 6 + 6 + 3


def test_k3_intro_instance():
    rules = generate_rules(logic.kleene3())
    inst = rules.get("Neg-I-2-2").instance((P,))
    assert [str(p) for p in inst.premises] == ["|- p@2"]
    assert str(inst.conclusion) == "|- Neg(p)@2"


def test_nlogic_elim_minors():
    sig = logic.nlogic(3)
    inst = generate_rules(sig).get("N1-E-1").instance((P,))
    major, *minors = inst.premises
    assert str(major) == "|- N1(p)@1"
    assert sorted(map(str, minors)) == ["p@2 |-", "p@3 |-"]
    # E-rule with no rows: only the major premise
    assert len(generate_rules(sig).get("N1-E-2").instance((P,)).premises) == 1


def test_binary_elim_minor_order():
    inst = generate_rules(BIN3).get("Max-E-2").instance((P, Q))
    assert [str(s) for s in inst.premises[1:]] == ["p@1, q@2 |-", "p@2, q@1 |-", "p@2, q@2 |-"]


def test_match_with_shared_context():
    sig = logic.nlogic(3)
    schema = generate_rules(sig).get("shift-right-1")
    prem = parse_sequent("p@1 |- p@1", sig)
    assert schema.match([prem], parse_sequent("|- p@1, p@2, p@3", sig))
    with pytest.raises(RuleMismatch):
        schema.match([prem], parse_sequent("|- p@2, p@3", sig))
    with pytest.raises(RuleMismatch):
        schema.match([prem, prem], parse_sequent("|- p@1, p@2, p@3", sig))


def test_weakening_match():
    rules = generate_rules(logic.nlogic(2))
    s = lambda t: parse_sequent(t, logic.nlogic(2))  # noqa: E731
    rules.get("wr").match([s("|- p@1")], s("|- p@1, q@2"))
    rules.get("wl").match([s("|- p@1")], s("q@2 |- p@1"))
    with pytest.raises(RuleMismatch):
        rules.get("wr").match([s("|- p@1")], s("q@2 |- p@1"))


def test_join_indices():
    assert join_indices((1, 2), 3) == "12"
    assert join_indices((10, 2), 12) == "10.2"


def test_dotted_names_when_n_large():
    sig = logic.post(10)
    assert "Neg-I-10-1" in generate_rules(sig)


def test_explain_unknown():
    rules = generate_rules(logic.nlogic(3))
    assert "i ≠ j" in explain_unknown("coord-1-1", 3, rules)
    assert "i ≠ j" in explain_unknown("shift-left-2-2", 3, rules)
    assert "outside 1..3" in explain_unknown("shift-right-7", 3, rules)
    assert "no rule named" in explain_unknown("frobnicate", 3, rules)


def test_ruleset_ops():
    rules = generate_rules(logic.nlogic(2))
    smaller = rules.without("cut")
    assert "cut" in rules and "cut" not in smaller and len(smaller) == len(rules) - 1
    with pytest.raises(ValueError):
        RuleSet("dup", [rules.get("init"), rules.get("init")])


def test_shapes_print():
    rules = generate_rules(logic.nlogic(3))
    assert rules.get("coord-1-2").shape() == "G |- D, phi@1 ; G |- D, phi@2 ==> G |- D"
    assert rules.get("N1-I-2-1").shape() == "G |- D, phi@2 ==> G |- D, N1(phi)@1"
    assert rules.get("wl").shape().startswith("G |- D ==>")
    assert isinstance(App("N1", (P,)), App)
