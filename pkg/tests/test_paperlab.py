import pytest

from locseq import logic, paperlab as pl
from locseq.calculus import InstanceSpec, check_derivation, generate_rules, search_proof
from locseq.errors import CheckError, SignatureError
from locseq.semantics import consequence, satisfies
from locseq.syntax import App, Atom, LocatedFormula, parse_sequent

P, Q = Atom("p"), Atom("q")


def test_n_operator_logic():
    sig = pl.n_operator_logic(3)
    assert sig.apply("N2", [2]) == 3
    assert sig.apply("N2", [1]) == 1 and sig.apply("N2", [3]) == 1
    with pytest.raises(SignatureError):
        pl.n_operator_logic(1)


def test_paper_rule_examples():
    rules = pl.paper_n_rules(3)
    inst = rules.get("N1-stated-I-1").instance((P,))
    assert [str(p) for p in inst.premises] == ["|- p@2, p@3"] and str(inst.conclusion) == "|- N1(p)@1"
    inst = rules.get("N2-stated-E-3").instance((P,))
    assert [str(p) for p in inst.premises] == ["|- N2(p)@3"] and str(inst.conclusion) == "|- p@2"
    assert "N1-stated-E-2" in rules and "N1-stated-I-2" not in rules
    assert not any("-stated-E-" in n and n[-1] not in "12" for n in pl.paper_n_rules(2).names)
    assert len(pl.paper_n_rules(2)) == 2 * 4
    assert len(pl.paper_n_rules(4)) == 4 * (4 + 2)


@pytest.mark.parametrize("n", [2, 3])
def test_verify_n_rules(n):
    r = pl.verify_n_rules(n)
    assert r.passed, r.render()
    assert r.stats["instances"] > 0 and r.stats["derivations"] > 0


def test_verify_n_rules_mutation():
    mutated = pl.paper_n_rules(3, in_premise=lambda k: k % 3 + 1)
    r = pl.verify_n_rules(3, rules=mutated)
    assert not r.passed
    w = r.witness
    assert not satisfies(pl.n_operator_logic(3), w.valuation, w.instance.conclusion)


@pytest.mark.parametrize("args", [(3, 1, {2}), (3, 4, {2, 3, 4}), (3, 2, {1}), (3, 3, {2}),
                                  (3, 2, {5}), (1, 2, {2})])
def test_attempt_spec_validation(args):
    with pytest.raises(ValueError):
        pl.AttemptSpec(*args)


def test_refute_attempt_examples():
    for A in ({2}, {3}):
        w = pl.refute_attempt(pl.AttemptSpec(3, 2, A))
        assert dict(w.valuation) == {"p": 1}
        assert w.pointwise
    w = pl.refute_attempt(pl.AttemptSpec(3, 2, {2}))
    assert [str(p) for p in w.instance.premises] == ["|- p@1, p@2"]
    assert str(w.instance.conclusion) == "|- N1(p)@2"
    w = pl.refute_attempt(pl.AttemptSpec(4, 3, {2, 3}))
    sig = pl.n_operator_logic(4)
    assert all(satisfies(sig, w.valuation, p) for p in w.instance.premises)
    assert not satisfies(sig, w.valuation, w.instance.conclusion)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_every_attempt_refuted(n):
    specs = pl.all_attempt_specs(n)
    assert len(specs) == 2 ** (n - 1) - 1
    for spec in specs:
        assert pl.refute_attempt(spec) is not None


def test_bound_exhaustion_is_an_error():
    with pytest.raises(pl.BoundExhaustedError):
        pl.refute_attempt(pl.AttemptSpec(3, 2, {2}), bounds=())


@pytest.mark.parametrize("n", [3, 4])
def test_replay_disappearance(n):
    r = pl.replay_disappearance(n)
    assert r.passed, r.render()


def test_disappearance_checker_behaviour():
    sig = pl.n_operator_logic(3)
    d, hyp, spec = pl.disappearance_derivation(3, frozenset({LocatedFormula(Q, 1)}))
    base = generate_rules(sig) | pl.paper_n_rules(3)
    check_derivation(sig, base | pl.attempted_rules(spec), d, [hyp])
    with pytest.raises(CheckError) as exc:
        check_derivation(sig, base, d, [hyp])
    assert exc.value.path == "root.0" and exc.value.rule == "N1-attempt-I-2-2"
    v = consequence(sig, [hyp], d.sequent)
    assert not v
    assert dict(v.countermodel.valuation) == {"p": 1, "q": 2}


def test_identification():
    for n in range(2, 7):
        sig = pl.n_operator_logic(n)
        assert pl.identify_truths(sig) == {1}
        assert pl.identify_falsities(sig) == {n}


def test_identification_tracks_tables():
    sig = pl.n_operator_logic(3)
    for i in (1, 2, 3):
        sig = sig.with_table(f"N{i}", tuple(3 if j == i else 2 for j in (1, 2, 3)))
    assert pl.identify_truths(sig) == {2}
    assert pl.identify_falsities(sig) == {3}


def test_identification_needs_n_connectives():
    with pytest.raises(SignatureError):
        pl.identify_truths(logic.kleene3())


@pytest.mark.parametrize("n", [2, 3, 4])
def test_context_irrelevance(n):
    # the contextual reading of the truth/falsity conditions singles out the same values
    sig = pl.n_operator_logic(n)
    ctxs = [(frozenset(), frozenset()), (frozenset(), frozenset({LocatedFormula(Q, 1)})),
            (frozenset({LocatedFormula(Q, n)}), frozenset({LocatedFormula(Q, 2)}))]
    truths = {j for j in sig.values if all(pl.truth_condition_holds(sig, j, g, d) for g, d in ctxs)}
    falsities = {j for j in sig.values
                 if all(pl.falsity_condition_holds(sig, j, g, d) for g, d in ctxs)}
    assert truths == pl.identify_truths(sig)
    assert falsities == pl.identify_falsities(sig)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_double_application(n):
    # N_i(N_i φ) under the tables: i = 1 gives v1 exactly at φ = v1;
    # intermediate i always gives v1; i = n gives v_n exactly at φ = v_n
    sig = pl.n_operator_logic(n)
    for i in sig.values:
        for v in sig.values:
            got = logic.eval_formula(sig, {"p": v}, App(f"N{i}", (App(f"N{i}", (P,)),)))
            if i == 1:
                expected = 1 if v == 1 else n
            elif i < n:
                expected = 1
            else:
                expected = n if v == n else 1
            assert got == expected


def test_disquotation():
    reports = pl.check_disquotation()
    assert [r.claim_id for r in reports] == ["psd-ft", "psd-tf", "f-rules"]
    assert all(r.passed for r in reports), "\n".join(r.render() for r in reports)


def test_disquotation_examples():
    sig = logic.bivalent_f()
    s = lambda t: parse_sequent(t, sig)  # noqa: E731
    assert satisfies(sig, {"p": 1}, s("|- F(p)@2")) and satisfies(sig, {"p": 1}, s("|- p@1"))
    assert search_proof(sig, generate_rules(sig), s("|- F(p)@1"), 5) is None


def test_truth_tables():
    reports = pl.check_truth_tables()
    assert [r.claim_id for r in reports] == ["tt-k3", "tt-fde", "tt-post"]
    assert all(r.passed for r in reports)


def test_truth_tables_detect_corruption(monkeypatch):
    real = logic.builtin_logic

    def corrupt(name, n=None):
        sig = real(name, n)
        return sig.with_table("Neg", (1, 2, 1)) if name == "k3" else sig

    monkeypatch.setattr(logic, "builtin_logic", corrupt)
    by_id = {r.claim_id: r for r in pl.check_truth_tables()}
    assert not by_id["tt-k3"].passed and by_id["tt-fde"].passed
    assert "mismatched" in by_id["tt-k3"].render()


def test_report_invariant():
    with pytest.raises(ValueError):
        pl.VerificationReport("x", False)
    assert pl.VerificationReport("uniq-truth-3", True).line() == "uniq-truth-3 pass"


def test_suite_ids():
    ids = [r.claim_id for r in pl.run_paper_suite()]
    assert len(ids) == len(set(ids))
    for expected in ["tt-k3", "tt-fde", "tt-post", "nrules-sound-2", "uniq-truth-4", "uniq-false-3",
                     "attempt-refuted-3-2-2", "attempt-refuted-4-3-24", "disappearance-3",
                     "disappearance-4", "psd-ft", "psd-tf", "f-rules"]:
        assert expected in ids
