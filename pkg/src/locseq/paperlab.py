"""Mechanical checks for the "not having value v_i" operators N_1..N_n.

Everything here runs on the deterministic tables of :func:`n_operator_logic`:
``N_i`` sends ``v_i`` to ``v_n`` and every other value to ``v_1``.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import logic as _logic
from .calculus.derivation import HYPOTHESIS, Derivation, check_derivation
from .calculus.rules import ContextSchema, RuleSet, generate_rules, join_indices
from .calculus.search import ProofSearch
from .calculus.soundness import (InstanceSpec, SweepStats, UnsoundWitness, certify_soundness,
                                 formula_pool, pointwise_witness)
from .errors import CheckError, LogicError, SignatureError
from .logic import LogicSignature
from .semantics import Grid, consequence, pointwise_equivalent
from .syntax import App, Atom, LocatedFormula, Sequent

EMPTY: frozenset = frozenset()
P, Q = Atom("p"), Atom("q")


def n_operator_logic(n: int) -> LogicSignature:
    return _logic.nlogic(n)


@dataclass
class VerificationReport:
    claim_id: str
    passed: bool
    witness: object = None
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failed claim {self.claim_id} needs a witness")

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def line(self) -> str:
        return f"{self.claim_id} {self.verdict}"

    def render(self) -> str:
        lines = [f"[{self.claim_id}] {self.verdict}"]
        if self.witness is not None:
            text = self.witness.render() if hasattr(self.witness, "render") else str(self.witness)
            lines += [f"  witness: {w}" for w in text.splitlines()]
        if self.stats:
            lines.append("  stats: " + ", ".join(f"{k}={_fmt(v)}" for k, v in self.stats.items()))
        return "\n".join(lines)


def _fmt(v):
    return f"{v:.3f}s" if isinstance(v, float) else str(v)


def _lf(phi, v):
    return LocatedFormula(phi, v)


def _single(formulas):
    for f in formulas:
        yield (f,)


def _headed(connective):
    def candidates(formulas):
        for f in formulas:
            if isinstance(f, App) and f.connective == connective:
                yield f.args
    return candidates


def _rule(name, premise, conclusion, connective):
    """One-premise context schema ``Γ:Δ ∪ premise(φ) / Γ:Δ ∪ conclusion(φ)`` (right side only)."""

    def parts(params):
        (phi,) = params
        return (EMPTY, frozenset(conclusion(phi))), [(EMPTY, frozenset(premise(phi)))]

    return ContextSchema(name, "paper", 1, parts, _headed(connective), _single, (Atom("phi"),))


# -- the N_k rule family -----------------------------------------------------


def paper_n_rules(n: int, in_premise: Callable[[int], int] | None = None) -> RuleSet:
    """The hand-stated I/E rules for every ``N_k``.

    ``in_premise`` maps ``k`` to the location used in the premise of ``I_n``;
    it defaults to ``k`` and exists for mutation tests.
    """
    if n < 2:
        raise SignatureError(f"n must be >= 2, got {n}")
    in_premise = in_premise or (lambda k: k)
    schemas = []
    for k in range(1, n + 1):
        c = f"N{k}"
        others = lambda phi, k=k: [_lf(phi, j) for j in range(1, n + 1) if j != k]  # noqa: E731
        head = lambda v, c=c: (lambda phi: [_lf(App(c, (phi,)), v)])  # noqa: E731
        loc = in_premise(k)
        schemas += [
            _rule(f"{c}-stated-I-1", others, head(1), c),
            _rule(f"{c}-stated-E-1", head(1), others, c),
            _rule(f"{c}-stated-I-{n}", lambda phi, loc=loc: [_lf(phi, loc)], head(n), c),
            _rule(f"{c}-stated-E-{n}", head(n), lambda phi, k=k: [_lf(phi, k)], c),
        ]
        schemas += [_rule(f"{c}-stated-E-{j}", head(j), lambda phi: [], c) for j in range(2, n)]
    return RuleSet(f"stated-N{n}", schemas)


INVERTIBLE_KINDS = ("-stated-I-1", "-stated-E-1")


def _is_invertible(name: str, n: int) -> bool:
    return name.endswith(INVERTIBLE_KINDS) or name.endswith((f"-stated-I-{n}", f"-stated-E-{n}"))


def verify_n_rules(n: int, bounds: InstanceSpec = InstanceSpec(), depth: int = 8,
                   rules: RuleSet | None = None) -> VerificationReport:
    """Soundness of the N rules and their interderivability with the table-generated rules."""
    start = time.perf_counter()
    sig = n_operator_logic(n)
    rules = rules if rules is not None else paper_n_rules(n)
    claim = f"nrules-sound-{n}"
    sweep = SweepStats()
    witness = certify_soundness(sig, rules, bounds, sweep)
    stats = {"instances": sweep.instances}
    if witness is not None:
        stats["runtime"] = time.perf_counter() - start
        return VerificationReport(claim, False, witness, stats)
    generated = generate_rules(sig)
    searcher = ProofSearch(sig, generated)
    derivations = 0
    for schema in rules:
        for gamma, delta in ((EMPTY, EMPTY), (EMPTY, frozenset({_lf(Q, 1)}))):
            inst = schema.instance((P,), gamma, delta)
            (premise,) = inst.premises
            goals = [([premise], inst.conclusion)]
            if _is_invertible(schema.name, n):
                goals.append(([inst.conclusion], premise))
            for hyps, goal in goals:
                d = searcher.search(goal, depth, hyps)
                if d is None:
                    stats["runtime"] = time.perf_counter() - start
                    return VerificationReport(
                        claim, False, f"{schema.name}: no derivation of {goal} from "
                        f"{'; '.join(map(str, hyps))} within depth {depth}", stats)
                check_derivation(sig, generated, d, hyps)
                derivations += 1
    stats["derivations"] = derivations
    stats["runtime"] = time.perf_counter() - start
    return VerificationReport(claim, True, None, stats)


# -- the failing attempt -----------------------------------------------------


@dataclass(frozen=True)
class AttemptSpec:
    """Parameters of the attempted rules for ``N_1`` located at ``v_i``."""

    n: int
    i: int
    A: frozenset

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if not 1 < self.i <= self.n:
            raise ValueError(f"target value must satisfy 1 < i <= n, got i={self.i}")
        if 1 in self.A or not self.A <= set(range(1, self.n + 1)):
            raise ValueError(f"A must be a subset of 2..{self.n}, got {sorted(self.A)}")
        if len(self.A) != self.i - 1:
            raise ValueError(f"|A| must be i-1 = {self.i - 1}, got {len(self.A)}")

    @property
    def tag(self) -> str:
        return f"{self.i}-{join_indices(sorted(self.A), self.n)}"


def all_attempt_specs(n: int) -> list[AttemptSpec]:
    out = []
    for i in range(2, n + 1):
        for A in itertools.combinations(range(2, n + 1), i - 1):
            out.append(AttemptSpec(n, i, frozenset(A)))
    return out


def attempted_rules(spec: AttemptSpec) -> RuleSet:
    locations = sorted(spec.A | {1})
    spread = lambda phi: [_lf(phi, m) for m in locations]  # noqa: E731
    head = lambda phi: [_lf(App("N1", (phi,)), spec.i)]  # noqa: E731
    return RuleSet(f"attempt-{spec.tag}", [
        _rule(f"N1-attempt-I-{spec.tag}", spread, head, "N1"),
        _rule(f"N1-attempt-E-{spec.tag}", head, spread, "N1"),
    ])


class BoundExhaustedError(LogicError):
    """No refuting instance was found within the sweep bounds."""


def refute_attempt(spec: AttemptSpec,
                   bounds: Iterable[InstanceSpec] = (InstanceSpec(1, 0, 0), InstanceSpec(1, 1, 1),
                                                     InstanceSpec(2, 1, 1))) -> UnsoundWitness:
    """An instance of the attempted introduction rule whose premise holds and conclusion fails."""
    sig = n_operator_logic(spec.n)
    intro = attempted_rules(spec).get(f"N1-attempt-I-{spec.tag}")
    for b in bounds:
        w = pointwise_witness(sig, intro, b)
        if w is not None:
            return w
    raise BoundExhaustedError(f"no refutation of the attempted rule for {spec} within the bounds")


def disappearance_derivation(n: int, delta: frozenset = EMPTY, target: int = 2):
    """The attempted-I over weakening over ``N1 E_n``, closed off by coordination.

    Returns ``(derivation, hypothesis, attempt spec)``; the root's conclusion is
    ``: delta`` with ``N1(p)`` gone.
    """
    if n < 3:
        raise ValueError("needs an intermediate value, so n >= 3")
    spec = AttemptSpec(n, target, frozenset(range(2, target + 1)))
    n1p = App("N1", (P,))
    hyp = Sequent(EMPTY, delta | {_lf(n1p, n)})
    elim = Derivation("N1-stated-E-%d" % n, Sequent(EMPTY, delta | {_lf(P, 1)}),
                      (Derivation(HYPOTHESIS, hyp),))
    spread = Sequent(EMPTY, delta | {_lf(P, m) for m in spec.A | {1}})
    weak = Derivation("wr", spread, (elim,))
    attempt = Derivation(f"N1-attempt-I-{spec.tag}", Sequent(EMPTY, delta | {_lf(n1p, target)}), (weak,))
    root = Derivation(f"coord-{target}-{n}", Sequent(EMPTY, delta), (attempt, Derivation(HYPOTHESIS, hyp)))
    return root, hyp, spec


def replay_disappearance(n: int) -> VerificationReport:
    start = time.perf_counter()
    claim = f"disappearance-{n}"
    sig = n_operator_logic(n)
    base = generate_rules(sig) | paper_n_rules(n)
    notes = []
    ok = True
    for delta in (frozenset({_lf(Q, 1)}), EMPTY):
        d, hyp, spec = disappearance_derivation(n, delta)
        with_attempt = base | attempted_rules(spec)
        try:
            check_derivation(sig, with_attempt, d, [hyp])
        except CheckError as exc:
            ok = False
            notes.append(f"rejected under the attempted rules: {exc}")
            continue
        try:
            check_derivation(sig, base, d, [hyp])
            ok = False
            notes.append("accepted even without the attempted rules")
        except CheckError as exc:
            if exc.path != "root.0":
                ok = False
                notes.append(f"rejected at the wrong node: {exc}")
        verdict = consequence(sig, [hyp], d.sequent)
        if verdict:
            ok = False
            notes.append(f"{hyp} entails {d.sequent}; nothing disappeared")
        else:
            notes.append(f"{hyp} derives {d.sequent} with the attempted rule, but "
                         + ", ".join(f"{a}=v{v}" for a, v in verdict.countermodel.valuation.items())
                         + " satisfies the hypothesis and falsifies the conclusion")
    stats = {"runtime": time.perf_counter() - start}
    return VerificationReport(claim, ok, "\n".join(notes), stats)


# -- identifying truth and falsity -------------------------------------------


def _n_columns(sig: LogicSignature):
    for i in sig.values:
        conn = sig.connectives.get(f"N{i}")
        if conn is None or conn.arity != 1:
            raise SignatureError(f"{sig.name} lacks a unary connective N{i}")
    grid = Grid(sig, ["p"])
    arg = grid.values(P)
    return grid, arg, {i: grid.values(App(f"N{i}", (P,))) for i in sig.values}


def identify_truths(sig: LogicSignature) -> set[int]:
    """Values j such that N_i(p) = v_j exactly when p differs from v_i, for every i."""
    _, arg, cols = _n_columns(sig)
    return {j for j in sig.values if all(((cols[i] == j) == (arg != i)).all() for i in sig.values)}


def identify_falsities(sig: LogicSignature) -> set[int]:
    """Values j such that N_i(p) = v_j exactly when p has value v_i, for every i."""
    _, arg, cols = _n_columns(sig)
    return {j for j in sig.values if all(((cols[i] == j) == (arg == i)).all() for i in sig.values)}


def truth_condition_holds(sig: LogicSignature, j: int, gamma=EMPTY, delta=EMPTY, phi=P) -> bool:
    """The truth condition for ``v_j`` read pointwise in the context ``gamma : delta``."""
    return all(
        pointwise_equivalent(sig, Sequent(gamma, delta | {_lf(App(f"N{i}", (phi,)), j)}),
                             Sequent(gamma, delta | {_lf(phi, k) for k in sig.values if k != i}))
        for i in sig.values)


def falsity_condition_holds(sig: LogicSignature, j: int, gamma=EMPTY, delta=EMPTY, phi=P) -> bool:
    return all(
        pointwise_equivalent(sig, Sequent(gamma, delta | {_lf(App(f"N{i}", (phi,)), j)}),
                             Sequent(gamma, delta | {_lf(phi, i)}))
        for i in sig.values)


# -- disquotation for the bivalent falsity connective ------------------------


def _f_rules():
    F = lambda v: (lambda phi: [_lf(App("F", (phi,)), v)])  # noqa: E731
    at = lambda v: (lambda phi: [_lf(phi, v)])  # noqa: E731
    neg = lambda v: (lambda phi: [_lf(App("Neg", (phi,)), v)])  # noqa: E731
    pure = RuleSet("f-pure", [
        _rule("F-It", at(2), F(1), "F"), _rule("F-Et", F(1), at(2), "F"),
        _rule("F-If", at(1), F(2), "F"), _rule("F-Ef", F(2), at(1), "F"),
    ])

    def impure_space(pool):
        for f in pool:
            yield (f,)

    def impure(name, premise, conclusion):
        def parts(params):
            (phi,) = params
            return (EMPTY, frozenset(conclusion(phi))), [(EMPTY, frozenset(premise(phi)))]

        def candidates(formulas):
            for f in formulas:
                if isinstance(f, App) and f.connective in ("F", "Neg"):
                    yield f.args
        return ContextSchema(name, "paper", 1, parts, candidates, impure_space, (Atom("phi"),))

    impure_set = RuleSet("f-impure", [impure("F-I", neg(1), F(1)), impure("F-E", F(1), neg(1))])
    return pure, impure_set


def check_disquotation(bounds: InstanceSpec = InstanceSpec(), depth: int = 3) -> list[VerificationReport]:
    """Reports ``psd-ft``, ``psd-tf`` and ``f-rules`` for the bivalent logic with F."""
    sig = _logic.builtin_logic("bivalent-f")
    generated = generate_rules(sig)
    searcher = ProofSearch(sig, generated)
    formulas = formula_pool(sig, 1, 2)
    ctxs = [(EMPTY, EMPTY), (EMPTY, frozenset({_lf(Q, 1)})), (frozenset({_lf(Q, 2)}), EMPTY)]
    reports = []
    # psd-ft pairs (F(φ), t) with (φ, f); psd-tf pairs (F(φ), f) with (φ, t)
    for claim, f_at, phi_at in (("psd-ft", 1, 2), ("psd-tf", 2, 1)):
        start = time.perf_counter()
        failure = None
        checked = 0
        for phi in formulas:
            f_phi = App("F", (phi,))
            for gamma, delta in ctxs:
                a = Sequent(gamma, delta | {_lf(f_phi, f_at)})
                b = Sequent(gamma, delta | {_lf(phi, phi_at)})
                checked += 1
                if not pointwise_equivalent(sig, a, b):
                    failure = failure or f"{a} and {b} differ at some valuation"
        searched = 0
        for phi in (P, App("Neg", (P,))):
            f_phi = App("F", (phi,))
            a = Sequent(EMPTY, {_lf(f_phi, f_at)})
            b = Sequent(EMPTY, {_lf(phi, phi_at)})
            for hyp, goal in ((b, a), (a, b)):
                d = searcher.search(goal, depth, [hyp])
                searched += 1
                if d is None:
                    failure = failure or f"no derivation of {goal} from {hyp} within depth {depth}"
                else:
                    check_derivation(sig, generated, d, [hyp])
        stats = {"equivalences": checked, "searches": searched, "runtime": time.perf_counter() - start}
        reports.append(VerificationReport(claim, failure is None, failure, stats))

    start = time.perf_counter()
    pure, impure = _f_rules()
    sweep = SweepStats()
    witness = certify_soundness(sig, pure | impure, bounds, sweep)
    if witness is None:
        for schema in [*pure, *impure]:
            witness = pointwise_witness(sig, schema, InstanceSpec(1, 1, 1))
            if witness is not None:
                break
    stats = {"instances": sweep.instances, "runtime": time.perf_counter() - start}
    reports.append(VerificationReport("f-rules", witness is None, witness, stats))
    return reports


# -- truth tables of the builtin catalog -------------------------------------

NEGATION_ROWS = {
    "k3": [("t", "f"), ("n", "n"), ("f", "t")],
    "fde": [("t", "f"), ("n", "n"), ("b", "b"), ("f", "t")],
}


def post_rows(n: int) -> list[tuple]:
    """Cyclic rows in 0-based naming: v0 -> v1, ..., v(n-1) -> v0."""
    return [(f"v{i}", f"v{(i + 1) % n}") for i in range(n)]


def check_truth_tables() -> list[VerificationReport]:
    reports = []
    for name, rows in NEGATION_ROWS.items():
        start = time.perf_counter()
        sig = _logic.builtin_logic(name)
        names = list(sig.value_names)
        bad = [(a, b) for a, b in rows
               if a not in names or sig.apply("Neg", [names.index(a) + 1]) != names.index(b) + 1]
        if len(rows) != sig.n:
            bad.append(("row count", sig.n))
        reports.append(VerificationReport(f"tt-{name}", not bad, f"mismatched rows {bad}" if bad else None,
                                          {"rows": len(rows), "runtime": time.perf_counter() - start}))
    start = time.perf_counter()
    bad = []
    for n in range(3, 6):
        sig = _logic.builtin_logic("post", n)
        for a, b in post_rows(n):
            ia, ib = int(a[1:]) + 1, int(b[1:]) + 1
            if sig.apply("Neg", [ia]) != ib:
                bad.append((n, a, b))
    reports.append(VerificationReport("tt-post", not bad, f"mismatched rows {bad}" if bad else None,
                                      {"logics": 3, "runtime": time.perf_counter() - start}))
    return reports


# -- the whole suite ---------------------------------------------------------


def run_paper_suite(ns: Iterable[int] = (2, 3, 4)) -> list[VerificationReport]:
    reports = check_truth_tables()
    for n in ns:
        reports.append(verify_n_rules(n))
        sig = n_operator_logic(n)
        for kind, found, expected in (("truth", identify_truths(sig), {1}),
                                      ("false", identify_falsities(sig), {n})):
            reports.append(VerificationReport(
                f"uniq-{kind}-{n}", found == expected,
                None if found == expected else f"found {sorted(found)}, expected {sorted(expected)}",
                {"values": sorted(found)}))
        for spec in all_attempt_specs(n):
            claim = f"attempt-refuted-{n}-{spec.tag}"
            try:
                w = refute_attempt(spec)
                reports.append(VerificationReport(claim, True, w))
            except BoundExhaustedError as exc:
                reports.append(VerificationReport(claim, False, str(exc)))
        if n >= 3:
            reports.append(replay_disappearance(n))
    reports += check_disquotation()
    return reports
