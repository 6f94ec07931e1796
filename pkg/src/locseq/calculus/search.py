"""Bounded backward proof search.

Two engines share the entry point :func:`search_proof`.

*Saturation* handles goals without hypotheses whenever the rule set contains
the rules generated from the signature. Every move it makes is invertible
(each premise follows from the conclusion), so a leaf where no move applies
and nothing closes is a genuine countermodel and the goal is rejected without
backtracking. For valid goals a depth-bounded pass then chooses among the
invertible moves to fit the proof under ``max_depth``:

* a compound ``(ψ, k)`` on the left is unfolded by ``ψ``'s ``E_k`` rule, whose
  major premise is an initial sequent because the context keeps ``(ψ, k)``;
* a formula located on the right at all values but ``m`` is moved left as
  ``(ψ, m)`` by ``shift-right-m``; with fewer right locations a coordination
  step first splits on two missing values.

*Generic* search (hypotheses, or rule sets such as the hand-written N rules)
tries every backward schema instance whose premises are still semantic
consequences of the hypotheses. Rules are assumed sound for the signature,
so no derivable premise is pruned.

Cut is never used. Instantiation is analytic: only subformulas of the goal
(and hypotheses) and locations 1..n appear.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from ..logic import LogicSignature
from ..semantics import Grid
from ..syntax import App, LocatedFormula, Sequent, lf_key, subformulas
from .derivation import HYPOTHESIS, Derivation
from .rules import ContextSchema, RuleSet, join_indices

_NOT_SEARCHED = ("cut", "wl", "wr", "init")


def _formula_sort(formulas) -> list:
    return sorted(set(formulas), key=lambda f: (f.depth, str(f)))


def generated_names(sig: LogicSignature) -> set[str]:
    n = sig.n
    names = {"init"}
    names |= {f"shift-right-{i}" for i in sig.values}
    names |= {f"shift-left-{i}-{j}" for i in sig.values for j in sig.values if i != j}
    names |= {f"coord-{i}-{j}" for i in sig.values for j in sig.values if i != j}
    for c in sig.connectives:
        names |= {f"{c}-I-{join_indices(args, n)}-{k}" for args, k in sig.rows(c)}
        names |= {f"{c}-E-{k}" for k in sig.values}
    return names


class Saturation:
    """Invertible-move prover for hypothesis-free goals (see module docstring)."""

    def __init__(self, sig: LogicSignature):
        self.sig = sig
        self.n = sig.n
        self._rows = {}
        for c in sig.connectives:
            for args, k in sig.rows(c):
                self._rows.setdefault((c, k), []).append(args)
        self._decided: dict = {}
        self._proofs: dict = {}
        self._failed: dict = {}

    def rows_to(self, connective: str, k: int) -> list:
        return self._rows.get((connective, k), [])

    def _intro_name(self, connective, row, k):
        return f"{connective}-I-{join_indices(row, self.n)}-{k}"

    # -- closing steps (depth 1 or 2) --------------------------------------

    def closer(self, goal: Sequent) -> Derivation | None:
        shared = goal.gamma & goal.delta
        if shared:
            return Derivation("init", goal)
        init = lambda s: Derivation("init", s)  # noqa: E731
        left_at: dict = {}
        for lf in sorted(goal.gamma, key=lf_key):
            left_at.setdefault(lf.formula, []).append(lf.value)
        for phi, vals in left_at.items():
            if len(vals) > 1:
                i, j = vals[0], vals[1]
                premise = Sequent(goal.gamma - {LocatedFormula(phi, j)}, goal.delta | {LocatedFormula(phi, i)})
                return Derivation(f"shift-left-{i}-{j}", goal, (init(premise),))
        right_at: dict = {}
        for lf in sorted(goal.delta, key=lf_key):
            right_at.setdefault(lf.formula, []).append(lf.value)
        for phi, vals in right_at.items():
            if len(vals) == self.n:
                rest = {LocatedFormula(phi, j) for j in range(2, self.n + 1)}
                premise = Sequent(goal.gamma | {LocatedFormula(phi, 1)}, goal.delta - rest)
                return Derivation("shift-right-1", goal, (init(premise),))
        for phi, vals in left_at.items():
            if isinstance(phi, App):
                for k in vals:
                    if not self.rows_to(phi.connective, k):
                        major = goal.add(delta=[LocatedFormula(phi, k)])
                        return Derivation(f"{phi.connective}-E-{k}", goal, (init(major),))
        for phi, vals in right_at.items():
            if not isinstance(phi, App):
                continue
            for k in vals:
                principal = LocatedFormula(phi, k)
                for row in self.rows_to(phi.connective, k):
                    located = [LocatedFormula(a, i) for a, i in zip(phi.args, row)]
                    if all(lf in goal.gamma for lf in located):
                        delta = goal.delta - {principal}
                        kids = tuple(init(Sequent(goal.gamma, delta | {lf})) for lf in located)
                        return Derivation(self._intro_name(phi.connective, row, k), goal, kids)
        return None

    # -- invertible moves ---------------------------------------------------

    def moves(self, goal: Sequent) -> list:
        """Candidate ``(rule, premises)`` steps, cheapest first."""
        narrow, wide, shifts, splits = [], [], [], []
        left_values: dict = {}
        for lf in goal.gamma:
            left_values.setdefault(lf.formula, set()).add(lf.value)
        for lf in sorted(goal.gamma, key=lf_key):
            phi = lf.formula
            if not isinstance(phi, App):
                continue
            rows = self.rows_to(phi.connective, lf.value)
            minors = []
            for row in rows:
                located = frozenset(LocatedFormula(a, i) for a, i in zip(phi.args, row))
                if located <= goal.gamma:
                    minors = None
                    break
                minors.append(goal.add(gamma=located))
            if not minors:
                continue
            major = goal.add(delta=[lf])
            move = (f"{phi.connective}-E-{lf.value}", (major, *minors))
            (narrow if len(minors) == 1 else wide).append(move)
        right_values: dict = {}
        for lf in goal.delta:
            right_values.setdefault(lf.formula, set()).add(lf.value)
        for phi in _formula_sort(right_values):
            if phi in left_values:
                continue
            held = right_values[phi]
            missing = [v for v in range(1, self.n + 1) if v not in held]
            if len(missing) == 1:
                m = missing[0]
                block = {LocatedFormula(phi, v) for v in held}
                premise = Sequent(goal.gamma | {LocatedFormula(phi, m)}, goal.delta - block)
                shifts.append((f"shift-right-{m}", (premise,)))
            else:
                i, j = missing[0], missing[1]
                splits.append((f"coord-{i}-{j}", (goal.add(delta=[LocatedFormula(phi, i)]),
                                                   goal.add(delta=[LocatedFormula(phi, j)]))))
        return narrow + shifts + wide + splits

    # -- decision and bounded proof ----------------------------------------

    def decide(self, goal: Sequent) -> bool:
        """Unbounded, backtrack-free provability test."""
        known = self._decided.get(goal)
        if known is not None:
            return known
        if self.closer(goal) is not None:
            result = True
        else:
            options = self.moves(goal)
            result = bool(options) and all(self.decide(p) for p in options[0][1])
        self._decided[goal] = result
        return result

    def prove(self, goal: Sequent, budget: int) -> Derivation | None:
        if budget < 1:
            return None
        cached = self._proofs.get(goal)
        if cached is not None and cached.depth <= budget:
            return cached
        if self._failed.get(goal, 0) >= budget:
            return None
        found = self.closer(goal)
        if found is not None:
            return found if found.depth <= budget else None
        if budget > 1:
            for rule, premises in self.moves(goal):
                kids = []
                for p in premises:
                    d = self.prove(p, budget - 1)
                    if d is None:
                        break
                    kids.append(d)
                else:
                    found = Derivation(rule, goal, tuple(kids))
                    self._proofs[goal] = found
                    return found
        self._failed[goal] = budget
        return None

    def search(self, goal: Sequent, max_depth: int) -> Derivation | None:
        if not self.decide(goal):
            return None
        return self.prove(goal, max_depth)


class GenericSearch:
    """Iterative-deepening backward search over arbitrary context schemas."""

    def __init__(self, sig: LogicSignature, rules: RuleSet, hypotheses: Iterable[Sequent] = ()):
        self.sig = sig
        self.rules = rules
        self.hypotheses = sorted(set(hypotheses), key=str)
        self.pool = [s for s in rules if isinstance(s, ContextSchema) and s.name not in _NOT_SEARCHED]

    def search(self, goal: Sequent, max_depth: int) -> Derivation | None:
        formulas = set()
        for s in [goal, *self.hypotheses]:
            for phi in s.formulas():
                formulas.update(subformulas(phi))
        self.universe = _formula_sort(formulas)
        atoms = set(goal.atoms())
        for h in self.hypotheses:
            atoms |= h.atoms()
        self.grid = Grid(self.sig, atoms)
        self.models = np.ones(self.grid.size, dtype=bool)
        for h in self.hypotheses:
            self.models &= self.grid.satisfied(h)
        self._entailed: dict = {}
        self._failed: dict = {}
        if not self.entailed(goal):
            return None
        for budget in range(1, max_depth + 1):
            d = self.prove(goal, budget)
            if d is not None:
                return d
        return None

    def entailed(self, seq: Sequent) -> bool:
        known = self._entailed.get(seq)
        if known is None:
            known = self._entailed[seq] = bool((self.grid.satisfied(seq) | ~self.models).all())
        return known

    def _close(self, goal: Sequent, budget: int) -> Derivation | None:
        if goal.gamma & goal.delta and "init" in self.rules:
            return Derivation("init", goal)
        for h in self.hypotheses:
            if h == goal:
                return Derivation(HYPOTHESIS, goal)
        for h in self.hypotheses:
            if not (h.gamma <= goal.gamma and h.delta <= goal.delta):
                continue
            d = Derivation(HYPOTHESIS, h)
            if h.delta != goal.delta:
                if "wr" not in self.rules:
                    continue
                d = Derivation("wr", Sequent(h.gamma, goal.delta), (d,))
            if h.gamma != goal.gamma:
                if "wl" not in self.rules:
                    continue
                d = Derivation("wl", goal, (d,))
            if d.depth <= budget:
                return d
        return None

    def prove(self, goal: Sequent, budget: int) -> Derivation | None:
        if budget < 1 or self._failed.get(goal, 0) >= budget:
            return None
        d = self._close(goal, budget)
        if d is not None:
            return d
        if budget > 1:
            options = []
            for schema in self.pool:
                for inst in schema.backward(goal, self.universe):
                    if all(self.entailed(p) for p in inst.premises):
                        options.append(inst)
            options.sort(key=lambda inst: len(inst.premises))
            for inst in options:
                kids = []
                for p in inst.premises:
                    sub = self.prove(p, budget - 1)
                    if sub is None:
                        break
                    kids.append(sub)
                else:
                    return Derivation(inst.rule_name, goal, tuple(kids), inst.meta)
        self._failed[goal] = budget
        return None


class ProofSearch:
    """Reusable searcher; caches persist across goals for the same rule set."""

    def __init__(self, sig: LogicSignature, rules: RuleSet):
        self.sig = sig
        self.rules = rules
        self._saturation = Saturation(sig) if generated_names(sig) <= set(rules.names) else None

    def cache_size(self) -> int:
        sat = self._saturation
        return 0 if sat is None else len(sat._decided) + len(sat._proofs) + len(sat._failed)

    def clear_cache(self) -> None:
        if self._saturation is not None:
            self._saturation = Saturation(self.sig)

    def search(self, goal: Sequent, max_depth: int,
               hypotheses: Sequence[Sequent] = ()) -> Derivation | None:
        if max_depth < 1:
            raise ValueError(f"max_depth must be >= 1, got {max_depth}")
        if self._saturation is not None and not hypotheses:
            return self._saturation.search(goal, max_depth)
        return GenericSearch(self.sig, self.rules, hypotheses).search(goal, max_depth)


def search_proof(sig: LogicSignature, rules: RuleSet, goal: Sequent, max_depth: int,
                 hypotheses: Sequence[Sequent] = ()) -> Derivation | None:
    """Return a derivation of ``goal`` of depth at most ``max_depth``, or None."""
    return ProofSearch(sig, rules).search(goal, max_depth, hypotheses)
