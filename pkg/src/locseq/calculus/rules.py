"""Rule schemas of the located-sequent natural deduction system and their generation.

Nearly every rule shares one context ``Γ : Δ`` between its premises and its
conclusion and differs only in a fixed set of located formulas added on each
side. :class:`ContextSchema` captures that shape once; matching a proposed
step then amounts to solving for the shared context. Sides are sets, so
"``Γ, (φ, i)``" means ``Γ ∪ {(φ, i)}`` and the context may already contain
the principal formula.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from ..errors import RuleMismatch
from ..logic import LogicSignature
from ..syntax import App, Atom, Formula, LocatedFormula, Sequent, lf_key

EMPTY: frozenset = frozenset()


@dataclass(frozen=True)
class RuleInstance:
    rule_name: str
    premises: tuple
    conclusion: Sequent
    meta: Mapping = field(default_factory=dict, compare=False, hash=False)


def join_indices(indices: Iterable[int], n: int) -> str:
    """Index tuples inside rule names: digits run together, dotted once n > 9."""
    parts = [str(i) for i in indices]
    return ("." if n > 9 else "").join(parts)


class Schema:
    """Base class: a named family of rule instances."""

    name: str
    kind: str

    def match(self, premises: Sequence[Sequent], conclusion: Sequent) -> Mapping:
        raise NotImplementedError

    def backward(self, goal: Sequent, formulas: Sequence[Formula]) -> Iterator[RuleInstance]:
        return iter(())

    def shape(self) -> str:
        raise NotImplementedError


Side = tuple  # (left additions, right additions), each a frozenset of LocatedFormula


def _render_side(prefix: str, lfs) -> str:
    items = [prefix] + [str(lf) for lf in sorted(lfs, key=lf_key)]
    return ", ".join(items)


def _render(add: Side) -> str:
    return f"{_render_side('G', add[0])} |- {_render_side('D', add[1])}"


class ContextSchema(Schema):
    """A schema whose premises and conclusion share Γ/Δ up to fixed additions.

    ``parts(params)`` returns ``(conclusion_addition, [premise_addition, ...])``.
    ``candidates(formulas)`` proposes parameter tuples from formulas that occur
    in a step; ``space(pool)`` enumerates parameters for soundness sweeps.
    """

    def __init__(self, name: str, kind: str, premise_count: int,
                 parts: Callable, candidates: Callable, space: Callable,
                 placeholder: tuple, note: str = ""):
        self.name = name
        self.kind = kind
        self.premise_count = premise_count
        self.parts = parts
        self.candidates = candidates
        self.space = space
        self.placeholder = placeholder
        self.note = note

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    def instance(self, params, gamma=EMPTY, delta=EMPTY) -> RuleInstance:
        concl, prems = self.parts(params)
        premises = tuple(Sequent(gamma | l, delta | r) for l, r in prems)
        return RuleInstance(self.name, premises, Sequent(gamma | concl[0], delta | concl[1]),
                            {"params": [str(p) for p in params]})

    def solve(self, params, premises, conclusion):
        concl, prems = self.parts(params)
        if len(prems) != len(premises):
            return None
        pairs = [(conclusion, concl), *zip(premises, prems)]
        gamma = frozenset().union(*(s.gamma - add[0] for s, add in pairs))
        delta = frozenset().union(*(s.delta - add[1] for s, add in pairs))
        for s, (left, right) in pairs:
            if gamma | left != s.gamma or delta | right != s.delta:
                return None
        return gamma, delta

    def match(self, premises, conclusion):
        if len(premises) != self.premise_count:
            raise RuleMismatch(f"expected {self.premise_count} premise(s), found {len(premises)}")
        formulas = set(conclusion.formulas())
        for p in premises:
            formulas |= p.formulas()
        for params in self.candidates(sorted(formulas, key=str)):
            if self.solve(params, premises, conclusion) is not None:
                return {"params": [str(p) for p in params]}
        raise RuleMismatch(f"sequents do not fit the shape {self.shape()}")

    def backward(self, goal, formulas):
        seen = set()
        for params in self.candidates(formulas):
            concl, prems = self.parts(params)
            if not (concl[0] <= goal.gamma and concl[1] <= goal.delta):
                continue
            for gamma in dict.fromkeys((goal.gamma - concl[0], goal.gamma)):
                for delta in dict.fromkeys((goal.delta - concl[1], goal.delta)):
                    premises = tuple(Sequent(gamma | l, delta | r) for l, r in prems)
                    if goal in premises or premises in seen:
                        continue
                    seen.add(premises)
                    yield RuleInstance(self.name, premises, goal,
                                       {"params": [str(p) for p in params]})

    def shape(self) -> str:
        concl, prems = self.parts(self.placeholder)
        above = " ; ".join(_render(p) for p in prems) or "(no premises)"
        text = f"{above} ==> {_render(concl)}"
        return f"{text}   [{self.note}]" if self.note else text


class WeakeningSchema(Schema):
    """``wl``/``wr``: enlarge one side of the single premise."""

    kind = "structural"

    def __init__(self, side: str):
        self.side = side
        self.name = "wl" if side == "left" else "wr"

    def __repr__(self):
        return f"<WeakeningSchema {self.name}>"

    def match(self, premises, conclusion):
        if len(premises) != 1:
            raise RuleMismatch(f"expected 1 premise, found {len(premises)}")
        (p,) = premises
        if self.side == "left":
            ok = p.gamma <= conclusion.gamma and p.delta == conclusion.delta
        else:
            ok = p.delta <= conclusion.delta and p.gamma == conclusion.gamma
        if not ok:
            raise RuleMismatch(f"conclusion must extend the premise on the {self.side} only")
        return {}

    def shape(self) -> str:
        if self.side == "left":
            return "G |- D ==> G, G' |- D"
        return "G |- D ==> G |- D, D'"


class RuleSet:
    """An ordered collection of uniquely named schemas."""

    def __init__(self, name: str, schemas: Iterable[Schema]):
        self.name = name
        self._schemas: dict[str, Schema] = {}
        for s in schemas:
            if s.name in self._schemas:
                raise ValueError(f"duplicate schema name {s.name!r} in rule set {name!r}")
            self._schemas[s.name] = s

    def __iter__(self):
        return iter(self._schemas.values())

    def __len__(self):
        return len(self._schemas)

    def __contains__(self, name):
        return name in self._schemas

    def __repr__(self):
        return f"<RuleSet {self.name}: {len(self)} schemas>"

    def get(self, name: str) -> Schema | None:
        return self._schemas.get(name)

    @property
    def names(self) -> list[str]:
        return list(self._schemas)

    def union(self, other: "RuleSet", name: str | None = None) -> "RuleSet":
        return RuleSet(name or f"{self.name}+{other.name}", [*self, *other])

    __or__ = union

    def without(self, *names: str) -> "RuleSet":
        return RuleSet(self.name, [s for s in self if s.name not in names])


# -- structural schemas ------------------------------------------------------


def _single(formulas):
    for f in formulas:
        yield (f,)


def _lf(phi, value):
    return LocatedFormula(phi, value)


PHI = Atom("phi")


def init_schema(n: int) -> ContextSchema:
    def parts(params):
        phi, i = params
        both = frozenset({_lf(phi, i)})
        return (both, both), []

    def candidates(formulas):
        for f in formulas:
            for i in range(1, n + 1):
                yield (f, i)

    return ContextSchema("init", "structural", 0, parts, candidates, candidates,
                         (PHI, 1), note="for every value i; shown for i=1")


def shift_right_schema(i: int, n: int) -> ContextSchema:
    def parts(params):
        (phi,) = params
        rest = frozenset(_lf(phi, j) for j in range(1, n + 1) if j != i)
        return (EMPTY, rest), [(frozenset({_lf(phi, i)}), EMPTY)]

    return ContextSchema(f"shift-right-{i}", "structural", 1, parts, _single, _single, (PHI,))


def shift_left_schema(i: int, j: int) -> ContextSchema:
    def parts(params):
        (phi,) = params
        return (frozenset({_lf(phi, j)}), EMPTY), [(EMPTY, frozenset({_lf(phi, i)}))]

    return ContextSchema(f"shift-left-{i}-{j}", "structural", 1, parts, _single, _single, (PHI,))


def coord_schema(i: int, j: int) -> ContextSchema:
    def parts(params):
        (phi,) = params
        return (EMPTY, EMPTY), [(EMPTY, frozenset({_lf(phi, i)})), (EMPTY, frozenset({_lf(phi, j)}))]

    return ContextSchema(f"coord-{i}-{j}", "structural", 2, parts, _single, _single, (PHI,))


def cut_schema(n: int) -> ContextSchema:
    def parts(params):
        phi, i = params
        located = frozenset({_lf(phi, i)})
        return (EMPTY, EMPTY), [(EMPTY, located), (located, EMPTY)]

    def candidates(formulas):
        for f in formulas:
            for i in range(1, n + 1):
                yield (f, i)

    return ContextSchema("cut", "structural", 2, parts, candidates, candidates,
                         (PHI, 1), note="for every value i; shown for i=1")


def structural_rules(n: int) -> list[Schema]:
    values = range(1, n + 1)
    out: list[Schema] = [init_schema(n)]
    out += [shift_right_schema(i, n) for i in values]
    out += [shift_left_schema(i, j) for i in values for j in values if i != j]
    out += [coord_schema(i, j) for i in values for j in values if i != j]
    out += [WeakeningSchema("left"), WeakeningSchema("right"), cut_schema(n)]
    return out


# -- operational schemas from truth tables -----------------------------------


def _headed(connective):
    def candidates(formulas):
        for f in formulas:
            if isinstance(f, App) and f.connective == connective:
                yield f.args
    return candidates


def _placeholders(p):
    return (PHI,) if p == 1 else tuple(Atom(f"phi{m}") for m in range(1, p + 1))


def intro_schema(sig: LogicSignature, connective: str, row: tuple, k: int) -> ContextSchema:
    p = len(row)

    def parts(args):
        principal = frozenset({_lf(App(connective, args), k)})
        prems = [(EMPTY, frozenset({_lf(a, i)})) for a, i in zip(args, row)]
        return (EMPTY, principal), prems

    def space(pool):
        return itertools.product(pool, repeat=p)

    name = f"{connective}-I-{join_indices(row, sig.n)}-{k}"
    return ContextSchema(name, "I", p, parts, _headed(connective), space, _placeholders(p))


def elim_schema(sig: LogicSignature, connective: str, k: int) -> ContextSchema:
    rows = [args for args, out in sig.rows(connective) if out == k]
    p = sig.connectives[connective].arity

    def parts(args):
        major = (EMPTY, frozenset({_lf(App(connective, args), k)}))
        minors = [(frozenset(_lf(a, i) for a, i in zip(args, row)), EMPTY) for row in rows]
        return (EMPTY, EMPTY), [major, *minors]

    def space(pool):
        return itertools.product(pool, repeat=p)

    return ContextSchema(f"{connective}-E-{k}", "E", 1 + len(rows), parts,
                         _headed(connective), space, _placeholders(p))


def operational_rules(sig: LogicSignature, connective: str) -> list[Schema]:
    intros = [intro_schema(sig, connective, args, out) for args, out in sig.rows(connective)]
    elims = [elim_schema(sig, connective, k) for k in sig.values]
    return intros + elims


def generate_rules(sig: LogicSignature) -> RuleSet:
    schemas = structural_rules(sig.n)
    for name in sig.connectives:
        schemas += operational_rules(sig, name)
    return RuleSet(f"N{sig.n}:{sig.name}", schemas)


_STRUCTURAL_NAME = re.compile(r"^(shift-left|coord)-(\d+)-(\d+)$|^shift-right-(\d+)$")


def explain_unknown(name: str, n: int, rules: RuleSet) -> str:
    """Diagnose a rule name that is absent from ``rules``."""
    m = _STRUCTURAL_NAME.match(name)
    if m:
        if m.group(4) is not None:
            indices = [int(m.group(4))]
        else:
            indices = [int(m.group(2)), int(m.group(3))]
            if indices[0] == indices[1]:
                which = "coordination" if m.group(1) == "coord" else "left shift"
                return f"{which} requires i ≠ j (got i = j = {indices[0]})"
        bad = [i for i in indices if not 1 <= i <= n]
        if bad:
            return f"value index {bad[0]} outside 1..{n}"
    return f"no rule named {name!r} in rule set {rules.name}"
