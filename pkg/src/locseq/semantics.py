"""Valuations, satisfaction of located sequents, validity and consequence.

Validity and consequence are decided by sweeping every valuation of the atoms
that occur in the query. Satisfaction only inspects occurring formulas, so
restricting the sweep to those atoms loses nothing. Valuations are visited in
lexicographic order of value indices with atoms sorted by name; the first
failure found is the one reported.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

import numpy as np

from .logic import LogicSignature, eval_formula
from .syntax import App, Atom, Formula, LocatedFormula, Sequent


class Valuation(Mapping):
    """An immutable assignment of value indices to a finite set of atoms."""

    __slots__ = ("_items",)

    def __init__(self, assignment: Mapping[str, int] | Iterable = ()):
        self._items = dict(sorted(dict(assignment).items()))

    def __getitem__(self, atom):
        return self._items[atom]

    def __iter__(self):
        return iter(self._items)

    def __len__(self):
        return len(self._items)

    def __hash__(self):
        return hash(tuple(self._items.items()))

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return dict(self._items) == dict(other)
        return NotImplemented

    def __repr__(self):
        return f"Valuation({self._items})"


def valuations(atoms: Iterable[str], n: int) -> Iterator[Valuation]:
    names = sorted(set(atoms))
    for combo in itertools.product(range(1, n + 1), repeat=len(names)):
        yield Valuation(zip(names, combo))


def satisfies(sig: LogicSignature, val: Mapping[str, int], seq: Sequent) -> bool:
    if all(eval_formula(sig, val, lf.formula) == lf.value for lf in seq.gamma):
        return any(eval_formula(sig, val, lf.formula) == lf.value for lf in seq.delta)
    return True


@dataclass(frozen=True)
class Countermodel:
    """A valuation under which every Γ-location holds and no Δ-location does."""

    valuation: Valuation
    sequent: Sequent
    sig: LogicSignature = field(repr=False, compare=False)
    note: str = "every antecedent location holds and no succedent location does"

    def __post_init__(self):
        if satisfies(self.sig, self.valuation, self.sequent):
            raise ValueError(f"{dict(self.valuation)} satisfies {self.sequent}; not a countermodel")

    def render(self) -> str:
        lines = [f"{atom} = v{value} ({self.sig.value_name(value)})"
                 for atom, value in self.valuation.items()]
        lines.append(f"fails: {self.sequent}")
        return "\n".join(lines)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a validity or consequence query; truthy iff it holds."""

    holds: bool
    countermodel: Countermodel | None = None

    def __bool__(self):
        return self.holds


class Grid:
    """All valuations of a fixed atom list, evaluated column-wise with numpy.

    Row ``r`` of the grid is the ``r``-th valuation in lexicographic order
    (first atom slowest).
    """

    def __init__(self, sig: LogicSignature, atoms: Iterable[str]):
        self.sig = sig
        self.atoms = tuple(sorted(set(atoms)))
        k = len(self.atoms)
        self.size = sig.n ** k
        if k:
            idx = np.indices((sig.n,) * k, dtype=np.int8).reshape(k, -1) + 1
        else:
            idx = np.zeros((0, 1), dtype=np.int8)
        self._columns = {a: idx[i] for i, a in enumerate(self.atoms)}
        self._values: dict = {}
        self._tables: dict = {}

    def values(self, phi: Formula) -> np.ndarray:
        out = self._values.get(phi)
        if out is not None:
            return out
        if isinstance(phi, Atom):
            out = self._columns[phi.name]
        else:
            assert isinstance(phi, App)
            table = self._tables.get(phi.connective)
            if table is None:
                table = self._tables[phi.connective] = self.sig.table_array(phi.connective)
            out = table[tuple(self.values(a) - 1 for a in phi.args)]
        self._values[phi] = out
        return out

    def holds(self, lf: LocatedFormula) -> np.ndarray:
        return self.values(lf.formula) == lf.value

    def satisfied(self, seq: Sequent) -> np.ndarray:
        antecedent = np.ones(self.size, dtype=bool)
        for lf in seq.gamma:
            antecedent &= self.holds(lf)
        succedent = np.zeros(self.size, dtype=bool)
        for lf in seq.delta:
            succedent |= self.holds(lf)
        return ~antecedent | succedent

    def valuation(self, row: int) -> Valuation:
        return Valuation((a, int(self._columns[a][row])) for a in self.atoms)

    def mask(self, lf: LocatedFormula) -> int:
        """The located formula's truth column packed into an int (bit r = row r)."""
        bits = self.holds(lf)
        return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def _grid_for(sig: LogicSignature, seqs: Iterable[Sequent]) -> Grid:
    atoms: set[str] = set()
    for s in seqs:
        atoms |= s.atoms()
    return Grid(sig, atoms)


def is_valid(sig: LogicSignature, seq: Sequent) -> Verdict:
    grid = _grid_for(sig, [seq])
    sat = grid.satisfied(seq)
    if sat.all():
        return Verdict(True)
    row = int(np.argmin(sat))
    return Verdict(False, Countermodel(grid.valuation(row), seq, sig))


def find_countermodel(sig: LogicSignature, seq: Sequent) -> Countermodel | None:
    return is_valid(sig, seq).countermodel


def consequence(sig: LogicSignature, premises: Iterable[Sequent], goal: Sequent) -> Verdict:
    premises = list(premises)
    grid = _grid_for(sig, premises + [goal])
    ok = np.ones(grid.size, dtype=bool)
    for p in premises:
        ok &= grid.satisfied(p)
    bad = ok & ~grid.satisfied(goal)
    if not bad.any():
        return Verdict(True)
    row = int(np.argmax(bad))
    return Verdict(False, Countermodel(grid.valuation(row), goal, sig))


def pointwise_equivalent(sig: LogicSignature, a: Sequent, b: Sequent) -> bool:
    grid = _grid_for(sig, [a, b])
    return bool((grid.satisfied(a) == grid.satisfied(b)).all())
