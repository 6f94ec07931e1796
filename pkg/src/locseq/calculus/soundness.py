"""Bounded soundness certification of rule schemas.

For every instance in a finite space (formula parameters over the first
``atoms`` atom names up to ``depth``; side contexts of at most ``context``
located formulas) the certifier checks that valid premises give a valid
conclusion. Truth columns are packed into ints so one instance costs a handful
of bitwise operations; contexts are swept as numpy arrays.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
import numpy as np

from ..logic import LogicSignature
from ..semantics import Grid, Valuation, satisfies
from ..syntax import App, Atom, Formula, LocatedFormula, Sequent, lf_key
from .rules import ContextSchema, RuleInstance, RuleSet, WeakeningSchema

ATOM_NAMES = "pqrstuvw"


@dataclass(frozen=True)
class InstanceSpec:
    atoms: int = 2
    depth: int = 1
    context: int = 1


@dataclass(frozen=True)
class UnsoundWitness:
    """A rule instance together with a valuation refuting it.

    With ``pointwise`` the valuation satisfies every premise but not the
    conclusion; otherwise every premise is valid and the valuation is a
    countermodel to the conclusion.
    """

    instance: RuleInstance
    valuation: Valuation
    pointwise: bool = False

    def render(self) -> str:
        prem = " ; ".join(str(p) for p in self.instance.premises) or "(none)"
        val = ", ".join(f"{a}=v{v}" for a, v in self.valuation.items())
        return f"{self.instance.rule_name}: {prem} ==> {self.instance.conclusion} refuted by {val}"


@dataclass
class SweepStats:
    instances: int = 0
    schemas: int = 0
    seconds: float = 0.0
    per_schema: dict = field(default_factory=dict)


def formula_pool(sig: LogicSignature, atoms: int, depth: int) -> list[Formula]:
    """All formulas over the first ``atoms`` atom names with nesting at most ``depth``."""
    layer = [Atom(a) for a in ATOM_NAMES[:atoms]]
    pool = list(layer)
    seen = set(pool)
    for _ in range(depth):
        new = []
        for conn in sig.connectives.values():
            for args in itertools.product(pool, repeat=conn.arity):
                f = App(conn.name, args)
                if f not in seen:
                    seen.add(f)
                    new.append(f)
        pool += new
    return pool


def contexts(located: list, size: int) -> list[frozenset]:
    out = []
    for k in range(size + 1):
        out += [frozenset(c) for c in itertools.combinations(located, k)]
    return out


class _Masks:
    def __init__(self, sig, pool):
        atoms = set()
        for f in pool:
            atoms |= _atoms(f)
        self.grid = Grid(sig, atoms)
        self.full = (1 << self.grid.size) - 1
        self._cache: dict = {}

    def of(self, lf: LocatedFormula) -> int:
        m = self._cache.get(lf)
        if m is None:
            m = self._cache[lf] = self.grid.mask(lf)
        return m

    def conj(self, lfs) -> int:
        out = self.full
        for lf in lfs:
            out &= self.of(lf)
        return out

    def disj(self, lfs) -> int:
        out = 0
        for lf in lfs:
            out |= self.of(lf)
        return out


def _atoms(f):
    if isinstance(f, Atom):
        return {f.name}
    out = set()
    for a in f.args:
        out |= _atoms(a)
    return out


def _refuting_valuation(sig: LogicSignature, seq: Sequent) -> Valuation:
    grid = Grid(sig, seq.atoms())
    return grid.valuation(int(np.argmin(grid.satisfied(seq))))


def certify_soundness(sig: LogicSignature, rules: RuleSet, spec: InstanceSpec = InstanceSpec(),
                      stats: SweepStats | None = None) -> UnsoundWitness | None:
    """Return the first unsound instance in canonical order, or None if all pass."""
    if stats is None:
        stats = SweepStats()
    start = time.perf_counter()
    pool = formula_pool(sig, spec.atoms, spec.depth)
    located = sorted((LocatedFormula(f, v) for f in pool for v in sig.values), key=lf_key)
    ctxs = contexts(located, spec.context)
    masks = _Masks(sig, pool)
    dtype = object if masks.grid.size > 63 else np.uint64
    full = np.array(masks.full, dtype=dtype)
    conj = np.array([masks.conj(c) for c in ctxs], dtype=dtype)
    disj = np.array([masks.disj(c) for c in ctxs], dtype=dtype)
    witness = None
    for schema in rules:
        count = 0
        if isinstance(schema, WeakeningSchema):
            witness, count = _sweep_weakening(sig, schema, ctxs, conj, disj, full)
        elif isinstance(schema, ContextSchema):
            witness, count = _sweep_context(sig, schema, pool, ctxs, masks, conj, disj, full)
        stats.instances += count
        stats.schemas += 1
        stats.per_schema[schema.name] = count
        if witness is not None:
            break
    stats.seconds = time.perf_counter() - start
    return witness


def _valid(g, d, lm, rm, full):
    # sequent (G ∪ L : D ∪ R) is valid iff ~(g & lm) | d | rm covers every row
    return ((~(g & lm) | d | rm) & full) == full


def _sweep_context(sig, schema, pool, ctxs, masks, conj, disj, full):
    count = 0
    g = conj[:, None]
    d = disj[None, :]
    for params in schema.space(pool):
        concl, prems = schema.parts(params)
        ok = np.ones((len(ctxs), len(ctxs)), dtype=bool)
        for left, right in prems:
            ok &= _valid(g, d, masks.conj(left), masks.disj(right), full)
        bad = ok & ~_valid(g, d, masks.conj(concl[0]), masks.disj(concl[1]), full)
        count += ok.size
        if bad.any():
            gi, di = np.unravel_index(int(np.argmax(bad)), bad.shape)
            inst = schema.instance(params, ctxs[gi], ctxs[di])
            return UnsoundWitness(inst, _refuting_valuation(sig, inst.conclusion)), count
    return None, count


def _sweep_weakening(sig, schema, ctxs, conj, disj, full):
    # premise G : D, conclusion G ∪ X : D (or G : D ∪ X), X ranging over contexts
    count = 0
    g = conj[:, None]
    d = disj[None, :]
    premise_ok = _valid(g, d, full, np.array(0, dtype=conj.dtype), full)
    for xi, x in enumerate(ctxs):
        if schema.side == "left":
            concl_ok = _valid(g, d, conj[xi], np.array(0, dtype=conj.dtype), full)
        else:
            concl_ok = _valid(g, d, full, disj[xi], full)
        bad = premise_ok & ~concl_ok
        count += bad.size
        if bad.any():
            gi, di = np.unravel_index(int(np.argmax(bad)), bad.shape)
            premise = Sequent(ctxs[gi], ctxs[di])
            concl = premise.add(gamma=x) if schema.side == "left" else premise.add(delta=x)
            inst = RuleInstance(schema.name, (premise,), concl)
            return UnsoundWitness(inst, _refuting_valuation(sig, concl)), count
    return None, count


def pointwise_witness(sig: LogicSignature, schema: ContextSchema, spec: InstanceSpec) -> UnsoundWitness | None:
    """Find an instance and valuation satisfying all premises but not the conclusion."""
    pool = formula_pool(sig, spec.atoms, spec.depth)
    located = sorted((LocatedFormula(f, v) for f in pool for v in sig.values), key=lf_key)
    masks = _Masks(sig, pool)
    for params in schema.space(pool):
        for gamma in contexts(located, spec.context):
            for delta in contexts(located, spec.context):
                inst = schema.instance(params, gamma, delta)
                held = masks.full
                for p in inst.premises:
                    held &= ~masks.conj(p.gamma) | masks.disj(p.delta)
                held &= masks.conj(inst.conclusion.gamma) & ~masks.disj(inst.conclusion.delta)
                held &= masks.full
                if held:
                    row = (held & -held).bit_length() - 1
                    used = inst.conclusion.atoms().union(*(p.atoms() for p in inst.premises))
                    val = Valuation({a: v for a, v in masks.grid.valuation(row).items() if a in used})
                    assert all(satisfies(sig, val, p) for p in inst.premises)
                    assert not satisfies(sig, val, inst.conclusion)
                    return UnsoundWitness(inst, val, pointwise=True)
    return None
