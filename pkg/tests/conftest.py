import itertools

import pytest
from hypothesis import strategies as st

from locseq import logic
from locseq.syntax import App, Atom, LocatedFormula, Sequent

ATOMS = ["p", "q", "r", "p1", "x2"]


def formulas(sig, max_depth=3):
    atoms = st.sampled_from(ATOMS).map(Atom)
    conns = list(sig.connectives.values())

    def extend(children):
        return st.one_of(*[
            st.tuples(*[children] * c.arity).map(lambda args, c=c: App(c.name, tuple(args)))
            for c in conns])

    return st.recursive(atoms, extend, max_leaves=2 ** max_depth)


def located(sig):
    return st.builds(LocatedFormula, formulas(sig), st.integers(1, sig.n))


def sequents(sig, max_side=3):
    side = st.frozensets(located(sig), max_size=max_side)
    return st.builds(Sequent, side, side)


def brute_satisfies(sig, val, seq):
    """Oracle: direct recursion over the flat tables, no numpy."""
    def ev(f):
        if isinstance(f, Atom):
            return val[f.name]
        conn = sig.connectives[f.connective]
        args = [ev(a) for a in f.args]
        idx = 0
        for a in args:
            idx = idx * sig.n + (a - 1)
        return conn.table[idx]
    if all(ev(lf.formula) == lf.value for lf in seq.gamma):
        return any(ev(lf.formula) == lf.value for lf in seq.delta)
    return True


def brute_valid(sig, seq):
    atoms = sorted(seq.atoms())
    for values in itertools.product(sig.values, repeat=len(atoms)):
        if not brute_satisfies(sig, dict(zip(atoms, values)), seq):
            return False
    return True


@pytest.fixture
def k3():
    return logic.kleene3()


@pytest.fixture
def n3():
    return logic.nlogic(3)


@pytest.fixture
def n2():
    return logic.nlogic(2)
