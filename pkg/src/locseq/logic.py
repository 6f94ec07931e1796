"""Truth-table signatures, the builtin catalog, JSON logic files, and evaluation."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Mapping

import numpy as np

from .errors import SignatureError, UnassignedAtomError
from .syntax import App, Atom, Formula

BUILTIN_NAMES = ("k3", "fde", "post", "nlogic", "bivalent-f")


@dataclass(frozen=True)
class Connective:
    """A ``p``-ary connective with a flat, row-major table (last argument fastest)."""

    name: str
    arity: int
    table: tuple

    def index(self, args, n: int) -> int:
        i = 0
        for v in args:
            i = i * n + (v - 1)
        return i


@dataclass(frozen=True)
class LogicSignature:
    name: str
    n: int
    value_names: tuple
    connectives: Mapping[str, Connective] = field(hash=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise SignatureError(f"a logic needs n >= 2 values, got {self.n!r}")
        if len(self.value_names) != self.n or len(set(self.value_names)) != self.n:
            raise SignatureError(f"expected {self.n} distinct value names, got {list(self.value_names)}")
        for key, conn in self.connectives.items():
            if key != conn.name:
                raise SignatureError(f"connective registered as {key!r} is named {conn.name!r}")
            if not (conn.name[:1].isascii() and conn.name[:1].isupper() and conn.name.isalnum()):
                raise SignatureError(f"connective name {conn.name!r} must be an uppercase-initial identifier")
            if conn.arity < 1:
                raise SignatureError(f"{conn.name}: arity must be >= 1")
            if len(conn.table) != self.n ** conn.arity:
                raise SignatureError(
                    f"{conn.name}: table has {len(conn.table)} entries, expected {self.n ** conn.arity}")
            bad = [v for v in conn.table if not (isinstance(v, int) and 1 <= v <= self.n)]
            if bad:
                raise SignatureError(f"{conn.name}: table entries {bad} outside 1..{self.n}")

    @property
    def values(self) -> range:
        return range(1, self.n + 1)

    def apply(self, name: str, args) -> int:
        conn = self.connectives[name]
        return conn.table[conn.index(args, self.n)]

    def rows(self, name: str) -> Iterator[tuple]:
        """Yield ``(argument values, result)`` in row-major order."""
        conn = self.connectives[name]
        for args, out in zip(itertools.product(self.values, repeat=conn.arity), conn.table):
            yield args, out

    def table_array(self, name: str) -> np.ndarray:
        conn = self.connectives[name]
        return np.asarray(conn.table, dtype=np.int8).reshape((self.n,) * conn.arity)

    def value_name(self, value: int) -> str:
        return self.value_names[value - 1]

    def with_table(self, name: str, table) -> "LogicSignature":
        """A copy with one connective's table replaced (used for mutation tests)."""
        conns = dict(self.connectives)
        old = conns[name]
        conns[name] = Connective(name, old.arity, tuple(table))
        return LogicSignature(self.name, self.n, self.value_names, conns)


def make_signature(name: str, n: int, connectives, value_names=None) -> LogicSignature:
    """Build a signature from ``(name, arity, table)`` triples."""
    if value_names is None:
        value_names = tuple(f"v{i}" for i in range(1, n + 1)) if isinstance(n, int) else ()
    conns: dict[str, Connective] = {}
    for cname, arity, table in connectives:
        if cname in conns:
            raise SignatureError(f"duplicate connective {cname!r}")
        conns[cname] = Connective(cname, arity, tuple(table))
    return LogicSignature(name, n, tuple(value_names), conns)


# -- builtin catalog ---------------------------------------------------------


def kleene3() -> LogicSignature:
    # t, n, f
    return make_signature("k3", 3, [("Neg", 1, (3, 2, 1))], ("t", "n", "f"))


def fde() -> LogicSignature:
    # t, b, n, f; both gaps are fixed points of negation
    return make_signature("fde", 4, [("Neg", 1, (4, 2, 3, 1))], ("t", "b", "n", "f"))


def post(n: int) -> LogicSignature:
    """Cyclic negation. Values are 1-based: v_i maps to v_{(i mod n) + 1}."""
    table = tuple((i % n) + 1 for i in range(1, n + 1))
    return make_signature(f"post{n}", n, [("Neg", 1, table)])


def nlogic(n: int) -> LogicSignature:
    """Unary N1..Nn where N_i sends v_i to v_n and every other value to v_1."""
    if not isinstance(n, int) or n < 2:
        raise SignatureError(f"nlogic needs n >= 2, got {n!r}")
    conns = [(f"N{i}", 1, tuple(n if j == i else 1 for j in range(1, n + 1)))
             for i in range(1, n + 1)]
    return make_signature(f"nlogic{n}", n, conns)


def bivalent_f() -> LogicSignature:
    return make_signature("bivalent-f", 2, [("Neg", 1, (2, 1)), ("F", 1, (2, 1))], ("t", "f"))


_FIXED_N = {"k3": 3, "fde": 4, "bivalent-f": 2}


def builtin_logic(name: str, n: int | None = None) -> LogicSignature:
    if name in _FIXED_N:
        if n is not None and n != _FIXED_N[name]:
            raise SignatureError(f"{name} has exactly {_FIXED_N[name]} values, not {n}")
        return {"k3": kleene3, "fde": fde, "bivalent-f": bivalent_f}[name]()
    if name in ("post", "nlogic"):
        if n is None:
            raise SignatureError(f"{name} needs an explicit value count n")
        if n < 2:
            raise SignatureError(f"{name} needs n >= 2, got {n}")
        return post(n) if name == "post" else nlogic(n)
    raise SignatureError(f"unknown builtin logic {name!r}; choose from {', '.join(BUILTIN_NAMES)}")


# -- JSON logic definitions --------------------------------------------------


def signature_from_dict(data) -> LogicSignature:
    if not isinstance(data, dict):
        raise SignatureError("a logic definition must be a JSON object")
    try:
        name, n, conns = data["name"], data["n"], data["connectives"]
    except KeyError as exc:
        raise SignatureError(f"logic definition is missing {exc.args[0]!r}") from None
    if not isinstance(name, str) or not isinstance(n, int) or isinstance(n, bool):
        raise SignatureError("'name' must be a string and 'n' an integer")
    if not isinstance(conns, list):
        raise SignatureError("'connectives' must be an array")
    triples = []
    for c in conns:
        if not isinstance(c, dict) or not {"name", "arity", "table"} <= c.keys():
            raise SignatureError(f"bad connective entry {c!r}")
        if not isinstance(c["table"], list) or not isinstance(c["arity"], int):
            raise SignatureError(f"{c.get('name')}: 'table' must be an array and 'arity' an integer")
        triples.append((c["name"], c["arity"], c["table"]))
    return make_signature(name, n, triples, data.get("values"))


def signature_to_dict(sig: LogicSignature) -> dict:
    return {
        "name": sig.name,
        "n": sig.n,
        "values": list(sig.value_names),
        "connectives": [{"name": c.name, "arity": c.arity, "table": list(c.table)}
                        for c in sig.connectives.values()],
    }


def load_logic(path) -> LogicSignature:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SignatureError(f"{path}: not valid JSON ({exc})") from None
    except OSError as exc:
        raise SignatureError(f"{path}: {exc.strerror}") from None
    return signature_from_dict(data)


# -- evaluation --------------------------------------------------------------


def eval_formula(sig: LogicSignature, val: Mapping[str, int], phi: Formula) -> int:
    if isinstance(phi, Atom):
        try:
            return val[phi.name]
        except KeyError:
            raise UnassignedAtomError(f"atom {phi.name!r} is not assigned a value") from None
    assert isinstance(phi, App)
    return sig.apply(phi.connective, [eval_formula(sig, val, a) for a in phi.args])
