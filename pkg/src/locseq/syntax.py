"""Object-language syntax: formulas, located formulas, sequents, and their text form.

Grammar (prefix application only, no precedence)::

    formula  = atom | conn "(" formula { "," formula } ")"
    atom     = lowercase-letter { letter | digit }
    conn     = uppercase-letter { letter | digit }
    located  = formula "@" integer
    sequent  = [ located { "," located } ] "|-" [ located { "," located } ]

The printer emits the canonical form: no blanks inside formulas, ``", "``
between located formulas, ``" |- "`` as the turnstile, and each side sorted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Iterator, Union

from .errors import ArityError, LocationError, ParseError, UnknownConnectiveError

if TYPE_CHECKING:
    from .logic import LogicSignature


@dataclass(frozen=True)
class Atom:
    name: str
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("atom", self.name)))

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.name

    @property
    def depth(self) -> int:
        return 0


@dataclass(frozen=True)
class App:
    connective: str
    args: tuple
    _hash: int = field(init=False, repr=False, compare=False)
    _text: str = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))
        object.__setattr__(self, "_hash", hash((self.connective, self.args)))
        text = f"{self.connective}({','.join(str(a) for a in self.args)})"
        object.__setattr__(self, "_text", text)

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self._text

    @property
    def depth(self) -> int:
        return 1 + max(a.depth for a in self.args)


Formula = Union[Atom, App]


def atoms_of(phi: Formula) -> set[str]:
    if isinstance(phi, Atom):
        return {phi.name}
    out: set[str] = set()
    for a in phi.args:
        out |= atoms_of(a)
    return out


def subformulas(phi: Formula) -> Iterator[Formula]:
    """Yield ``phi`` and every subformula, outermost first (duplicates possible)."""
    yield phi
    if isinstance(phi, App):
        for a in phi.args:
            yield from subformulas(a)


@dataclass(frozen=True)
class LocatedFormula:
    """The pair ``(formula, value)``: the formula is placed at value index ``value``."""

    formula: Formula
    value: int

    def __str__(self):
        return f"{self.formula}@{self.value}"


def lf_key(lf: LocatedFormula):
    return (str(lf.formula), lf.value)


@dataclass(frozen=True)
class Sequent:
    """``gamma : delta`` over finite sets of located formulas."""

    gamma: frozenset = frozenset()
    delta: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.gamma, frozenset):
            object.__setattr__(self, "gamma", frozenset(self.gamma))
        if not isinstance(self.delta, frozenset):
            object.__setattr__(self, "delta", frozenset(self.delta))

    def __str__(self):
        return format_sequent(self)

    def located(self) -> frozenset:
        return self.gamma | self.delta

    def formulas(self) -> set:
        return {lf.formula for lf in self.gamma} | {lf.formula for lf in self.delta}

    def atoms(self) -> set[str]:
        out: set[str] = set()
        for phi in self.formulas():
            out |= atoms_of(phi)
        return out

    def add(self, gamma: Iterable = (), delta: Iterable = ()) -> "Sequent":
        return Sequent(self.gamma | frozenset(gamma), self.delta | frozenset(delta))


def format_sequent(seq: Sequent) -> str:
    left = ", ".join(str(lf) for lf in sorted(seq.gamma, key=lf_key))
    right = ", ".join(str(lf) for lf in sorted(seq.delta, key=lf_key))
    return " ".join(part for part in (left, "|-", right) if part)


def normalize(text: str) -> str:
    """Whitespace normalization used by the round-trip contract."""
    return "".join(text.split())


# -- parsing -----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, sig: "LogicSignature"):
        self.text = text
        self.sig = sig
        self.pos = 0

    def error(self, message, cls=ParseError, pos=None):
        return cls(message, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str):
        self.skip()
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos:self.pos + len(token)] or "end of input"
            raise self.error(f"expected {token!r}, found {found!r}")
        self.pos += len(token)

    def name(self) -> str:
        self.skip()
        start = self.pos
        if start >= len(self.text) or not self.text[start].isascii() or not self.text[start].isalpha():
            found = self.text[start] if start < len(self.text) else "end of input"
            raise self.error(f"expected a name, found {found!r}")
        self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isascii() and self.text[self.pos].isalnum():
            self.pos += 1
        return self.text[start:self.pos]

    def formula(self) -> Formula:
        self.skip()
        start = self.pos
        ident = self.name()
        if ident[0].islower():
            return Atom(ident)
        conn = self.sig.connectives.get(ident)
        if conn is None:
            raise self.error(f"unknown connective {ident!r}", UnknownConnectiveError, start)
        self.expect("(")
        args = [self.formula()]
        while self.peek() == ",":
            self.pos += 1
            args.append(self.formula())
        self.expect(")")
        if len(args) != conn.arity:
            raise self.error(
                f"connective {ident} has arity {conn.arity}, applied to {len(args)} argument(s)",
                ArityError, start)
        return App(ident, tuple(args))

    def located(self) -> LocatedFormula:
        phi = self.formula()
        self.expect("@")
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a value index after '@'")
        value = int(self.text[start:self.pos])
        if not 1 <= value <= self.sig.n:
            raise self.error(f"location {value} outside 1..{self.sig.n}", LocationError, start)
        return LocatedFormula(phi, value)

    def side(self, stop: str) -> list:
        self.skip()
        if self.text.startswith(stop, self.pos) if stop else self.pos == len(self.text):
            return []
        items = [self.located()]
        while self.peek() == ",":
            self.pos += 1
            items.append(self.located())
        return items

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            raise self.error(f"unexpected trailing text {self.text[self.pos:]!r}")


def parse_formula(text: str, sig: "LogicSignature") -> Formula:
    p = _Parser(text, sig)
    phi = p.formula()
    p.end()
    return phi


def parse_located(text: str, sig: "LogicSignature") -> LocatedFormula:
    p = _Parser(text, sig)
    lf = p.located()
    p.end()
    return lf


def parse_sequent(text: str, sig: "LogicSignature") -> Sequent:
    p = _Parser(text, sig)
    gamma = p.side("|-")
    p.expect("|-")
    delta = p.side("")
    p.end()
    return Sequent(frozenset(gamma), frozenset(delta))
