"""Derivation trees, their JSON form, and the checker."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from ..errors import CheckError, DerivationFormatError, ParseError, RuleMismatch
from ..logic import LogicSignature
from ..syntax import Sequent, parse_sequent
from .rules import RuleSet, explain_unknown

HYPOTHESIS = "hyp"


@dataclass(frozen=True)
class Derivation:
    """A proof tree node. ``premises`` holds the child derivations, in order.

    A leaf cites a zero-premise rule (``init``) or, when checking a derived
    rule, ``hyp`` for one of the supplied hypotheses.
    """

    rule: str
    sequent: Sequent
    premises: tuple = ()
    meta: Mapping | None = field(default=None, compare=False, hash=False)

    @property
    def depth(self) -> int:
        return 1 + max((p.depth for p in self.premises), default=0)

    @property
    def size(self) -> int:
        return 1 + sum(p.size for p in self.premises)

    def nodes(self, path: str = "root") -> Iterator[tuple]:
        """Pre-order walk yielding ``(path, node)``."""
        yield path, self
        for i, p in enumerate(self.premises):
            yield from p.nodes(f"{path}.{i}")

    def to_dict(self) -> dict:
        out = {"rule": self.rule, "sequent": str(self.sequent),
               "premises": [p.to_dict() for p in self.premises]}
        if self.meta:
            out["meta"] = dict(self.meta)
        return out

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)


def derivation_from_dict(data, sig: LogicSignature, path: str = "root") -> Derivation:
    if not isinstance(data, dict):
        raise DerivationFormatError(f"{path}: node must be an object")
    if not isinstance(data.get("rule"), str) or not isinstance(data.get("sequent"), str):
        raise DerivationFormatError(f"{path}: node needs string fields 'rule' and 'sequent'")
    premises = data.get("premises", [])
    if not isinstance(premises, list):
        raise DerivationFormatError(f"{path}: 'premises' must be an array")
    meta = data.get("meta")
    if meta is not None and not isinstance(meta, dict):
        raise DerivationFormatError(f"{path}: 'meta' must be an object")
    try:
        seq = parse_sequent(data["sequent"], sig)
    except ParseError as exc:
        raise DerivationFormatError(f"{path}: {exc}") from None
    children = tuple(derivation_from_dict(p, sig, f"{path}.{i}") for i, p in enumerate(premises))
    return Derivation(data["rule"], seq, children, meta)


def derivation_from_json(text: str, sig: LogicSignature) -> Derivation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DerivationFormatError(f"not valid JSON: {exc}") from None
    return derivation_from_dict(data, sig)


def check_node(sig: LogicSignature, rules: RuleSet, node: Derivation, path: str = "root",
               hypotheses: Iterable[Sequent] = ()) -> None:
    """Check one inference step in isolation."""
    premises = [p.sequent for p in node.premises]
    if node.rule == HYPOTHESIS:
        if premises:
            raise CheckError(path, node.rule, "a hypothesis leaf has no premises")
        if node.sequent not in set(hypotheses):
            raise CheckError(path, node.rule, f"{node.sequent} is not among the hypotheses")
        return
    schema = rules.get(node.rule)
    if schema is None:
        raise CheckError(path, node.rule, explain_unknown(node.rule, sig.n, rules))
    try:
        schema.match(premises, node.sequent)
    except RuleMismatch as exc:
        raise CheckError(path, node.rule, str(exc)) from None


def check_derivation(sig: LogicSignature, rules: RuleSet, d: Derivation,
                     hypotheses: Iterable[Sequent] = ()) -> None:
    """Raise :class:`CheckError` at the first bad node (pre-order); return None if sound."""
    hypotheses = frozenset(hypotheses)
    for path, node in d.nodes():
        check_node(sig, rules, node, path, hypotheses)


def is_correct(sig: LogicSignature, rules: RuleSet, d: Derivation,
               hypotheses: Iterable[Sequent] = ()) -> bool:
    try:
        check_derivation(sig, rules, d, hypotheses)
    except CheckError:
        return False
    return True
