"""Exhaustive completeness probe: every valid small sequent should get a proof."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from ..logic import LogicSignature
from ..syntax import LocatedFormula, Sequent, lf_key
from .derivation import check_derivation
from .rules import generate_rules
from .search import ProofSearch
from .soundness import _Masks, contexts, formula_pool


@dataclass
class ProbeReport:
    logic: str
    sequents: int = 0
    valid: int = 0
    proved: int = 0
    max_proof_depth: int = 0
    unproved: list = field(default_factory=list)      # valid but no proof: incompleteness
    unsound: list = field(default_factory=list)       # invalid yet proved
    bad_proofs: list = field(default_factory=list)    # proof rejected by the checker
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.unproved or self.unsound or self.bad_proofs)

    def summary(self) -> str:
        return (f"{self.logic}: {self.sequents} sequents, {self.valid} valid, {self.proved} proved "
                f"(max depth {self.max_proof_depth}), {len(self.unproved)} unproved, "
                f"{len(self.unsound)} unsound, {len(self.bad_proofs)} rejected, {self.seconds:.1f}s")


def completeness_probe(sig: LogicSignature, atoms: int = 1, depth: int = 2, context: int = 2,
                       max_depth: int = 10, check_every: int = 1,
                       cache_limit: int = 300_000, progress=None) -> ProbeReport:
    """Search every sequent with sides of at most ``context`` located formulas.

    Validity comes from packed truth columns; each proof found is re-checked
    (every ``check_every``-th one, to bound the cost of large sweeps).
    """
    start = time.perf_counter()
    report = ProbeReport(sig.name)
    pool = formula_pool(sig, atoms, depth)
    located = sorted((LocatedFormula(f, v) for f in pool for v in sig.values), key=lf_key)
    sides = contexts(located, context)
    masks = _Masks(sig, pool)
    conj = np.array([masks.conj(s) for s in sides], dtype=object)
    disj = np.array([masks.disj(s) for s in sides], dtype=object)
    rules = generate_rules(sig)
    searcher = ProofSearch(sig, rules)
    full = masks.full
    for gi, gamma in enumerate(sides):
        if searcher.cache_size() > cache_limit:
            searcher.clear_cache()
        if progress is not None:
            progress(gi, len(sides), report)
        valid_row = ((~conj[gi] | disj) & full) == full
        for di, delta in enumerate(sides):
            seq = Sequent(gamma, delta)
            valid = bool(valid_row[di])
            report.sequents += 1
            report.valid += valid
            d = searcher.search(seq, max_depth)
            if d is None:
                if valid:
                    report.unproved.append(seq)
                continue
            report.proved += 1
            report.max_proof_depth = max(report.max_proof_depth, d.depth)
            if not valid:
                report.unsound.append(seq)
            if report.proved % check_every == 0:
                try:
                    check_derivation(sig, rules, d)
                except Exception as exc:  # noqa: BLE001 - recorded, not raised
                    report.bad_proofs.append((seq, str(exc)))
    report.seconds = time.perf_counter() - start
    return report
