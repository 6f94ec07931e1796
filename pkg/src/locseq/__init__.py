"""Finite-valued logics with located sequents.

Formulas carry explicit truth-value locations ``(φ, k)``; sequents ``Γ : Δ``
are checked by exhaustive valuation sweeps, and a natural deduction calculus
is generated from the truth tables of any finite signature.
"""

from .errors import (CheckError, DerivationFormatError, LogicError, ParseError,
                     SignatureError)
from .logic import (BUILTIN_NAMES, Connective, LogicSignature, builtin_logic, eval_formula,
                    load_logic, make_signature)
from .semantics import (Countermodel, Grid, Valuation, Verdict, consequence,
                        find_countermodel, is_valid, pointwise_equivalent, satisfies)
from .syntax import (App, Atom, LocatedFormula, Sequent, format_sequent, parse_formula,
                     parse_located, parse_sequent)

__all__ = [
    "App", "Atom", "BUILTIN_NAMES", "CheckError", "Connective", "Countermodel",
    "DerivationFormatError", "Grid", "LocatedFormula", "LogicError", "LogicSignature",
    "ParseError", "Sequent", "SignatureError", "Valuation", "Verdict", "builtin_logic",
    "consequence", "eval_formula", "find_countermodel", "format_sequent", "is_valid",
    "load_logic", "make_signature", "parse_formula", "parse_located", "parse_sequent",
    "pointwise_equivalent", "satisfies",
]
