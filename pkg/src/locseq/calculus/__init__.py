"""The located-sequent proof system: schemas, derivations, search, certification."""

from .derivation import (HYPOTHESIS, Derivation, check_derivation, check_node,
                         derivation_from_dict, derivation_from_json, is_correct)
from .rules import (ContextSchema, RuleInstance, RuleSet, Schema, WeakeningSchema,
                    generate_rules, join_indices, operational_rules, structural_rules)
from .search import GenericSearch, ProofSearch, Saturation, search_proof
from .soundness import (InstanceSpec, SweepStats, UnsoundWitness, certify_soundness,
                        formula_pool, pointwise_witness)

__all__ = [
    "HYPOTHESIS", "ContextSchema", "Derivation", "GenericSearch", "InstanceSpec",
    "ProofSearch", "RuleInstance", "RuleSet", "Saturation", "Schema", "SweepStats",
    "UnsoundWitness", "WeakeningSchema", "certify_soundness", "check_derivation",
    "check_node", "derivation_from_dict", "derivation_from_json", "formula_pool",
    "generate_rules", "is_correct", "join_indices", "operational_rules",
    "pointwise_witness", "search_proof", "structural_rules",
]
