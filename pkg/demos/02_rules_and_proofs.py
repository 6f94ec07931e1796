"""Rules generated from a table, proof search, and the checker.

Run: python3 demos/02_rules_and_proofs.py
"""

from locseq import builtin_logic, parse_sequent
from locseq.calculus import Derivation, check_derivation, generate_rules, search_proof
from locseq.errors import CheckError

sig = builtin_logic("nlogic", 3)
rules = generate_rules(sig)

# %% Every table row becomes an introduction rule; every value an elimination rule.
for name in ["N1-I-2-1", "N1-I-1-3", "N1-E-1", "N1-E-2", "coord-1-2", "shift-right-1"]:
    print(f"{name:14} {rules.get(name).shape()}")

# %% Search backwards for a cut-free proof and re-check it.
goal = parse_sequent("|- N1(N1(p))@1, p@2, p@3", sig)
proof = search_proof(sig, rules, goal, max_depth=10)
print(f"\nproof of {goal}: depth {proof.depth}, {proof.size} nodes")
for path, node in proof.nodes():
    print(f"  {path:18} {node.rule:15} {node.sequent}")
check_derivation(sig, rules, proof)
print("checker: OK")

# %% Invalid goals get no proof at any depth; bad steps are pinpointed.
print("\n|- p@1, p@2 :", search_proof(sig, rules, parse_sequent("|- p@1, p@2", sig), 20))
bogus = Derivation("coord-1-1", parse_sequent("|-", sig),
                   (Derivation("init", parse_sequent("p@1 |- p@1", sig)),) * 2)
try:
    check_derivation(sig, rules, bogus)
except CheckError as exc:
    print("rejected:", exc)
