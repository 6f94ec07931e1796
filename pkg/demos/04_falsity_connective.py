"""A falsity connective F in two-valued logic, defined without negation.

Run: python3 demos/04_falsity_connective.py
"""

from locseq import builtin_logic, parse_sequent, pointwise_equivalent
from locseq import paperlab as pl
from locseq.calculus import generate_rules, search_proof

sig = builtin_logic("bivalent-f")
rules = generate_rules(sig)

# %% F(φ) is located at t exactly when φ is located at f, valuation by valuation.
for a, b in [("|- F(p)@1", "|- p@2"), ("|- F(p)@2", "|- p@1"), ("|- F(p)@1", "|- p@1")]:
    print(f"{a:14} ~ {b:8}", pointwise_equivalent(sig, parse_sequent(a, sig), parse_sequent(b, sig)))

# %% Each direction is a short derivation from the other.
h = parse_sequent("|- p@2", sig)
d = search_proof(sig, rules, parse_sequent("|- F(p)@1", sig), 3, hypotheses=[h])
print("\n|- F(p)@1 from |- p@2:", " <- ".join(node.rule for _, node in d.nodes()))

for r in pl.check_disquotation():
    print(r.render())
