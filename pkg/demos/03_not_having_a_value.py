"""The operators N_i ("does not have value v_i") and what their rules settle.

Run: python3 demos/03_not_having_a_value.py
"""

from locseq import paperlab as pl

# %% N_i sends v_i to v_n and everything else to v_1.
sig = pl.n_operator_logic(4)
for i in sig.values:
    print(f"N{i}:", " ".join(f"v{v}->v{sig.apply(f'N{i}', [v])}" for v in sig.values))

# %% Which values act as truth and falsity for the N_i family?
for n in range(2, 7):
    s = pl.n_operator_logic(n)
    print(f"n={n}: truths {sorted(pl.identify_truths(s))}, falsities {sorted(pl.identify_falsities(s))}")

# %% The hand-stated N rules are sound and agree with the table-generated rules.
print()
print(pl.verify_n_rules(3).render())

# %% An introduction rule for an intermediate value cannot be stated this way.
for spec in pl.all_attempt_specs(3):
    print(pl.refute_attempt(spec).render())

# %% With such a rule, a formula can be made to vanish from a derivation.
d, hyp, spec = pl.disappearance_derivation(3)
print(f"\nfrom {hyp}:")
for path, node in d.nodes():
    print(f"  {path:14} {node.rule:18} {node.sequent}")
print(pl.replay_disappearance(3).render())
