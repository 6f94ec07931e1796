"""Truth tables, located sequents, and countermodels.

Run: python3 demos/01_values_and_validity.py
"""

from locseq import builtin_logic, consequence, is_valid, parse_sequent

# %% Three builtin negations side by side
for sig in (builtin_logic("k3"), builtin_logic("fde"), builtin_logic("post", 4)):
    cells = [f"{sig.value_name(v)}->{sig.value_name(sig.apply('Neg', [v]))}" for v in sig.values]
    print(f"{sig.name:6} Neg: {'  '.join(cells)}")

# %% A located sequent says: if every left location holds, some right one does.
k3 = builtin_logic("k3")
for text in ["p@1 |- p@1", "|- p@1, p@2, p@3", "|- p@1, p@3", "Neg(p)@2 |- p@2"]:
    verdict = is_valid(k3, parse_sequent(text, k3))
    print(f"\n{text!r}:", "valid" if verdict else "not valid")
    if not verdict:
        print(verdict.countermodel.render())

# %% Consequence restricts attention to valuations satisfying the premises.
n2 = builtin_logic("nlogic", 2)
goal = parse_sequent("|- p@2", n2)
print("\n|- p@1 entails |- p@2 ?", bool(consequence(n2, [parse_sequent("|- p@1", n2)], goal)))
