"""Finite-support models of countable direct sums.

The two maps into G/N are checked on probe-generated finite subgroups only;
nothing here claims injectivity on the infinite groups.

Run with ``python3 notebooks/03_countable_models.py``.
"""

# %% Z(2) + countably many Z(8), N generated by y + z
from sgbassian.constructions import simplify_a_demo, simplify_b_demo

rep = simplify_a_demo(2, 1, 3, depth=3)
for c in rep.checks:
    print(f"[{'ok' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
print(rep.witnesses)

# %% Countably many Z(4) plus one Z(2^inf), z = 1/4
rep = simplify_b_demo(2, 2, depth=3)
for c in rep.checks:
    print(f"[{'ok' if c.passed else 'FAIL'}] {c.name}: {c.detail}")

# %% Growing the probe set
for depth in range(1, 5):
    print("depth", depth, "passes:", simplify_b_demo(2, 1, depth=depth).passed)
