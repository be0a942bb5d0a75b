"""Classifying groups written as direct sums of standard atoms.

Run with ``python3 notebooks/01_classifying_groups.py``.
"""

# %% Parsing and canonical form
# Terms can come in any order; equal atoms merge and w absorbs finite counts.
from sgbassian import Mode, classify, parse, render, ulm_profile

e = parse("Z(2^3) + Q + Z(2)^w + Z(2^3)^2")
print("canonical:", render(e))
print("Ulm profile at 2:", dict(ulm_profile(e, 2).f))

# %% A verdict with its trail
# The last rule in the trail decides; earlier ones are the per-component
# verdicts it combined.
for text in ["Z(3^2)^w", "Z(2) + Z(2^4)^w", "Z(2^2)^w + Z(2^3)^w + Z(2^9)^3"]:
    v = classify(parse(text), "sgb")
    print(f"\n{text}: {v.value.value}")
    for t in v.trail:
        print(f"   {t.rule_id:<20} {t.note}")

# %% Strict versus extended mode
# Strict mode cites only published results, so mixing primes is left open.
# Extended mode adds the primary-decomposition rule proved in docs/.
mixed = parse("Z(2^2)^w + Z(3^5)")
for mode in Mode:
    v = classify(mixed, "sgb", mode)
    print(f"{mode.value:>8}: {v.value.value} via {v.rule_id}")

# %% The stronger ESS property
for text in ["Z(3^2)^5 + Z(3^3)^w", "Z(2) + Z(2^3)", "Z(2^inf) + Z(2)"]:
    v = classify(parse(text), "ess")
    print(f"{text:<24} ESS {v.value.value:<9} {v.rule_id}")
