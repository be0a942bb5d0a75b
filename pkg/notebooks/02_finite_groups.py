"""Finite p-groups: heights, summands and the essential-summand search.

Run with ``python3 notebooks/02_finite_groups.py``.
"""

# %% Heights and gaps
# In Z(2) + Z(8) the element (1, 2) has heights 0, 2, inf.  Two jumps of more
# than one: the two-gap pattern that no cyclic summand can carry.
from sgbassian import finite as fe
from sgbassian.constructions import homocyclic_hull, two_gap_witness

G = fe.parse_group("2:[1,3]")
x = two_gap_witness(G)
seq = fe.height_sequence(G, x)
print("witness", x, "heights", seq, "gap positions", seq.gaps)

# %% The oracle agrees
H = fe.span(G, [x])
print("summand containing <x> essentially:", fe.essential_summand_oracle(G, H))

# %% In a homocyclic group every subgroup has a hull
G = fe.parse_group("2:[3,3,3]")
H = fe.span(G, [(2, 4, 0), (0, 0, 4)])
X = homocyclic_hull(G, H)
print("H =", H, "  hull X =", X, "  structure", fe.structure(G, X), "  pure", fe.is_pure(G, X))

# %% Counting subgroups
for text in ["2:[1,1,1]", "2:[2,2]", "3:[1,2]", "2:[1,1,1,1,1,1,1]"]:
    G = fe.parse_group(text)
    print(text, sum(1 for _ in fe.enumerate_subgroups(G)), "subgroups")

# %% Which small 2-groups have every subgroup essential in a summand?
from sgbassian.verify import ess_groups_bruteforce, exponent_partitions

for exps in exponent_partitions(5):
    G = fe.make_group(2, exps)
    ok, bad = ess_groups_bruteforce(G)
    print(f"{str(G):<16} {'yes' if ok else 'no, e.g. ' + str(bad)}")
