import random

import pytest
from hypothesis import given, strategies as st

from sgbassian import hnf
from sgbassian import finite as fe

from strategies import all_subgroup_sets, closure, group_with_subgroups


@pytest.mark.parametrize("x,p,v", [(1, 2, 0), (8, 2, 3), (12, 2, 2), (12, 3, 1), (81, 3, 4), (-18, 3, 2)])
def test_valuation_examples(x, p, v):
    assert hnf.valuation(x, p) == v


@given(st.sampled_from([2, 3, 5]), st.integers(0, 12), st.integers(1, 10 ** 6))
def test_valuation_of_power_times_unit(p, k, m):
    if m % p == 0:
        m += 1
    assert hnf.valuation(p ** k * m, p) == k


def test_hermite_trivial_and_full():
    assert hnf.hermite([], [1, 3], 2) == ((2, 0), (0, 8))
    assert hnf.hermite([(1, 0), (0, 1)], [1, 3], 2) == ((1, 0), (0, 1))


@given(group_with_subgroups(), st.randoms(use_true_random=False))
def test_hermite_is_canonical(data, rnd):
    # any generating set of the same subgroup gives the same form
    G, H = data
    gens = list(H.gens)
    extra = []
    for _ in range(3):
        x = G.zero
        for g in gens:
            x = G.add(x, G.scale(rnd.randrange(G.exponent and G.p ** G.exponent), g))
        extra.append(x)
    mixed = extra + gens
    rnd.shuffle(mixed)
    assert hnf.hermite(mixed, G.exponents, G.p) == H.basis


@given(group_with_subgroups())
def test_log_index_counts_elements(data):
    G, H = data
    elems = set(hnf.lattice_elements(H.basis, G.exponents, G.p))
    assert len(elems) == G.p ** hnf.log_index(H.basis, G.exponents, G.p)
    assert elems == closure(G, H.gens)


@given(group_with_subgroups(), st.data())
def test_in_lattice_agrees_with_element_set(data, draw):
    G, H = data
    members = closure(G, H.gens)
    x = tuple(draw.draw(st.integers(0, q - 1)) for q in G.moduli)
    assert hnf.in_lattice(x, H.basis) == (x in members)


def _gaussian_binomial_sum(n, q):
    # number of subspaces of an n-dimensional space over the q-element field
    total = 0
    for k in range(n + 1):
        num = den = 1
        for i in range(k):
            num *= q ** (n - i) - 1
            den *= q ** (i + 1) - 1
        total += num // den
    return total


@pytest.mark.parametrize("p,r", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 3), (3, 5), (2, 7)])
def test_enumeration_counts_elementary(p, r):
    count = sum(1 for _ in hnf.enumerate_lattices([1] * r, p))
    assert count == _gaussian_binomial_sum(r, p)


@pytest.mark.parametrize("p,exps", [(2, [2, 1]), (2, [2, 2]), (2, [3, 1]), (3, [2, 1]), (2, [2, 1, 1]), (2, [1, 3])])
def test_enumeration_matches_closure_oracle(p, exps):
    G = fe.make_group(p, exps)
    lattices = list(hnf.enumerate_lattices(exps, p))
    assert len(set(lattices)) == len(lattices)
    sets = {frozenset(hnf.lattice_elements(rows, exps, p)) for rows in lattices}
    assert sets == all_subgroup_sets(G)


def test_enumerated_forms_are_fixed_points():
    rng = random.Random(1)
    for rows in hnf.enumerate_lattices([3, 2, 1], 2):
        gens = list(rows)
        rng.shuffle(gens)
        assert hnf.hermite(gens, [3, 2, 1], 2) == rows
