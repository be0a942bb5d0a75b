import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sgbassian import constructions as cons
from sgbassian import finite as fe
from sgbassian.errors import BadParameters, NoWitness, PreconditionFailed
from sgbassian.verify import random_summand_instance

from strategies import subgroups


# -- homocyclic hull -----------------------------------------------------------

def test_hull_examples():
    G = fe.make_group(2, [3, 3, 3])
    H = fe.span(G, [(2, 4, 0)])
    X = cons.homocyclic_hull(G, H)
    assert X == fe.span(G, [(1, 2, 0)])
    assert fe.structure(G, X) == [3]
    assert cons.hull_failures(G, H, X) == []
    assert cons.homocyclic_hull(G, fe.trivial(G)).weight == 0
    G = fe.make_group(3, [2, 2])
    assert cons.homocyclic_hull(G, fe.socle(G)) == fe.whole(G)


def test_hull_needs_homocyclic():
    G = fe.make_group(2, [1, 3])
    with pytest.raises(PreconditionFailed):
        cons.homocyclic_hull(G, fe.trivial(G))


@st.composite
def homocyclic_with_subgroup(draw):
    p = draw(st.sampled_from([2, 3]))
    n = draw(st.integers(1, 3))
    r = draw(st.integers(1, 4 if p == 2 else 3))
    G = fe.make_group(p, [n] * r)
    return G, draw(subgroups(G, max_gens=r))


@given(homocyclic_with_subgroup())
def test_hull_properties(data):
    G, H = data
    assert cons.hull_failures(G, H, cons.homocyclic_hull(G, H)) == []


# -- two-gap witness -----------------------------------------------------------

@pytest.mark.parametrize("group,x,seq", [
    ("2:[1,3]", (1, 2), "(0, 2, inf)"),
    ("3:[1,4]", (1, 9), "(0, 3, inf)"),
])
def test_two_gap_examples(group, x, seq):
    G = fe.parse_group(group)
    w = cons.two_gap_witness(G, verify_oracle=True)
    assert w == x
    assert str(fe.height_sequence(G, w)) == seq


def test_two_gap_none_for_profile_groups():
    for text in ("2:[2,2]", "2:[2,3]", "3:[1]", "2:[1,2,2]"):
        with pytest.raises(NoWitness):
            cons.two_gap_witness(fe.parse_group(text))


def test_two_gap_explicit_indices():
    G = fe.make_group(2, [4, 2, 1])
    x = cons.two_gap_witness(G, 2, 0)
    assert x == (4, 0, 1)
    with pytest.raises(NoWitness):
        cons.two_gap_witness(G, 1, 2)


# -- projection ----------------------------------------------------------------

def test_project_summand_example():
    G = fe.make_group(2, [2, 2])
    A = fe.span(G, [(1, 2)])
    C = fe.span(G, [(0, 1)])
    H = fe.span(G, [(1, 0)])
    K = fe.span(G, [(0, 1)])
    N = fe.span(G, [(2, 0)])
    PA = cons.project_summand(G, A, C, H, K, N)
    assert PA == fe.span(G, [(1, 0)])
    assert fe.is_direct_sum(G, PA, C)
    assert all(cons.projection_checks(G, A, C, H, K, N, PA).values())


def test_project_identity_when_a_is_h():
    G = fe.make_group(2, [2, 1])
    H = fe.span(G, [(1, 0)])
    K = fe.span(G, [(0, 1)])
    assert cons.project_summand(G, H, K, H, K, fe.socle_of(G, H)) == H


def test_project_summand_preconditions():
    G = fe.make_group(2, [2, 2])
    A = fe.span(G, [(1, 2)])
    C = fe.span(G, [(0, 1)])
    H = fe.span(G, [(1, 0)])
    K = fe.span(G, [(0, 1)])
    with pytest.raises(PreconditionFailed, match="essential"):
        cons.project_summand(G, A, C, H, K, fe.trivial(G))
    with pytest.raises(PreconditionFailed, match="A and C"):
        cons.project_summand(G, A, A, H, K, fe.span(G, [(2, 0)]))
    with pytest.raises(PreconditionFailed, match="H and K"):
        cons.project_summand(G, A, C, H, H, fe.span(G, [(2, 0)]))


@given(st.integers(0, 10 ** 6))
def test_random_instances_satisfy_the_conclusions(seed):
    G, A, C, H, K, N = random_summand_instance(random.Random(seed))
    PA = cons.project_summand(G, A, C, H, K, N)
    assert cons.projection_checks(G, A, C, H, K, N, PA) == {
        "injective_on_A": True, "complement_C": True, "summand_of_H": True, "fixes_N": True}


# -- finite-support model ----------------------------------------------------

def test_quasicyclic_arithmetic():
    G = cons.CountablePGroup(2, [cons.Schema("Z", None, 1)])
    a = G.gen("Z", 0, Fraction(3, 4))
    b = G.gen("Z", 0, Fraction(1, 2))
    assert G.add(a, b) == G.gen("Z", 0, Fraction(1, 4))
    assert G.order_exp(a) == 2
    assert G.scale(4, a) == G.zero
    with pytest.raises(IndexError):
        G.gen("Z", 1)


def test_simplify_a_examples():
    rep = cons.simplify_a_demo(2, 1, 3)
    assert rep.passed
    assert len(rep.parameters["probes"]) == 4
    names = {c.name for c in rep.checks}
    assert {"relations", "additive_mod_N", "kernel_trivial", "x_not_killed", "not_essential_in_summand"} <= names
    with pytest.raises(BadParameters):
        cons.simplify_a_demo(2, 1, 2)


def test_simplify_b_examples():
    rep = cons.simplify_b_demo(2, 1, depth=3)
    assert rep.passed
    G = cons.CountablePGroup(2, [cons.Schema("Y", 1), cons.Schema("Z", None, 1)])
    rules = cons.GenMap({"Y": cons.Shift("Y", 1), "Z": cons.DivideIndex()})
    assert rules(G, G.gen("Z", 0, Fraction(1, 2))) == G.gen("Z", 0, Fraction(1, 4))
    assert rules(G, G.zero) == G.zero


@pytest.mark.parametrize("p,n,depth", [(p, n, d) for p in (2, 3) for n in (1, 2) for d in (1, 2, 3, 4)
                                       if p ** ((n + 1) * d) <= 3 ** 6])
def test_simplify_b_exhaustive_small_torsion(p, n, depth):
    # division section additive mod N and injective on p^depth-torsion probes
    assert cons.simplify_b_demo(p, n, depth=depth).passed


def test_simplify_checks_catch_a_wrong_map():
    # the identity sends y + z into N, so kernel triviality must fail
    G = cons.CountablePGroup(2, [cons.Schema("Y", 1, 1), cons.Schema("Z", 3)])
    x = G.add(G.gen("Y"), G.gen("Z", 0, 2))
    N = cons.CyclicQuotient(G, x)
    rep = cons.DemoReport("identity", {})
    ident = cons.GenMap({"Y": cons.Identity(), "Z": cons.Identity()})
    cons._homomorphism_checks(rep, G, lambda g: ident(G, g), N, [G.gen("Y"), G.gen("Z")], [])
    assert not rep.passed
    assert [c.name for c in rep.checks if not c.passed] == ["kernel_trivial"]


def test_demo_report_dict():
    d = cons.simplify_a_demo(2, 1, 3, depth=1).to_dict()
    assert d["passed"] and d["name"] == "simplify-a"
    assert all(set(c) == {"name", "passed", "detail"} for c in d["checks"])
