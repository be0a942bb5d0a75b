"""The ten acceptance criteria, each as one test printing a PASS/FAIL line.

All comparisons are exact; the two timing bounds are the stated ones.
"""

from sgbassian import verify


def _detail(*results):
    return "; ".join(f"{r.suite}{r.params} cases={r.cases} counterexamples={len(r.counterexamples)} "
                     f"{r.runtime:.2f}s" for r in results)


def test_1_every_subgroup_essential_in_summand(acceptance):
    rs = [verify.suite_thm6(2, 7), verify.suite_thm6(3, 5)]
    ok = all(r.passed for r in rs)
    assert acceptance(1, "brute-force ESS agrees with support in {n-1, n}", ok, _detail(*rs)), rs


def test_2_profile_reformulation(acceptance):
    r = verify.suite_main3(8)
    ok = r.passed and r.cases == 4 ** 8 and r.runtime < 1.0
    assert acceptance(2, "profile predicate agrees with decomposition search", ok, _detail(r)), r


def test_3_heights_climb(acceptance):
    rs = [verify.suite_claim(2, 10), verify.suite_claim(3, 6)]
    ok = all(r.passed for r in rs)
    assert acceptance(3, "px != 0 implies height(px) = height(x) + 1 in profile groups", ok, _detail(*rs)), rs


def test_4_homocyclic_hull(acceptance):
    r = verify.suite_example2(seed=0, trials=1000)
    ok = r.passed and r.cases == 1000
    assert acceptance(4, "homocyclic hulls are pure, homocyclic and contain H essentially", ok, _detail(r)), r


def test_5_project_summand(acceptance):
    r = verify.suite_summand_lemma(seed=0, trials=500)
    ok = r.passed and r.cases == 500
    assert acceptance(5, "projection of a summand: four conclusions on random instances", ok, _detail(r)), r


def test_6_essential_definition(acceptance):
    rs = [verify.suite_essential_def(2, 5), verify.suite_essential_def(3, 5)]
    ok = all(r.passed for r in rs)
    assert acceptance(6, "essential by definition agrees with the socle criterion", ok, _detail(*rs)), rs


def test_7_pure_iff_summand(acceptance):
    r = verify.suite_pure_summand(2, 6)
    assert acceptance(7, "pure agrees with complement search", r.passed, _detail(r)), r


def test_8_golden_catalog(acceptance):
    r = verify.suite_catalog()
    texts = {g[0] for g in verify.GOLDEN}
    ok = r.passed and len(verify.GOLDEN) >= 18 and {"Q^w", "Z(2^inf)^w", "R{2:1}^w"} <= texts
    assert acceptance(8, "golden classifier catalog", ok, _detail(r)), r


def test_9_two_gap_witness(acceptance):
    r = verify.suite_two_gap(2, 10)
    assert acceptance(9, "two-gap witnesses and NoWitness for profile groups", r.passed,
                      _detail(r) + f" witnessed={r.info['witnessed']}"), r


def test_10_simplify_demos(acceptance):
    r = verify.suite_simplify(4)
    ok = r.passed and r.runtime < 10.0
    assert acceptance(10, "simplify demos pass every finite check up to depth 4", ok, _detail(r)), r
