"""Verification suites: exhaustive or seeded checks of the finite statements.

Every suite returns a :class:`SuiteResult`.  Counterexamples are plain dicts
sorted canonically, so a result depends only on its parameters and seed.
"""

import itertools
import random
import time
from dataclasses import dataclass, field

from sympy import isprime
from sympy.utilities.iterables import partitions

from . import constructions as cons
from . import finite as fe
from .classifier import Mode, classify, ess_n, profile_n
from .errors import BadParameters, NoWitness
from .expr import OMEGA, UlmProfile, parse, render_mult


@dataclass
class SuiteResult:
    suite: str
    params: dict
    cases: int = 0
    counterexamples: list = field(default_factory=list)
    runtime: float = 0.0
    info: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.counterexamples

    def finish(self, start):
        self.runtime = time.perf_counter() - start
        self.counterexamples.sort(key=repr)
        return self


def exponent_partitions(max_weight, min_weight=1):
    """Exponent lists (descending) of all p-groups of weight in the range."""
    for w in range(min_weight, max_weight + 1):
        for part in partitions(w):
            yield sorted((a for a, m in part.items() for _ in range(m)), reverse=True)


def _profile_of(exponents):
    f = {}
    for e in exponents:
        f[e - 1] = f.get(e - 1, 0) + 1
    return f


def _check_bounds(p, max_weight):
    if not isprime(p):
        raise BadParameters(f"{p} is not prime")
    if max_weight < 1:
        raise BadParameters("max-weight must be at least 1")
    if p ** max_weight > fe.max_order():
        raise BadParameters(f"{p}^{max_weight} exceeds the order guard {fe.max_order()}")


# -- 1. every subgroup essential in a summand vs the profile predicate -------

def ess_groups_bruteforce(G):
    """(True, None) if every subgroup is essential in a summand, else
    (False, first subgroup without such a summand)."""
    for H in fe.enumerate_subgroups(G):
        if fe.essential_summand_oracle(G, H) is None:
            return False, H
    return True, None


def suite_thm6(p=2, max_weight=7):
    _check_bounds(p, max_weight)
    start = time.perf_counter()
    res = SuiteResult("thm6", {"p": p, "max_weight": max_weight})
    yes = 0
    for exps in exponent_partitions(max_weight):
        G = fe.make_group(p, exps)
        brute, H = ess_groups_bruteforce(G)
        predicate = ess_n(UlmProfile(p, _profile_of(exps))) is not None
        res.cases += 1
        yes += brute
        if brute != predicate:
            res.counterexamples.append({"group": str(G), "bruteforce": brute, "predicate": predicate,
                                        "subgroup": str(H) if H is not None else None})
    res.info["groups_with_property"] = yes
    return res.finish(start)


# -- 2. the profile reformulation vs a decomposition search ------------------

_MULTS = (0, 1, 2, OMEGA)


def _add_mult(a, b):
    return OMEGA if OMEGA in (a, b) else a + b


def decomposable_profiles(max_exp, mults=_MULTS):
    """Every profile (as a tuple over indices 0 .. max_exp - 1) with values in
    ``mults`` that can be written f_G' + f_F, f_G' supported on {n-1, n} and
    f_F finite in total with f_F(a) = 0 for a <= n.

    Built forwards by enumerating the decompositions.  A finite f_F value
    above max(mults) cannot contribute, and adding a finite value to w gives
    w, so f_F values range over the finite members of ``mults``.
    """
    finite = [m for m in mults if m is not OMEGA]
    out = set()
    for n in range(1, max_exp + 2):
        low = [a for a in (n - 1, n) if a < max_exp]
        high = [a for a in range(max_exp) if a > n]
        for g in itertools.product(mults, repeat=len(low)):
            for h in itertools.product(finite, repeat=len(high)):
                f = [0] * max_exp
                for a, m in zip(low, g):
                    f[a] = m
                for a, m in zip(high, h):
                    f[a] = _add_mult(f[a], m)
                if all(m in mults for m in f):
                    out.add(tuple(f))
    return out


def suite_main3(max_exp=8, mults=_MULTS):
    start = time.perf_counter()
    res = SuiteResult("main3", {"max_exp": max_exp, "mults": [render_mult(m) for m in mults]})
    reachable = decomposable_profiles(max_exp, mults)
    res.info["decomposable"] = len(reachable)
    for values in itertools.product(mults, repeat=max_exp):
        f = {a: m for a, m in enumerate(values) if m != 0}
        predicate = profile_n(UlmProfile(2, f)) is not None
        res.cases += 1
        if predicate != (values in reachable):
            res.counterexamples.append({"profile": {a: render_mult(m) for a, m in f.items()},
                                        "predicate": predicate, "search": not predicate})
    return res.finish(start)


# -- 3. heights climb by one in profile groups -------------------------------

def profile_groups(p, max_weight):
    for exps in exponent_partitions(max_weight):
        if exps[0] - exps[-1] <= 1:
            yield fe.make_group(p, exps)


def suite_claim(p=2, max_weight=10):
    _check_bounds(p, max_weight)
    start = time.perf_counter()
    res = SuiteResult("claim", {"p": p, "max_weight": max_weight})
    groups = 0
    for G in profile_groups(p, max_weight):
        groups += 1
        for x in G.elements():
            px = G.scale(p, x)
            if not any(px):
                continue
            res.cases += 1
            if fe.height(G, px) != fe.height(G, x) + 1:
                res.counterexamples.append({"group": str(G), "x": fe.format_element(x)})
    res.info["groups"] = groups
    return res.finish(start)


# -- 4. homocyclic hulls -------------------------------------------------------

def random_subgroup(G, rng, max_gens=None):
    k = rng.randint(0, max_gens if max_gens is not None else G.rank)
    gens = [tuple(rng.randrange(q) for q in G.moduli) for _ in range(k)]
    return fe.span(G, gens)


def suite_example2(seed=0, trials=1000):
    start = time.perf_counter()
    rng = random.Random(seed)
    res = SuiteResult("example2", {"seed": seed, "trials": trials})
    for t in range(trials):
        p = rng.choice((2, 3))
        n = rng.randint(1, 3)
        r = rng.randint(1, 4)
        G = fe.make_group(p, [n] * r)
        H = random_subgroup(G, rng)
        X = cons.homocyclic_hull(G, H)
        res.cases += 1
        bad = cons.hull_failures(G, H, X)
        if bad:
            res.counterexamples.append({"trial": t, "group": str(G), "H": str(H), "X": str(X),
                                        "failures": bad})
    return res.finish(start)


# -- 5. projecting a summand ---------------------------------------------------

def random_automorphism_images(G, rng):
    """Images of the standard basis under a random automorphism."""
    full = G.weight
    while True:
        imgs = []
        for e in G.exponents:
            # an element of order dividing p^e: coordinate j must be a
            # multiple of p^(e_j - e) where e_j > e
            x = tuple(rng.randrange(q) * (G.p ** max(0, ej - e)) % q
                      for ej, q in zip(G.exponents, G.moduli))
            imgs.append(x)
        if fe.span(G, imgs).weight == full:
            return imgs


def _hom_image(G, gens, target_gens, rng, shrink=0):
    """Random images in span(target_gens) with order bounded by each source
    generator's order p^a, divided by p^shrink."""
    images = []
    for g in gens:
        a = fe.order_exp(G, g) - shrink
        y = G.zero
        for t in target_gens:
            y = G.add(y, G.scale(rng.randrange(G.p ** 6), t))
        # force the order of y to divide p^a
        k = max(0, fe.order_exp(G, y) - max(a, 0))
        images.append(G.scale(G.p ** k, y))
    return images


def random_summand_instance(rng, p=None, exponents=None):
    """A random (G, A, C, H, K, N) satisfying the projection hypotheses.

    G = H + K from a random automorphism.  H = H1 + H2 by splitting a cyclic
    decomposition; A is the graph of a map theta: H1 -> K killing H1[p], so
    A[p] = H1[p] and A + H2 + K = G.  C is the graph of a map eta from
    H2 + K into A.  N is H1[p] plus random elements of ker theta.
    """
    if p is None:
        p = rng.choice((2, 3))
    if exponents is None:
        r = rng.randint(2, 4)
        cap = 8 if p == 2 else 5
        while True:
            exponents = sorted((rng.randint(1, 3) for _ in range(r)), reverse=True)
            if sum(exponents) <= cap:
                break
    G = fe.make_group(p, exponents)
    imgs = random_automorphism_images(G, rng)
    cut = rng.randint(1, G.rank - 1) if G.rank > 1 else 1
    order = list(range(G.rank))
    rng.shuffle(order)
    H = fe.span(G, [imgs[i] for i in order[:cut]])
    K = fe.span(G, [imgs[i] for i in order[cut:]])
    hs = fe.cyclic_decomposition(G, H)
    rng.shuffle(hs)
    split = rng.randint(1, len(hs)) if hs else 0
    h1, h2 = hs[:split], hs[split:]
    ks = fe.cyclic_decomposition(G, K)
    theta = _hom_image(G, h1, ks, rng, shrink=1)
    A = fe.span(G, [G.add(h, t) for h, t in zip(h1, theta)])
    rest = list(h2) + ks
    eta = _hom_image(G, rest, A.gens, rng)
    C = fe.span(G, [G.add(g, t) for g, t in zip(rest, eta)])
    gens = [G.scale(p ** (fe.order_exp(G, h) - 1), h) for h in h1]
    for _ in range(3):
        coeffs = [rng.randrange(p ** fe.order_exp(G, h)) for h in h1]
        image = G.zero
        for c, t in zip(coeffs, theta):
            image = G.add(image, G.scale(c, t))
        if not any(image):
            x = G.zero
            for c, h in zip(coeffs, h1):
                x = G.add(x, G.scale(c, h))
            gens.append(x)
    N = fe.span(G, gens)
    return G, A, C, H, K, N


def suite_summand_lemma(seed=0, trials=500):
    start = time.perf_counter()
    rng = random.Random(seed)
    res = SuiteResult("summand-lemma", {"seed": seed, "trials": trials})
    for t in range(trials):
        G, A, C, H, K, N = random_summand_instance(rng)
        PA = cons.project_summand(G, A, C, H, K, N)
        checks = cons.projection_checks(G, A, C, H, K, N, PA)
        res.cases += 1
        failed = sorted(k for k, v in checks.items() if not v)
        if failed:
            res.counterexamples.append({"trial": t, "group": str(G), "A": str(A), "C": str(C), "H": str(H),
                                        "K": str(K), "N": str(N), "failures": failed})
    return res.finish(start)


# -- 6. essential: definition vs socle criterion ------------------------------

def suite_essential_def(p=2, max_weight=5):
    _check_bounds(p, max_weight)
    start = time.perf_counter()
    res = SuiteResult("essential-def", {"p": p, "max_weight": max_weight})
    for exps in exponent_partitions(max_weight):
        G = fe.make_group(p, exps)
        subs = [(H, fe.element_mask(G, H)) for H in fe.enumerate_subgroups(G)]
        nonzero = [m for H, m in subs if H.weight > 0]
        for H, hmask in subs:
            by_definition = all(hmask & m != 1 for m in nonzero)
            res.cases += 1
            if by_definition != fe.is_essential(G, H):
                res.counterexamples.append({"group": str(G), "H": str(H), "definition": by_definition})
    return res.finish(start)


# -- 7. pure vs summand --------------------------------------------------------

def suite_pure_summand(p=2, max_weight=6):
    _check_bounds(p, max_weight)
    start = time.perf_counter()
    res = SuiteResult("pure-summand", {"p": p, "max_weight": max_weight})
    for exps in exponent_partitions(max_weight):
        G = fe.make_group(p, exps)
        subs = [(H, fe.element_mask(G, H)) for H in fe.enumerate_subgroups(G)]
        for H, _ in subs:
            has_complement = fe.find_complement(G, H, subs) is not None
            res.cases += 1
            if has_complement != fe.is_pure(G, H):
                res.counterexamples.append({"group": str(G), "H": str(H), "complement": has_complement})
    return res.finish(start)


# -- 8. golden catalog ---------------------------------------------------------

# (expression, property, strict verdict, strict rule, extended verdict, extended rule)
GOLDEN = [
    ("Z(3^2)^w", "sgb", "YES", "SGB-P-HOMOCYCLIC", "YES", "SGB-P-HOMOCYCLIC"),
    ("Z(2) + Z(2^4)^w", "sgb", "NO", "SGB-P-NO", "NO", "SGB-P-NO"),
    ("Z(2^2)^w + Z(2^inf)", "sgb", "NO", "SGB-P-NO", "NO", "SGB-P-NO"),
    ("Z^w", "sgb", "NO", "SGB-TF-NO", "NO", "SGB-TF-NO"),
    ("Q^w + R{2:1}^3", "sgb", "YES", "SGB-TF-DHOM", "YES", "SGB-TF-DHOM"),
    ("Z(2^2) + Q^w", "sgb", "NO", "SGB-SPLIT", "NO", "SGB-SPLIT"),
    ("Z(2^2)^w + Z(2^3)^w + Z(2^9)^3", "sgb", "YES", "SGB-P-PROFILE", "YES", "SGB-P-PROFILE"),
    ("Z(2^2)^w + Z(3^5)", "sgb", "UNDECIDED", "GAP-SGB-MULTIPRIME", "YES", "SGB-TORSION-PRIMARY"),
    ("Z(3^2)^5 + Z(3^3)^w", "ess", "YES", "ESS-P-PROFILE", "YES", "ESS-P-PROFILE"),
    ("Z(2) + Z(2^3)", "ess", "NO", "ESS-P-NO", "NO", "ESS-P-NO"),
    ("Z(2^inf)^2 + Q + R{2:1}^2", "ess", "YES", "ESS-MIXED-YES", "YES", "ESS-MIXED-YES"),
    ("Z(2^inf) + Z(2)", "ess", "UNDECIDED", "GAP-ESS-DIV-REDUCED", "UNDECIDED", "GAP-ESS-DIV-REDUCED"),
    ("R{2:1}^3 + TF(2)", "bassian-tf", "YES", "BASSIAN-TF-FINRANK", "YES", "BASSIAN-TF-FINRANK"),
    ("Z^w", "bassian-tf", "NO", "BASSIAN-TF-NO", "NO", "BASSIAN-TF-NO"),
    ("Z(2^3)", "bassian-tf", "UNDECIDED", "GAP-BASSIAN-SCOPE", "UNDECIDED", "GAP-BASSIAN-SCOPE"),
    ("Q^w", "sgb", "YES", "SGB-DIV", "YES", "SGB-DIV"),
    ("Z(2^inf)^w", "sgb", "YES", "SGB-DIV", "YES", "SGB-DIV"),
    ("R{2:1}^w", "sgb", "NO", "SGB-TF-NO", "NO", "SGB-TF-NO"),
]


def suite_catalog():
    start = time.perf_counter()
    res = SuiteResult("catalog", {"entries": len(GOLDEN)})
    for text, prop, sv, sr, ev, er in GOLDEN:
        for mode, want_v, want_r in ((Mode.STRICT, sv, sr), (Mode.EXTENDED, ev, er)):
            v = classify(parse(text), prop, mode)
            res.cases += 1
            if (v.value.value, v.rule_id) != (want_v, want_r):
                res.counterexamples.append({"expr": text, "property": prop, "mode": mode.value,
                                            "got": [v.value.value, v.rule_id], "want": [want_v, want_r]})
    return res.finish(start)


# -- 9. two-gap witnesses ------------------------------------------------------

def suite_two_gap(p=2, max_weight=10):
    _check_bounds(p, max_weight)
    start = time.perf_counter()
    res = SuiteResult("two-gap", {"p": p, "max_weight": max_weight})
    witnessed = 0
    for exps in exponent_partitions(max_weight):
        G = fe.make_group(p, exps)
        res.cases += 1
        has_pair = exps[-1] + 1 < exps[0]
        try:
            x = cons.two_gap_witness(G)
        except NoWitness:
            if has_pair:
                res.counterexamples.append({"group": str(G), "failure": "NoWitness despite a gap pair"})
            continue
        if not has_pair:
            res.counterexamples.append({"group": str(G), "failure": "witness for a profile group"})
            continue
        witnessed += 1
        seq = fe.height_sequence(G, x)
        if len(seq.gaps) != 2:
            res.counterexamples.append({"group": str(G), "x": fe.format_element(x), "failure": f"sequence {seq}"})
        elif fe.essential_summand_oracle(G, fe.span(G, [x])) is not None:
            res.counterexamples.append({"group": str(G), "x": fe.format_element(x), "failure": "oracle found a summand"})
    res.info["witnessed"] = witnessed
    return res.finish(start)


# -- 10. simplify demos --------------------------------------------------------

def suite_simplify(max_depth=4):
    start = time.perf_counter()
    res = SuiteResult("simplify", {"max_depth": max_depth})
    for depth in range(1, max_depth + 1):
        for report in (cons.simplify_a_demo(2, 1, 3, depth=depth), cons.simplify_b_demo(2, 1, depth=depth)):
            for c in report.checks:
                res.cases += 1
                if not c.passed:
                    res.counterexamples.append({"demo": report.name, "depth": depth, "check": c.name,
                                                "detail": c.detail})
    return res.finish(start)


SUITES = {
    "thm6": suite_thm6,
    "claim": suite_claim,
    "main3": suite_main3,
    "example2": suite_example2,
    "summand-lemma": suite_summand_lemma,
    "essential-def": suite_essential_def,
    "pure-summand": suite_pure_summand,
    "catalog": suite_catalog,
    "two-gap": suite_two_gap,
    "simplify": suite_simplify,
}
