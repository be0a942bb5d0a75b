"""Executable versions of the constructive arguments.

Finite arguments run on :mod:`sgbassian.finite`.  The injections into G/N for
countable direct sums use a finite-support model: an element is a finite map
(schema, index) -> coordinate, cyclic coordinates are ints mod p^e and
quasicyclic ones are Fractions a/p^k reduced mod 1.  Nothing about the maps
on the infinite groups is claimed beyond what the finite probe-generated
subgroups show.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import finite as fe
from .errors import BadParameters, NoWitness, PreconditionFailed


# -- finite constructions ----------------------------------------------------

def homocyclic_hull(G, H):
    """A summand X >= H of a homocyclic G, homocyclic of the same exponent,
    with H essential in X.

    Write H as a direct sum of cyclics <x_i>, divide each x_i by the largest
    power of p possible (its height) to get y_i, and take X = sum <y_i>.
    Each y_i then has full order p^n and <y_i> has the same socle as <x_i>.
    """
    exps = set(G.exponents)
    if len(exps) > 1:
        raise PreconditionFailed(f"{G} is not homocyclic")
    gens = []
    for x in fe.cyclic_decomposition(G, H):
        pm = G.p ** fe.height(G, x)
        gens.append(tuple(c // pm for c in x))
    return fe.span(G, gens)


def hull_failures(G, H, X):
    """The ways X fails to be a homocyclic hull of H; empty when it is one."""
    bad = []
    if not fe.is_subgroup(G, H, X):
        bad.append("H not inside X")
    if not all(s in H for s in fe.socle_of(G, X).gens):
        bad.append("H not essential in X")
    if not fe.is_pure(G, X):
        bad.append("X not pure")
    n = G.exponents[0]
    if any(e != n for e in fe.structure(G, X)):
        bad.append("X not homocyclic of exponent n")
    return bad


def two_gap_witness(G, i=None, j=None, verify_oracle=False):
    """x = p^(e_i - 1) b_i + p^(e_j - 2) b_j for exponents with e_i + 1 < e_j.

    Its height sequence is (e_i - 1, e_j - 1, inf), which has two gaps, so
    <x> sits essentially in no summand.  Without indices the smallest and
    largest exponents are used.
    """
    es = G.exponents
    if i is None or j is None:
        if not es:
            raise NoWitness(f"{G} is trivial")
        i = min(range(len(es)), key=lambda k: (es[k], k))
        j = min(range(len(es)), key=lambda k: (-es[k], k))
    if not (0 <= i < len(es) and 0 <= j < len(es)) or not es[i] + 1 < es[j]:
        raise NoWitness(f"{G} has no exponents e_i, e_j with e_i + 1 < e_j")
    x = [0] * G.rank
    x[i] = G.p ** (es[i] - 1)
    x[j] = G.p ** (es[j] - 2)
    x = tuple(x)
    seq = fe.height_sequence(G, x)
    if seq.heights != (es[i] - 1, es[j] - 1, fe.INF) or len(seq.gaps) != 2:
        raise AssertionError(f"witness {x} has height sequence {seq}")
    if verify_oracle and fe.essential_summand_oracle(G, fe.span(G, [x])) is not None:
        raise AssertionError(f"<{x}> is essential in a summand of {G}")
    return x


def project_summand(G, A, C, H, K, N):
    """pi(A) for the projection pi: G -> H along K.

    Requires G = A + C, G = H + K, N essential in A and N inside H.
    """
    if not fe.is_direct_sum(G, A, C):
        raise PreconditionFailed("G is not the direct sum of A and C")
    if not fe.is_direct_sum(G, H, K):
        raise PreconditionFailed("G is not the direct sum of H and K")
    if not fe.is_subgroup(G, N, A):
        raise PreconditionFailed("N is not contained in A")
    if not all(s in N for s in fe.socle_of(G, A).gens):
        raise PreconditionFailed("N is not essential in A")
    if not fe.is_subgroup(G, N, H):
        raise PreconditionFailed("N is not contained in H")
    pi = fe.projection(G, H, K)
    return fe.span(G, [pi(a) for a in A.gens])


def projection_checks(G, A, C, H, K, N, PA):
    """The four conclusions about pi(A), each checked independently."""
    pi = fe.projection(G, H, K)
    CH = fe.sub_meet(G, C, H)
    return {
        "injective_on_A": fe.sub_meet(G, A, K).weight == 0 and PA.weight == A.weight,
        "complement_C": fe.is_direct_sum(G, PA, C),
        "summand_of_H": (fe.is_subgroup(G, PA, H) and PA.weight + CH.weight == H.weight
                         and fe._join_weight(G, PA, CH) == H.weight),
        "fixes_N": all(pi(x) == x for x in N.gens),
    }


# -- finite-support model of countable p-groups ------------------------------

@dataclass(frozen=True)
class Schema:
    """A family of isomorphic atoms: Z(p^e) copies, or Z(p^inf) copies.

    ``size`` is the number of copies, None meaning countably many.
    """

    name: str
    e: object  # int exponent, or None for quasicyclic
    size: object = None

    @property
    def quasicyclic(self):
        return self.e is None


@dataclass(frozen=True)
class FinSuppElement:
    support: tuple = ()

    def __iter__(self):
        return iter(self.support)

    def __bool__(self):
        return bool(self.support)

    def __str__(self):
        if not self.support:
            return "0"
        return " + ".join(f"{v}@{name}[{i}]" for (name, i), v in self.support)


class CountablePGroup:
    def __init__(self, p, schemas):
        self.p = p
        self.schemas = {s.name: s for s in schemas}

    def _norm(self, name, v):
        s = self.schemas[name]
        if s.quasicyclic:
            v = Fraction(v)
            return v - (v.numerator // v.denominator)
        return v % self.p ** s.e

    def element(self, coords):
        """Build from a mapping (name, index) -> value."""
        out = {}
        for (name, i), v in coords.items():
            s = self.schemas[name]
            if s.size is not None and not 0 <= i < s.size:
                raise IndexError(f"{name}[{i}] outside its {s.size} copies")
            v = self._norm(name, v)
            if v:
                out[(name, i)] = v
        return FinSuppElement(tuple(sorted(out.items())))

    def gen(self, name, index=0, value=1):
        return self.element({(name, index): value})

    zero = FinSuppElement()

    def add(self, x, y):
        acc = dict(x.support)
        for k, v in y:
            acc[k] = acc.get(k, 0) + v
        return self.element(acc)

    def neg(self, x):
        return self.element({k: -v for k, v in x})

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scale(self, k, x):
        return self.element({pos: k * v for pos, v in x})

    def order_exp(self, x):
        k = 0
        while x:
            x = self.scale(self.p, x)
            k += 1
        return k

    def generated(self, gens, limit=10 ** 6):
        """All elements of the finite subgroup generated by ``gens``."""
        seen = {self.zero}
        frontier = [self.zero]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.add(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            if len(seen) > limit:
                raise fe.TooLarge(f"probe subgroup exceeds {limit} elements")
            frontier = nxt
        return seen


@dataclass(frozen=True)
class Shift:
    """Copy i of a schema goes to copy i + k of ``target``."""
    target: str
    k: int

    def __call__(self, group, name, i, v):
        return group.element({(self.target, i + self.k): v})


@dataclass(frozen=True)
class Embed:
    """Generator goes to ``factor`` times the generator of target[index]."""
    target: str
    index: int
    factor: int

    def __call__(self, group, name, i, v):
        return group.element({(self.target, self.index): v * self.factor})


@dataclass(frozen=True)
class Identity:
    def __call__(self, group, name, i, v):
        return group.element({(name, i): v})


@dataclass(frozen=True)
class DivideIndex:
    """a/p^k -> a/p^(k+1) on a quasicyclic coordinate (a section of
    multiplication by p; additive only modulo the p-socle)."""

    def __call__(self, group, name, i, v):
        return group.element({(name, i): Fraction(v) / group.p})


@dataclass(frozen=True)
class GenMap:
    """A map defined coordinatewise by one rule per schema."""

    rules: dict = field(default_factory=dict)

    def __call__(self, group, x):
        out = group.zero
        for (name, i), v in x:
            out = group.add(out, self.rules[name](group, name, i, v))
        return out


class CyclicQuotient:
    """Arithmetic modulo a finite cyclic subgroup N = <x>."""

    def __init__(self, group, x):
        self.group = group
        self.generator = x
        self.members = []
        y = group.zero
        while True:
            self.members.append(y)
            y = group.add(y, x)
            if y == group.zero:
                break
        self._set = set(self.members)

    def contains(self, y):
        return y in self._set

    def equal(self, a, b):
        return self.contains(self.group.sub(a, b))


# -- demo reports ------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class DemoReport:
    name: str
    parameters: dict
    checks: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail))

    def to_dict(self):
        return {
            "name": self.name,
            "parameters": self.parameters,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
            "witnesses": self.witnesses,
            "passed": self.passed,
        }


def _homomorphism_checks(report, group, phi, N, probes, relations):
    """Relations, additivity and kernel triviality of x -> [phi(x)] in G/N
    on the subgroup generated by ``probes``."""
    bad = [str(r) for r in relations if not N.contains(phi(r))]
    report.add("relations", not bad,
               f"{len(relations)} defining relations map into N" if not bad else f"fails on {bad[0]}")
    F = group.generated(probes)
    report.add("zero", phi(group.zero) == group.zero, "phi(0) = 0")
    failures = 0
    for a in F:
        pa = phi(a)
        for g in probes:
            if not N.equal(phi(group.add(a, g)), group.add(pa, phi(g))):
                failures += 1
    report.add("additive_mod_N", failures == 0,
               f"phi(a + g) = phi(a) + phi(g) mod N for {len(F)} elements a and {len(probes)} probes g")
    kernel = [a for a in F if a and N.contains(phi(a))]
    report.add("kernel_trivial", not kernel,
               f"injective on the probe-generated subgroup of order {len(F)}" if not kernel
               else f"nonzero {kernel[0]} maps into N")
    return F


def simplify_a_demo(p, n, m, probes=None, depth=3):
    """G = Z(p^n) + sum_w Z(p^m), N = <y + z>, phi = (tau, sigma) into G/N.

    tau embeds Z(p^n) into the copy Z[1] via 1 -> p^(m-n); sigma shifts copy
    i of Z to copy i + 2.  Default probes are the generators of Y and of
    Z[0], ..., Z[depth - 1].
    """
    if not (n >= 1 and n + 2 <= m):
        raise BadParameters(f"need 1 <= n and n + 2 <= m, got n = {n}, m = {m}")
    group = CountablePGroup(p, [Schema("Y", n, 1), Schema("Z", m)])
    y = group.gen("Y", 0, p ** (n - 1))
    z = group.gen("Z", 0, p ** (m - 2))
    x = group.add(y, z)
    N = CyclicQuotient(group, x)
    rules = GenMap({"Y": Embed("Z", 1, p ** (m - n)), "Z": Shift("Z", 2)})

    def phi(g):
        return rules(group, g)

    if probes is None:
        probes = [group.gen("Y")] + [group.gen("Z", i) for i in range(depth)]
    report = DemoReport("simplify-a", {"p": p, "n": n, "m": m, "depth": depth,
                                       "probes": [str(g) for g in probes]})
    report.add("N_nonzero", bool(x), f"x = y + z = {x}, order p^{group.order_exp(x)}")
    relations = [_raw(pos, p ** group.schemas[pos[0]].e) for g in probes for pos, _ in g]
    _homomorphism_checks(report, group, phi, N, probes, relations)
    image = phi(x)
    report.add("x_not_killed", not N.contains(image), f"phi(y + z) = {image}")

    G = fe.make_group(p, [n, m])
    w = (p ** (n - 1), p ** (m - 2))
    seq = fe.height_sequence(G, w)
    report.add("two_gaps", len(seq.gaps) == 2, f"height sequence of y + z in Y + Z[0]: {seq}")
    S = fe.essential_summand_oracle(G, fe.span(G, [w]))
    report.add("not_essential_in_summand", S is None,
               "no summand of Y + Z[0] contains <y + z> essentially" if S is None else f"found {S}")
    report.witnesses = {"x": str(x), "phi(x)": str(image), "height_sequence": str(seq)}
    return report


def _raw(pos, value):
    # an unreduced coordinate, so that a rule is applied to p^e itself
    return FinSuppElement(((pos, value),))


def simplify_b_demo(p, n, probes=None, depth=3):
    """G = sum_w Z(p^n) + Z(p^inf), N = <y + z> with z = 1/p^2.

    tau shifts copy i of Y to copy i + 1; sigma sends a/p^k to a/p^(k+1).
    Default probes: generators of Y[0], ..., Y[depth - 1] and 1/p^depth,
    which generate the full p^depth-torsion of the first depth + 1 atoms
    when n <= depth.
    """
    if n < 1:
        raise BadParameters(f"need n >= 1, got n = {n}")
    if depth < 1:
        raise BadParameters(f"need depth >= 1, got {depth}")
    group = CountablePGroup(p, [Schema("Y", n), Schema("Z", None, 1)])
    y = group.gen("Y", 0, p ** (n - 1))
    z = group.gen("Z", 0, Fraction(1, p ** 2))
    x = group.add(y, z)
    N = CyclicQuotient(group, x)
    rules = GenMap({"Y": Shift("Y", 1), "Z": DivideIndex()})

    def phi(g):
        return rules(group, g)

    if probes is None:
        probes = [group.gen("Y", i) for i in range(depth)] + [group.gen("Z", 0, Fraction(1, p ** depth))]
    report = DemoReport("simplify-b", {"p": p, "n": n, "depth": depth,
                                       "probes": [str(g) for g in probes]})
    report.add("N_nonzero", bool(x), f"x = y + z = {x}, order p^{group.order_exp(x)}")
    relations = []
    for g in probes:
        k = group.order_exp(g)
        for pos, v in g:
            relations.append(_raw(pos, v * p ** k))
    _homomorphism_checks(report, group, phi, N, probes, relations)
    pz = group.scale(p, z)
    report.add("pz_survives", not N.contains(phi(pz)), f"sigma(pz) = {phi(pz)} is nonzero mod N")
    report.add("socle_in_N", N.contains(pz), "the socle <1/p> of Z(p^inf) lies in N")
    report.witnesses = {"x": str(x), "sigma(pz)": str(phi(pz))}
    return report
