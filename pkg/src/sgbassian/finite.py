"""Exact finite abelian p-groups and their subgroup lattices.

A group ``G = Z(p^e_1) + ... + Z(p^e_r)`` is modeled as Z^r / L with
``L = diag(p^e_1, ..., p^e_r)``.  Elements are plain tuples of ints, each
coordinate reduced mod p^e_i.  A subgroup is the Hermite form of its
preimage lattice (see :mod:`sgbassian.hnf`), so equal subgroups have equal
bases and can be hashed, deduplicated and compared directly.

>>> G = make_group(2, [1, 3])
>>> height_sequence(G, (1, 2)).heights
(0, 2, inf)
>>> is_pure(G, span(G, [(1, 2)]))
False
"""

import math
import os
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from sympy import Matrix, isprime
from sympy.matrices.normalforms import smith_normal_decomp

from . import hnf
from .errors import NotPrime, ParseError, SGBError, TooLarge, TooMany, ZeroExponent

INF = math.inf

DEFAULT_MAX_ORDER = 2 ** 20
DEFAULT_MAX_SUBGROUPS = 10 ** 6


class EngineError(SGBError):
    pass


def max_order():
    return int(os.environ.get("SGB_MAX_ORDER", DEFAULT_MAX_ORDER))


def max_subgroups():
    return int(os.environ.get("SGB_MAX_SUBGROUPS", DEFAULT_MAX_SUBGROUPS))


@dataclass(frozen=True)
class FinitePGroup:
    p: int
    exponents: tuple

    def __post_init__(self):
        if not isprime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if any(e < 1 for e in self.exponents):
            raise ZeroExponent(f"exponents must be >= 1, got {list(self.exponents)}")

    @property
    def rank(self):
        return len(self.exponents)

    @property
    def weight(self):
        """log_p of the order."""
        return sum(self.exponents)

    @property
    def order(self):
        return self.p ** self.weight

    @property
    def exponent(self):
        return max(self.exponents, default=0)

    @cached_property
    def moduli(self):
        return tuple(self.p ** e for e in self.exponents)

    @property
    def zero(self):
        return (0,) * self.rank

    def basis_element(self, i):
        x = [0] * self.rank
        x[i] = 1
        return tuple(x)

    def element(self, coords):
        if len(coords) != self.rank:
            raise EngineError(f"element {tuple(coords)} has wrong length for rank {self.rank}")
        return tuple(int(c) % q for c, q in zip(coords, self.moduli))

    def add(self, x, y):
        return tuple((a + b) % q for a, b, q in zip(x, y, self.moduli))

    def scale(self, k, x):
        return tuple((k * a) % q for a, q in zip(x, self.moduli))

    def elements(self):
        return product(*(range(q) for q in self.moduli))

    def __str__(self):
        return f"{self.p}:[{','.join(map(str, self.exponents))}]"


def make_group(p, exponents, limit=None):
    G = FinitePGroup(p, tuple(exponents))
    limit = max_order() if limit is None else limit
    if G.order > limit:
        raise TooLarge(f"order {p}^{G.weight} exceeds the guard {limit}")
    return G


_GROUP_RE = re.compile(r"^\s*(\d+)\s*:\s*\[\s*([\d\s,]*)\]\s*$")
_ELEMENT_RE = re.compile(r"^\s*\(\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\)\s*$")


def parse_group(text, limit=None):
    """Parse a literal such as ``"2:[1,3]"``."""
    m = _GROUP_RE.match(text)
    if not m:
        raise ParseError(f"bad group literal {text!r}; expected p:[e1,e2,...]")
    exps = [int(s) for s in m.group(2).replace(" ", "").split(",") if s]
    return make_group(int(m.group(1)), exps, limit)


def parse_element(G, text):
    m = _ELEMENT_RE.match(text)
    if not m:
        raise ParseError(f"bad element literal {text!r}; expected (a1,...,ar)")
    coords = [int(s) for s in m.group(1).split(",")] if m.group(1) else []
    return G.element(coords)


def parse_elements(G, text):
    """Parse a ``;``-separated list of element literals."""
    return [parse_element(G, part) for part in text.split(";") if part.strip()]


def format_element(x):
    return "(" + ",".join(map(str, x)) + ")"


# -- heights -----------------------------------------------------------------

def height(G, x):
    """Largest k with x in p^k G; INF for x = 0."""
    h = INF
    for c in x:
        if c:
            v = hnf.valuation(c, G.p)
            if v < h:
                h = v
    return h


@dataclass(frozen=True)
class HeightSequence:
    heights: tuple
    gaps: tuple

    def __str__(self):
        return "(" + ", ".join("inf" if h == INF else str(h) for h in self.heights) + ")"


def height_sequence(G, x):
    """Heights of x, px, p^2 x, ... up to the first INF, and the gap positions.

    A gap sits at position k when height(p^(k+1) x) > height(p^k x) + 1; the
    final jump to INF counts.
    """
    hs = []
    while any(x):
        hs.append(height(G, x))
        x = G.scale(G.p, x)
    hs.append(INF)
    gaps = tuple(k for k in range(len(hs) - 1) if hs[k + 1] > hs[k] + 1)
    return HeightSequence(tuple(hs), gaps)


def order_exp(G, x):
    """log_p of the order of x."""
    k = 0
    while any(x):
        x = G.scale(G.p, x)
        k += 1
    return k


# -- subgroups ---------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    group: FinitePGroup
    basis: tuple

    @cached_property
    def weight(self):
        """log_p of the order."""
        return hnf.log_index(self.basis, self.group.exponents, self.group.p)

    @property
    def order(self):
        return self.group.p ** self.weight

    @cached_property
    def gens(self):
        """Nonzero basis rows, reduced into the group."""
        G = self.group
        return tuple(G.element(row) for j, row in enumerate(self.basis)
                     if row[j] != G.moduli[j])

    def __contains__(self, x):
        return hnf.in_lattice(x, self.basis)

    def elements(self):
        G = self.group
        return hnf.lattice_elements(self.basis, G.exponents, G.p)

    def __str__(self):
        return "<" + "; ".join(format_element(g) for g in self.gens) + ">"


def _sub(G, gens, reduce=True):
    return Subgroup(G, hnf.hermite(gens, G.exponents, G.p, reduce))


def span(G, gens):
    return _sub(G, [G.element(g) for g in gens])


def whole(G):
    return span(G, [G.basis_element(i) for i in range(G.rank)])


def trivial(G):
    return span(G, [])


def socle(G):
    return span(G, [G.scale(G.p ** (e - 1), G.basis_element(i))
                    for i, e in enumerate(G.exponents)])


def power_subgroup(G, k):
    """p^k G."""
    return span(G, [G.scale(G.p ** k, G.basis_element(i)) for i in range(G.rank)])


def multiple(G, H, k):
    """p^k H."""
    return span(G, [G.scale(G.p ** k, g) for g in H.gens])


def sub_join(G, H1, H2):
    return _sub(G, H1.gens + H2.gens)


def _join_weight(G, *subs):
    gens = [g for H in subs for g in H.gens]
    return hnf.log_index(hnf.hermite(gens, G.exponents, G.p, reduce=False), G.exponents, G.p)


def sub_meet(G, H1, H2):
    """Intersection, from the pairs (h1, h1), (h2, 0) in G + G."""
    n = G.rank
    zero = (0,) * n
    gens = [g + g for g in H1.gens] + [g + zero for g in H2.gens]
    rows = hnf.hermite(gens, G.exponents * 2, G.p, reduce=False)
    return _sub(G, [row[n:] for row in rows[n:]])


def sub_contains(G, H, x):
    return G.element(x) in H


def is_subgroup(G, H1, H2):
    """H1 <= H2."""
    return all(g in H2 for g in H1.gens)


def socle_of(G, H):
    """H[p]."""
    return sub_meet(G, H, socle(G))


def _socle_weight(G, H):
    S = socle(G)
    return H.weight + S.weight - _join_weight(G, H, S)


def preimage_times_p(G, X):
    """{g in G : p g in X}."""
    n = G.rank
    gens = []
    for i in range(n):
        b = G.basis_element(i)
        gens.append(G.scale(G.p, b) + b)
    zero = (0,) * n
    gens += [g + zero for g in X.gens]
    rows = hnf.hermite(gens, G.exponents * 2, G.p, reduce=False)
    return _sub(G, [row[n:] for row in rows[n:]])


def structure(G, H):
    """Exponents d_i (descending) with H = sum of Z(p^d_i).

    Read off from the orders of p^k H: the number of cyclic summands of order
    at least p^(k+1) is log|p^k H| - log|p^(k+1) H|.
    """
    sizes = [H.weight]
    X = H
    while X.weight:
        X = multiple(G, X, 1)
        sizes.append(X.weight)
    return _from_layer_sizes(sizes)


def quotient_structure(G, H):
    """Exponents of G / H, via |p^k (G/H)| = |p^k G + H| / |H|."""
    sizes = []
    k = 0
    while True:
        s = _join_weight(G, power_subgroup(G, k), H) - H.weight
        sizes.append(s)
        if s == 0:
            break
        k += 1
    return _from_layer_sizes(sizes)


def _from_layer_sizes(sizes):
    counts = [sizes[k] - sizes[k + 1] for k in range(len(sizes) - 1)]
    out = []
    for k in range(len(counts) - 1, -1, -1):
        above = counts[k + 1] if k + 1 < len(counts) else 0
        out += [k + 1] * (counts[k] - above)
    return out


def cyclic_decomposition(G, H):
    """Elements x_i with H the direct sum of the <x_i>, largest order first.

    Uses the Smith form of the relation lattice expressed in the basis of H.
    """
    n = G.rank
    if n == 0 or H.weight == 0:
        return []
    B = Matrix(H.basis)
    D = Matrix.diag(*G.moduli)
    C = D * B.inv()
    S, U, V = smith_normal_decomp(C)
    W = V.inv() * B
    out = []
    for i in range(n):
        s = abs(S[i, i])
        if s != 1:
            x = G.element([int(W[i, j]) for j in range(n)])
            out.append(x)
    out.sort(key=lambda x: -order_exp(G, x))
    return out


# -- predicates --------------------------------------------------------------

def is_essential(G, H):
    """H essential in G; for p-groups this is G[p] <= H."""
    return all(g in H for g in socle(G).gens)


def is_pure(G, H):
    """H ∩ p^k G = p^k H for every k below the exponent of G (compared by order)."""
    for k in range(1, G.exponent):
        PkG = power_subgroup(G, k)
        meet_w = H.weight + PkG.weight - _join_weight(G, H, PkG)
        if meet_w != multiple(G, H, k).weight:
            return False
    return True


def is_summand(G, H):
    # bounded group: pure and summand coincide; find_complement is the cross-check
    return is_pure(G, H)


def element_mask(G, H):
    """Bitmask of the elements of H, indexed in mixed radix by coordinates."""
    mask = 0
    qs = G.moduli
    for x in H.elements():
        idx = 0
        for c, q in zip(x, qs):
            idx = idx * q + c
        mask |= 1 << idx
    return mask


def find_complement(G, H, candidates=None):
    """Some C with H ∩ C = 0 and H + C = G, by search; None if there is none.

    ``candidates`` may be a precomputed list of (Subgroup, element_mask)
    pairs for G; otherwise every subgroup of G is scanned.
    """
    target = G.weight - H.weight
    hmask = element_mask(G, H)
    if candidates is None:
        candidates = ((C, None) for C in enumerate_subgroups(G))
    for C, cmask in candidates:
        if C.weight != target:
            continue
        if cmask is None:
            cmask = element_mask(G, C)
        if hmask & cmask == 1:
            return C
    return None


# -- enumeration and search --------------------------------------------------

def enumerate_subgroups(G, limit=None):
    """Every subgroup of G exactly once; raises TooMany past ``limit``."""
    limit = max_subgroups() if limit is None else limit
    for count, rows in enumerate(hnf.enumerate_lattices(G.exponents, G.p), 1):
        if count > limit:
            raise TooMany(f"more than {limit} subgroups in {G}")
        yield Subgroup(G, rows)


def _covers(G, X, pX):
    """Index-p overgroups X + <g> with the same socle as X.

    The socle grows exactly when p g lands in p X, so candidates are the g
    with p g in X \\ p X.
    """
    P = preimage_times_p(G, X)
    seen = set()
    for g in P.elements():
        if g in X or G.scale(G.p, g) in pX:
            continue
        Y = _sub(G, X.gens + (g,))
        if Y.basis not in seen:
            seen.add(Y.basis)
            yield Y


def essential_summand_oracle(G, H, limit=None):
    """A pure (hence summand) S >= H with S[p] = H[p], or None.

    Depth-first search through every overgroup of H sharing its socle; each
    such overgroup is reachable by index-p steps that keep the socle fixed.
    """
    limit = max_subgroups() if limit is None else limit
    if is_pure(G, H):
        return H
    seen = {H.basis}
    stack = [(H, _covers(G, H, multiple(G, H, 1)))]
    while stack:
        _, it = stack[-1]
        Y = next(it, None)
        if Y is None:
            stack.pop()
            continue
        if Y.basis in seen:
            continue
        seen.add(Y.basis)
        if len(seen) > limit:
            raise TooMany(f"socle-preserving search from {H} exceeded {limit} subgroups")
        if is_pure(G, Y):
            return Y
        stack.append((Y, _covers(G, Y, multiple(G, Y, 1))))
    return None


def max_socle_extension(G, H):
    """Some B >= H with B[p] = H[p] and no proper extension with that socle.

    One greedy pass over the elements of G suffices: an element rejected
    early stays rejected because the running subgroup only grows.
    """
    if G.order > max_order():
        raise TooLarge(f"order of {G} exceeds the guard")
    S = socle(G)
    target = _socle_weight(G, H)
    X = H
    for g in G.elements():
        if g in X:
            continue
        Y = _sub(G, X.gens + (g,), reduce=False)
        w = hnf.log_index(Y.basis, G.exponents, G.p)
        sw = w + S.weight - _join_weight(G, Y, S)
        if sw == target:
            X = _sub(G, X.gens + (g,))
    return X


# -- homomorphisms between decompositions ------------------------------------

def projection(G, H, K):
    """The projection G -> H along K, for G = H + K (direct)."""
    n = G.rank
    zero = (0,) * n
    gens = [g + g for g in H.gens] + [g + zero for g in K.gens]
    rows = hnf.hermite(gens, G.exponents * 2, G.p)

    def pi(x):
        r = hnf.residual(tuple(x) + zero, rows)
        return G.element([-c for c in r[n:]])

    return pi


def is_direct_sum(G, A, C):
    """G = A + C with A ∩ C = 0."""
    return A.weight + C.weight == G.weight and _join_weight(G, A, C) == G.weight
