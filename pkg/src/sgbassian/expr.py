"""Symbolic descriptions of abelian groups as direct sums of standard atoms.

Text syntax (whitespace-insensitive)::

    expr     := term { "+" term } | "0"
    term     := atom [ "^" mult ]
    atom     := "Z(" p [ "^" (e | "inf") ] ")" | "Z" | "Q" | "R{" [charlist] "}" | "TF(" r ")"
    charlist := p ":" (k | "inf") { "," p ":" (k | "inf") }
    mult     := n | "w"

``Z(p^e)`` is cyclic of order p^e (``Z(p)`` when e = 1), ``Z(p^inf)`` the quasicyclic group,
``R{...}`` the rank-1 torsion-free group of the given characteristic (``Z``
and ``Q`` are the all-0 and all-infinite ones) and ``TF(r)`` an unspecified
reduced torsion-free group of rank r.  Multiplicities are finite or ``w``
(countably infinite).

>>> e = parse("Z(2^3)^5 + Z(2^inf)^w + Q")
>>> render(e)
'Z(2^3)^5 + Z(2^inf)^w + Q'
>>> dict(ulm_profile(parse("Z(2)^w + Z(2^4)"), 2).f)
{0: w, 3: 1}
"""

import math
from dataclasses import dataclass, field

from sympy import isprime

from .errors import NotPrime, ParseError, ZeroExponent

INF = math.inf


class _Omega:
    """The multiplicity w: absorbs finite addition, exceeds every integer."""

    __slots__ = ()

    def __repr__(self):
        return "w"

    def __reduce__(self):
        return "OMEGA"

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, k):
        return 0 if k == 0 else self

    __rmul__ = __mul__

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


OMEGA = _Omega()


def is_finite(m):
    return m is not OMEGA


def render_mult(m):
    return "w" if m is OMEGA else str(m)


# -- characteristics and atoms -----------------------------------------------

@dataclass(frozen=True)
class RationalCharacteristic:
    """Height vector of a rank-1 torsion-free group.

    ``entries`` lists (prime, value) with value a positive int or INF; primes
    not listed have value 0.  ``divisible`` marks the all-INF characteristic
    of Q, which is not a finite map.
    """

    entries: tuple = ()
    divisible: bool = False

    def __post_init__(self):
        if self.divisible:
            object.__setattr__(self, "entries", ())
            return
        cleaned = tuple(sorted((int(p), v) for p, v in self.entries if v != 0))
        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def of(cls, mapping):
        return cls(tuple(mapping.items()))

    def __getitem__(self, p):
        if self.divisible:
            return INF
        return dict(self.entries).get(p, 0)

    def render(self):
        if self.divisible:
            return "Q"
        if not self.entries:
            return "Z"
        body = ",".join(f"{p}:{'inf' if v == INF else v}" for p, v in self.entries)
        return "R{" + body + "}"

    __str__ = render


Q_CHAR = RationalCharacteristic(divisible=True)
Z_CHAR = RationalCharacteristic()


def types_equivalent(a, b):
    """Same type: the characteristics differ at finitely many primes, and only
    where both values are finite."""
    if a.divisible or b.divisible:
        return a.divisible and b.divisible
    for p in {q for q, _ in a.entries} | {q for q, _ in b.entries}:
        x, y = a[p], b[p]
        if x != y and (x == INF or y == INF):
            return False
    return True


@dataclass(frozen=True)
class CyclicP:
    p: int
    e: int

    def render(self):
        if self.e == 1:
            return f"Z({self.p})"
        return f"Z({self.p}^{self.e})"


@dataclass(frozen=True)
class Quasicyclic:
    p: int

    def render(self):
        return f"Z({self.p}^inf)"


@dataclass(frozen=True)
class RankOne:
    chi: RationalCharacteristic

    def render(self):
        return self.chi.render()

    @property
    def divisible(self):
        return self.chi.divisible


@dataclass(frozen=True)
class OpaqueTF:
    r: int

    def render(self):
        return f"TF({self.r})"


def _atom_key(atom):
    if isinstance(atom, CyclicP):
        return (0, atom.p, 0, atom.e, "")
    if isinstance(atom, Quasicyclic):
        return (0, atom.p, 1, 0, "")
    if isinstance(atom, RankOne):
        return (1, 0, 0, 0, atom.render())
    return (2, 0, 0, atom.r, "")


def is_torsion(atom):
    return isinstance(atom, (CyclicP, Quasicyclic))


def is_divisible(atom):
    return isinstance(atom, Quasicyclic) or (isinstance(atom, RankOne) and atom.divisible)


@dataclass(frozen=True)
class GroupExpr:
    """Canonical direct sum: atoms sorted, equal atoms merged."""

    atoms: tuple = ()

    @classmethod
    def of(cls, pairs):
        merged = {}
        for atom, mult in pairs:
            if is_finite(mult) and mult < 1:
                raise ValueError(f"multiplicity must be >= 1, got {mult}")
            merged[atom] = merged.get(atom, 0) + mult
        return cls(tuple(sorted(merged.items(), key=lambda am: _atom_key(am[0]))))

    def __add__(self, other):
        return GroupExpr.of(self.atoms + other.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __str__(self):
        return render(self)

    @property
    def is_zero(self):
        return not self.atoms


def render(expr):
    if not expr.atoms:
        return "0"
    terms = []
    for atom, mult in expr.atoms:
        text = atom.render()
        if mult != 1:
            text += "^" + render_mult(mult)
        terms.append(text)
    return " + ".join(terms)


# -- parser ------------------------------------------------------------------

class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self):
        return self.peek() == ""

    def accept(self, lit):
        self.skip()
        if self.text.startswith(lit, self.pos):
            self.pos += len(lit)
            return True
        return False

    def expect(self, lit):
        if not self.accept(lit):
            found = self.peek() or "end of input"
            raise ParseError(f"expected {lit!r}, found {found!r}", self.pos)

    def nat(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.peek() or "end of input"
            raise ParseError(f"expected a number, found {found!r}", start)
        return int(self.text[start:self.pos]), start

    def prime(self):
        p, at = self.nat()
        if not isprime(p):
            raise NotPrime(f"{p} is not prime", at)
        return p

    def nat_or_inf(self):
        if self.accept("inf"):
            return INF, self.pos - 3
        return self.nat()

    def expr(self):
        self.skip()
        if self.text.strip() == "0":
            return GroupExpr()
        pairs = [self.term()]
        while self.accept("+"):
            pairs.append(self.term())
        if not self.at_end():
            raise ParseError(f"unexpected {self.peek()!r}", self.pos)
        return GroupExpr.of(pairs)

    def term(self):
        atom = self.atom()
        mult = 1
        if self.accept("^"):
            if self.accept("w"):
                mult = OMEGA
            else:
                mult, at = self.nat()
                if mult == 0:
                    raise ParseError("multiplicity must be >= 1", at)
        return atom, mult

    def atom(self):
        self.skip()
        if self.accept("TF"):
            self.expect("(")
            r, at = self.nat()
            if r == 0:
                raise ParseError("TF rank must be >= 1", at)
            self.expect(")")
            return OpaqueTF(r)
        if self.accept("R"):
            self.expect("{")
            entries = {}
            if not self.accept("}"):
                while True:
                    at = self.pos
                    p = self.prime()
                    if p in entries:
                        raise ParseError(f"prime {p} listed twice", at)
                    self.expect(":")
                    entries[p], _ = self.nat_or_inf()
                    if not self.accept(","):
                        break
                self.expect("}")
            return RankOne(RationalCharacteristic.of(entries))
        if self.accept("Q"):
            return RankOne(Q_CHAR)
        if self.accept("Z"):
            if self.peek() != "(":
                return RankOne(Z_CHAR)
            self.expect("(")
            p = self.prime()
            e, at = 1, self.pos
            if self.accept("^"):
                e, at = self.nat_or_inf()
            self.expect(")")
            if e == INF:
                return Quasicyclic(p)
            if e == 0:
                raise ZeroExponent("exponent must be >= 1", at)
            return CyclicP(p, e)
        found = self.peek() or "end of input"
        raise ParseError(f"expected an atom, found {found!r}", self.pos)


def parse(text):
    """Parse group-expression text into its canonical GroupExpr."""
    return _Parser(text).expr()


# -- invariants --------------------------------------------------------------

@dataclass(frozen=True)
class UlmProfile:
    """Ulm invariants of the p-part: f[a] counts Z(p^(a+1)) summands."""

    p: int
    f: dict = field(default_factory=dict)
    div_rank: object = 0

    def __getitem__(self, alpha):
        return self.f.get(alpha, 0)

    @property
    def reduced_rank(self):
        return sum(self.f.values(), 0)

    @property
    def rank(self):
        return self.div_rank + self.reduced_rank

    @property
    def support(self):
        return sorted(self.f)

    def tail(self, k):
        """Sum of f[a] over a >= k."""
        return sum((m for a, m in self.f.items() if a >= k), 0)

    @property
    def final_rank(self):
        # p^k G shrinks to the divisible part once k passes the top exponent
        top = max(self.f, default=-1) + 1
        return self.div_rank + min(self.tail(k) for k in range(top + 1))


def ulm_profile(expr, p):
    f = {}
    div = 0
    for atom, mult in expr:
        if isinstance(atom, CyclicP) and atom.p == p:
            f[atom.e - 1] = f.get(atom.e - 1, 0) + mult
        elif isinstance(atom, Quasicyclic) and atom.p == p:
            div = div + mult
    return UlmProfile(p, dict(sorted(f.items())), div)


@dataclass(frozen=True)
class StructuralSummary:
    primes: frozenset
    profiles: dict
    tf_rank_reduced: object
    tf_rank_divisible: object
    reduced_tf_types: tuple
    has_opaque_tf: bool

    def p_rank(self, p):
        return self.profiles[p].rank if p in self.profiles else 0

    def bounded(self, p):
        """The reduced p-part is bounded; always true for finite atom lists."""
        prof = self.profiles.get(p)
        return prof is None or all(isinstance(a, int) for a in prof.f)

    def final_rank(self, p):
        return self.profiles[p].final_rank if p in self.profiles else 0

    @property
    def tf_rank(self):
        return self.tf_rank_reduced + self.tf_rank_divisible

    @property
    def is_torsion(self):
        return self.tf_rank == 0

    @property
    def has_torsion(self):
        return bool(self.primes)


def summary(expr):
    primes = frozenset(a.p for a, _ in expr if is_torsion(a))
    profiles = {p: ulm_profile(expr, p) for p in sorted(primes)}
    reduced, divisible, opaque = 0, 0, False
    types = []
    for atom, mult in expr:
        if isinstance(atom, RankOne):
            if atom.divisible:
                divisible = divisible + mult
            else:
                reduced = reduced + mult
                types.append(atom.chi)
        elif isinstance(atom, OpaqueTF):
            reduced = reduced + atom.r * mult
            opaque = True
    return StructuralSummary(primes, profiles, reduced, divisible, tuple(types), opaque)
