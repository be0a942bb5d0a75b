"""Three-valued decisions for the SGB and ESS properties, with rule trails.

SGB: every injection G -> G/N forces N to be essential in a direct summand.
ESS: every subgroup of G is essential in some direct summand.

Each verdict carries the chain of rules that produced it.  Rules marked
``derived`` are not among the cited results; they are proved in
``docs/derived_rules.md`` and only fire in extended mode.
"""

from dataclasses import dataclass
from enum import Enum

from .expr import (
    CyclicP, OpaqueTF, Quasicyclic, RankOne, is_divisible, is_finite,
    render_mult, summary, types_equivalent,
)


class Value(str, Enum):
    YES = "YES"
    NO = "NO"
    UNDECIDED = "UNDECIDED"


class Mode(str, Enum):
    STRICT = "strict"
    EXTENDED = "extended"


@dataclass(frozen=True)
class Rule:
    rule_id: str
    source: str
    statement: str
    kind: str  # "decisive", "gap" or "derived"


_RULES = [
    Rule("SGB-DIV", "Example 1",
         "every divisible group is SGB", "decisive"),
    Rule("SGB-TF-FINRANK", "Theorem 5(1)",
         "a torsion-free group of finite rank is SGB", "decisive"),
    Rule("SGB-TF-DHOM", "Theorem 5(2)",
         "D + R with D divisible and R finite-rank, fully decomposable, homogeneous is SGB", "decisive"),
    Rule("SGB-TF-OPAQUE", "Theorem 5",
         "infinite rank with an opaque reduced summand: homogeneity cannot be checked", "gap"),
    Rule("SGB-TF-NO", "Theorem 5 / Proposition 4",
         "torsion-free SGB groups are exactly those of Theorem 5; a reduced one must have finite rank", "decisive"),
    Rule("SGB-P-FINRANK", "Theorem main(2)",
         "a p-group of finite p-rank is SGB", "decisive"),
    Rule("SGB-P-HOMOCYCLIC", "Example 2",
         "a direct sum of copies of Z(p^n) is SGB", "decisive"),
    Rule("SGB-P-PROFILE", "Theorem main(3)",
         "G = G' + F with f_G' supported on {n-1, n} and F finite with (p^(n+1) G)[p] containing F[p] is SGB",
         "decisive"),
    Rule("SGB-P-UNBOUNDED-NO", "Theorem main (necessity)",
         "an SGB p-group has bounded reduced part", "decisive"),
    Rule("SGB-P-NO", "Theorem main / Lemma simplify",
         "a p-group outside cases (1)-(3) is not SGB; Lemma simplify (a) or (b) gives the obstruction", "decisive"),
    Rule("SGB-SUMMAND-NO", "Theorem summands",
         "SGB passes to direct summands, so a non-SGB primary component rules G out", "decisive"),
    Rule("GAP-SGB-MULTIPRIME", "open",
         "no multi-prime torsion result is available in strict mode", "gap"),
    Rule("SGB-TORSION-PRIMARY", "derived",
         "a torsion group is SGB iff every primary component is SGB", "derived"),
    Rule("SGB-SPLIT", "Proposition newone2",
         "T + R is SGB iff T and R are SGB and, when R has infinite rank, T is divisible", "decisive"),
    Rule("GAP-SGB-SPLIT", "open",
         "a component of the splitting mixed group is undecided", "gap"),
    Rule("ESS-DIV", "Example 1 / Theorem main proof",
         "in a divisible group every subgroup is essential in a summand", "decisive"),
    Rule("ESS-P-PROFILE", "Theorem 6",
         "a reduced p-group has ESS iff f_G(a) = 0 for a outside {n-1, n}", "decisive"),
    Rule("ESS-P-NO", "Theorem 6",
         "a reduced p-group with summands Z(p^n) + Z(p^m), n + 1 < m, fails ESS (two-gap element)", "decisive"),
    Rule("GAP-ESS-DIV-REDUCED", "open",
         "p-groups with nonzero divisible and reduced parts are not classified for ESS", "gap"),
    Rule("ESS-SUMMAND-NO", "Lemma summandlemma",
         "ESS passes to direct summands, so a failing primary component rules G out", "decisive"),
    Rule("GAP-ESS-MULTIPRIME", "open",
         "no multi-prime torsion ESS result is available in strict mode", "gap"),
    Rule("ESS-TORSION-PRIMARY", "derived",
         "a torsion group has ESS iff every primary component has ESS", "derived"),
    Rule("ESS-MIXED-TORSION-NO", "Lemma 62",
         "a mixed group with ESS has divisible torsion part", "decisive"),
    Rule("ESS-MIXED-YES", "Theorem 65",
         "D + R with D divisible and R homogeneous fully decomposable of finite rank has ESS", "decisive"),
    Rule("ESS-MIXED-NO", "Theorem 65",
         "mixed or torsion-free groups with ESS are exactly those of Theorem 65", "decisive"),
    Rule("GAP-ESS-OPAQUE", "Theorem 65",
         "an opaque reduced torsion-free summand: homogeneity cannot be checked", "gap"),
    Rule("BASSIAN-TF-FINRANK", "Proposition 4",
         "a reduced torsion-free group of finite rank is Bassian", "decisive"),
    Rule("BASSIAN-TF-NO", "Proposition 4",
         "a reduced torsion-free group of infinite rank is not Bassian", "decisive"),
    Rule("GAP-BASSIAN-SCOPE", "open",
         "Bassian decisions are offered only for reduced torsion-free groups", "gap"),
]

RULES = {r.rule_id: r for r in _RULES}


def rule_table():
    """The rule table as plain data, for reports."""
    return [{"rule_id": r.rule_id, "source": r.source, "statement": r.statement, "kind": r.kind}
            for r in _RULES]


@dataclass(frozen=True)
class RuleTrace:
    rule_id: str
    citation: str
    note: str = ""

    def to_dict(self):
        return {"rule_id": self.rule_id, "citation": self.citation, "note": self.note}


@dataclass(frozen=True)
class Verdict:
    value: Value
    trail: tuple

    @property
    def rule_id(self):
        """The deciding (last) rule."""
        return self.trail[-1].rule_id

    def to_dict(self):
        return {"value": self.value.value, "trail": [t.to_dict() for t in self.trail]}


def _trace(rule_id, note=""):
    r = RULES[rule_id]
    return RuleTrace(rule_id, f"{r.source}: {r.statement}", note)


def _verdict(value, rule_id, note="", before=()):
    trail = tuple(before) + (_trace(rule_id, note),)
    kind = RULES[rule_id].kind
    if value is Value.UNDECIDED:
        assert kind == "gap", rule_id
    else:
        assert kind != "gap", rule_id
    return Verdict(value, trail)


def _wholly_divisible(expr):
    return all(is_divisible(a) for a, _ in expr)


def _torsion_part(expr):
    return [(a, m) for a, m in expr if isinstance(a, (CyclicP, Quasicyclic))]


def _fmt(m):
    return render_mult(m)


# -- p-groups ----------------------------------------------------------------

def profile_n(prof):
    """The n of the Theorem main(3) predicate, or None.

    Holds iff div_rank = 0 and some n >= 1 has f[a] = 0 for a < n-1 and a
    finite tail sum over a >= n+1.  Only n = max(1, top infinite index) can
    work: a larger n only strengthens the first condition, a smaller one
    breaks the second.
    """
    if prof.div_rank != 0:
        return None
    infinite = [a for a, m in prof.f.items() if not is_finite(m)]
    n = max(infinite + [1])
    if any(a < n - 1 for a in prof.f):
        return None
    return n


def ess_n(prof):
    """n >= 1 with support of f inside {n-1, n}, or None."""
    support = prof.support
    if not support:
        return 1
    lo, hi = support[0], support[-1]
    if hi - lo > 1:
        return None
    return max(hi, 1)


def _cyc(p, e):
    return CyclicP(p, e).render()


def _sgb_failure_shape(prof):
    p = prof.p
    if prof.div_rank != 0:
        if not is_finite(prof.div_rank):
            n = prof.support[0] + 1
            return f"Lemma simplify (a): {_cyc(p, n)} + Z({p}^inf)^w, m = inf"
        a = next(a for a, m in prof.f.items() if not is_finite(m))
        return f"Lemma simplify (b): {_cyc(p, a + 1)}^w + Z({p}^inf)"
    top = max(a for a, m in prof.f.items() if not is_finite(m))
    low = min(prof.f)
    return f"Lemma simplify (a): {_cyc(p, low + 1)} + {_cyc(p, top + 1)}^w, n = {low + 1}, m = {top + 1}"


def _sgb_pgroup(prof):
    p = prof.p
    if not prof.f:
        return _verdict(Value.YES, "SGB-DIV", f"{p}-component is divisible")
    if is_finite(prof.rank):
        return _verdict(Value.YES, "SGB-P-FINRANK", f"{p}-rank {prof.rank}")
    if not all(isinstance(a, int) for a in prof.f):
        return _verdict(Value.NO, "SGB-P-UNBOUNDED-NO", f"{p}-component unbounded")
    if prof.div_rank == 0 and len(prof.f) == 1:
        (a,) = prof.f
        return _verdict(Value.YES, "SGB-P-HOMOCYCLIC", f"homocyclic of exponent {p}^{a + 1}")
    n = profile_n(prof)
    if n is not None:
        tail = prof.tail(n + 1)
        return _verdict(Value.YES, "SGB-P-PROFILE",
                        f"n = {n}: f vanishes below {n - 1}, finite part above {n} has rank {tail}")
    return _verdict(Value.NO, "SGB-P-NO", _sgb_failure_shape(prof))


def _ess_pgroup(prof):
    p = prof.p
    if not prof.f:
        return _verdict(Value.YES, "ESS-DIV", f"{p}-component is divisible")
    if prof.div_rank != 0:
        return _verdict(Value.UNDECIDED, "GAP-ESS-DIV-REDUCED",
                        f"{p}-component has divisible rank {_fmt(prof.div_rank)} and a nonzero reduced part")
    n = ess_n(prof)
    if n is not None:
        return _verdict(Value.YES, "ESS-P-PROFILE", f"support {prof.support} inside {{{n - 1}, {n}}}")
    lo, hi = prof.support[0], prof.support[-1]
    return _verdict(Value.NO, "ESS-P-NO",
                    f"{_cyc(p, lo + 1)} + {_cyc(p, hi + 1)} is a summand and {lo + 1} + 1 < {hi + 1}")


def _torsion(s, mode, per_prime, summand_rule, gap_rule, derived_rule):
    subs = [per_prime(s.profiles[p]) for p in sorted(s.primes)]
    if len(subs) == 1:
        return subs[0]
    trail = [t for v in subs for t in v.trail]
    bad = [p for p, v in zip(sorted(s.primes), subs) if v.value is Value.NO]
    if bad:
        return _verdict(Value.NO, summand_rule, f"{bad[0]}-component fails", trail)
    if any(v.value is Value.UNDECIDED for v in subs):
        return _verdict(Value.UNDECIDED, gap_rule, "a primary component is undecided", trail)
    if mode is Mode.EXTENDED:
        return _verdict(Value.YES, derived_rule, "every primary component passes", trail)
    return _verdict(Value.UNDECIDED, gap_rule,
                    f"primes {sorted(s.primes)} all pass; the combination needs extended mode", trail)


# -- torsion-free ------------------------------------------------------------

def _homogeneous(types):
    return all(types_equivalent(types[0], t) for t in types[1:])


def _sgb_tf(s):
    if is_finite(s.tf_rank):
        return _verdict(Value.YES, "SGB-TF-FINRANK", f"rank {s.tf_rank}")
    if not is_finite(s.tf_rank_reduced):
        return _verdict(Value.NO, "SGB-TF-NO",
                        "reduced part has infinite rank; it is a summand and not SGB (Proposition 4)")
    if s.tf_rank_reduced == 0:
        return _verdict(Value.YES, "SGB-DIV", "torsion-free part is divisible")
    if s.has_opaque_tf:
        return _verdict(Value.UNDECIDED, "SGB-TF-OPAQUE",
                        f"divisible rank w, reduced rank {s.tf_rank_reduced} includes TF(r)")
    if _homogeneous(s.reduced_tf_types):
        return _verdict(Value.YES, "SGB-TF-DHOM",
                        f"divisible rank w, reduced rank {s.tf_rank_reduced}, one type")
    return _verdict(Value.NO, "SGB-TF-NO",
                    "divisible rank w but the reduced rank-1 summands have inequivalent types")


# -- public API --------------------------------------------------------------

def classify_sgb(expr, mode=Mode.STRICT):
    mode = Mode(mode)
    if _wholly_divisible(expr):
        return _verdict(Value.YES, "SGB-DIV", "every atom is Q or Z(p^inf)")
    s = summary(expr)
    if not s.has_torsion:
        return _sgb_tf(s)
    t = _torsion(s, mode, _sgb_pgroup, "SGB-SUMMAND-NO", "GAP-SGB-MULTIPRIME", "SGB-TORSION-PRIMARY")
    if s.is_torsion:
        return t
    r = _sgb_tf(s)
    trail = t.trail + r.trail
    r_infinite = not is_finite(s.tf_rank)
    t_divisible = all(not prof.f for prof in s.profiles.values())
    if t.value is Value.NO or r.value is Value.NO:
        part = "torsion part" if t.value is Value.NO else "torsion-free part"
        return _verdict(Value.NO, "SGB-SPLIT", f"the {part} is not SGB", trail)
    if r_infinite and not t_divisible:
        return _verdict(Value.NO, "SGB-SPLIT",
                        "torsion-free part has infinite rank but the torsion part is not divisible", trail)
    if Value.UNDECIDED in (t.value, r.value):
        return _verdict(Value.UNDECIDED, "GAP-SGB-SPLIT", "a component is undecided", trail)
    return _verdict(Value.YES, "SGB-SPLIT",
                    "both parts SGB" + (" and the torsion part is divisible" if r_infinite else
                                        "; torsion-free rank finite"), trail)


def classify_ess(expr, mode=Mode.STRICT):
    mode = Mode(mode)
    if _wholly_divisible(expr):
        return _verdict(Value.YES, "ESS-DIV", "every atom is Q or Z(p^inf)")
    s = summary(expr)
    if s.is_torsion:
        return _torsion(s, mode, _ess_pgroup, "ESS-SUMMAND-NO", "GAP-ESS-MULTIPRIME", "ESS-TORSION-PRIMARY")
    reduced_torsion = [a for a, _ in expr if isinstance(a, CyclicP)]
    if reduced_torsion:
        return _verdict(Value.NO, "ESS-MIXED-TORSION-NO",
                        f"{reduced_torsion[0].render()} is a reduced torsion summand")
    if not is_finite(s.tf_rank_reduced):
        return _verdict(Value.NO, "ESS-MIXED-NO", "reduced torsion-free part has infinite rank")
    if s.has_opaque_tf:
        return _verdict(Value.UNDECIDED, "GAP-ESS-OPAQUE",
                        f"reduced torsion-free rank {s.tf_rank_reduced} includes TF(r)")
    if not s.reduced_tf_types or _homogeneous(s.reduced_tf_types):
        return _verdict(Value.YES, "ESS-MIXED-YES",
                        f"torsion divisible, reduced torsion-free rank {s.tf_rank_reduced} of one type")
    return _verdict(Value.NO, "ESS-MIXED-NO", "reduced rank-1 summands have inequivalent types")


def classify_bassian_tf(expr):
    """Bassian decision for reduced torsion-free inputs only."""
    if any(not isinstance(a, (RankOne, OpaqueTF)) or is_divisible(a) for a, _ in expr):
        return _verdict(Value.UNDECIDED, "GAP-BASSIAN-SCOPE",
                        "input has torsion or a divisible summand")
    s = summary(expr)
    if is_finite(s.tf_rank):
        return _verdict(Value.YES, "BASSIAN-TF-FINRANK", f"rank {s.tf_rank}")
    return _verdict(Value.NO, "BASSIAN-TF-NO", "rank w")


def classify(expr, prop="sgb", mode=Mode.STRICT):
    if prop == "sgb":
        return classify_sgb(expr, mode)
    if prop == "ess":
        return classify_ess(expr, mode)
    if prop == "bassian-tf":
        return classify_bassian_tf(expr)
    raise ValueError(f"unknown property {prop!r}")
