"""Semi-generalized Bassian abelian groups: classification and finite checks.

Subpackages by layer:

- :mod:`sgbassian.expr`: group expressions, parsing, Ulm profiles
- :mod:`sgbassian.classifier`: three-valued SGB / ESS / Bassian decisions
- :mod:`sgbassian.finite`: exact subgroup computations in finite p-groups
- :mod:`sgbassian.constructions`: constructive arguments with checks
- :mod:`sgbassian.verify`: exhaustive and seeded verification suites
- :mod:`sgbassian.cli`: the ``sgbassian`` command
"""

from .classifier import Mode, Value, Verdict, classify, classify_bassian_tf, classify_ess, classify_sgb
from .constructions import (
    homocyclic_hull, project_summand, simplify_a_demo, simplify_b_demo, two_gap_witness,
)
from .errors import (
    BadParameters, NoWitness, NotPrime, ParseError, PreconditionFailed, SGBError, TooLarge, TooMany,
    ZeroExponent,
)
from .expr import OMEGA, GroupExpr, parse, render, summary, types_equivalent, ulm_profile
from .finite import (
    FinitePGroup, Subgroup, essential_summand_oracle, height, height_sequence, is_essential, is_pure,
    make_group, parse_group, span,
)

__version__ = "0.1.0"

__all__ = [
    "BadParameters", "FinitePGroup", "GroupExpr", "Mode", "NoWitness", "NotPrime", "OMEGA", "ParseError",
    "PreconditionFailed", "SGBError", "Subgroup", "TooLarge", "TooMany", "Value", "Verdict", "ZeroExponent",
    "classify", "classify_bassian_tf", "classify_ess", "classify_sgb", "essential_summand_oracle", "height",
    "height_sequence", "homocyclic_hull", "is_essential", "is_pure", "make_group", "parse", "parse_group",
    "project_summand", "render", "simplify_a_demo", "simplify_b_demo", "span", "summary", "two_gap_witness",
    "types_equivalent", "ulm_profile",
]
