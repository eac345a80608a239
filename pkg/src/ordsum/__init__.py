"""Ordinal sums of fuzzy negations, t-norms, t-conorms and implications."""

from .analysis import (
    AnalysisBudget,
    ClassReport,
    Inverse,
    Verdict,
    classify_negation,
    equilibrium_point,
    invert_strict_negation,
    is_strict,
)
from .connectives import (
    Base,
    Connective,
    ConnectiveError,
    Kind,
    NDual,
    evaluate,
    make_connective,
    n_dual,
    unit_value,
)
from .natural_negation import (
    ClosedFormNatural,
    NaturalNegation,
    SupInfOracleConfig,
    closed_form_natneg_tconorm_sum,
    closed_form_natneg_tnorm_sum,
    known_natural_negation,
    natural_negation_implication,
    natural_negation_tconorm,
    natural_negation_tnorm,
)
from .ordinal_sum import (
    FamilyError,
    OrdinalSum,
    Summand,
    SummandFamily,
    left_ordinal_sum_implication,
    mirror_family,
    ordinal_sum_implication_rescher,
    ordinal_sum_negation,
    ordinal_sum_tconorm,
    ordinal_sum_tnorm,
)

__version__ = "0.1.0"
