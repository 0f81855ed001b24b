"""t-norm fuzzy logic and a fuzzy Modus Tollens reading of hypothesis tests."""

from .algebra import (
    Algebra,
    Convention,
    CustomTNorm,
    LawReport,
    Mode,
    TNormKind,
    TruthValue,
    check_tnorm_laws,
    implies_r,
    implies_s,
    negate_r,
    negate_s,
    residuum_numeric,
    tconorm,
    tnorm,
)
from .bayes import PosteriorGrid, exceedance_fraction, posterior, posterior_grid
from .formula import evaluate, parse, to_text, truth_table
from .inference import MTPremises, MTResult, Status, consequent_value, contrapositive_check, modus_tollens
from .sht import ShtScenario, TestStatistic, Verdict, p_value_upper, premise_valuations, run_sht

__version__ = "0.1.0"
