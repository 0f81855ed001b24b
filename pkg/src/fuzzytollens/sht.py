"""Statistical hypothesis testing read as a fuzzy Modus Tollens.

A test at significance level ``alpha`` becomes the argument

    P1: H -> (P(E|H) >= alpha)      nu(P1) = 1 - alpha**n
    P2: not (P(E|H) >= alpha)       nu(P2) = 1 - p_err

where ``p_err`` models limited measurement precision and ``n`` selects a
member of the valuation family (``n = 1`` is the default).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .algebra import Algebra
from .errors import InputError
from .inference import MTPremises, MTResult, modus_tollens

REJECTED = "rejected"
NO_SOUND_INFERENCE = "no_sound_inference"
P2_NOT_ESTABLISHED = "p2_not_established"


@dataclass(frozen=True)
class ShtScenario:
    alpha: float
    p_err: float = 0.0
    model_n: float = 1.0
    algebra: Algebra = field(default_factory=Algebra)

    def __post_init__(self):
        for name in ("alpha", "p_err", "model_n"):
            if not math.isfinite(getattr(self, name)):
                raise InputError(f"{name} must be finite")
        if not 0.0 < self.alpha <= 1.0:
            # alpha = 0 turns P1 into a tautology; inject premises directly instead
            raise InputError(f"alpha must lie in (0, 1], got {self.alpha!r}")
        if not 0.0 <= self.p_err < 1.0:
            raise InputError(f"p_err must lie in [0, 1), got {self.p_err!r}")
        if not self.model_n > 0.0:
            raise InputError(f"model_n must be positive, got {self.model_n!r}")

    def to_record(self) -> dict:
        conv = self.algebra.convention
        return {
            "alpha": self.alpha,
            "p_err": self.p_err,
            "model_n": self.model_n,
            "tnorm": self.algebra.name,
            "impl": conv.implication.value,
            "neg": conv.negation.value,
        }


@dataclass(frozen=True)
class TestStatistic:
    """Observed value of an aggregate statistic and its normal null distribution."""

    __test__ = False  # keep pytest from collecting this class

    observed: float
    null_mean: float
    null_sd: float

    def __post_init__(self):
        for name in ("observed", "null_mean", "null_sd"):
            if not math.isfinite(getattr(self, name)):
                raise InputError(f"{name} must be finite, got {getattr(self, name)!r}")
        if not self.null_sd > 0.0:
            raise InputError(f"null_sd must be positive, got {self.null_sd!r}")


def p_value_upper(stat: TestStatistic) -> float:
    """Upper-tail p-value ``P(S >= s | H)`` under a normal null.

    Evaluates ``1 - Phi(z)`` as ``erfc(z / sqrt 2) / 2``; the complementary
    error function keeps full relative precision deep in the upper tail where
    ``1 - Phi`` would cancel.
    """
    z = (stat.observed - stat.null_mean) / stat.null_sd
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def premise_valuations(scenario: ShtScenario) -> MTPremises:
    return MTPremises(1.0 - scenario.alpha ** scenario.model_n, 1.0 - scenario.p_err)


@dataclass(frozen=True)
class Verdict:
    scenario: ShtScenario
    verdict: str
    message: str
    premises: MTPremises | None = None
    result: MTResult | None = None
    p_value: float | None = None

    @property
    def rejected(self) -> bool:
        return self.verdict == REJECTED

    def to_record(self) -> dict:
        return {
            "scenario": self.scenario.to_record(),
            "p_value": self.p_value,
            "premises": (
                {"nu_p1": self.premises.nu_p1, "nu_p2": self.premises.nu_p2}
                if self.premises else None
            ),
            "result": self.result.to_record() if self.result else None,
            "verdict": self.verdict,
            "message": self.message,
        }


def run_sht(scenario: ShtScenario, p_value: float | None = None) -> Verdict:
    """Run the test as an inference and phrase the outcome.

    When a computed ``p_value`` is supplied and is not below ``alpha``, P2 is
    false as observed and no inference is attempted.
    """
    if p_value is not None:
        if not 0.0 <= p_value <= 1.0:
            raise InputError(f"p_value must lie in [0, 1], got {p_value!r}")
        if p_value >= scenario.alpha:
            return Verdict(
                scenario, P2_NOT_ESTABLISHED,
                f"P2 not established: p-value {p_value:.6g} is not below alpha {scenario.alpha:.6g}",
                p_value=p_value,
            )
    premises = premise_valuations(scenario)
    result = modus_tollens(scenario.algebra, premises)
    if result.consistent:
        message = f"hypothesis rejected with truth value {result.nu_not_h:.12g}"
        verdict = REJECTED
    else:
        message = f"no sound inference under this algebra: {result.diagnostic.message}"
        verdict = NO_SOUND_INFERENCE
    return Verdict(scenario, verdict, message, premises, result, p_value)
