"""Fuzzy Modus Tollens with Zadeh's compositional extension.

Premises, for a hypothesis H and a consequent C (``P(E|H) >= alpha``)::

    P1:  H -> C          valuation nu_p1
    P2:  not C           valuation nu_p2
    ---------------------------------------
         not H           nu(not H) = T(nu(not C -> not H), nu_p2)

The contrapositive ``not C -> not H`` is not a premise; how its value follows
from ``nu_p1`` depends on the implication and negation conventions, so each
convention mix gets its own analysis below. A run whose premises cannot be
satisfied by any truth value of H, or whose conclusion contradicts the value
of H the premises force, comes back as an inconsistent result carrying a
diagnostic code. Inconsistency is data here, not an exception.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .algebra import (
    LAW_TOL,
    Algebra,
    CustomTNorm,
    Mode,
    TNormKind,
    TruthValue,
    tnorm,
)
from .errors import InconsistencyError, LawViolationError, NumericError, UnsupportedAlgebraError

# diagnostic codes
R_NEGATION_TWO_VALUED = "r_negation_two_valued"
R_IMPLICATION_TWO_VALUED = "r_implication_two_valued"
ZERO_CONSEQUENT = "zero_consequent"
GODEL_REQUIRES_P1_EQUAL_P = "godel_requires_p1_equal_p"
P1_UNATTAINABLE = "p1_unattainable"

# result flags
GENERALIZED = "generalized"
BOUNDARY = "boundary"
CLASSICAL = "classical"
UNDERDETERMINED = "underdetermined"
TWO_VALUED_NEGATION = "two_valued_negation"


class Status(enum.Enum):
    CONSISTENT = "consistent"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class MTPremises:
    nu_p1: float
    nu_p2: float

    def __post_init__(self):
        object.__setattr__(self, "nu_p1", float(TruthValue(self.nu_p1)))
        object.__setattr__(self, "nu_p2", float(TruthValue(self.nu_p2)))


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    value: float | None = None


@dataclass(frozen=True)
class MTResult:
    status: Status
    nu_not_h: float | None = None
    nu_h: float | None = None
    nu_consequent: float | None = None
    diagnostic: Diagnostic | None = None
    flags: tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        return self.status is Status.CONSISTENT

    @property
    def boundary(self) -> bool:
        return BOUNDARY in self.flags

    def to_record(self) -> dict:
        return {
            "status": self.status.value,
            "nu_not_h": self.nu_not_h,
            "nu_h": self.nu_h,
            "nu_consequent": self.nu_consequent,
            "diagnostic_code": self.diagnostic.code if self.diagnostic else None,
            "diagnostic": self.diagnostic.message if self.diagnostic else None,
            "boundary": self.boundary,
            "flags": list(self.flags),
        }


def _inconsistent(code: str, message: str, value: float | None = None,
                  consequent: float | None = None) -> MTResult:
    return MTResult(Status.INCONSISTENT, nu_consequent=consequent,
                    diagnostic=Diagnostic(code, message, value))


def _is_binary(x: float) -> bool:
    return x == 0.0 or x == 1.0


def consequent_value(alg: Algebra, premises: MTPremises) -> float:
    """Truth value of the consequent C, given that P2 asserts ``not C``.

    Raises InconsistencyError when the algebra's negation cannot produce
    ``nu_p2`` at all (Gödel/product R-negation only takes the values 0 and 1).
    """
    p2 = premises.nu_p2
    if alg.convention.negation is Mode.S or alg.tnorm is TNormKind.LUKASIEWICZ:
        return 1.0 - p2
    if isinstance(alg.tnorm, CustomTNorm):
        raise UnsupportedAlgebraError("R-negation of a custom t-norm cannot be inverted")
    if p2 == 0.0:
        return 1.0
    if p2 == 1.0:
        return 0.0
    raise InconsistencyError(
        R_NEGATION_TWO_VALUED,
        f"{alg.name} R-negation only takes the values 0 and 1; nu(P2) = {p2!r} is unreachable",
        p2,
    )


def _compositional(alg: Algebra, consequent: float, nu_h: float, nu_p2: float) -> float:
    """Right-hand side of the compositional rule for a known value of H."""
    contrapositive = alg.implies(alg.neg(consequent), alg.neg(nu_h))
    return alg.conj(contrapositive, nu_p2)


def _cross_check(alg: Algebra, consequent: float, nu_h: float, nu_p2: float, nu_not_h: float) -> None:
    # the conclusion must match both the compositional rule and the negation of H
    direct = _compositional(alg, consequent, nu_h, nu_p2)
    negated = alg.neg(nu_h)
    if abs(direct - nu_not_h) > LAW_TOL or abs(negated - nu_not_h) > LAW_TOL:
        raise NumericError(
            f"cross-check failed under {alg}: conclusion {nu_not_h!r}, "
            f"compositional rule {direct!r}, negation of H {negated!r}"
        )


def _classical(alg: Algebra, premises: MTPremises) -> MTResult:
    """Both premises crisp: enumerate the crisp models of H and C."""
    p1, p2 = premises.nu_p1, premises.nu_p2
    models = [
        (h, c)
        for h in (0.0, 1.0)
        for c in (0.0, 1.0)
        if alg.neg(c) == p2 and alg.implies(h, c) == p1
    ]
    if not models:
        return _inconsistent(
            P1_UNATTAINABLE,
            f"no crisp truth value of H satisfies nu(P1) = {p1!r} and nu(P2) = {p2!r}",
            p1,
        )
    conclusions = {_compositional(alg, c, h, p2) for h, c in models}
    if len(conclusions) != 1:  # pragma: no cover - cannot happen for crisp connectives
        raise NumericError(f"crisp premises admit conflicting conclusions {sorted(conclusions)}")
    flags = [CLASSICAL]
    nu_h = models[0][0] if len(models) == 1 else None
    if nu_h is None:
        flags.append(UNDERDETERMINED)
    return MTResult(Status.CONSISTENT, conclusions.pop(), nu_h, models[0][1], flags=tuple(flags))


def _s_style(alg: Algebra, premises: MTPremises) -> MTResult:
    """Conventions with contrapositive symmetry: S/S (any t-norm) and Łukasiewicz R."""
    p1, p2 = premises.nu_p1, premises.nu_p2
    consequent = 1.0 - p2
    nu_not_h = tnorm(alg.tnorm, p1, p2)
    if p2 < 1.0:
        # P1 alone no longer pins H down once the consequent is not false
        return MTResult(Status.CONSISTENT, nu_not_h, None, consequent, flags=(GENERALIZED,))
    # with a false consequent the implication reduces to 1 - nu(H)
    nu_h = 1.0 - p1
    _cross_check(alg, consequent, nu_h, p2, nu_not_h)
    return MTResult(Status.CONSISTENT, nu_not_h, nu_h, consequent)


def _r_r(alg: Algebra, premises: MTPremises) -> MTResult:
    """Gödel or product R-implication with its own R-negation."""
    consequent = consequent_value(alg, premises)
    p1 = premises.nu_p1
    if not _is_binary(p1):
        return _inconsistent(
            R_IMPLICATION_TWO_VALUED,
            f"with a crisp consequent the {alg.name} R-implication is 0 or 1; "
            f"nu(P1) = {p1!r} is unreachable",
            p1,
            consequent,
        )
    return _classical(alg, premises)


def _product_r_s(alg: Algebra, premises: MTPremises) -> MTResult:
    p1, p2 = premises.nu_p1, premises.nu_p2
    if _is_binary(p1) and _is_binary(p2):
        return _classical(alg, premises)
    p = 1.0 - p2
    if p == 0.0:
        return _inconsistent(
            ZERO_CONSEQUENT,
            f"a false consequent makes the product R-implication 0 or 1; nu(P1) = {p1!r} "
            "needs nu(P2) < 1 (a positive precision error)",
            p1,
            p,
        )
    if p1 == 0.0:
        return _inconsistent(
            P1_UNATTAINABLE,
            f"the product R-implication is at least the consequent value {p!r} and cannot be 0",
            p1,
            p,
        )
    ratio = p / p1
    if ratio > 1.0:
        # min(1, p / nu_p1) saturates: H fully true, nothing left for not H
        return MTResult(Status.CONSISTENT, 0.0, 1.0, p, flags=(BOUNDARY,))
    nu_h = ratio
    nu_not_h = 1.0 - (1.0 - p2) / p1
    _cross_check(alg, p, nu_h, p2, nu_not_h)
    return MTResult(Status.CONSISTENT, nu_not_h, nu_h, p)


def _godel_r_s(alg: Algebra, premises: MTPremises) -> MTResult:
    p1, p2 = premises.nu_p1, premises.nu_p2
    if _is_binary(p1) and _is_binary(p2):
        return _classical(alg, premises)
    p = 1.0 - p2
    if p == 0.0:
        return _inconsistent(
            ZERO_CONSEQUENT,
            f"a false consequent makes the Gödel R-implication 0 or 1; nu(P1) = {p1!r} is unreachable",
            p1,
            p,
        )
    if p1 == 1.0:
        # implication is 1 iff nu(H) <= p; consistency with not H picks nu(H) = p
        nu_h, flags = p, ()
    elif p1 == p:
        # implication equals p for every nu(H) in (p, 1]; report the crisp end
        nu_h, flags = 1.0, (UNDERDETERMINED,)
    else:
        return _inconsistent(
            GODEL_REQUIRES_P1_EQUAL_P,
            f"the Gödel R-implication with consequent {p!r} is either 1 or {p!r}; "
            f"requires nu(P1) = p, got {p1!r}",
            p1,
            p,
        )
    nu_not_h = 1.0 - nu_h
    _cross_check(alg, p, nu_h, p2, nu_not_h)
    return MTResult(Status.CONSISTENT, nu_not_h, nu_h, p, flags=flags)


def _s_impl_r_neg(alg: Algebra, premises: MTPremises) -> MTResult:
    """Gödel or product S-implication paired with the two-valued R-negation."""
    p1, p2 = premises.nu_p1, premises.nu_p2
    if _is_binary(p1) and _is_binary(p2):
        return _classical(alg, premises)
    consequent = consequent_value(alg, premises)
    if consequent == 1.0:
        return _inconsistent(
            P1_UNATTAINABLE,
            f"an S-implication with a true consequent is 1; nu(P1) = {p1!r} is unreachable",
            p1,
            consequent,
        )
    nu_h = 1.0 - p1
    nu_not_h = _compositional(alg, consequent, nu_h, p2)
    _cross_check(alg, consequent, nu_h, p2, nu_not_h)
    return MTResult(Status.CONSISTENT, nu_not_h, nu_h, consequent, flags=(TWO_VALUED_NEGATION,))


def modus_tollens(alg: Algebra, premises: MTPremises) -> MTResult:
    """Infer the truth value of ``not H`` from the two premises.

    Custom t-norms must have been verified and are only analysed under S/S.
    """
    kind = alg.tnorm
    impl, neg = alg.convention.implication, alg.convention.negation
    if isinstance(kind, CustomTNorm):
        if not kind.verified:
            raise LawViolationError(
                f"custom t-norm {kind.name!r} must pass check_tnorm_laws (CustomTNorm.verify) "
                "before it is used for inference"
            )
        if (impl, neg) != (Mode.S, Mode.S):
            raise UnsupportedAlgebraError(
                f"custom t-norms are only analysable under S/S, not {alg.convention}"
            )
    try:
        if (impl, neg) == (Mode.S, Mode.S) or kind is TNormKind.LUKASIEWICZ:
            return _s_style(alg, premises)
        if impl is Mode.R and neg is Mode.R:
            return _r_r(alg, premises)
        if impl is Mode.R:
            if kind is TNormKind.PRODUCT:
                return _product_r_s(alg, premises)
            return _godel_r_s(alg, premises)
        return _s_impl_r_neg(alg, premises)
    except InconsistencyError as exc:
        return _inconsistent(exc.diagnostic_code, str(exc), exc.value)


class ContrapositiveCheck(NamedTuple):
    forward: float
    contrapositive: float
    symmetric: bool


def contrapositive_check(alg: Algebra, x: float, y: float) -> ContrapositiveCheck:
    """Compare ``x -> y`` with ``not y -> not x`` under ``alg``."""
    forward = alg.implies(x, y)
    contra = alg.implies(alg.neg(y), alg.neg(x))
    return ContrapositiveCheck(forward, contra, abs(forward - contra) <= LAW_TOL)

