"""Truth values, t-norms and the S/R families of connectives.

Three t-norms are built in (Gödel/minimum, product, Łukasiewicz). User supplied
t-norms are wrapped in :class:`CustomTNorm`; their residuum is computed
numerically by bisection since no closed form is known for them.

All functions here are pure and accept plain floats; arguments are checked to
lie in [0, 1] and a :class:`~fuzzytollens.errors.TruthRangeError` is raised
otherwise. Nothing is ever clamped on the way in.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field, replace
from typing import Callable, Union

from .errors import LawViolationError, TNormEvaluationError, TruthRangeError

#: Absolute tolerance for algebraic identities that involve rounding.
LAW_TOL = 1e-12


class TruthValue(float):
    """A degree of truth in [0, 1].

    Behaves as a float; construction rejects anything outside the unit
    interval (including NaN).
    """

    __slots__ = ()

    def __new__(cls, value: float) -> "TruthValue":
        value = float(value)
        if not 0.0 <= value <= 1.0:
            raise TruthRangeError(f"truth value {value!r} is outside [0, 1]")
        return super().__new__(cls, value)

    def __repr__(self) -> str:
        return f"TruthValue({float(self)!r})"


def _unit(x: float, name: str = "value") -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise TruthRangeError(f"{name} {x!r} is outside [0, 1]")
    return x


class TNormKind(enum.Enum):
    GODEL = "godel"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"

    @classmethod
    def parse(cls, name: str) -> "TNormKind":
        key = name.strip().lower()
        aliases = {"goedel": "godel", "gödel": "godel", "min": "godel", "minimum": "godel",
                   "prod": "product", "luk": "lukasiewicz", "łukasiewicz": "lukasiewicz"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise ValueError(f"unknown t-norm {name!r}") from None


@dataclass(frozen=True)
class CustomTNorm:
    """A user supplied binary operator intended to be a t-norm.

    It may be evaluated freely, but inference refuses to use it until
    :meth:`verify` has confirmed the axioms on sampled inputs.
    """

    fn: Callable[[float, float], float] = field(compare=False)
    name: str = "custom"
    verified: bool = False

    def __call__(self, x: float, y: float) -> float:
        try:
            z = float(self.fn(x, y))
        except (TypeError, ValueError, ArithmeticError) as exc:
            raise TNormEvaluationError(
                f"t-norm {self.name!r} failed at ({x!r}, {y!r}): {exc}", (x, y)
            ) from exc
        if not 0.0 <= z <= 1.0:
            raise TNormEvaluationError(
                f"t-norm {self.name!r} returned {z!r} outside [0, 1] at ({x!r}, {y!r})", (x, y)
            )
        return z

    def verify(self, samples: int = 1000, seed: int = 0) -> "CustomTNorm":
        """Return a verified copy, or raise LawViolationError with the report."""
        report = check_tnorm_laws(self, samples, seed)
        if not report.passed:
            failed = ", ".join(r.axiom for r in report.results if not r.passed)
            raise LawViolationError(f"t-norm {self.name!r} violates: {failed}", report)
        return replace(self, verified=True)


TNorm = Union[TNormKind, CustomTNorm]


class Mode(enum.Enum):
    S = "s"
    R = "r"

    @classmethod
    def parse(cls, name: str) -> "Mode":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown convention {name!r}; expected 's' or 'r'") from None


@dataclass(frozen=True)
class Convention:
    implication: Mode = Mode.S
    negation: Mode = Mode.S

    def __str__(self) -> str:
        return f"{self.implication.name}/{self.negation.name}"


# --- closed forms ---------------------------------------------------------
# Raw kernels assume validated inputs; the public functions check ranges.

def _godel(x: float, y: float) -> float:
    return x if x <= y else y


def _product(x: float, y: float) -> float:
    return x * y


def _lukasiewicz(x: float, y: float) -> float:
    # smaller minus the complement of the larger: exact when one side is 1,
    # and bit-identical under argument swap
    lo, hi = (x, y) if x <= y else (y, x)
    z = lo - (1.0 - hi)
    return z if z > 0.0 else 0.0


_KERNELS: dict[TNormKind, Callable[[float, float], float]] = {
    TNormKind.GODEL: _godel,
    TNormKind.PRODUCT: _product,
    TNormKind.LUKASIEWICZ: _lukasiewicz,
}


def kernel(kind: TNorm) -> Callable[[float, float], float]:
    """The raw binary function behind ``kind`` (no range checks on inputs)."""
    if isinstance(kind, CustomTNorm):
        return kind
    return _KERNELS[kind]


def tnorm(kind: TNorm, x: float, y: float) -> float:
    """Fuzzy conjunction."""
    return kernel(kind)(_unit(x, "x"), _unit(y, "y"))


def tconorm(kind: TNorm, x: float, y: float) -> float:
    """De Morgan dual of the t-norm: 1 - T(1-x, 1-y)."""
    x, y = _unit(x, "x"), _unit(y, "y")
    if kind is TNormKind.GODEL:
        return x if x >= y else y
    if kind is TNormKind.PRODUCT:
        z = x + y - x * y
        return z if z < 1.0 else 1.0  # rounding can overshoot by one ulp
    if kind is TNormKind.LUKASIEWICZ:
        z = x + y
        return z if z < 1.0 else 1.0
    return 1.0 - kind(1.0 - x, 1.0 - y)


def negate_s(x: float) -> float:
    """Strong (standard) negation, 1 - x."""
    return 1.0 - _unit(x)


def negate_r(kind: TNorm, x: float) -> float:
    """R-negation: the residuum with a false consequent."""
    x = _unit(x)
    if kind is TNormKind.LUKASIEWICZ:
        return 1.0 - x
    if isinstance(kind, TNormKind):
        return 1.0 if x == 0.0 else 0.0
    return residuum_numeric(kind, x, 0.0)


def implies_s(kind: TNorm, x: float, y: float) -> float:
    """S-implication: not(x) or y, with strong negation and the t-conorm."""
    return tconorm(kind, 1.0 - _unit(x, "x"), y)


def implies_r(kind: TNorm, x: float, y: float) -> float:
    """R-implication (residuum): sup{z : T(z, x) <= y}."""
    x, y = _unit(x, "x"), _unit(y, "y")
    if isinstance(kind, CustomTNorm):
        return residuum_numeric(kind, x, y)
    # the x <= y branch must come first: it also covers x == 0 for the quotient
    if x <= y:
        return 1.0
    if kind is TNormKind.GODEL:
        return y
    if kind is TNormKind.PRODUCT:
        return y / x
    z = 1.0 - x + y
    return z if z < 1.0 else 1.0


def residuum_numeric(
    tnorm_fn: Callable[[float, float], float],
    x: float,
    y: float,
    tol: float = 1e-12,
) -> float:
    """Residuum of an arbitrary monotone t-norm, located by bisection.

    Returns ``z`` within ``tol`` of ``sup{z in [0, 1] : tnorm_fn(z, x) <= y}``.
    The feasible set is an interval [0, z*) or [0, z*] because the t-norm is
    monotone, so bisection on the feasibility predicate converges. A value
    sequence that is not monotone along the bracket raises LawViolationError.
    """
    x, y = _unit(x, "x"), _unit(y, "y")
    if not tol > 0.0:
        raise ValueError("tol must be positive")

    def ev(z: float) -> float:
        v = float(tnorm_fn(z, x))
        if not 0.0 <= v <= 1.0:
            raise TNormEvaluationError(f"t-norm returned {v!r} at ({z!r}, {x!r})", (z, x))
        return v

    f_hi = ev(1.0)
    if f_hi <= y:
        return 1.0
    lo, hi = 0.0, 1.0
    f_lo = ev(0.0)
    if f_lo > y:
        raise LawViolationError(
            f"bracketing failed: T(0, {x!r}) = {f_lo!r} exceeds {y!r}; not a t-norm"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = ev(mid)
        if f_mid < f_lo - LAW_TOL or f_mid > f_hi + LAW_TOL:
            raise LawViolationError(
                f"t-norm is not monotone: T({mid!r}, {x!r}) = {f_mid!r} lies outside "
                f"[{f_lo!r}, {f_hi!r}]"
            )
        if f_mid <= y:
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return 0.5 * (lo + hi)


# --- algebra bundle -------------------------------------------------------

def tnorm_name(kind: TNorm) -> str:
    return kind.name if isinstance(kind, CustomTNorm) else kind.value


@dataclass(frozen=True)
class Algebra:
    """A t-norm plus an implication and a negation convention."""

    tnorm: TNorm = TNormKind.PRODUCT
    convention: Convention = Convention()

    @classmethod
    def of(cls, tnorm: str | TNorm = "product", impl: str = "s", neg: str = "s") -> "Algebra":
        kind = TNormKind.parse(tnorm) if isinstance(tnorm, str) else tnorm
        return cls(kind, Convention(Mode.parse(impl), Mode.parse(neg)))

    @property
    def name(self) -> str:
        return tnorm_name(self.tnorm)

    def __str__(self) -> str:
        return f"{self.name} {self.convention}"

    def conj(self, x: float, y: float) -> float:
        return tnorm(self.tnorm, x, y)

    def neg(self, x: float) -> float:
        if self.convention.negation is Mode.S:
            return negate_s(x)
        return negate_r(self.tnorm, x)

    def disj(self, x: float, y: float) -> float:
        # both conventions define a or b as 1 - T(not a, not b), each with
        # its own negation; under S this is exactly the t-conorm
        if self.convention.negation is Mode.S:
            return tconorm(self.tnorm, x, y)
        return 1.0 - tnorm(self.tnorm, self.neg(x), self.neg(y))

    def implies(self, x: float, y: float) -> float:
        if self.convention.implication is Mode.S:
            return implies_s(self.tnorm, x, y)
        return implies_r(self.tnorm, x, y)


ALL_CONVENTIONS = tuple(Convention(i, n) for i in Mode for n in Mode)
BUILTIN_TNORMS = tuple(TNormKind)


# --- law checking ---------------------------------------------------------

AXIOMS = ("commutativity", "monotonicity", "associativity", "identity")


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    passed: bool
    counterexample: tuple[float, ...] | None = None
    detail: str = ""

    def to_record(self) -> dict:
        return {
            "axiom": self.axiom,
            "passed": self.passed,
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class LawReport:
    tnorm: str
    samples: int
    seed: int
    tolerance: float
    results: tuple[AxiomResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    def to_record(self) -> dict:
        return {
            "tnorm": self.tnorm,
            "samples": self.samples,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "axioms": [r.to_record() for r in self.results],
        }


def check_tnorm_laws(kind: TNorm, samples: int = 1000, seed: int = 0) -> LawReport:
    """Check the four t-norm axioms on pseudo-random samples.

    Each sample draws fresh points for every axiom. The first failing tuple of
    each axiom is reported; evaluation errors of a custom function count as a
    failure of the axiom being checked rather than propagating.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    t = kernel(kind)
    tol = 0.0 if kind is TNormKind.GODEL else LAW_TOL
    rng = random.Random(seed)
    found: dict[str, tuple[tuple[float, ...], str]] = {}

    def record(axiom: str, point: tuple[float, ...], detail: str) -> None:
        found.setdefault(axiom, (point, detail))

    for _ in range(samples):
        x, y, z = rng.random(), rng.random(), rng.random()
        a, b = sorted((rng.random(), rng.random()))
        c, d = sorted((rng.random(), rng.random()))
        try:
            lhs, rhs = t(x, y), t(y, x)
            if abs(lhs - rhs) > tol:
                record("commutativity", (x, y), f"T(x,y)={lhs!r} but T(y,x)={rhs!r}")
        except TNormEvaluationError as exc:
            record("commutativity", (x, y), str(exc))
        try:
            lo, hi = t(a, c), t(b, d)
            if lo > hi + tol:
                record("monotonicity", (a, c, b, d), f"T(x,y)={lo!r} > T(w,z)={hi!r}")
        except TNormEvaluationError as exc:
            record("monotonicity", (a, c, b, d), str(exc))
        try:
            lhs, rhs = t(x, t(y, z)), t(t(x, y), z)
            if abs(lhs - rhs) > tol:
                record("associativity", (x, y, z), f"T(x,T(y,z))={lhs!r} but T(T(x,y),z)={rhs!r}")
        except TNormEvaluationError as exc:
            record("associativity", (x, y, z), str(exc))
        try:
            v = t(x, 1.0)
            if abs(v - x) > tol:
                record("identity", (x,), f"T(x,1)={v!r}")
        except TNormEvaluationError as exc:
            record("identity", (x,), str(exc))

    results = tuple(
        AxiomResult(ax, False, *found[ax]) if ax in found else AxiomResult(ax, True)
        for ax in AXIOMS
    )
    return LawReport(tnorm_name(kind), samples, seed, tol, results)

