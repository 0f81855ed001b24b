"""Bayes posterior P(H|E) as a function of the prior and the alternative likelihood.

With ``P(E|H)`` held fixed, the posterior

    P(H|E) = P(E|H) P(H) / (P(E|H) P(H) + P(E|not H) (1 - P(H)))

is mapped over the unit square of ``(P(H), P(E|not H))``. Cells where the
denominator vanishes are undefined (NaN in the array) and are counted rather
than assigned a value.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError

DEFAULT_P_E_GIVEN_H = 0.04
DEFAULT_RESOLUTION = 1001


def _prob(x: float, name: str) -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise InputError(f"{name} must lie in [0, 1], got {x!r}")
    return x


def posterior(p_e_h: float, p_h: float, p_e_not_h: float) -> float | None:
    """Pointwise posterior; ``None`` where it is 0/0."""
    p_e_h = _prob(p_e_h, "p_e_h")
    p_h = _prob(p_h, "p_h")
    p_e_not_h = _prob(p_e_not_h, "p_e_not_h")
    num = p_e_h * p_h
    den = num + p_e_not_h * (1.0 - p_h)
    if den == 0.0:
        return None
    return num / den


def axis(resolution: int) -> np.ndarray:
    return np.arange(resolution, dtype=np.float64) / (resolution - 1)


@dataclass(frozen=True, eq=False)
class PosteriorGrid:
    p_e_given_h: float
    resolution: int
    values: np.ndarray  # [p_h index, p_e_not_h index], NaN where undefined

    @property
    def undefined_count(self) -> int:
        return int(np.isnan(self.values).sum())

    @property
    def defined_count(self) -> int:
        return self.values.size - self.undefined_count

    def to_csv(self) -> str:
        coords = axis(self.resolution)
        buf = io.StringIO()
        buf.write("p_h,p_e_not_h,posterior\n")
        for i, ph in enumerate(coords):
            row = self.values[i]
            for j, pe in enumerate(coords):
                v = row[j]
                buf.write(f"{ph:.12g},{pe:.12g},{'NA' if math.isnan(v) else format(v, '.12g')}\n")
        return buf.getvalue()

    def to_pgm(self) -> bytes:
        """Binary greyscale PGM: p_h runs left to right, p_e_not_h top to bottom."""
        img = np.where(np.isnan(self.values), 0.0, np.rint(255.0 * self.values))
        pixels = img.T.astype(np.uint8)
        header = (
            f"P5\n# p_e_given_h={self.p_e_given_h!r} resolution={self.resolution}\n"
            f"{self.resolution} {self.resolution}\n255\n"
        )
        return header.encode("ascii") + pixels.tobytes()


def posterior_grid(p_e_h: float = DEFAULT_P_E_GIVEN_H, resolution: int = DEFAULT_RESOLUTION) -> PosteriorGrid:
    p_e_h = _prob(p_e_h, "p_e_h")
    if int(resolution) != resolution or resolution < 2:
        raise InputError(f"resolution must be an integer >= 2, got {resolution!r}")
    resolution = int(resolution)
    coords = axis(resolution)
    p_h = coords[:, None]
    p_e_not_h = coords[None, :]
    # same operation order as posterior(), so cells match it bit for bit
    num = p_e_h * p_h
    den = num + p_e_not_h * (1.0 - p_h)
    with np.errstate(invalid="ignore", divide="ignore"):
        values = np.where(den == 0.0, np.nan, num / den)
    values.setflags(write=False)
    return PosteriorGrid(p_e_h, resolution, values)


def exceedance_fraction(grid: PosteriorGrid, threshold: float) -> float:
    """Fraction of defined cells whose posterior is strictly above ``threshold``."""
    threshold = _prob(threshold, "threshold")
    defined = ~np.isnan(grid.values)
    n = int(defined.sum())
    if n == 0:
        raise InputError("grid has no defined cells")
    return int((grid.values[defined] > threshold).sum()) / n
