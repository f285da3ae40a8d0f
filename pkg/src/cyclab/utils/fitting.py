# this_file: src/cyclab/utils/fitting.py
"""Least-squares line fits in log coordinates."""

from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike


@dataclass(frozen=True)
class LineFit:
    """y = slope * x + intercept with its RMS residual."""

    slope: float
    intercept: float
    residual: float

    def to_dict(self) -> dict[str, Any]:
        return {"slope": self.slope, "intercept": self.intercept, "residual": self.residual}


def line_fit(x: ArrayLike, y: ArrayLike) -> LineFit:
    """Ordinary least-squares line through (x, y)."""
    xs = np.asarray(x, dtype=float)
    ys = np.asarray(y, dtype=float)
    if xs.size != ys.size:
        raise ValueError(f"Fit needs matching lengths, got {xs.size} and {ys.size}")
    if xs.size < 2:
        raise ValueError(f"Fit needs at least 2 points, got {xs.size}")
    design = np.column_stack([xs, np.ones_like(xs)])
    (slope, intercept), *_ = np.linalg.lstsq(design, ys, rcond=None)
    rms = float(np.sqrt(np.mean((design @ np.array([slope, intercept]) - ys) ** 2)))
    return LineFit(float(slope), float(intercept), rms)


def loglog_fit(x: ArrayLike, y: ArrayLike) -> LineFit:
    """Line fit of log y against log x; nonpositive pairs are dropped."""
    xs = np.asarray(x, dtype=float)
    ys = np.asarray(y, dtype=float)
    keep = (xs > 0) & (ys > 0)
    return line_fit(np.log(xs[keep]), np.log(ys[keep]))
