"""Compare two series formats through their win-probability difference.

The workflow is the classic closed-interval one: fix ``r``, differentiate,
locate critical points in [0, 1], evaluate at those and at the endpoints,
then read off the largest and smallest advantage.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .core import BivariatePolynomial, SeriesFormat, UnivariatePolynomial
from .enumeration import Side, series_win_polynomial
from .records import R_PAPER

__all__ = [
    "SIGNIFICANCE_THRESHOLD",
    "SCAN_STEP",
    "ComparisonReport",
    "difference_function",
    "isolate_roots",
    "sign_change_brackets",
    "extreme_value_analysis",
    "crossover_roots",
    "crossover_point",
    "fairness_verdict",
    "MultipleCrossoverError",
]

SIGNIFICANCE_THRESHOLD = 0.04
SCAN_STEP = 1e-3
ROOT_TOL = 1e-9

ORIENTATION = (
    "positive values mean the longer series gives the advantaged team "
    "a higher series-win probability"
)


class MultipleCrossoverError(ValueError):
    def __init__(self, roots):
        self.roots = list(roots)
        super().__init__(f"expected one interior crossover, found {len(self.roots)}: {self.roots}")


def difference_function(longer: SeriesFormat, shorter: SeriesFormat) -> BivariatePolynomial:
    return series_win_polynomial(longer, Side.ADVANTAGED) - series_win_polynomial(
        shorter, Side.ADVANTAGED
    )


def _grid(lo: float, hi: float, step: float) -> np.ndarray:
    n = max(1, math.ceil((hi - lo) / step - 1e-9))
    return np.linspace(lo, hi, n + 1)


def sign_change_brackets(
    poly: UnivariatePolynomial, lo: float, hi: float, step: float = SCAN_STEP
) -> list[tuple[float, float]]:
    """Grid cells ``(a, b)`` on which ``poly`` strictly changes sign."""
    xs = _grid(lo, hi, step)
    vals = poly(xs)
    out = []
    for i in range(len(xs) - 1):
        if vals[i] * vals[i + 1] < 0:
            out.append((float(xs[i]), float(xs[i + 1])))
    return out


def _refine(poly: UnivariatePolynomial, a: float, b: float, tol: float) -> float:
    fa = poly(a)
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = poly(m)
        if fm == 0.0:
            return m
        if (fa < 0) == (fm < 0):
            a, fa = m, fm
        else:
            b = m
    # Newton polish, kept inside the final bracket
    dpoly = poly.derivative()
    x = 0.5 * (a + b)
    for _ in range(8):
        d = dpoly(x)
        if d == 0.0:
            break
        nx = x - poly(x) / d
        if not (a <= nx <= b) or abs(poly(nx)) > abs(poly(x)):
            break
        if nx == x:
            break
        x = nx
    return x


def isolate_roots(
    poly: UnivariatePolynomial,
    lo: float,
    hi: float,
    tol: float = ROOT_TOL,
    step: float = SCAN_STEP,
) -> list[float]:
    """Real roots of ``poly`` in ``[lo, hi]``.

    A root at 0 of any multiplicity is found by deflating powers of p first;
    the rest come from sign changes (or exact zeros) on a uniform grid,
    bisected to ``tol`` and Newton-polished. Roots closer than ``tol`` are
    merged.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if poly.degree < 1:
        return []
    roots: list[float] = []
    k = poly.low_order_zeros()
    q = poly
    if k:
        if lo <= 0.0 <= hi:
            roots.append(0.0)
        q = poly.deflate_p(k)
    if q.degree >= 1:
        xs = _grid(lo, hi, step)
        vals = q(xs)
        for i, x in enumerate(xs):
            if vals[i] == 0.0:
                roots.append(float(x))
            elif i + 1 < len(xs) and vals[i] * vals[i + 1] < 0:
                roots.append(_refine(q, float(x), float(xs[i + 1]), tol))
    roots.sort()
    merged: list[float] = []
    for x in roots:
        if merged and abs(x - merged[-1]) < tol:
            continue
        merged.append(x)
    return merged


@dataclass(frozen=True)
class ComparisonReport:
    difference_poly: BivariatePolynomial
    r_value: float
    critical_points_in_01: list[float]
    endpoint_and_critical_values: list[tuple[float, float]]
    max_advantage: float
    min_advantage: float
    crossover_in_01: float | None
    significant: bool
    external_root_brackets: list[tuple[float, float]]
    threshold: float = SIGNIFICANCE_THRESHOLD
    label: str = ""
    extra: dict = field(default_factory=dict)

    def value_at(self, p: float, tol: float = 1e-9) -> float:
        for x, v in self.endpoint_and_critical_values:
            if abs(x - p) <= tol:
                return v
        raise KeyError(p)

    def to_text(self) -> str:
        """Key-value rendering; field order is fixed.

        comparison, orientation, difference, r, critical_points, one
        ``value[p=...]`` line per candidate point, max_advantage,
        min_advantage, crossover (6 decimals), threshold,
        external_root_brackets, verdict. Other numbers use 9 decimals.
        """
        lines = []
        if self.label:
            lines.append(f"comparison: {self.label}")
        lines.append(f"orientation: {ORIENTATION}")
        lines.append(f"difference: {self.difference_poly.to_text()}")
        lines.append(f"r: {fmt9(self.r_value)}")
        crit = ", ".join(fmt9(c) for c in self.critical_points_in_01) or "none"
        lines.append(f"critical_points: {crit}")
        for x, v in self.endpoint_and_critical_values:
            lines.append(f"value[p={fmt9(x)}]: {fmt9(v)}")
        lines.append(f"max_advantage: {fmt9(self.max_advantage)}")
        lines.append(f"min_advantage: {fmt9(self.min_advantage)}")
        cross = "none" if self.crossover_in_01 is None else fmt6(self.crossover_in_01)
        lines.append(f"crossover: {cross}")
        lines.append(f"threshold: {fmt9(self.threshold)}")
        brackets = ", ".join(f"[{fmt9(a)}, {fmt9(b)}]" for a, b in self.external_root_brackets)
        lines.append(f"external_root_brackets: {brackets or 'none'}")
        lines.append(f"verdict: {'significant' if self.significant else 'NOT significant'}")
        return "\n".join(lines) + "\n"


def _fmt(x: float, digits: int) -> str:
    s = f"{x:.{digits}f}"
    if float(s) == 0.0:
        s = f"{0.0:.{digits}f}"
    return s


def fmt9(x: float) -> str:
    return _fmt(x, 9)


def fmt6(x: float) -> str:
    return _fmt(x, 6)


def crossover_roots(
    difference: BivariatePolynomial, r_value: float = R_PAPER, tol: float = ROOT_TOL
) -> list[float]:
    """Interior roots in (0, 1) after removing the forced roots at 0 and 1."""
    u = difference.fix_r(r_value)
    if u.degree < 1:
        return []
    u = u.deflate_p(u.low_order_zeros())
    while u.degree >= 1 and abs(u(1.0)) <= 1e-12 * max(1.0, u.max_abs_coefficient()):
        u = u.deflate_root(1.0)
    if u.degree < 1:
        return []
    return [x for x in isolate_roots(u, 0.0, 1.0, tol) if tol < x < 1.0 - tol]


def crossover_point(
    difference: BivariatePolynomial, r_value: float = R_PAPER, tol: float = ROOT_TOL
) -> float | None:
    roots = crossover_roots(difference, r_value, tol)
    if len(roots) > 1:
        raise MultipleCrossoverError(roots)
    return roots[0] if roots else None


def extreme_value_analysis(
    difference: BivariatePolynomial,
    r_value: float = R_PAPER,
    threshold: float = SIGNIFICANCE_THRESHOLD,
    tol: float = ROOT_TOL,
) -> ComparisonReport:
    if not r_value > 0:
        raise ValueError(f"r must be positive, got {r_value!r}")
    u = difference.fix_r(r_value)
    du = u.derivative()
    crit = isolate_roots(du, 0.0, 1.0, tol) if du.degree >= 1 else []
    candidates = sorted({0.0, 1.0, *crit})
    values = [(x, float(u(x))) for x in candidates]
    vmax = max(v for _, v in values)
    vmin = min(v for _, v in values)
    brackets = sign_change_brackets(du, 1.0, 2.0) if du.degree >= 1 else []
    interior = crossover_roots(difference, r_value, tol)
    return ComparisonReport(
        difference_poly=difference,
        r_value=float(r_value),
        critical_points_in_01=crit,
        endpoint_and_critical_values=values,
        max_advantage=vmax,
        min_advantage=vmin,
        crossover_in_01=interior[0] if len(interior) == 1 else None,
        significant=vmax >= threshold,
        external_root_brackets=brackets,
        threshold=threshold,
        extra={"interior_roots": interior},
    )


def fairness_verdict(
    longer: SeriesFormat,
    shorter: SeriesFormat,
    r_value: float = R_PAPER,
    threshold: float = SIGNIFICANCE_THRESHOLD,
) -> ComparisonReport:
    diff = difference_function(longer, shorter)
    report = extreme_value_analysis(diff, r_value, threshold)
    return replace(
        report,
        crossover_in_01=crossover_point(diff, r_value),
        label=f"{longer.name} vs {shorter.name}",
    )
