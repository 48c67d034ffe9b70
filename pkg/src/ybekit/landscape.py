"""Scalar landscapes over (eta, beta) or a single angle, and their extrema.

The surfaces of interest are built from absolute values of trigonometric
functions, so some extrema sit on V-shaped kinks where derivative-based
classification fails.  Critical points are therefore located by a strict
coarse-grid neighborhood scan followed by per-axis bracket shrinking, and
classified by comparing refined neighbor values; a kink flag marks
non-smooth axes.

Function tags:

====================  =====  =================================================
tag                   arity  value
====================  =====  =================================================
l1_S3                 2      l1-norm of the 8x8 three-body matrix / its state
l1_Sprime             2      l1-norm of the 2x2 fusion-space matrix
vn_Sprime             2      entropy (bits) of the fusion-space amplitudes
l1_wigner             1      |cos| + |sin| of the spin-1/2 rotation matrix
vn_xi                 1      entanglement entropy of the two-qubit output
====================  =====  =================================================
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .entanglement import (
    fusion_entropy,
    fusion_l1,
    three_body_l1,
    von_neumann_entropy,
    wigner_l1,
)
from .rmatrix import type2_r_4x4, wigner_d_half
from .tensor import ket
from .threebody import ScatterParams

PLATEAU_TOL = 1e-12

LOCAL_MAX = "local-max"
LOCAL_MIN = "local-min"
SADDLE = "saddle"


@dataclass(frozen=True)
class AxisSpec:
    """Inclusive sampling grid start..stop with n points.

    A single-point axis (n = 1, start = stop) is allowed for sections;
    grids and extremum scans require at least 3 points per axis.
    """

    name: str
    start: float
    stop: float
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"axis {self.name} needs at least 1 sample, got {self.n}")
        if not math.isfinite(self.start) or not math.isfinite(self.stop):
            raise ValueError(f"axis {self.name} has non-finite bounds")
        if self.n == 1:
            if self.stop != self.start:
                raise ValueError(f"axis {self.name}: a 1-point axis needs start == stop")
        elif self.stop <= self.start:
            raise ValueError(f"axis {self.name} has empty range [{self.start}, {self.stop}]")

    def points(self) -> np.ndarray:
        if self.n == 1:
            return np.array([self.start])
        return np.linspace(self.start, self.stop, self.n)

    @property
    def step(self) -> float:
        if self.n < 2:
            raise ValueError(f"axis {self.name} has no step with {self.n} samples")
        return (self.stop - self.start) / (self.n - 1)


@dataclass(frozen=True)
class LandscapeGrid:
    """Sampled surface: values[i, j] = fn(eta_i, beta_j)."""

    fn: str
    eta_axis: AxisSpec
    beta_axis: AxisSpec
    values: np.ndarray

    def __post_init__(self):
        expect = (self.eta_axis.n, self.beta_axis.n)
        if self.values.shape != expect:
            raise ValueError(f"value grid shape {self.values.shape} != axes {expect}")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("landscape contains non-finite values")


@dataclass(frozen=True)
class CriticalPoint:
    """A located extremum or saddle with kink-aware classification.

    ``axis_kinds`` records the per-axis behavior ("max" or "min") and
    ``kinks`` flags axes where the one-sided slopes reveal a V shape;
    ``smooth`` is False when any axis is kinked.
    """

    location: tuple[float, ...]
    value: float
    kind: str
    axis_kinds: tuple[str, ...]
    kinks: tuple[bool, ...]

    @property
    def smooth(self) -> bool:
        return not any(self.kinks)


# ---------------------------------------------------------------------------
# function registry
# ---------------------------------------------------------------------------

def _l1_s3(eta: float, beta: float) -> float:
    return three_body_l1(ScatterParams(eta, beta))


def _l1_sprime(eta: float, beta: float) -> float:
    return fusion_l1(ScatterParams(eta, beta))


def _vn_sprime(eta: float, beta: float) -> float:
    return fusion_entropy(ScatterParams(eta, beta))


def _l1_wigner(theta: float) -> float:
    return wigner_l1(wigner_d_half(theta, 0.0))


def _vn_xi(theta: float) -> float:
    xi = type2_r_4x4(theta, 0.0) @ ket("00")
    return von_neumann_entropy(xi, [0])


@dataclass(frozen=True)
class LandscapeFunction:
    tag: str
    arity: int
    fn: Callable[..., float]
    default_domain: tuple[tuple[float, float], ...]


FUNCTIONS: dict[str, LandscapeFunction] = {
    "l1_S3": LandscapeFunction(
        "l1_S3", 2, _l1_s3, ((0.0, 2.0 * math.pi), (-math.pi / 2, math.pi / 2))
    ),
    "l1_Sprime": LandscapeFunction(
        "l1_Sprime", 2, _l1_sprime, ((0.0, 2.0 * math.pi), (-math.pi / 2, math.pi / 2))
    ),
    "vn_Sprime": LandscapeFunction(
        "vn_Sprime", 2, _vn_sprime, ((0.0, 2.0 * math.pi), (-math.pi / 2, math.pi / 2))
    ),
    "l1_wigner": LandscapeFunction("l1_wigner", 1, _l1_wigner, ((0.0, math.pi / 2),)),
    "vn_xi": LandscapeFunction("vn_xi", 1, _vn_xi, ((0.0, math.pi / 2),)),
}


def get_function(tag: str) -> LandscapeFunction:
    try:
        return FUNCTIONS[tag]
    except KeyError:
        raise ValueError(f"unknown function tag {tag!r}; known: {sorted(FUNCTIONS)}") from None


def _worker_count() -> int:
    raw = os.environ.get("YBE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def sample_surface(tag: str, eta_axis: AxisSpec, beta_axis: AxisSpec) -> LandscapeGrid:
    """Deterministic grid of a two-parameter function.

    Rows may be evaluated in parallel (YBE_THREADS); results are assembled
    in index order so the grid is identical either way.
    """
    spec = get_function(tag)
    if spec.arity != 2:
        raise ValueError(f"{tag} is a 1-parameter function; use sample_curve")
    for axis in (eta_axis, beta_axis):
        if axis.n < 3:
            raise ValueError(f"axis {axis.name} needs at least 3 samples for a grid, got {axis.n}")
    etas = eta_axis.points()
    betas = beta_axis.points()

    def row(i: int) -> np.ndarray:
        return np.array([spec.fn(etas[i], b) for b in betas])

    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, range(eta_axis.n)))
    else:
        rows = [row(i) for i in range(eta_axis.n)]
    return LandscapeGrid(tag, eta_axis, beta_axis, np.vstack(rows))


def sample_curve(tag: str, axis: AxisSpec) -> np.ndarray:
    """Samples of a one-parameter function; shape (n, 2) columns (x, value)."""
    spec = get_function(tag)
    if spec.arity != 1:
        raise ValueError(f"{tag} is a 2-parameter function; use sample_surface or section")
    xs = axis.points()
    return np.column_stack([xs, [spec.fn(x) for x in xs]])


def section(tag: str, fixed_axis: str, fixed_value: float, axis: AxisSpec) -> np.ndarray:
    """1-D slice of a two-parameter function; shape (n, 2) columns (x, value).

    ``fixed_axis`` names the frozen coordinate ("eta" or "beta"); ``axis``
    provides the varying coordinate.
    """
    spec = get_function(tag)
    if spec.arity != 2:
        raise ValueError(f"{tag} has no 2-D sections")
    if fixed_axis not in ("eta", "beta"):
        raise ValueError(f"fixed axis must be 'eta' or 'beta', got {fixed_axis!r}")
    xs = axis.points()
    if fixed_axis == "beta":
        vals = [spec.fn(x, fixed_value) for x in xs]
    else:
        vals = [spec.fn(fixed_value, x) for x in xs]
    return np.column_stack([xs, vals])


# ---------------------------------------------------------------------------
# critical points
# ---------------------------------------------------------------------------

def _axis_kind(center: float, lo: float, hi: float) -> str | None:
    """Per-axis behavior with a tie tolerance.

    An extremum of a symmetric curve can land exactly between two grid
    nodes, leaving two equal-to-rounding samples at the top; such a point
    must still count, so one strict neighbor comparison plus one
    tolerance-level tie qualifies.
    """
    if center > min(lo, hi) + PLATEAU_TOL and center >= max(lo, hi) - PLATEAU_TOL:
        return "max"
    if center < max(lo, hi) - PLATEAU_TOL and center <= min(lo, hi) + PLATEAU_TOL:
        return "min"
    return None


def _shrink_bracket(fn1d: Callable[[float], float], lo: float, hi: float,
                    want_max: bool, tol: float) -> float:
    """Trisection search for the extremum of a unimodal 1-D section.

    Works on V-shaped (non-differentiable) extrema as well as smooth ones.
    """
    sign = 1.0 if want_max else -1.0
    while hi - lo > tol:
        third = (hi - lo) / 3.0
        a = lo + third
        b = hi - third
        if sign * fn1d(a) < sign * fn1d(b):
            lo = a
        else:
            hi = b
    return 0.5 * (lo + hi)


def _one_sided_slopes(fn1d: Callable[[float], float], x: float, h: float) -> tuple[float, float]:
    f0 = fn1d(x)
    return (f0 - fn1d(x - h)) / h, (fn1d(x + h) - f0) / h


def _kinked(fn1d: Callable[[float], float], x: float, h: float) -> bool:
    """Kink test at a refined extremum.

    At a smooth extremum both one-sided slopes vanish linearly with h, so
    their gap shrinks with the probe; at a V kink the gap stays order one.
    The floor max(h, |s- + s+|) keeps float noise from flagging smooth
    points.
    """
    s_minus, s_plus = _one_sided_slopes(fn1d, x, h)
    return abs(s_plus - s_minus) > 10.0 * max(h, abs(s_plus + s_minus))


def _classify(axis_kinds: tuple[str, ...]) -> str:
    if all(k == "max" for k in axis_kinds):
        return LOCAL_MAX
    if all(k == "min" for k in axis_kinds):
        return LOCAL_MIN
    return SADDLE


def find_critical_points_2d(tag: str,
                            eta_domain: tuple[float, float] | None = None,
                            beta_domain: tuple[float, float] | None = None,
                            coarse_n: int = 400,
                            refine_tol: float = 1e-8,
                            kink_probe: float = 1e-5) -> list[CriticalPoint]:
    """Locate and classify interior critical points of a 2-D landscape.

    Coarse candidates are strict grid comparisons against all 8 neighbors
    (per-axis max/min patterns admit saddles); plateau points whose whole
    neighborhood agrees within 1e-12 are dropped.  Each candidate is then
    refined one axis at a time by bracket shrinking down to ``refine_tol``.
    """
    spec = get_function(tag)
    if spec.arity != 2:
        raise ValueError(f"{tag} is one-dimensional; use find_critical_points_1d")
    if coarse_n < 3:
        raise ValueError(f"coarse grid needs at least 3 points per axis, got {coarse_n}")
    if eta_domain is None:
        eta_domain = spec.default_domain[0]
    if beta_domain is None:
        beta_domain = spec.default_domain[1]
    eta_axis = AxisSpec("eta", eta_domain[0], eta_domain[1], coarse_n)
    beta_axis = AxisSpec("beta", beta_domain[0], beta_domain[1], coarse_n)
    grid = sample_surface(tag, eta_axis, beta_axis)
    vals = grid.values
    etas = eta_axis.points()
    betas = beta_axis.points()

    results: list[CriticalPoint] = []
    for i in range(1, eta_axis.n - 1):
        for j in range(1, beta_axis.n - 1):
            center = vals[i, j]
            block = vals[i - 1 : i + 2, j - 1 : j + 2]
            if np.max(np.abs(block - center)) < PLATEAU_TOL:
                continue  # degenerate plateau
            kind_eta = _axis_kind(center, vals[i - 1, j], vals[i + 1, j])
            kind_beta = _axis_kind(center, vals[i, j - 1], vals[i, j + 1])
            if kind_eta is None or kind_beta is None:
                continue
            if kind_eta == kind_beta:
                diag = [vals[i - 1, j - 1], vals[i - 1, j + 1], vals[i + 1, j - 1], vals[i + 1, j + 1]]
                if kind_eta == "max" and not all(center > d - PLATEAU_TOL for d in diag):
                    continue
                if kind_eta == "min" and not all(center < d + PLATEAU_TOL for d in diag):
                    continue

            point = _refine_2d(
                spec.fn, (etas[i], betas[j]), (eta_axis.step, beta_axis.step),
                (kind_eta, kind_beta), refine_tol, kink_probe,
            )
            if point is not None:
                results.append(point)
    return _dedupe(results, refine_tol * 10.0)


def _flat_axis(fn1d: Callable[[float], float], x: float, probe: float = 1e-4) -> bool:
    f0 = fn1d(x)
    return (
        abs(fn1d(x + probe) - f0) < PLATEAU_TOL
        and abs(fn1d(x - probe) - f0) < PLATEAU_TOL
    )


def _refine_2d(fn, start, steps, axis_kinds, refine_tol, kink_probe) -> CriticalPoint | None:
    x, y = start
    hx, hy = steps
    # Alternate full-width per-axis searches, re-centering each round; the
    # cross-coupling of the surfaces here is weak so three rounds converge.
    for _ in range(3):
        x = _shrink_bracket(lambda u: fn(u, y), x - hx, x + hx, axis_kinds[0] == "max", refine_tol)
        y = _shrink_bracket(lambda v: fn(x, v), y - hy, y + hy, axis_kinds[1] == "max", refine_tol)
    # A coarse candidate can converge onto a line where one coordinate no
    # longer moves the value (constant rows at sin(eta) = 0).  Such points
    # are degenerate, not extrema; drop them.
    if _flat_axis(lambda u: fn(u, y), x) or _flat_axis(lambda v: fn(x, v), y):
        return None
    kinks = (
        _kinked(lambda u: fn(u, y), x, kink_probe),
        _kinked(lambda v: fn(x, v), y, kink_probe),
    )
    return CriticalPoint(
        location=(x, y),
        value=fn(x, y),
        kind=_classify(axis_kinds),
        axis_kinds=axis_kinds,
        kinks=kinks,
    )


def find_critical_points_1d(tag: str,
                            domain: tuple[float, float] | None = None,
                            coarse_n: int = 400,
                            refine_tol: float = 1e-8,
                            kink_probe: float = 1e-5) -> list[CriticalPoint]:
    """Locate and classify interior critical points of a 1-D curve."""
    spec = get_function(tag)
    if spec.arity != 1:
        raise ValueError(f"{tag} is two-dimensional; use find_critical_points_2d")
    if coarse_n < 3:
        raise ValueError(f"coarse grid needs at least 3 points, got {coarse_n}")
    if domain is None:
        domain = spec.default_domain[0]
    axis = AxisSpec("theta", domain[0], domain[1], coarse_n)
    xs = axis.points()
    vals = np.array([spec.fn(x) for x in xs])

    results: list[CriticalPoint] = []
    for i in range(1, axis.n - 1):
        center = vals[i]
        if max(abs(vals[i - 1] - center), abs(vals[i + 1] - center)) < PLATEAU_TOL:
            continue
        kind = _axis_kind(center, vals[i - 1], vals[i + 1])
        if kind is None:
            continue
        x = _shrink_bracket(spec.fn, xs[i] - axis.step, xs[i] + axis.step,
                            kind == "max", refine_tol)
        results.append(
            CriticalPoint(
                location=(x,),
                value=spec.fn(x),
                kind=LOCAL_MAX if kind == "max" else LOCAL_MIN,
                axis_kinds=(kind,),
                kinks=(_kinked(spec.fn, x, kink_probe),),
            )
        )
    return _dedupe(results, refine_tol * 10.0)


def _dedupe(points: list[CriticalPoint], tol: float) -> list[CriticalPoint]:
    kept: list[CriticalPoint] = []
    for p in sorted(points, key=lambda q: q.location):
        if any(
            k.kind == p.kind
            and all(abs(a - b) <= tol for a, b in zip(k.location, p.location))
            for k in kept
        ):
            continue
        kept.append(p)
    return kept
