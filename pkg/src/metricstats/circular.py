"""Statistics for angular data.

Angles are radians, canonicalized to the half-open interval (-pi, pi].  The
metric is the shortest-arc distance

    d(t1, t2) = min(|t1 - t2|, 2*pi - |t1 - t2|)

which never exceeds pi.  Besides the classical resultant-vector mean, the
module minimizes the distance functional ``sum_i d(x_i, c) ** p`` over the
whole circle: the functional is sampled on a uniform grid, every local basin
is refined by golden-section search to 1e-6 radians, and flat minima (typical
for p = 1 with an even sample size) are reported as arcs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import _integral_exponent, tie_tolerance

__all__ = [
    "canonical_angle",
    "circ_distance",
    "resultant_vector",
    "resultant_mean",
    "naive_mean",
    "circular_frechet",
    "local_minima",
    "frechet_profile",
    "builtin_angles",
    "CircularProfile",
    "CircularFrechetResult",
    "NO_DIRECTION_EPS",
    "DEFAULT_RESOLUTION",
]

TAU = math.tau

#: Resultant lengths at or below this are treated as directionless.
NO_DIRECTION_EPS = 1e-12

DEFAULT_RESOLUTION = 3600
MIN_RESOLUTION = 360

#: Named angle samples available to the CLI as ``builtin:<name>``.
BUILTIN_ANGLES: dict[str, tuple[float, ...]] = {
    "pennec6": (-2.12, -1.08, 0.016, 0.99, 2.08, 3.14),
}

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def canonical_angle(theta: float) -> float:
    """Map an angle in radians to its representative in (-pi, pi]."""
    phi = (theta + math.pi) % TAU - math.pi
    if phi == -math.pi:
        return math.pi
    return phi


def circ_distance(t1: float, t2: float) -> float:
    """Shortest-arc distance between two angles; always in [0, pi]."""
    diff = abs(canonical_angle(t1) - canonical_angle(t2))
    return min(diff, TAU - diff)


def builtin_angles(name: str) -> tuple[float, ...]:
    """Look up a named builtin angle sample."""
    try:
        return BUILTIN_ANGLES[name]
    except KeyError:
        valid = ", ".join(sorted(BUILTIN_ANGLES))
        raise ValueError(f"unknown angle dataset {name!r}; valid names: {valid}") from None


def resultant_vector(sample) -> tuple[float, float]:
    """Sum of the unit vectors (cos t, sin t) over the sample."""
    angles = list(sample)
    if not angles:
        raise ValueError("empty sample")
    return (
        math.fsum(math.cos(t) for t in angles),
        math.fsum(math.sin(t) for t in angles),
    )


def resultant_mean(sample) -> float | None:
    """Direction of the resultant vector, the classical circular mean.

    Returns None when the resultant is too short to define a direction
    (length <= NO_DIRECTION_EPS), which happens for perfectly balanced
    samples such as a pair of antipodal angles.
    """
    x, y = resultant_vector(sample)
    if math.hypot(x, y) <= NO_DIRECTION_EPS:
        return None
    return math.atan2(y, x)


def naive_mean(sample) -> float:
    """Plain numeric average of the angle values.

    Treats angles as ordinary numbers, ignoring wraparound.  Exposed as a
    cautionary comparison: it disagrees badly with the circular notions of
    center whenever the sample straddles the cut point.
    """
    angles = list(sample)
    if not angles:
        raise ValueError("empty sample")
    return math.fsum(angles) / len(angles)


@dataclass(frozen=True)
class CircularProfile:
    """The functional sampled on a uniform grid over (-pi, pi]."""

    angles: tuple
    values: tuple

    @property
    def resolution(self) -> int:
        return len(self.angles)

    def to_tsv(self, digits: int = 6) -> str:
        """One "angle<TAB>value" line per grid point."""
        lines = [
            f"{a:.{digits}g}\t{v:.{digits}g}"
            for a, v in zip(self.angles, self.values)
        ]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CircularFrechetResult:
    """Global minimizers of the circular functional plus the grid profile.

    ``minimizers`` lists refined minimizing angles; when the minimum is flat
    (an arc), the arc's endpoints appear in ``minimizers`` and the pair is
    recorded in ``arcs``.  A completely flat functional is reported as the
    single arc (-pi, pi).
    """

    minimizers: tuple
    arcs: tuple
    value: float
    exponent: float
    normalized: bool
    profile: CircularProfile


def _scalar_functional(sample, q, normalized):
    n = len(sample)

    def f(theta: float) -> float:
        c = canonical_angle(theta)
        total = 0.0
        for x in sample:
            diff = abs(x - c)
            total += min(diff, TAU - diff) ** q
        return total / n if normalized else total

    return f


def _grid_values(sample, q, resolution, normalized):
    step = TAU / resolution
    grid = np.linspace(-math.pi + step, math.pi, resolution)
    diffs = np.abs(grid[:, None] - np.asarray(sample)[None, :])
    dists = np.minimum(diffs, TAU - diffs)
    values = (dists ** q).sum(axis=1)
    if normalized:
        values = values / len(sample)
    return grid, values


def _golden_min(f, a: float, b: float, tol: float = 1e-6) -> tuple[float, float]:
    """Golden-section search for a minimum of f on [a, b]; absolute x tolerance."""
    h = b - a
    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    fc, fd = f(c), f(d)
    while h > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + _INVPHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def _bisect_edge(f, inside: float, outside: float, limit: float, tol: float = 1e-6) -> float:
    """Boundary between f <= limit (at ``inside``) and f > limit (at ``outside``)."""
    if f(outside) <= limit:
        return outside
    lo, hi = inside, outside
    while abs(hi - lo) > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) <= limit:
            lo = mid
        else:
            hi = mid
    return lo


def _basin_runs(values) -> list[list[int]]:
    """Indices of weak local minima on the circular grid, grouped into runs."""
    v = np.asarray(values)
    tol = 1e-9 * np.maximum(1.0, np.abs(v))
    mask = (v <= np.roll(v, 1) + tol) & (v <= np.roll(v, -1) + tol)
    idx = np.flatnonzero(mask)
    runs: list[list[int]] = []
    for k in idx:
        if runs and k == runs[-1][-1] + 1:
            runs[-1].append(int(k))
        else:
            runs.append([int(k)])
    # merge a run that wraps past the grid seam
    if len(runs) > 1 and runs[0][0] == 0 and runs[-1][-1] == len(v) - 1:
        runs[0] = runs.pop() + runs[0]
    return runs


def _refine_basins(sample, q, resolution, normalized):
    """Grid-scan the functional and refine every local basin.

    Returns (grid, values, candidates) where each candidate is
    ("point", angle, value) or ("arc", (lo, hi), value).
    """
    f = _scalar_functional(sample, q, normalized)
    grid, values = _grid_values(sample, q, resolution, normalized)
    step = TAU / resolution
    runs = _basin_runs(values)

    if len(runs) == 1 and len(runs[0]) == resolution:
        # completely flat functional (e.g. p = 1 on an antipodal pair)
        flat = float(values.min())
        return grid, values, [("arc", (-math.pi, math.pi), flat)]

    candidates = []
    for run in runs:
        # positions are unwrapped so wrapped runs stay contiguous
        left = float(grid[run[0]])
        right = left + (len(run) - 1) * step
        if len(run) <= 2:
            x, fx = _golden_min(f, left - step, right + step)
            candidates.append(("point", canonical_angle(x), fx))
        else:
            flat = float(min(values[k] for k in run))
            limit = flat + tie_tolerance(flat)
            lo = _bisect_edge(f, left, left - step, limit)
            hi = _bisect_edge(f, right, right + step, limit)
            candidates.append(("arc", (canonical_angle(lo), canonical_angle(hi)), flat))
    return grid, values, candidates


def circular_frechet(
    sample,
    p: float = 2,
    resolution: int = DEFAULT_RESOLUTION,
    *,
    normalized: bool = False,
) -> CircularFrechetResult:
    """Minimize ``sum_i d(x_i, c) ** p`` over the whole circle.

    The functional is sampled on ``resolution`` uniform grid points covering
    (-pi, pi]; each local basin is refined by golden-section search to 1e-6
    radians.  All global minimizers (within tie tolerance) are returned; a
    flat minimum is reported as an arc whose endpoints join ``minimizers``.
    """
    angles = [canonical_angle(t) for t in sample]
    if not angles:
        raise ValueError("empty sample")
    q = _integral_exponent(p)
    if resolution < MIN_RESOLUTION:
        raise ValueError(f"resolution must be at least {MIN_RESOLUTION}, got {resolution}")

    grid, values, candidates = _refine_basins(angles, q, resolution, normalized)
    vmin = min(c[2] for c in candidates)
    tol = tie_tolerance(vmin)

    minimizers: list[float] = []
    arcs: list[tuple[float, float]] = []
    for kind, payload, val in candidates:
        if val > vmin + tol:
            continue
        if kind == "point":
            minimizers.append(payload)
        else:
            arcs.append(payload)
            minimizers.extend(payload)

    profile = CircularProfile(
        angles=tuple(float(a) for a in grid),
        values=tuple(float(v) for v in values),
    )
    return CircularFrechetResult(
        minimizers=tuple(minimizers),
        arcs=tuple(arcs),
        value=vmin,
        exponent=p,
        normalized=normalized,
        profile=profile,
    )


def local_minima(
    sample,
    p: float = 2,
    resolution: int = DEFAULT_RESOLUTION,
    *,
    normalized: bool = False,
) -> list[tuple[float, float]]:
    """All refined local minima of the functional as (angle, value) pairs.

    Flat basins contribute their two arc endpoints.
    """
    angles = [canonical_angle(t) for t in sample]
    if not angles:
        raise ValueError("empty sample")
    q = _integral_exponent(p)
    _, _, candidates = _refine_basins(angles, q, resolution, normalized)
    out: list[tuple[float, float]] = []
    for kind, payload, val in candidates:
        if kind == "point":
            out.append((payload, val))
        else:
            out.append((payload[0], val))
            out.append((payload[1], val))
    return out


def frechet_profile(
    sample,
    p: float = 2,
    resolution: int = DEFAULT_RESOLUTION,
    *,
    normalized: bool = False,
) -> CircularProfile:
    """Sample the functional on the uniform grid without refining minima."""
    angles = [canonical_angle(t) for t in sample]
    if not angles:
        raise ValueError("empty sample")
    q = _integral_exponent(p)
    grid, values = _grid_values(angles, q, resolution, normalized)
    return CircularProfile(
        angles=tuple(float(a) for a in grid),
        values=tuple(float(v) for v in values),
    )
