"""Generalized means, medians, and variability over an arbitrary metric.

The central object is the functional

    f(c) = sum_i d(x_i, c) ** p

for a sample ``x_1 .. x_n``, a candidate point ``c``, a metric ``d`` and an
exponent ``p >= 1``.  Minimizing ``f`` over a candidate set generalizes the
mean (p = 2) and the median (p = 1) to any space with a metric; the minimum
value itself is the variability of the sample.

All reported values are unnormalized sums by default; pass ``normalized=True``
to divide by the sample size instead.

Metrics must be pure, stateless callables ``d(a, b) -> nonnegative number``.
When a metric returns integers (edit distance, word metrics) and the exponent
is integral, functional values are computed in exact integer arithmetic, so
equality comparisons on the results are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterable, Sequence

__all__ = [
    "Metric",
    "FrechetResult",
    "MetricMatrix",
    "frechet_value",
    "minimize_over_candidates",
    "distance_matrix",
    "check_metric_axioms",
    "tie_tolerance",
]

Metric = Callable[[Any, Any], float]

#: Relative tolerance under which two functional values count as tied.
TIE_RTOL = 1e-9


def tie_tolerance(value: float) -> float:
    """Absolute tie tolerance around a functional value."""
    return TIE_RTOL * max(1.0, abs(value))


def _integral_exponent(p: float) -> int | float:
    """Return ``p`` as an int when it is integral, keeping integer sums exact."""
    if p < 1:
        raise ValueError(f"invalid exponent: p must be >= 1, got {p!r}")
    return int(p) if float(p).is_integer() else p


@dataclass(frozen=True)
class FrechetResult:
    """Minimizers of the functional together with its minimum value.

    ``minimizers`` holds every candidate attaining the minimum (ties kept,
    in order of first appearance in the candidate set).
    """

    minimizers: tuple
    value: float
    exponent: float
    normalized: bool = False


@dataclass(frozen=True)
class MetricMatrix:
    """Symmetric pairwise-distance matrix over an ordered candidate set."""

    labels: tuple
    values: tuple

    @property
    def size(self) -> int:
        return len(self.labels)

    def distance(self, a, b) -> float:
        """Distance between two labelled candidates."""
        i = self.labels.index(a)
        j = self.labels.index(b)
        return self.values[i][j]

    def row(self, a) -> tuple:
        return self.values[self.labels.index(a)]

    def to_tsv(self, digits: int = 6) -> str:
        """Render as TSV with a header row and column of labels."""
        def fmt(v):
            return str(v) if isinstance(v, int) else format(v, f".{digits}g")

        head = "\t".join([""] + [str(lab) for lab in self.labels])
        lines = [head]
        for lab, row in zip(self.labels, self.values):
            lines.append("\t".join([str(lab)] + [fmt(v) for v in row]))
        return "\n".join(lines) + "\n"

    def validate(self, tol: float = 1e-12) -> None:
        """Check symmetry, zero diagonal, nonnegativity, and every triangle.

        Raises ValueError naming the first violated axiom.  ``tol`` absorbs
        floating-point slack; exact for integer matrices.
        """
        n = self.size
        v = self.values
        for i in range(n):
            if abs(v[i][i]) > tol:
                raise ValueError(f"nonzero diagonal at {self.labels[i]!r}")
            for j in range(n):
                if v[i][j] < -tol:
                    raise ValueError(
                        f"negative distance between {self.labels[i]!r} and {self.labels[j]!r}"
                    )
                if abs(v[i][j] - v[j][i]) > tol:
                    raise ValueError(
                        f"asymmetry between {self.labels[i]!r} and {self.labels[j]!r}"
                    )
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if v[i][k] > v[i][j] + v[j][k] + tol:
                        raise ValueError(
                            "triangle inequality violated for "
                            f"({self.labels[i]!r}, {self.labels[j]!r}, {self.labels[k]!r})"
                        )


def frechet_value(
    sample: Sequence,
    c,
    metric: Metric,
    p: float = 2,
    *,
    normalized: bool = False,
) -> float:
    """Value of ``sum_i d(x_i, c) ** p`` at one candidate point.

    ``normalized=True`` divides by the sample size.  The sample is a
    multiset: repeated points weight the sum.
    """
    sample = list(sample)
    if not sample:
        raise ValueError("empty sample")
    q = _integral_exponent(p)
    total = sum(metric(x, c) ** q for x in sample)
    return total / len(sample) if normalized else total


def minimize_over_candidates(
    sample: Sequence,
    candidates: Sequence,
    metric: Metric,
    p: float = 2,
    *,
    normalized: bool = False,
) -> FrechetResult:
    """Minimize the functional over a finite candidate set.

    Returns every candidate attaining the minimum (values tying within
    ``tie_tolerance`` count as minimal), in order of first appearance.
    Duplicate candidates are collapsed.
    """
    sample = list(sample)
    if not sample:
        raise ValueError("empty sample")
    distinct = list(dict.fromkeys(candidates))
    if not distinct:
        raise ValueError("no candidates")
    q = _integral_exponent(p)

    values = []
    for c in distinct:
        total = sum(metric(x, c) ** q for x in sample)
        values.append(total / len(sample) if normalized else total)

    vmin = min(values)
    tol = tie_tolerance(vmin)
    minimizers = tuple(c for c, v in zip(distinct, values) if v <= vmin + tol)
    return FrechetResult(minimizers=minimizers, value=vmin, exponent=p, normalized=normalized)


def distance_matrix(candidates: Sequence, metric: Metric) -> MetricMatrix:
    """Pairwise distances over a duplicate-free candidate set.

    Each unordered pair is evaluated once and mirrored.
    """
    labels = list(candidates)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise ValueError(f"duplicate candidate: {lab!r}")
        seen.add(lab)
    n = len(labels)
    if n == 0:
        raise ValueError("no candidates")

    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = metric(labels[i], labels[i])
        for j in range(i + 1, n):
            d = metric(labels[i], labels[j])
            rows[i][j] = d
            rows[j][i] = d
    return MetricMatrix(labels=tuple(labels), values=tuple(tuple(r) for r in rows))


def check_metric_axioms(points: Sequence, metric: Metric, tol: float = 1e-12) -> None:
    """Verify the four metric axioms exhaustively over ``points``.

    Checks nonnegativity, identity of indiscernibles, symmetry on every pair,
    and the triangle inequality on every ordered triple.  Raises ValueError
    describing the first violation.  Intended for sampled property checks;
    cost is cubic in ``len(points)``.
    """
    pts = list(points)
    for i, a in enumerate(pts):
        for j, b in enumerate(pts):
            d = metric(a, b)
            if d < -tol:
                raise ValueError(f"negative distance d({a!r}, {b!r}) = {d}")
            if a == b and abs(d) > tol:
                raise ValueError(f"d({a!r}, {b!r}) = {d} but points are equal")
            if a != b and d <= tol:
                raise ValueError(f"d({a!r}, {b!r}) = {d} but points differ")
            if abs(d - metric(b, a)) > tol:
                raise ValueError(f"asymmetry between {a!r} and {b!r}")
    for a in pts:
        for b in pts:
            for c in pts:
                if metric(a, c) > metric(a, b) + metric(b, c) + tol:
                    raise ValueError(
                        f"triangle inequality violated for ({a!r}, {b!r}, {c!r})"
                    )
