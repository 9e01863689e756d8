"""Convex piecewise-linear functions over exact rationals.

A function is stored as breakpoints with strictly increasing x starting at
(0, 0), optionally continued past the last breakpoint by a ray of fixed
slope. All named constructors produce convex functions. Comparisons are
decided exactly at merged breakpoints, which suffices for piecewise-linear
functions.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import faulhaber_sum, power_sum
from .counting import ElemDivSeq

__all__ = [
    "BadLength",
    "DomainTooShort",
    "ExponentExceedsR",
    "OutOfDomain",
    "PiecewiseLinear",
    "f_infinity",
    "f_infinity_star",
    "f_r",
    "from_divisor_sequence",
]

Point = tuple[Fraction, Fraction]


class ExponentExceedsR(ValueError):
    """A divisor exponent is larger than the truncation level r."""


class BadLength(ValueError):
    """Requested domain length is shorter than the divisor sequence."""


class OutOfDomain(ValueError):
    """Evaluation point outside the function's domain."""


class DomainTooShort(ValueError):
    """A comparison interval extends past a function's domain."""


@dataclass(frozen=True)
class PiecewiseLinear:
    """Non-negative piecewise-linear function anchored at (0, 0)."""

    breakpoints: tuple[Point, ...]
    final_slope: Fraction | None = None

    def __post_init__(self) -> None:
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.breakpoints)
        object.__setattr__(self, "breakpoints", pts)
        if self.final_slope is not None:
            object.__setattr__(self, "final_slope", Fraction(self.final_slope))
        if not pts or pts[0] != (0, 0):
            raise ValueError("first breakpoint must be (0, 0)")
        for (x0, _), (x1, _) in zip(pts, pts[1:]):
            if x1 <= x0:
                raise ValueError("breakpoint x-coordinates must be strictly increasing")
        if any(y < 0 for _, y in pts):
            raise ValueError("values must be non-negative")
        if self.final_slope is not None and self.final_slope < 0:
            raise ValueError("a final ray must have non-negative slope")

    @property
    def domain_end(self) -> Fraction | None:
        """Right end of the domain, or None when a final ray extends it."""
        if self.final_slope is not None:
            return None
        return self.breakpoints[-1][0]

    def defined_on(self, x_max: Fraction | int) -> bool:
        end = self.domain_end
        return end is None or end >= Fraction(x_max)

    def segment_slopes(self) -> tuple[Fraction, ...]:
        """Slopes of consecutive segments, final ray included if present."""
        slopes = tuple(
            (y1 - y0) / (x1 - x0)
            for (x0, y0), (x1, y1) in zip(self.breakpoints, self.breakpoints[1:])
        )
        if self.final_slope is not None:
            slopes += (self.final_slope,)
        return slopes

    def is_convex(self) -> bool:
        slopes = self.segment_slopes()
        return all(a <= b for a, b in zip(slopes, slopes[1:]))

    def value_at(self, x: Fraction | int) -> Fraction:
        """Exact value by linear interpolation; OutOfDomain off the domain."""
        x = Fraction(x)
        if x < 0:
            raise OutOfDomain(f"{x} < 0")
        xs = [bx for bx, _ in self.breakpoints]
        last_x, last_y = self.breakpoints[-1]
        if x > last_x:
            if self.final_slope is None:
                raise OutOfDomain(f"{x} beyond domain end {last_x}")
            return last_y + self.final_slope * (x - last_x)
        i = bisect_right(xs, x) - 1
        x0, y0 = self.breakpoints[i]
        if x == x0:
            return y0
        x1, y1 = self.breakpoints[i + 1]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    def __call__(self, x: Fraction | int) -> Fraction:
        return self.value_at(x)

    def _merged_xs(self, other: "PiecewiseLinear", x_max: Fraction) -> list[Fraction]:
        xs = {Fraction(0), x_max}
        for fn in (self, other):
            xs.update(bx for bx, _ in fn.breakpoints if bx <= x_max)
        return sorted(xs)

    def dominates(self, other: "PiecewiseLinear", x_max: Fraction | int) -> bool:
        """Whether self >= other everywhere on [0, x_max], decided exactly."""
        x_max = Fraction(x_max)
        if x_max < 0:
            raise ValueError("x_max must be non-negative")
        for fn in (self, other):
            if not fn.defined_on(x_max):
                raise DomainTooShort(f"function only defined up to {fn.domain_end}, need {x_max}")
        return all(self.value_at(x) >= other.value_at(x) for x in self._merged_xs(other, x_max))

    def agrees_with(self, other: "PiecewiseLinear", x_max: Fraction | int) -> bool:
        """Whether self == other everywhere on [0, x_max]."""
        return self.dominates(other, x_max) and other.dominates(self, x_max)

    def to_json_dict(self) -> dict:
        return {
            "breakpoints": [[str(x), str(y)] for x, y in self.breakpoints],
            "final_slope": None if self.final_slope is None else str(self.final_slope),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PiecewiseLinear":
        pts = tuple((Fraction(x), Fraction(y)) for x, y in data["breakpoints"])
        slope = data.get("final_slope")
        return cls(breakpoints=pts, final_slope=None if slope is None else Fraction(slope))


def from_divisor_sequence(seq: ElemDivSeq, r: int, t: int) -> PiecewiseLinear:
    """Profile through (j, C(j)) with C(j) = sum of (r - e_l) over l <= j.

    The sequence is padded with zero exponents up to length t, so the domain
    is [0, t]. Non-increasing exponents make the profile convex.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if any(e > r for e in seq.exponents):
        raise ExponentExceedsR(f"exponents {seq.exponents} exceed r = {r}")
    if t < len(seq):
        raise BadLength(f"t = {t} shorter than sequence length {len(seq)}")
    points: list[Point] = [(Fraction(0), Fraction(0))]
    total = 0
    for l, e in enumerate(seq.padded(t), start=1):
        total += r - e
        points.append((Fraction(l), Fraction(total)))
    return PiecewiseLinear(breakpoints=tuple(points))


def f_r(system_s: int, g: int, r: int) -> PiecewiseLinear:
    """Convex ramp with slope j on the j-th interval of length g*(j+1)^(s-1), capped by a ray of slope r.

    Breakpoints sit at x_j = g * faulhaber_sum(s, j) for j = 0..r.
    """
    if system_s < 1 or g < 1 or r < 1:
        raise ValueError("s, g, r must be positive")
    points: list[Point] = [(Fraction(0), Fraction(0))]
    y = Fraction(0)
    for j in range(r):
        width = g * Fraction((j + 1) ** (system_s - 1))
        y += j * width
        points.append((g * faulhaber_sum(system_s, j + 1), y))
    return PiecewiseLinear(breakpoints=tuple(points), final_slope=Fraction(r))


def _ladder_x(system_s: int, g: int, j: int) -> Fraction:
    """x-coordinate shared by the j-th breakpoints of the two limit profiles."""
    return g * faulhaber_sum(system_s, j + 1)


def f_infinity(system_s: int, g: int, j_max: int) -> PiecewiseLinear:
    """Limit profile through (0,0) and the points P_j, truncated at j_max.

    P_j = (g * sum_{h<=j} (h+1)^(s-1), g * sum_{h<=j} h*(h+1)^(s-1)); the
    segment arriving at P_j has slope j.
    """
    if system_s < 1 or g < 1 or j_max < 1:
        raise ValueError("s, g, j_max must be positive")
    points: list[Point] = [(Fraction(0), Fraction(0))]
    y = 0
    for j in range(j_max + 1):
        y += j * (j + 1) ** (system_s - 1)
        points.append((_ladder_x(system_s, g, j), Fraction(g * y)))
    return PiecewiseLinear(breakpoints=tuple(points))


def f_infinity_star(system_s: int, g: int, j_max: int) -> PiecewiseLinear:
    """Variant of f_infinity through the points Q_j, whose heights are Bernoulli power sums.

    Q_j shares its x-coordinate with P_j; its height is g * sum_{h<=j} h^s,
    never above the height of P_j.
    """
    if system_s < 1 or g < 1 or j_max < 1:
        raise ValueError("s, g, j_max must be positive")
    points: list[Point] = [(Fraction(0), Fraction(0))]
    for j in range(j_max + 1):
        points.append((_ladder_x(system_s, g, j), g * power_sum(system_s, j)))
    return PiecewiseLinear(breakpoints=tuple(points))
