"""Synthetic operators satisfying the column-divisibility hypothesis, and
end-to-end verification of the dominance chain and the dimension bound.

Matrix entries come from numpy's PCG64 seeded generator, so identical seeds
reproduce identical instances bit for bit. Column l of a generated matrix is
divisible by p^(r - b_l) (b padded with zeros), which realizes the sublattice
hypothesis in the basis where it is diagonal; Newton polygons only depend on
the characteristic polynomial, so this loses no generality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bernoulli import faulhaber_sum
from .bounds import BoundParams, build_params, dimension_bound, sharp_dimension_bound
from .counting import ElemDivSeq, truncation_divisors
from .newton import IntegerMatrix, NewtonPolygon, char_poly, check_lower_bound, newton_polygon, slope_le_dimension
from .plf import PiecewiseLinear, f_infinity, f_r, from_divisor_sequence
from .rootsystems import RootSystem

__all__ = [
    "ChainReport",
    "CorollaryReport",
    "HypothesisViolation",
    "Instance",
    "column_divisibility_ok",
    "corrupt_instance",
    "draw_b_seq",
    "gen_instance",
    "verify_chain",
    "verify_corollary",
]


class HypothesisViolation(ValueError):
    """The b-sequence is not coordinatewise below the divisor sequence."""


@dataclass(frozen=True)
class Instance:
    """One synthetic operator with its divisibility data."""

    p: int
    t: int
    r: int
    b_seq: ElemDivSeq
    matrix: IntegerMatrix
    seed: int

    def __post_init__(self) -> None:
        if self.t < 1 or self.r < 1:
            raise ValueError("t and r must be positive")
        if len(self.b_seq) > self.t:
            raise ValueError("b-sequence longer than t")
        if any(b > self.r for b in self.b_seq.exponents):
            raise ValueError("b exponents must not exceed r")
        if self.matrix.t != self.t:
            raise ValueError("matrix dimension must equal t")


def gen_instance(seed: int, p: int, t: int, r: int, b_seq: ElemDivSeq, entry_bound: int) -> Instance:
    """Deterministic instance from a seed: uniform entries in [-entry_bound, entry_bound],
    then column l scaled by p^(r - b_l)."""
    if entry_bound < 1:
        raise ValueError("entry_bound must be positive")
    rng = np.random.Generator(np.random.PCG64(seed))
    raw = rng.integers(-entry_bound, entry_bound + 1, size=(t, t))
    padded = b_seq.padded(t)
    entries = tuple(
        tuple(int(raw[i][l]) * p ** (r - padded[l]) for l in range(t)) for i in range(t)
    )
    return Instance(p=p, t=t, r=r, b_seq=b_seq, matrix=IntegerMatrix(entries), seed=seed)


def column_divisibility_ok(inst: Instance) -> bool:
    """Whether every column l is divisible by p^(r - b_l)."""
    padded = inst.b_seq.padded(inst.t)
    for l in range(inst.t):
        power = inst.p ** (inst.r - padded[l])
        if any(inst.matrix.entries[i][l] % power for i in range(inst.t)):
            return False
    return True


def corrupt_instance(inst: Instance) -> Instance:
    """Break the divisibility of the most-forced column by bumping its diagonal entry.

    With an empty b-sequence this provably drops the valuation of the trace
    to 0, so the dominance check must fail; for general b the corruption may
    go undetected.
    """
    padded = inst.b_seq.padded(inst.t)
    forced = [l for l in range(inst.t) if inst.r - padded[l] >= 1]
    if not forced:
        raise ValueError("no column has forced divisibility; nothing to corrupt")
    l = forced[-1]
    rows = [list(row) for row in inst.matrix.entries]
    rows[l][l] += 1
    return Instance(
        p=inst.p, t=inst.t, r=inst.r, b_seq=inst.b_seq,
        matrix=IntegerMatrix(tuple(tuple(row) for row in rows)), seed=inst.seed,
    )


def draw_b_seq(seed: int, system: RootSystem, g: int, r: int, t: int) -> ElemDivSeq:
    """Seeded b-sequence below the divisor sequence: b_l uniform in [0, min(r, a_l)].

    Sorting non-increasing preserves the coordinatewise hypothesis because
    the a-sequence is itself non-increasing. Uses a stream separated from
    gen_instance's so matrices keep their documented seed contract.
    """
    a = _adjusted_divisors(system, g, r, t)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, 0xB])))
    draws = [int(rng.integers(0, min(r, al) + 1)) for al in a]
    draws.sort(reverse=True)
    return ElemDivSeq(tuple(b for b in draws if b > 0))


def _adjusted_divisors(system: RootSystem, g: int, r: int, t: int) -> tuple[int, ...]:
    """Divisor exponents truncated or zero-padded to length exactly t."""
    exps = truncation_divisors(system, g, r).exponents
    if len(exps) >= t:
        return exps[:t]
    return exps + (0,) * (t - len(exps))


def _require_hypothesis(inst: Instance, a_adjusted: tuple[int, ...]) -> None:
    b_padded = inst.b_seq.padded(inst.t)
    if any(b > a for b, a in zip(b_padded, a_adjusted)):
        raise HypothesisViolation(
            f"b = {b_padded} is not coordinatewise below a = {a_adjusted}"
        )


@dataclass(frozen=True)
class ChainReport:
    """Outcome of the four dominance assertions for one instance."""

    newton_ge_fb: bool
    fb_ge_fa: bool
    fa_ge_fr: bool
    fr_eq_finf_on_window: bool
    polygon: NewtonPolygon
    f_b: PiecewiseLinear
    f_a: PiecewiseLinear
    f_r: PiecewiseLinear
    f_inf: PiecewiseLinear

    @property
    def all_hold(self) -> bool:
        return self.newton_ge_fb and self.fb_ge_fa and self.fa_ge_fr and self.fr_eq_finf_on_window


@dataclass(frozen=True)
class CorollaryReport:
    """Slope-count versus closed-form bound for one instance and one alpha."""

    alpha: Fraction
    dimension: int
    bound: Fraction
    sharp_bound: Fraction | None
    params: BoundParams

    @property
    def holds(self) -> bool:
        ok = self.dimension <= self.bound
        if self.sharp_bound is not None:
            ok = ok and self.dimension <= self.sharp_bound
        return ok


def verify_chain(inst: Instance, system: RootSystem, g: int) -> ChainReport:
    """Check polygon >= f_b >= f_a >= f_r plus the f_r/f_infinity coincidence window."""
    if g < 1:
        raise ValueError("g must be positive")
    s = system.s
    a_adjusted = _adjusted_divisors(system, g, inst.r, inst.t)
    _require_hypothesis(inst, a_adjusted)
    f_b = from_divisor_sequence(inst.b_seq, inst.r, inst.t)
    f_a = from_divisor_sequence(
        ElemDivSeq(tuple(e for e in a_adjusted if e > 0)), inst.r, inst.t
    )
    ramp = f_r(s, g, inst.r)
    window = g * faulhaber_sum(s, inst.r + 1)
    limit = f_infinity(s, g, inst.r)
    return ChainReport(
        newton_ge_fb=check_lower_bound(inst.matrix, inst.p, f_b),
        fb_ge_fa=f_b.dominates(f_a, inst.t),
        fa_ge_fr=f_a.dominates(ramp, inst.t),
        fr_eq_finf_on_window=ramp.agrees_with(limit, window),
        polygon=newton_polygon(char_poly(inst.matrix), inst.p),
        f_b=f_b,
        f_a=f_a,
        f_r=ramp,
        f_inf=limit,
    )


def verify_corollary(inst: Instance, system: RootSystem, g: int, alpha: Fraction | int) -> CorollaryReport:
    """Check slope_le_dimension <= m*alpha^s + n (and <= m*alpha^s once alpha >= M)."""
    alpha = Fraction(alpha)
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    a_adjusted = _adjusted_divisors(system, g, inst.r, inst.t)
    _require_hypothesis(inst, a_adjusted)
    params = build_params(system.s, g)
    poly = newton_polygon(char_poly(inst.matrix), inst.p)
    dim = slope_le_dimension(poly, alpha)
    sharp = sharp_dimension_bound(params, alpha) if alpha >= params.M else None
    return CorollaryReport(
        alpha=alpha,
        dimension=dim,
        bound=dimension_bound(params, alpha),
        sharp_bound=sharp,
        params=params,
    )
