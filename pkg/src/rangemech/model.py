"""Exact cost model for a facility at 0 with a contracted accessibility range.

Travel inside the range [a, b] is free, so costs are computed on the line
obtained by collapsing [a, b] to the single point a.  Everything is exact
rational arithmetic; floats are rejected at the boundary because incentive
checks compare costs with strict inequalities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]


class InfeasibleRange(ValueError):
    """Range longer than the instance's length cap d."""


def rat(value: RationalLike) -> Fraction:
    """Convert to an exact Fraction; accepts int, "p/q", decimal strings.

    Floats are refused: 0.8 the float is not 4/5, and silent binary
    rounding would corrupt strict-inequality incentive checks.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a string or Fraction")
    return Fraction(value)


@dataclass(frozen=True)
class AccessRange:
    """Normalized interval [a, b] with a <= b."""

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", rat(self.a))
        object.__setattr__(self, "b", rat(self.b))
        if self.a > self.b:
            raise ValueError(f"range endpoints out of order: ({self.a}, {self.b})")

    @property
    def length(self) -> Fraction:
        return self.b - self.a


@dataclass(frozen=True)
class Instance:
    """Length cap d plus the agent location profile; the facility sits at 0."""

    d: Fraction
    locations: tuple[Fraction, ...]

    def __init__(self, d: RationalLike, locations: Sequence[RationalLike]) -> None:
        object.__setattr__(self, "d", rat(d))
        object.__setattr__(self, "locations", tuple(rat(x) for x in locations))
        if self.d < 0:
            raise ValueError(f"length cap must be nonnegative, got {self.d}")
        if not self.locations:
            raise ValueError("instance needs at least one agent")

    @property
    def n(self) -> int:
        return len(self.locations)


@dataclass(frozen=True)
class ProfileStats:
    x_l: Fraction
    x_r: Fraction
    n_left: int
    n_right: int


class Objective(enum.Enum):
    """The two planner objectives over agent costs."""

    SOCIAL = "sc"
    MAXIMUM = "mc"

    def evaluate(self, inst: Instance, r: AccessRange) -> Fraction:
        if self is Objective.SOCIAL:
            return social_cost(inst, r)
        return max_cost(inst, r)


def normalize_range(a: RationalLike, b: RationalLike, d: RationalLike) -> AccessRange:
    """Order the endpoints and enforce the length cap."""
    a, b, d = rat(a), rat(b), rat(d)
    if a > b:
        a, b = b, a
    if b - a > d:
        raise InfeasibleRange(f"range ({a}, {b}) exceeds length cap {d}")
    return AccessRange(a, b)


def shrink_map(x: RationalLike, r: AccessRange) -> Fraction:
    """Image of x on the line with [a, b] collapsed to the point a."""
    x = rat(x)
    if x <= r.a:
        return x
    if x >= r.b:
        return x - (r.b - r.a)
    return r.a


def agent_cost(x: RationalLike, r: AccessRange) -> Fraction:
    """Distance from x to the facility at 0 after collapsing the range."""
    return abs(shrink_map(x, r) - shrink_map(0, r))


def _check_feasible(inst: Instance, r: AccessRange) -> None:
    if r.length > inst.d:
        raise InfeasibleRange(f"range length {r.length} exceeds cap {inst.d}")


def social_cost(inst: Instance, r: AccessRange) -> Fraction:
    """Sum of agent costs."""
    _check_feasible(inst, r)
    return sum((agent_cost(x, r) for x in inst.locations), Fraction(0))


def max_cost(inst: Instance, r: AccessRange) -> Fraction:
    """Largest agent cost."""
    _check_feasible(inst, r)
    return max(agent_cost(x, r) for x in inst.locations)


def profile_stats(inst: Instance) -> ProfileStats:
    """Extremes of the profile and how many agents sit on each side of 0."""
    n_left = sum(1 for x in inst.locations if x <= 0)
    return ProfileStats(
        x_l=min(inst.locations),
        x_r=max(inst.locations),
        n_left=n_left,
        n_right=inst.n - n_left,
    )
