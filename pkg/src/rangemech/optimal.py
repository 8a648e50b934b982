"""Ground-truth optima for both objectives.

Full-length ranges anchored in [-d, 0] (the one-sided anchors included)
pointwise dominate every feasible range, and both objectives are piecewise
linear in the anchor, so exact enumeration over the slope breakpoints finds
the optimum.  The maximum cost also has a closed case formula; the two
routes cross-check each other.  `grid_search_min` is a deliberately slow
sweep over arbitrary ranges used by tests to defend the anchor restriction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from rangemech import _kernel
from rangemech.model import AccessRange, Instance, Objective


@dataclass(frozen=True)
class OptimumResult:
    range: AccessRange
    value: Fraction
    objective: Objective


def optimal_social_cost(inst: Instance) -> OptimumResult:
    """Minimum social cost over all feasible ranges (smallest anchor wins ties)."""
    best, value = _kernel.optimal_social(inst)
    return OptimumResult(range=best, value=value, objective=Objective.SOCIAL)


def optimal_max_cost_closed(inst: Instance) -> Fraction:
    """Case formula for the optimal maximum cost.

    One-sided profiles anchor an endpoint at 0; otherwise the extreme agent
    that is too far out dictates the cost, and in the balanced middle case
    both extreme agents end up with cost max(0, (x_r - x_l - d) / 2).
    """
    return _kernel.optimal_max_closed(inst)


def optimal_max_cost_bruteforce(inst: Instance) -> OptimumResult:
    """Independent route to the optimal maximum cost via anchor enumeration."""
    best, value = _kernel.optimal_max_brute(inst)
    return OptimumResult(range=best, value=value, objective=Objective.MAXIMUM)


def social_anchor_candidates(inst: Instance) -> tuple[Fraction, ...]:
    """Anchors where the social cost can change slope, clipped to [-d, 0]."""
    d = inst.d
    pts = {x for x in inst.locations if -d <= x <= 0}
    pts |= {x - d for x in inst.locations if -d <= x - d <= 0}
    pts |= {Fraction(0), -d}
    return tuple(sorted(pts))


def max_anchor_candidates(inst: Instance) -> tuple[Fraction, ...]:
    """Social-cost anchors plus the pairwise balance anchors for the max.

    The max of the per-agent cost lines can bottom out where a left agent's
    rising line crosses a right agent's falling line, at (x_i + x_j - d) / 2.
    """
    d = inst.d
    pts = set(social_anchor_candidates(inst))
    for xi in inst.locations:
        if xi >= 0:
            continue
        for xj in inst.locations:
            if xj <= 0:
                continue
            t = (xi + xj - d) / 2
            if -d <= t <= 0:
                pts.add(t)
    return tuple(sorted(pts))


def grid_search_min(
    inst: Instance, objective: Objective, steps: int = 12
) -> tuple[AccessRange, Fraction]:
    """Sweep a dense grid of arbitrary (a, b) pairs, lengths below d included.

    Validation only: quadratic in `steps` and far slower than the exact
    enumerations, which it can never beat.
    """
    lo = min(min(inst.locations), -inst.d)
    hi = max(max(inst.locations), inst.d)
    span = hi - lo
    best: tuple[AccessRange, Fraction] | None = None
    for i in range(steps + 1):
        a = lo + span * i / steps
        for j in range(steps + 1):
            length = inst.d * j / steps
            r = AccessRange(a, a + length)
            value = objective.evaluate(inst, r)
            if best is None or value < best[1]:
                best = (r, value)
    assert best is not None
    return best
