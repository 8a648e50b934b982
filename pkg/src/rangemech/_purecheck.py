"""Reference kernel: mechanisms, optima, and deviation search on scaled integers.

Every function here takes coordinates that have already been multiplied by
twice a common denominator, so all arithmetic is plain (arbitrary-precision)
integer arithmetic and stays exact.  The doubling guarantees that the two
halving operations (the balanced max-cost range and its candidate anchors)
divide evenly.

`_fastcheck.pyx` is a compiled twin of this module with the same contracts;
`_kernel` picks one at import time.  Keep the two in lockstep: the test suite
compares them call for call.
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

BACKEND = "pure"

MECH_SOCIAL_OPTIMAL = 0
MECH_LEFTMOST = 1
MECH_MAXCOST = 2
MECH_OPTIMAL_MAXCOST = 3

KIND_GSP = 0
KIND_SGSP = 1


def shrink(x: int, a: int, b: int) -> int:
    if x <= a:
        return x
    if x >= b:
        return x - (b - a)
    return a


def cost(x: int, a: int, b: int) -> int:
    return abs(shrink(x, a, b) - shrink(0, a, b))


def inf_d(xs: Sequence[int], d: int) -> int:
    """Left boundary of the ray {y : #{x_i <= y} >= #{x_i >= y + d}}.

    The predicate is a nondecreasing step function whose value can change
    only at an agent location (where the left count jumps) or immediately
    to the right of x_i - d (where the right count drops), so it suffices
    to test each candidate point and the open interval just after it.
    """
    cands = sorted(set(xs) | {x - d for x in xs})
    for c in cands:
        n_leq = sum(1 for x in xs if x <= c)
        if n_leq >= sum(1 for x in xs if x >= c + d):
            return c
        if n_leq >= sum(1 for x in xs if x > c + d):
            return c
    raise AssertionError("predicate must hold at the largest candidate")


def mechanism_range(mech: int, xs: Sequence[int], d: int) -> tuple[int, int]:
    """Outcome of one of the four built-in rules, as a scaled (a, b) pair."""
    if mech == MECH_SOCIAL_OPTIMAL:
        t = inf_d(xs, d)
        if t >= 0:
            return (0, d)
        if t <= -d:
            return (-d, 0)
        return (t, t + d)

    xl = min(xs)
    if mech == MECH_LEFTMOST:
        if xl >= 0:
            return (0, d)
        if xl <= -d:
            return (-d, 0)
        return (xl, xl + d)

    if mech == MECH_MAXCOST:
        a = min(xl, 0)
        return (a, a + d)

    if mech == MECH_OPTIMAL_MAXCOST:
        xr = max(xs)
        if xl >= 0:
            return (0, d)
        if xr <= 0:
            return (-d, 0)
        if xl + xr > d:
            return (0, d)
        if xl + xr < -d:
            return (-d, 0)
        if xr - xl <= d:
            return (xl, xl + d)
        c0 = (xr - xl - d) // 2  # even by the doubled scaling
        return (xl + c0, xr - c0)

    raise ValueError(f"unknown mechanism code {mech}")


def social_cost(xs: Sequence[int], a: int, b: int) -> int:
    return sum(cost(x, a, b) for x in xs)


def max_cost(xs: Sequence[int], a: int, b: int) -> int:
    return max(cost(x, a, b) for x in xs)


def _anchor_sweep(xs: Sequence[int], d: int, anchors: Sequence[int], objective) -> tuple[int, int]:
    best_t = None
    best = None
    for t in anchors:
        value = objective(xs, t, t + d)
        if best is None or value < best:
            best_t, best = t, value
    return best_t, best


def optimal_social(xs: Sequence[int], d: int) -> tuple[int, int]:
    """Minimize social cost; returns (anchor t, value) for the range (t, t+d).

    Ranges of full length anchored in [-d, 0] dominate every feasible range
    pointwise, and the social cost is piecewise linear in the anchor with
    breakpoints only at x_i and x_i - d, so scanning those plus the interval
    ends is exact.  Smallest minimizing anchor wins ties.
    """
    pts = {x for x in xs if -d <= x <= 0}
    pts |= {x - d for x in xs if -d <= x - d <= 0}
    pts |= {-d, 0}
    return _anchor_sweep(xs, d, sorted(pts), social_cost)


def optimal_max_closed(xs: Sequence[int], d: int) -> int:
    """Case formula for the optimal maximum cost."""
    xl, xr = min(xs), max(xs)
    if xl >= 0:
        return max(0, xr - d)
    if xr <= 0:
        return max(0, -xl - d)
    if xl + xr > d:
        return xr - d
    if xl + xr < -d:
        return -xl - d
    return max(0, (xr - xl - d) // 2)  # even by the doubled scaling


def optimal_max_brute(xs: Sequence[int], d: int) -> tuple[int, int]:
    """Minimize maximum cost by anchor enumeration; returns (anchor, value).

    On top of the social-cost breakpoints, the max of the per-agent cost
    lines can bottom out where a left agent's rising line crosses a right
    agent's falling line, so the balance anchors (x_i + x_j - d) / 2 for
    x_i < 0 < x_j join the candidate set.
    """
    pts = {x for x in xs if -d <= x <= 0}
    pts |= {x - d for x in xs if -d <= x - d <= 0}
    pts |= {-d, 0}
    for xi in xs:
        if xi >= 0:
            continue
        for xj in xs:
            if xj <= 0:
                continue
            t = (xi + xj - d) // 2  # even by the doubled scaling
            if -d <= t <= 0:
                pts.add(t)
    return _anchor_sweep(xs, d, sorted(pts), max_cost)


def first_violation(
    mech: int,
    xs: Sequence[int],
    d: int,
    cands: Sequence[int],
    kind: int,
    max_coalition: int,
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """First profitable deviation in canonical order, or None.

    Canonical order: coalition size ascending, then coalition indices
    lexicographic, then report vectors lexicographic over the sorted
    candidate list.  GSP needs every member strictly better; SGSP needs no
    member worse and at least one strictly better (truthful reports stay in
    the SGSP report space — the strict gainer may be the truthful one).

    Order-preserving pruning only: a GSP coalition with a zero-cost member
    can never win, and a GSP violation whose member reports truthfully is
    preceded by the same violation from the smaller coalition, so truthful
    reports are skipped for GSP.  An SGSP coalition must contain some
    member with positive base cost.
    """
    n = len(xs)
    base_a, base_b = mechanism_range(mech, xs, d)
    base = [cost(x, base_a, base_b) for x in xs]

    if kind == KIND_GSP:
        pool = [i for i in range(n) if base[i] > 0]
    else:
        pool = list(range(n))

    ys = list(xs)
    for size in range(1, min(max_coalition, n) + 1):
        for coalition in itertools.combinations(pool, size):
            if kind == KIND_SGSP and all(base[i] == 0 for i in coalition):
                continue
            own = tuple(xs[i] for i in coalition)
            for reports in itertools.product(cands, repeat=size):
                if kind == KIND_GSP and any(r == o for r, o in zip(reports, own)):
                    continue
                for i, r in zip(coalition, reports):
                    ys[i] = r
                a, b = mechanism_range(mech, ys, d)
                if kind == KIND_GSP:
                    hit = all(cost(xs[i], a, b) < base[i] for i in coalition)
                else:
                    hit = False
                    for i in coalition:
                        after = cost(xs[i], a, b)
                        if after > base[i]:
                            hit = False
                            break
                        if after < base[i]:
                            hit = True
                if hit:
                    for i in coalition:
                        ys[i] = xs[i]
                    return coalition, tuple(reports)
            for i in coalition:
                ys[i] = xs[i]
    return None
