"""Kernel backend selection plus exact Fraction <-> scaled-integer glue.

The compiled kernel is preferred when importable; `RANGEMECH_PURE=1` forces
the pure-Python one.  All coordinates get multiplied by twice the least
common denominator before a kernel call, so kernel arithmetic is integer
arithmetic and results unscale exactly.  Calls whose scaled magnitudes could
overflow 64-bit intermediates are routed to the pure kernel, whose Python
integers are unbounded.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from rangemech import _purecheck
from rangemech.model import AccessRange, Instance

if os.environ.get("RANGEMECH_PURE"):
    _impl = _purecheck
else:
    try:
        from rangemech import _fastcheck as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _purecheck

BACKEND: str = _impl.BACKEND

MECH_SOCIAL_OPTIMAL = _purecheck.MECH_SOCIAL_OPTIMAL
MECH_LEFTMOST = _purecheck.MECH_LEFTMOST
MECH_MAXCOST = _purecheck.MECH_MAXCOST
MECH_OPTIMAL_MAXCOST = _purecheck.MECH_OPTIMAL_MAXCOST

KIND_GSP = _purecheck.KIND_GSP
KIND_SGSP = _purecheck.KIND_SGSP


def available_backends() -> dict:
    """Importable kernel modules by name (always includes "pure")."""
    backends = {"pure": _purecheck}
    try:
        from rangemech import _fastcheck

        backends["compiled"] = _fastcheck
    except ImportError:
        pass
    return backends


def _scale(inst: Instance, extras: Sequence[Fraction] = ()) -> tuple[int, list[int], int, list[int]]:
    denom = lcm(
        inst.d.denominator,
        *(x.denominator for x in inst.locations),
        *(e.denominator for e in extras),
    )
    s = 2 * denom  # doubled so halved quantities stay integral
    xs = [int(x * s) for x in inst.locations]
    d = int(inst.d * s)
    cs = [int(e * s) for e in extras]
    return s, xs, d, cs


def _module(xs: Sequence[int], d: int, cs: Sequence[int] = ()):
    # int64 headroom: intermediates are bounded by ~4x the largest input and
    # social-cost sums by n times that.
    biggest = max(max(abs(v) for v in xs), abs(d), max((abs(c) for c in cs), default=0))
    if biggest > 2**62 // (4 * len(xs)):
        return _purecheck
    return _impl


def inf_d(inst: Instance) -> Fraction:
    s, xs, d, _ = _scale(inst)
    return Fraction(_module(xs, d).inf_d(xs, d), s)


def mechanism_range(code: int, inst: Instance) -> AccessRange:
    s, xs, d, _ = _scale(inst)
    a, b = _module(xs, d).mechanism_range(code, xs, d)
    return AccessRange(Fraction(a, s), Fraction(b, s))


def optimal_social(inst: Instance) -> tuple[AccessRange, Fraction]:
    s, xs, d, _ = _scale(inst)
    t, value = _module(xs, d).optimal_social(xs, d)
    return AccessRange(Fraction(t, s), Fraction(t + d, s)), Fraction(value, s)


def optimal_max_closed(inst: Instance) -> Fraction:
    s, xs, d, _ = _scale(inst)
    return Fraction(_module(xs, d).optimal_max_closed(xs, d), s)


def optimal_max_brute(inst: Instance) -> tuple[AccessRange, Fraction]:
    s, xs, d, _ = _scale(inst)
    t, value = _module(xs, d).optimal_max_brute(xs, d)
    return AccessRange(Fraction(t, s), Fraction(t + d, s)), Fraction(value, s)


def first_violation(
    code: int,
    inst: Instance,
    candidates: Sequence[Fraction],
    kind: int,
    max_coalition: int,
) -> Optional[tuple[tuple[int, ...], tuple[Fraction, ...]]]:
    s, xs, d, cs = _scale(inst, candidates)
    hit = _module(xs, d, cs).first_violation(code, xs, d, cs, kind, max_coalition)
    if hit is None:
        return None
    coalition, reports = hit
    return coalition, tuple(Fraction(r, s) for r in reports)
