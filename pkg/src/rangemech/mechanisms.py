"""Four deterministic rules mapping a location profile to an access range.

All four return a range of length exactly d: extending a shorter range with
one endpoint fixed never hurts any agent.  The heavy lifting happens in the
selected kernel backend; results come back as exact rationals.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from rangemech import _kernel
from rangemech.model import AccessRange, Instance


class Mechanism(enum.Enum):
    """Built-in rules, named by how they pick the range."""

    SOCIAL_OPTIMAL = "social-optimal"  # pivot on inf D; social-cost optimal, group-immune
    LEFTMOST = "leftmost"  # pivot on the leftmost report; strongly group-immune
    MAXCOST = "maxcost"  # anchor at min(x_l, 0); 2-approx for max cost
    OPTIMAL_MAXCOST = "optimal-maxcost"  # exact max-cost optimum; manipulable

    @property
    def kernel_code(self) -> int:
        return _CODES[self]


_CODES = {
    Mechanism.SOCIAL_OPTIMAL: _kernel.MECH_SOCIAL_OPTIMAL,
    Mechanism.LEFTMOST: _kernel.MECH_LEFTMOST,
    Mechanism.MAXCOST: _kernel.MECH_MAXCOST,
    Mechanism.OPTIMAL_MAXCOST: _kernel.MECH_OPTIMAL_MAXCOST,
}


def inf_d(inst: Instance) -> Fraction:
    """Pivot of the social-optimal rule.

    Infimum of the upward-closed set of points y where at least as many
    agents sit at or left of y as sit at or right of y + d.  The returned
    boundary point itself may fall just outside the set.
    """
    return _kernel.inf_d(inst)


def mech_social_optimal(inst: Instance) -> AccessRange:
    """Three-case rule on inf D: clamp it into [-d, 0] and anchor there."""
    return _kernel.mechanism_range(_kernel.MECH_SOCIAL_OPTIMAL, inst)


def mech_leftmost(inst: Instance) -> AccessRange:
    """Three-case rule on the leftmost report x_l instead of inf D."""
    return _kernel.mechanism_range(_kernel.MECH_LEFTMOST, inst)


def mech_maxcost(inst: Instance) -> AccessRange:
    """Anchor the range at min(x_l, 0), without clamping at -d."""
    return _kernel.mechanism_range(_kernel.MECH_MAXCOST, inst)


def mech_optimal_maxcost(inst: Instance) -> AccessRange:
    """Range minimizing the maximum cost; balances the two extreme agents.

    Deliberately manipulable: a far-out agent can drag the balanced range
    toward themselves.  Kept as the negative subject for incentive checks.
    """
    return _kernel.mechanism_range(_kernel.MECH_OPTIMAL_MAXCOST, inst)


def apply_mechanism(mech: Mechanism, inst: Instance) -> AccessRange:
    return _kernel.mechanism_range(mech.kernel_code, inst)
