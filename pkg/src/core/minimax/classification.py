"""
Case classification deciding whether entanglement lowers the minimax risk.

Without an ancilla the minimax risk matches the entangled one exactly when the
entangled worst prior p_* is also a maximum of the unassisted curve. Which of
the slope conditions decides this depends on where p_* sits among the sorted
breakpoints p^(0) <= p^(1) <= p^(2) <= p^(3):

    p_* = p^(0) < p^(1)             never (entanglement needed)
    p_* = p^(0) = p^(1) < p^(2)     always
    p_* = p^(0) = p^(2) < p^(3)     t3 + 2 min(t0, t1, t2) <= t0 + t1 + t2
    p^(0) < p_* = p^(1) < p^(2)     t0 + t1 = t2 + t3
    p^(0) < p_* = p^(1) = p^(2)     |t0 - t3| <= |t1 - t2|

The right-hand patterns are the same list for the pair with the channels
exchanged, where p maps to 1 - p and the breakpoint order reverses.
"""

import logging
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from src.core.channels import ChannelPair
from src.core.errors import AmbiguousPlateauError
from src.core.exactnum import HALF, ONE, rat_render
from src.core.minimax.worst_prior import minimax_entangled
from src.core.models import CaseLabel, CaseTag

logger = logging.getLogger(__name__)


def _left_pattern(
    first: int, last: int, t: Sequence[Fraction]
) -> Optional[Tuple[CaseTag, bool, str]]:
    """Tag, condition and rendered test for a tie group starting at the left."""
    t0, t1, t2, t3 = t
    if (first, last) == (0, 0):
        return CaseTag.P0_STRICTLY_FIRST, False, "p* = p(0) < p(1)"
    if (first, last) == (0, 1):
        return CaseTag.LEFT_DOUBLE, True, "p* = p(0) = p(1) < p(2)"
    if (first, last) == (0, 2):
        lhs = t3 + 2 * min(t0, t1, t2)
        rhs = t0 + t1 + t2
        return (
            CaseTag.TRIPLE_LEFT,
            lhs <= rhs,
            f"t3 + 2 min(t0,t1,t2) = {rat_render(lhs)} <= t0+t1+t2 = {rat_render(rhs)}",
        )
    if (first, last) == (1, 1):
        lhs, rhs = t0 + t1, t2 + t3
        return (
            CaseTag.MIDDLE_EQUAL_SLOPES,
            lhs == rhs,
            f"t0+t1 = {rat_render(lhs)} == t2+t3 = {rat_render(rhs)}",
        )
    if (first, last) == (1, 2):
        lhs, rhs = abs(t0 - t3), abs(t1 - t2)
        return (
            CaseTag.MIDDLE_DOUBLE,
            lhs <= rhs,
            f"|t0-t3| = {rat_render(lhs)} <= |t1-t2| = {rat_render(rhs)}",
        )
    return None


def _detect(pair: ChannelPair, mirrored: bool) -> Optional[CaseLabel]:
    p_star = minimax_entangled(pair).p_star
    entries = pair.breakpoints
    group = [k for k, entry in enumerate(entries) if entry.p_alpha == p_star]
    if not group:
        raise AmbiguousPlateauError(
            f"Worst prior {rat_render(p_star)} is not a breakpoint of {pair.describe()}"
        )
    pattern = _left_pattern(group[0], group[-1], [e.t_alpha for e in entries])
    if pattern is None:
        return None
    tag, holds, detail = pattern
    return CaseLabel(
        tag=tag,
        condition_holds=holds,
        mirrored=mirrored,
        p_star=ONE - p_star if mirrored else p_star,
        detail=detail,
    )


def classify(pair: ChannelPair) -> CaseLabel:
    """
    Decide from the breakpoint pattern whether entanglement is needed.

    Args:
        pair: Channel pair

    Returns:
        CaseLabel whose condition_holds is True when the unassisted minimax
        risk equals the entangled one

    Raises:
        AmbiguousPlateauError: neither the pair nor its mirror gives a
            left-anchored pattern
    """
    if pair.is_identical:
        return CaseLabel(
            tag=CaseTag.IDENTICAL,
            condition_holds=True,
            p_star=HALF,
            detail="channels coincide",
        )
    if pair.degenerate_indices:
        # r_alpha vanishes identically, so the product of the r's is zero
        return CaseLabel(
            tag=CaseTag.DEGENERATE_TERM,
            condition_holds=True,
            p_star=minimax_entangled(pair).p_star,
            detail=f"t_alpha = 0 for indices {list(pair.degenerate_indices)}",
        )

    label = _detect(pair, mirrored=False)
    if label is None:
        label = _detect(pair.swapped(), mirrored=True)
    if label is None:
        raise AmbiguousPlateauError(
            f"No left-anchored pattern for {pair.describe()} or its mirror"
        )
    logger.debug(f"Classified {pair.describe()} as {label.name} ({label.detail})")
    return label
