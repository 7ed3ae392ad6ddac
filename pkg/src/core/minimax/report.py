"""
Full minimax analysis of a channel pair.

The report gathers the entangled and unassisted minimax risks, the case
classification and the optimal inputs. Whether entanglement strictly helps is
decided twice, once by comparing the exact risks and once by the case list,
and the two answers must agree.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from src.core.channels import ChannelPair
from src.core.errors import InternalInconsistencyError, ThreeWayCrossingError
from src.core.exactnum import HALF, rat_render
from src.core.minimax.classification import classify
from src.core.minimax.optimal_inputs import solve_optimal_inputs
from src.core.minimax.worst_prior import minimax_entangled, minimax_no_ancilla
from src.core.models import ChannelSpec, DiscriminationReport
from src.core.risk import (
    bayes_risk_entangled,
    bayes_risk_no_ancilla,
    optimal_bayes_input,
)

logger = logging.getLogger(__name__)


def full_report(pair: ChannelPair, label: Optional[str] = None) -> DiscriminationReport:
    """
    Analyze a channel pair with and without ancilla.

    Args:
        pair: Channel pair
        label: Optional name carried into the report

    Returns:
        DiscriminationReport with every field populated

    Raises:
        InternalInconsistencyError: the exact comparison and the case list
            disagree, or the risk chain R'_M >= R_M = R'_B(p_*) is broken
    """
    entangled = minimax_entangled(pair)
    unassisted = minimax_no_ancilla(pair)
    entangled_curve = bayes_risk_entangled(pair)
    unassisted_curve = bayes_risk_no_ancilla(pair)

    if unassisted.value < entangled.value:
        raise InternalInconsistencyError(
            f"R'_M={rat_render(unassisted.value)} below "
            f"R_M={rat_render(entangled.value)} for {pair.describe()}"
        )
    if unassisted_curve(entangled.p_star) != entangled.value:
        raise InternalInconsistencyError(
            f"Unassisted risk differs from R_M at p*={rat_render(entangled.p_star)} "
            f"for {pair.describe()}"
        )

    case = classify(pair)
    strictly_helps = entangled.value < unassisted.value
    if case.entanglement_needed != strictly_helps:
        raise InternalInconsistencyError(
            f"Case {case.name} says entanglement needed={case.entanglement_needed} "
            f"but R_M={rat_render(entangled.value)}, "
            f"R'_M={rat_render(unassisted.value)} for {pair.describe()}"
        )

    unique = True
    mixing_weight = None
    try:
        solution = solve_optimal_inputs(pair)
        states = solution.states
        mixing_weight = solution.mixing_weight
    except ThreeWayCrossingError as error:
        logger.warning(f"{error}; reporting candidates as non-unique")
        states = error.candidates
        unique = False

    report = DiscriminationReport(
        label=label,
        channel1=ChannelSpec(q=list(pair.ch1.q)),
        channel2=ChannelSpec(q=list(pair.ch2.q)),
        breakpoints=[entry.p_alpha for entry in pair.sorted],
        slopes=[entry.t_alpha for entry in pair.sorted],
        sorted_indices=[entry.original_index for entry in pair.sorted],
        R_M=entangled.value,
        R_M_prime=unassisted.value,
        p_star=entangled.p_star,
        p_star_plateau=entangled.plateau,
        p_star_prime=unassisted.p_star,
        p_star_prime_plateau=unassisted.plateau,
        case=case,
        entanglement_strictly_helps=strictly_helps,
        optimal_inputs_no_ancilla=states,
        optimal_inputs_unique=unique,
        mixing_weight=mixing_weight,
        bayes_uniform_entangled=entangled_curve(HALF),
        bayes_uniform_no_ancilla=unassisted_curve(HALF),
        bayes_axis_at_p_star_prime=optimal_bayes_input(pair, unassisted.p_star),
        curve_entangled=entangled_curve.to_json(),
        curve_no_ancilla=unassisted_curve.to_json(),
    )
    logger.info(
        f"Analyzed {label or pair.describe()}: R_M={rat_render(report.R_M)}, "
        f"R'_M={rat_render(report.R_M_prime)}, case={case.name}"
    )
    return report


def analyze_many(
    pairs: Sequence[ChannelPair],
    labels: Optional[Sequence[Optional[str]]] = None,
    workers: int = 1,
) -> List[DiscriminationReport]:
    """
    Run full_report over many pairs, optionally on a thread pool.

    Args:
        pairs: Channel pairs
        labels: Optional labels, one per pair
        workers: Number of worker threads (1 runs sequentially)

    Returns:
        Reports in the order of the input pairs
    """
    if labels is None:
        labels = [None] * len(pairs)
    if len(labels) != len(pairs):
        raise ValueError("labels must match pairs one to one")
    if workers <= 1:
        return [full_report(pair, label) for pair, label in zip(pairs, labels)]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(full_report, pairs, labels))
