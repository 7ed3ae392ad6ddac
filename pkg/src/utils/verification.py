"""
Seeded invariant suites comparing the exact layer against the dense oracle.

Each suite runs over the same list of channel pairs and records how many
checks passed, the largest deviation seen and the first failing pair, so a
failure can be reproduced from its PairFile document.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

import numpy as np

from src.config import Settings, get_settings
from src.core.channels import ChannelPair
from src.core.errors import PauliMinimaxError, ThreeWayCrossingError
from src.core.exactnum import ONE, ZERO
from src.core.minimax import (
    classify,
    minimax_entangled,
    minimax_no_ancilla,
    solve_optimal_inputs,
)
from src.core.minimax.optimal_inputs import verify_input
from src.core.models import PairFile
from src.core.risk import (
    bayes_risk_bloch,
    bayes_risk_entangled,
    bayes_risk_no_ancilla,
    bayes_risk_no_ancilla_closed_form,
)
from src.oracle import apply_channel, bell_output, helstrom_risk, minimax_states
from src.utils.io import pair_to_file
from src.utils.random_pairs import (
    perfect_discrimination_pair,
    random_bloch,
    random_pair,
    random_priors,
)

logger = logging.getLogger(__name__)

PRIORS_PER_PAIR = 20
STRUCTURE_GRID = 200
BOUND_GRID = 100


@dataclass
class SuiteResult:
    """Pass counts and worst deviation of one invariant suite."""

    name: str
    checks: int = 0
    failures: int = 0
    max_deviation: float = 0.0
    first_failure: Optional[PairFile] = None
    failure_message: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(
        self,
        ok: bool,
        pair: ChannelPair,
        deviation: float = 0.0,
        message: str = "",
    ) -> None:
        self.checks += 1
        self.max_deviation = max(self.max_deviation, deviation)
        if ok:
            return
        self.failures += 1
        if self.first_failure is None:
            self.first_failure = pair_to_file(pair, label=f"{self.name} failure")
            self.failure_message = message
            logger.warning(f"{self.name}: {message} for {pair.describe()}")


@dataclass
class VerificationSummary:
    seed: int
    trials: int
    suites: List[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)

    @property
    def max_deviation(self) -> float:
        return max((suite.max_deviation for suite in self.suites), default=0.0)


def check_entangled_oracle(
    pair: ChannelPair, rng: np.random.Generator, settings: Settings, result: SuiteResult
) -> None:
    """Closed-form entangled risk against the trace norm of the Bell outputs."""
    rho1, rho2 = bell_output(pair.ch1), bell_output(pair.ch2)
    curve = bayes_risk_entangled(pair)
    for p in random_priors(rng, PRIORS_PER_PAIR):
        deviation = abs(helstrom_risk(rho1, rho2, p) - float(curve(Fraction(p))))
        result.record(
            deviation < settings.entangled_oracle_tolerance,
            pair,
            deviation,
            f"entangled risk off by {deviation:.3e} at p={p!r}",
        )


def check_bloch_oracle(
    pair: ChannelPair, rng: np.random.Generator, settings: Settings, result: SuiteResult
) -> None:
    """Bloch-input risk formula against the trace norm of the qubit outputs."""
    for p in random_priors(rng, PRIORS_PER_PAIR):
        state = random_bloch(rng)
        oracle = helstrom_risk(
            apply_channel(pair.ch1, state), apply_channel(pair.ch2, state), p
        )
        deviation = abs(oracle - bayes_risk_bloch(pair, p, state))
        result.record(
            deviation < settings.bloch_oracle_tolerance,
            pair,
            deviation,
            f"Bloch risk off by {deviation:.3e} at p={p!r}, n={state.n}",
        )


def check_classification(
    pair: ChannelPair, rng: np.random.Generator, settings: Settings, result: SuiteResult
) -> None:
    """Case-list verdict against the exact comparison of R_M and R'_M."""
    try:
        label = classify(pair)
    except PauliMinimaxError as error:
        result.record(False, pair, message=f"{type(error).__name__}: {error}")
        return
    r_m = minimax_entangled(pair).value
    r_m_prime = minimax_no_ancilla(pair).value
    result.record(
        label.entanglement_needed == (r_m < r_m_prime),
        pair,
        message=f"case {label.name} disagrees with R_M={r_m}, R'_M={r_m_prime}",
    )
    grid = [Fraction(k, BOUND_GRID - 1) for k in range(BOUND_GRID)]
    entangled = bayes_risk_entangled(pair)
    unassisted = bayes_risk_no_ancilla(pair)
    bounded = all(r_m >= entangled(p) and r_m_prime >= unassisted(p) for p in grid)
    result.record(bounded, pair, message="a Bayes risk exceeds its minimax risk")


def check_structure(
    pair: ChannelPair, rng: np.random.Generator, settings: Settings, result: SuiteResult
) -> None:
    """Ordering, concavity, boundary slopes and channel-swap symmetry."""
    entangled = bayes_risk_entangled(pair)
    unassisted = bayes_risk_no_ancilla(pair)
    grid = [Fraction(k, STRUCTURE_GRID - 1) for k in range(STRUCTURE_GRID)]

    ordered = all(
        entangled(p) <= unassisted(p) <= min(p, ONE - p)
        and unassisted(p) == bayes_risk_no_ancilla_closed_form(pair, p)
        for p in grid
    )
    result.record(ordered, pair, message="R_B <= R'_B <= min(p, 1-p) violated")
    result.record(
        entangled.is_concave and unassisted.is_concave,
        pair,
        message="risk curve not concave",
    )

    entries = pair.breakpoints
    first, last = entries[0].p_alpha, entries[-1].p_alpha
    edges = True
    if first > ZERO:
        edges = edges and entangled(first / 2) == first / 2
    if last < ONE:
        middle = (last + ONE) / 2
        edges = edges and entangled(middle) == ONE - middle
    result.record(edges, pair, message="R_B is not p / 1-p outside the breakpoints")

    peak = minimax_entangled(pair)
    mirror = minimax_entangled(pair.swapped())
    upper = peak.plateau[1] if peak.plateau else peak.p_star
    result.record(
        mirror.value == peak.value and mirror.p_star == ONE - upper,
        pair,
        message="channel swap does not map p* to 1 - p*",
    )
    chain = unassisted(peak.p_star) == peak.value <= minimax_no_ancilla(pair).value
    result.record(chain, pair, message="R'_M >= R_M = R'_B(p*) violated")


def check_optimal_inputs(
    pair: ChannelPair, rng: np.random.Generator, settings: Settings, result: SuiteResult
) -> None:
    """Every optimal unassisted input reaches R'_M."""
    peak = minimax_no_ancilla(pair)
    try:
        states = solve_optimal_inputs(pair).states
    except ThreeWayCrossingError as error:
        states = error.candidates
    except PauliMinimaxError as error:
        result.record(False, pair, message=f"{type(error).__name__}: {error}")
        return
    for state in states:
        ok, deviation = verify_input(pair, state, peak.p_star, peak.value)
        result.record(ok, pair, deviation, f"input {state.n} misses R'_M")


def check_equalizer(
    pair: ChannelPair, rng: np.random.Generator, settings: Settings, result: SuiteResult
) -> None:
    """Golden-section minimax on the Bell outputs reproduces R_M with an equalizer."""
    outcome = minimax_states(bell_output(pair.ch1), bell_output(pair.ch2))
    peak = minimax_entangled(pair)
    deviation = abs(outcome.value - float(peak.value))
    ok = (
        deviation < settings.minimax_value_tolerance
        and outcome.residual < settings.equalizer_tolerance
        and outcome.povm.is_valid()
    )
    result.record(
        ok,
        pair,
        max(deviation, outcome.residual),
        f"minimax value off by {deviation:.3e}, residual {outcome.residual:.3e}",
    )


def check_perfect_family(
    pair: ChannelPair, rng: np.random.Generator, settings: Settings, result: SuiteResult
) -> None:
    """A channel without sigma_beta against sigma_beta: R_M = 0 < R'_M."""
    family = perfect_discrimination_pair(rng)
    ok = (
        minimax_entangled(family).value == ZERO
        and minimax_no_ancilla(family).value > ZERO
    )
    result.record(ok, family, message="perfect discrimination family broken")


SUITES: List[Callable[..., None]] = [
    check_entangled_oracle,
    check_bloch_oracle,
    check_classification,
    check_structure,
    check_optimal_inputs,
    check_equalizer,
    check_perfect_family,
]


def suite_name(suite: Callable[..., None]) -> str:
    return suite.__name__.replace("check_", "", 1)


def run_verification(
    trials: int,
    seed: int,
    pair: Optional[ChannelPair] = None,
    suites: Optional[Sequence[str]] = None,
) -> VerificationSummary:
    """
    Run every suite over seeded random pairs.

    Args:
        trials: Number of pairs, at least 1
        seed: Seed of the numpy generator; equal seeds give equal summaries
        pair: Optional pair used as the first trial
        suites: Names of the suites to run (default: all of them)

    Returns:
        VerificationSummary with one SuiteResult per suite
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    selected = [(suite_name(suite), suite) for suite in SUITES]
    if suites is not None:
        unknown = set(suites) - {name for name, _ in selected}
        if unknown:
            raise ValueError(f"Unknown suites: {', '.join(sorted(unknown))}")
        selected = [(name, suite) for name, suite in selected if name in suites]
    settings = get_settings()
    rng = np.random.default_rng(seed)
    pairs = [pair] if pair is not None else []
    while len(pairs) < trials:
        pairs.append(random_pair(rng))

    summary = VerificationSummary(seed=seed, trials=trials)
    for name, suite in selected:
        result = SuiteResult(name=name)
        for candidate in pairs:
            suite(candidate, rng, settings, result)
        logger.info(
            f"{name}: {result.checks - result.failures}/{result.checks} passed, "
            f"max deviation {result.max_deviation:.3e}"
        )
        summary.suites.append(result)
    return summary
