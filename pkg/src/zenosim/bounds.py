"""Closed-form error/success bounds and resource formulas.

All bounds take the coefficient 1-norm ``lam``, the evolution time ``t``
and the step count ``n``. Success-probability lower bounds are clamped at
zero (the raw expressions go negative for small ``n``); ``BoundReport``
carries both the clamped and raw values.

Step-count formulas use a ceiling with a 1e-12 relative nudge so that
exact-ratio inputs (for example ``t=1, lam=1, epsilon=0.01``) are not
pushed up by floating-point roundoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_CEIL_NUDGE = 1e-12
SQRT_HALF = 1.0 / math.sqrt(2.0)


def _check_args(lam: float, t: float, n: int) -> None:
    if n < 1:
        raise ValueError(f"step count must be >= 1, got {n}")
    if t < 0:
        raise ValueError(f"time must be nonnegative, got {t}")
    if lam <= 0:
        raise ValueError(f"coefficient 1-norm must be positive, got {lam}")


def _ceil_steps(x: float) -> int:
    return max(1, math.ceil(x * (1.0 - _CEIL_NUDGE)))


def bound_zeno1_error(lam: float, t: float, n: int) -> float:
    """First-order sequence gate-error bound t^2 lam^2 / n."""
    _check_args(lam, t, n)
    return t * t * lam * lam / n


def bound_zeno1_succ(lam: float, t: float, n: int) -> float:
    """First-order post-selection success lower bound, clamped at 0."""
    return max(0.0, bound_zeno1_succ_raw(lam, t, n))


def bound_zeno1_succ_raw(lam: float, t: float, n: int) -> float:
    _check_args(lam, t, n)
    return 1.0 - 2.0 * lam * lam * t * t / n


def bound_zeno2_error(lam: float, t: float, n: int) -> float:
    """Second-order (reflection) sequence gate-error bound lam^3 t^3 / (3 n^2)."""
    _check_args(lam, t, n)
    return lam**3 * t**3 / (3.0 * n * n)


def bound_zeno2_succ(lam: float, t: float, n: int) -> float:
    """Second-order success lower bound, clamped at 0."""
    return max(0.0, bound_zeno2_succ_raw(lam, t, n))


def bound_zeno2_succ_raw(lam: float, t: float, n: int) -> float:
    _check_args(lam, t, n)
    return 1.0 - 4.0 * lam**3 * t**3 / (3.0 * n * n)


def bound_kicks_error(lam: float, t: float, n: int) -> float:
    """Gate-error bound for the reflection-kick sequence."""
    _check_args(lam, t, n)
    return (2.0 / n) * (SQRT_HALF + 1.0) * lam * t * (1.0 + 2.0 * lam * t)


def bound_mub_error(h_max: float, n_ancilla: int, t: float, n: int) -> float:
    """Gate-error bound for the unbiased-basis projector, scaled by 2^n_ancilla.

    The padded ancilla register makes the uniform projector span all
    2^n_ancilla basis states, so the register size (not the raw term count)
    enters the bound; ``bound_mub_error_termcount`` gives the term-count
    variant for comparison.
    """
    if n_ancilla < 0:
        raise ValueError(f"ancilla count must be nonnegative, got {n_ancilla}")
    _check_args(h_max, t, n)
    width = float(1 << n_ancilla)
    return t * t * width * width * h_max * h_max / n


def bound_mub_error_termcount(h_max: float, num_terms: int, t: float, n: int) -> float:
    """Term-count (L) variant of the unbiased-basis error bound."""
    if num_terms < 1:
        raise ValueError(f"term count must be >= 1, got {num_terms}")
    _check_args(h_max, t, n)
    return t * t * float(num_terms) ** 2 * h_max * h_max / n


def bound_mub_succ(h_max: float, n_ancilla: int, t: float, n: int) -> float:
    """Success lower bound for the unbiased-basis projector, clamped at 0.

    Follows from the first-order success argument with the block-diagonal
    generator's norm 2^n_ancilla * h_max in place of lam.
    """
    if n_ancilla < 0:
        raise ValueError(f"ancilla count must be nonnegative, got {n_ancilla}")
    _check_args(h_max, t, n)
    eff = float(1 << n_ancilla) * h_max
    return max(0.0, 1.0 - 2.0 * eff * eff * t * t / n)


def bound_qdrift_diamond(lam: float, t: float, n: int) -> float:
    """Diamond-distance bound 4 lam^2 t^2 / n for the randomized channel."""
    _check_args(lam, t, n)
    return 4.0 * lam * lam * t * t / n


def steps_for_precision(lam: float, t: float, epsilon: float) -> int:
    """Steps needed so the first-order error bound reaches ``epsilon``."""
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    if t < 0:
        raise ValueError(f"time must be nonnegative, got {t}")
    if lam <= 0:
        raise ValueError(f"coefficient 1-norm must be positive, got {lam}")
    return _ceil_steps(t * t * lam * lam / epsilon)


def steps_for_success(lam: float, t: float, p_target: float) -> int:
    """Step budget at which the first-order success bound reaches ``p_target``."""
    if not 0 <= p_target < 1:
        raise ValueError(f"target success probability must be in [0, 1), got {p_target}")
    if t < 0:
        raise ValueError(f"time must be nonnegative, got {t}")
    if lam <= 0:
        raise ValueError(f"coefficient 1-norm must be positive, got {lam}")
    return _ceil_steps(2.0 * lam * lam * t * t / (1.0 - p_target))


def circuit_cost_estimate(num_terms: int, per_term_cost: int, lam: float, t: float, epsilon: float) -> int:
    """Order-of-magnitude circuit cost L * C * ceil(t^2 lam^2 / epsilon).

    Asymptotic estimate only; the constants hidden by the scaling are
    unknown.
    """
    if num_terms < 1 or per_term_cost < 1:
        raise ValueError("term count and per-term cost must be positive")
    return num_terms * per_term_cost * steps_for_precision(lam, t, epsilon)


@dataclass(frozen=True)
class BoundReport:
    """All analytic quantities for one (method, t, n) point."""

    method: str
    lam: float
    h_max: float
    num_terms: int
    n_ancilla: int
    t: float
    n: int
    epsilon_bound: float
    p_succ_bound: float
    p_succ_bound_raw: float
    steps_for_epsilon: int | None


def bound_report(
    method: str,
    lam: float,
    h_max: float,
    num_terms: int,
    n_ancilla: int,
    t: float,
    n: int,
    epsilon: float | None = None,
) -> BoundReport:
    """Assemble every bound relevant to ``method`` at one sweep point."""
    if method == "zeno1":
        eps = bound_zeno1_error(lam, t, n)
        p_raw = bound_zeno1_succ_raw(lam, t, n)
    elif method == "zeno2":
        eps = bound_zeno2_error(lam, t, n)
        p_raw = bound_zeno2_succ_raw(lam, t, n)
    elif method == "kicks":
        eps = bound_kicks_error(lam, t, n)
        p_raw = 1.0
    elif method == "mub":
        eps = bound_mub_error(h_max, n_ancilla, t, n)
        p_raw = 1.0 - 2.0 * (float(1 << n_ancilla) * h_max) ** 2 * t * t / n
    elif method == "qdrift":
        eps = bound_qdrift_diamond(lam, t, n)
        p_raw = 1.0
    else:
        raise ValueError(f"no analytic bounds recorded for method {method!r}")
    steps = steps_for_precision(lam, t, epsilon) if epsilon is not None else None
    return BoundReport(
        method=method,
        lam=lam,
        h_max=h_max,
        num_terms=num_terms,
        n_ancilla=n_ancilla,
        t=t,
        n=n,
        epsilon_bound=eps,
        p_succ_bound=max(0.0, p_raw),
        p_succ_bound_raw=p_raw,
        steps_for_epsilon=steps,
    )
