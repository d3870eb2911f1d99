"""Finite-horizon statistics and chaos certificates.

A certificate never claims a limit: it reports threshold crossings inside
the computed horizon (decay below epsilon, growth beyond a factor G of the
first value) together with the witness indices, and the verdict kind is
either ..._EVIDENCE, NO_EVIDENCE or INCONCLUSIVE.

Soundness bookkeeping: a decay claim needs values that do not underestimate
the true norms, so the decay channel refuses sequences tagged bracket-lower
or computed from capped arithmetic; growth claims are safe on any
provenance because an underestimate crossing the growth bar is still a
crossing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .series import binomial_series, compose_affine
from .spaces import Hardy, SpaceSpec, SupSpace, space_norm
from .operators import NormSequence

__all__ = [
    "SequenceStats",
    "sequence_stats",
    "IrregularWitness",
    "irregular_witness",
    "DecayWitness",
    "GrowthWitness",
    "ChaosVerdict",
    "certify_li_yorke",
    "certify_mean_li_yorke",
    "growth_rate_fit",
    "eigen_residual",
    "fit_window",
    "decay_window",
]

DEFAULT_EPSILON = 1e-10
DEFAULT_GROWTH_FACTOR = 1e3
DEFAULT_HORIZON = 500

KIND_LI_YORKE = "LI_YORKE_EVIDENCE"
KIND_MEAN_LI_YORKE = "MEAN_LI_YORKE_EVIDENCE"
KIND_NONE = "NO_EVIDENCE"
KIND_INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class SequenceStats:
    """Exact prefix statistics of a norm sequence."""

    min_value: float
    argmin: int
    max_value: float
    argmax: int
    cesaro: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.cesaro, dtype=np.float64)
        arr.setflags(write=False)
        object.__setattr__(self, "cesaro", arr)


def _values(seq) -> np.ndarray:
    if isinstance(seq, NormSequence):
        return seq.values
    return np.asarray(seq, dtype=np.float64)


def sequence_stats(seq) -> SequenceStats:
    """Running min/max with indices plus the prefix Cesaro means A_N."""
    v = _values(seq)
    if v.size == 0:
        raise ValueError("empty sequence")
    cesaro = np.cumsum(v) / np.arange(1, len(v) + 1)
    return SequenceStats(
        min_value=float(v.min()),
        argmin=int(v.argmin()) + 1,
        max_value=float(v.max()),
        argmax=int(v.argmax()) + 1,
        cesaro=cesaro,
    )


@dataclass(frozen=True)
class IrregularWitness:
    """Finite-horizon irregularity check: min below epsilon, max above G*v1."""

    fired: bool
    argmin: int
    min_value: float
    argmax: int
    max_value: float


def irregular_witness(seq, epsilon: float, growth_factor: float) -> IrregularWitness:
    _check_thresholds(epsilon, growth_factor)
    v = _values(seq)
    stats = sequence_stats(v)
    fired = stats.min_value < epsilon and stats.max_value > growth_factor * v[0]
    return IrregularWitness(fired=fired, argmin=stats.argmin, min_value=stats.min_value,
                            argmax=stats.argmax, max_value=stats.max_value)


@dataclass(frozen=True)
class DecayWitness:
    index: int
    value: float


@dataclass(frozen=True)
class GrowthWitness:
    channel: str  # "weight-norm" or "orbit"
    orbit: int | None
    index: int
    value: float
    rate: float | None


@dataclass(frozen=True)
class ChaosVerdict:
    kind: str
    citation: str
    decay: DecayWitness | None
    growth: GrowthWitness | None
    epsilon: float
    growth_factor: float
    horizon: int


def _check_thresholds(epsilon: float, growth_factor: float) -> None:
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    if not growth_factor > 1:
        raise ValueError("growth factor must exceed 1")


def _check_decay_soundness(weight_seq: NormSequence) -> None:
    if weight_seq.provenance == "bracket-lower":
        raise ValueError("decay test refuses a bracket-lower weight sequence "
                         "(grid maxima underestimate the sup norm)")
    if weight_seq.truncated:
        raise ValueError("decay test refuses capped sequences "
                         "(partial-sum norms underestimate the true norms)")


def fit_window(horizon: int) -> tuple[int, int]:
    """Tail window used for growth-rate fits: the last 40% of the horizon."""
    return max(1, math.ceil(0.6 * horizon)), horizon


def decay_window(horizon: int) -> tuple[int, int]:
    """Second-half window used by the averaged decay statistic."""
    return horizon // 2 + 1, horizon


def growth_rate_fit(seq, window: tuple[int, int]) -> float:
    """Least-squares slope of log v_n against n over a 1-based index window."""
    v = _values(seq)
    lo, hi = window
    if not (1 <= lo <= hi <= len(v)):
        raise ValueError("window must lie inside the sequence")
    if hi - lo + 1 < 8:
        raise ValueError("fit window must contain at least 8 values")
    vals = v[lo - 1 : hi]
    if np.any(vals <= 0) or not np.all(np.isfinite(vals)):
        raise ValueError("growth rate fit needs strictly positive finite values")
    return float(np.polyfit(np.arange(lo, hi + 1), np.log(vals), 1)[0])


def _try_rate(values: np.ndarray) -> float | None:
    window = fit_window(len(values))
    try:
        return growth_rate_fit(values, window)
    except ValueError:
        return None


def _growth_scan(weight_vals: np.ndarray, orbit_vals: list[np.ndarray],
                 growth_factor: float) -> GrowthWitness | None:
    """First channel whose maximum exceeds growth_factor times its first value.

    The weight channel is scanned first, then orbits in the order supplied.
    """
    stats = sequence_stats(weight_vals)
    if stats.max_value > growth_factor * weight_vals[0]:
        return GrowthWitness(channel="weight-norm", orbit=None, index=stats.argmax,
                             value=stats.max_value, rate=_try_rate(weight_vals))
    for i, vals in enumerate(orbit_vals):
        st = sequence_stats(vals)
        if st.max_value > growth_factor * vals[0]:
            return GrowthWitness(channel="orbit", orbit=i, index=st.argmax,
                                 value=st.max_value, rate=_try_rate(vals))
    return None


def certify_li_yorke(weight_seq: NormSequence, orbit_seqs=(),
                     epsilon: float = DEFAULT_EPSILON,
                     growth_factor: float = DEFAULT_GROWTH_FACTOR) -> ChaosVerdict:
    """Certificate for irregular-orbit (Li-Yorke type) evidence.

    Decay channel: some weight norm falls below epsilon.  Growth channel:
    the weight norms, or some candidate orbit, exceed growth_factor times
    their first value; an orbit crossing certifies that the operator is not
    power bounded because ||T^n|| >= ||T^n f|| / ||f|| for every vector f.
    Both channels firing yields evidence; neither yields NO_EVIDENCE;
    exactly one is INCONCLUSIVE.
    """
    _check_thresholds(epsilon, growth_factor)
    _check_decay_soundness(weight_seq)
    wv = weight_seq.values
    stats = sequence_stats(wv)

    decay = None
    if stats.min_value < epsilon:
        decay = DecayWitness(index=stats.argmin, value=stats.min_value)
    growth = _growth_scan(wv, [_values(o) for o in orbit_seqs], growth_factor)

    if decay and growth:
        kind = KIND_LI_YORKE
        if growth.channel == "weight-norm":
            citation = "weight norms vanish along a subsequence and are unbounded"
        else:
            citation = ("weight norms vanish along a subsequence; "
                        "a candidate orbit shows the powers are unbounded")
    elif decay:
        kind, citation = KIND_INCONCLUSIVE, "decay witness only; no growth channel fired"
    elif growth:
        kind, citation = KIND_INCONCLUSIVE, "growth witness only; weight norms never fell below epsilon"
    else:
        kind, citation = KIND_NONE, "all channels bounded by the growth factor and weight norms stay above epsilon"
    return ChaosVerdict(kind=kind, citation=citation, decay=decay, growth=growth,
                        epsilon=epsilon, growth_factor=growth_factor, horizon=len(wv))


def certify_mean_li_yorke(weight_seq: NormSequence, orbit_seqs=(),
                          epsilon: float = DEFAULT_EPSILON,
                          growth_factor: float = DEFAULT_GROWTH_FACTOR) -> ChaosVerdict:
    """Certificate for averaged (mean Li-Yorke type) evidence.

    Growth channel: the prefix Cesaro means A_N of the weight norms, or of a
    candidate orbit, exceed growth_factor times A_1.  Decay channel: the
    average of the weight norms over the second half of the horizon falls
    below epsilon.  The half-window average is used instead of min_N A_N
    because a positive prefix mean can never drop below v_1/N, which at
    practical horizons is far above any decay threshold; vanishing tail
    averages are equivalent to A_N -> 0 for nonnegative sequences.
    """
    _check_thresholds(epsilon, growth_factor)
    _check_decay_soundness(weight_seq)
    wv = weight_seq.values
    lo, hi = decay_window(len(wv))
    tail_mean = float(np.mean(wv[lo - 1 : hi]))

    decay = None
    if tail_mean < epsilon:
        decay = DecayWitness(index=lo, value=tail_mean)
    wmeans = sequence_stats(wv).cesaro
    omeans = [sequence_stats(o).cesaro for o in orbit_seqs]
    growth = _growth_scan(wmeans, omeans, growth_factor)

    if decay and growth:
        kind = KIND_MEAN_LI_YORKE
        if growth.channel == "weight-norm":
            citation = "averaged weight norms vanish over the tail and are unbounded"
        else:
            citation = ("averaged weight norms vanish over the tail; "
                        "a candidate orbit has unbounded Cesaro means")
    elif decay:
        kind, citation = KIND_INCONCLUSIVE, "averaged decay witness only; no growth channel fired"
    elif growth:
        kind, citation = KIND_INCONCLUSIVE, "averaged growth witness only; tail average never fell below epsilon"
    else:
        kind, citation = KIND_NONE, "all averaged channels bounded and the tail average stays above epsilon"
    return ChaosVerdict(kind=kind, citation=citation, decay=decay, growth=growth,
                        epsilon=epsilon, growth_factor=growth_factor, horizon=len(wv))


def eigen_residual(a: float, s, spec: SpaceSpec, degree: int) -> float:
    """Relative residual of the eigen-relation for g_s = (1-z)^s.

    Computes ||g_s o phi_a - a^s g_s|| / ||g_s|| at truncation ``degree``,
    where phi_a(z) = a z + 1 - a; a^s uses the real logarithm of a.  The
    relation is exact for nonnegative integer s once degree >= s; otherwise
    the residual is a pure truncation tail and shrinks as degree grows.
    In the sup space the Wiener (coefficient absolute sum) upper bracket is
    used for both numerator and denominator.
    """
    if not 0.0 < a < 1.0:
        raise ValueError("parameter a must lie in (0, 1)")
    if isinstance(spec, Hardy) and spec.p == 2.0 and not complex(s).real > -0.5:
        raise ValueError("(1-z)^s lies in H2 only for Re(s) > -1/2")
    g = binomial_series(s, degree)
    image = compose_affine(g, a, 1.0 - a)
    mu = np.exp(complex(s) * math.log(a))
    diff = image - mu * g
    side = "upper" if isinstance(spec, SupSpace) else "lower"
    return space_norm(diff, spec, sup_side=side) / space_norm(g, spec, sup_side=side)
