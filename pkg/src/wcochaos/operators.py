"""The weighted composition operator and its orbit norm sequences.

T f = w * (f o phi).  Powers are never applied step by step: the closed
iterate identity T^n f = w(n) * (f o phi^n) gives every orbit element from
one composition and one multiplication against a shared weight-iterate
cache.

Two orbit routines are provided.  ``orbit_norm_sequence`` follows a fixed
polynomial through the iterate identity.  ``eigen_orbit_norm_sequence``
tracks candidates of the form (1-z)^s * z^k for an affine symbol fixing
z = 1, where 1 - phi(z) = alpha (1 - z) turns the composition into the
exact factorization T^n (g_s z^k) = alpha^(ns) * w(n) * g_s * (phi^n)^k.
Truncating g_s once in that product keeps the relative representation error
uniform in n, whereas composing a truncated g_s directly loses the
eigen-behaviour as soon as |alpha|^n * deg falls below 1 (the iterated map
then no longer resolves the truncation scale).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .iterates import WeightIterateCache, weight_iterate_sequence
from .series import AnalyticPoly, binomial_series, compose_affine
from .spaces import Hardy, SpaceSpec, space_norm, space_provenance
from .symbols import SelfMapSymbol, WeightSymbol

__all__ = [
    "WeightedCompOp",
    "NormSequence",
    "orbit_norm_sequence",
    "weight_norm_sequence",
    "eigen_orbit_norm_sequence",
]


@dataclass(frozen=True)
class WeightedCompOp:
    """Weighted composition operator f -> w * (f o phi) on disk polynomials."""

    w: WeightSymbol
    phi: SelfMapSymbol

    def __post_init__(self):
        if not self.phi.validated:
            raise ValueError("self-map must pass validate_self_map first")

    def build_cache(self, horizon: int, max_degree: int | None = None) -> WeightIterateCache:
        return weight_iterate_sequence(self.w, self.phi, horizon, max_degree=max_degree)

    def apply(self, f: AnalyticPoly, max_degree: int | None = None) -> AnalyticPoly:
        """Single application w * (f o phi)."""
        return self.w.poly * self.phi.compose_into(f, max_degree=max_degree)

    def apply_n(self, f: AnalyticPoly, n: int, cache: WeightIterateCache) -> AnalyticPoly:
        """n-th power via the iterate identity T^n f = w(n) * (f o phi^n)."""
        if n < 0:
            raise ValueError("power must be nonnegative")
        if n == 0:
            return f
        if n > cache.horizon:
            raise ValueError(f"power {n} beyond cache horizon {cache.horizon}")
        comp = cache.symbol_iterate(n).compose_into(f, max_degree=cache.max_degree)
        out = cache.weight_iterate(n) * comp
        if cache.max_degree is not None:
            out = out.truncated(cache.max_degree)
        return out


@dataclass(frozen=True)
class NormSequence:
    """Finite norm sequence v_1..v_T with provenance bookkeeping.

    ``provenance`` is one of exact-coefficient, quadrature, bracket-lower,
    bracket-upper; ``truncated`` marks values computed from capped
    arithmetic.  Certificates consult both before trusting a decay claim.
    """

    values: np.ndarray
    space: SpaceSpec
    provenance: str
    label: str = ""
    truncated: bool = False

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a norm sequence must hold at least one value")
        if np.any(arr < 0):
            raise ValueError("norms cannot be negative")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def horizon(self) -> int:
        return len(self.values)

    def value(self, n: int) -> float:
        """v_n with 1-based indexing."""
        if not 1 <= n <= len(self.values):
            raise ValueError(f"index {n} outside 1..{len(self.values)}")
        return float(self.values[n - 1])


def weight_norm_sequence(cache: WeightIterateCache, spec: SpaceSpec,
                         sup_side: str = "lower") -> NormSequence:
    """Norms of the weight iterates; equals the orbit of the constant 1."""
    vals = np.array([space_norm(cache.weight_iterate(n), spec, sup_side=sup_side)
                     for n in range(1, cache.horizon + 1)])
    return NormSequence(values=vals, space=spec,
                        provenance=space_provenance(spec, sup_side, cache.truncated),
                        label="weight-norm", truncated=cache.truncated)


def orbit_norm_sequence(op: WeightedCompOp, f: AnalyticPoly, spec: SpaceSpec,
                        horizon: int, cache: WeightIterateCache | None = None,
                        sup_side: str = "lower") -> NormSequence:
    """Norms of T^n f for n = 1..horizon via the iterate identity."""
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    if cache is None:
        cache = op.build_cache(horizon)
    if cache.horizon < horizon:
        raise ValueError("cache horizon too small for requested orbit")
    vals = np.array([space_norm(op.apply_n(f, n, cache), spec, sup_side=sup_side)
                     for n in range(1, horizon + 1)])
    return NormSequence(values=vals, space=spec,
                        provenance=space_provenance(spec, sup_side, cache.truncated),
                        label=f"orbit deg={f.trimmed().degree}",
                        truncated=cache.truncated)


def _affine_power_poly(alpha: complex, gamma: complex, k: int) -> AnalyticPoly:
    out = AnalyticPoly.one()
    lin = AnalyticPoly([gamma, alpha])
    for _ in range(k):
        out = out * lin
    return out


def eigen_orbit_norm_sequence(op: WeightedCompOp, s, degree: int, spec: SpaceSpec,
                              horizon: int, power: int = 0,
                              sup_side: str = "lower") -> NormSequence:
    """Orbit norms of the candidate (1-z)^s * z^k through the closed form.

    Requires an affine symbol with fixed point 1, where f o phi^n has the
    exact form alpha^(ns) * (1-z)^s * (phi^n)^k, so the full orbit element is
    alpha^(ns) * w(n) * (1-z)^s * (phi^n)^k.  The binomial factor is
    truncated at ``degree`` once, outside the n-dependence; every reported
    value is the exact norm of that explicitly constructed polynomial.

    For Hardy(2) the candidate lies in the space only when Re s > -1/2.
    """
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    if power < 0:
        raise ValueError("monomial power must be nonnegative")
    phi = op.phi
    if not phi.fixes_one():
        raise ValueError("closed-form orbits need an affine symbol fixing z = 1")
    if isinstance(spec, Hardy) and spec.p == 2.0 and not complex(s).real > -0.5:
        raise ValueError("(1-z)^s lies in H2 only for Re(s) > -1/2")

    alpha = phi.alpha
    mu = np.exp(complex(s) * np.log(alpha))  # alpha^s, principal log
    g = binomial_series(s, degree)

    # The running polynomial is renormalized each step and the scale kept in
    # log space: |mu|^n alone can overflow a double long before the orbit
    # value itself does.
    vals = np.empty(horizon)
    log_scale = 0.0
    product = g * op.w.poly  # w(1) * g
    for n in range(1, horizon + 1):
        log_scale += math.log(abs(mu))
        term = product
        if power:
            it = phi.iterate(n)
            term = term * _affine_power_poly(it.alpha, it.gamma, power)
        nrm = space_norm(term, spec, sup_side=sup_side)
        vals[n - 1] = float(np.exp(log_scale + np.log(nrm))) if nrm > 0 else 0.0
        if n < horizon:
            it = phi.iterate(n)
            product = product * compose_affine(op.w.poly, it.alpha, it.gamma)
            peak = float(np.max(np.abs(product.coeffs)))
            if peak > 0:
                product = (1.0 / peak) * product
                log_scale += math.log(peak)
    label = f"eigen-orbit s={s} k={power} D={degree}"
    return NormSequence(values=vals, space=spec,
                        provenance=space_provenance(spec, sup_side, False),
                        label=label, truncated=False)
