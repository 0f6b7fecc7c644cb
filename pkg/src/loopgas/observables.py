r"""Derived observables: percolation crossing, self-avoiding loops, log sector.

Percolation (Q = 1 dense, g = 2/3): setting the wrap weight to n' = 0 kills
every configuration with a loop winding the annulus, which happens exactly
when some cluster connects the two boundaries, so

    P = prod_{r>=1}(1-q^r)^{-1}
        sum_{k in Z} ( q^{8k^2/3 - 2k/3} - q^{8k^2/3 + 2k + 1/3} ),

with 1 - P ~ q^{1/3} as q -> 0 and P ~ (3/2)^{1/2} qtilde^{5/48} as
qtilde -> 0.  P decreases in q (a long thin tube is hard to cross) and
equivalently increases in qtilde.

Single wrapping self-avoiding loop = the O(n') term of the partition
function at n = 0:

    dilute (g = 3/2):  Z1 = prod(1-q^r)^{-1} sum_k k (-1)^{k-1} q^{3k^2/2 - k + 1/8}
    dense  (g = 1/2):  Z1 = q^{1/12} prod(1-q^r)^{-1}
                            sum_k ( q^{2k^2 - 1/8} - q^{2k^2 - 2k + 3/8} )
                          = q^{-1/24} prod_{m>=1} (1 - q^{m-1/2})^2,

the last equality being a Jacobi-triple-product instance that is verified
term by term on construction.

The n -> 0 limit is logarithmic: d/dn of the full partition function at
n = 0 splits into the wrapping term Z1, a -(c'(0)/24) ln(q) Z(0) piece, and
a ln(q) piece from differentiating the flux exponents,

    dilute: -(1/pi) ln q * prod^{-1} sum_k k(2k+1) (q^{6k^2+k} - q^{6k^2+5k+1})
    dense:  +(1/pi) ln q * q^{1/12} prod^{-1}
                         sum_k k(2k+1) (q^{2k^2-k} - q^{2k^2+3k+1}),

where the constants are the exact chain-rule factors dg/dn = -+1/(2 pi)
combined with dh/dg = p^2/4 + p/2, so the three-term decomposition equals
the derivative without free normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .annulus import partition_direct
from .errors import DomainError, IdentityError, TailBoundError
from .params import CGParams, Phase, as_phase, params_from_n, wrap_weight
from .qseries import Backend, GenSeries, euler_inverse, max_abs_coeff_diff


def _times_euler(theta: GenSeries) -> GenSeries:
    if theta.is_zero:
        return theta
    return theta * euler_inverse(theta.cutoff - theta.min_exponent, theta.backend)


def crossing_probability(cutoff=64, backend: Backend = Backend.EXACT) -> GenSeries:
    """Probability that a percolation cluster joins the two annulus boundaries."""
    cutoff_c = Fraction(cutoff) if backend is Backend.EXACT else float(cutoff)
    pairs = []
    k = 0
    while True:
        added = False
        for kk in ((k, -k) if k else (0,)):
            e1 = Fraction(8 * kk * kk, 3) - Fraction(2 * kk, 3)
            e2 = Fraction(8 * kk * kk, 3) + 2 * kk + Fraction(1, 3)
            if e1 < cutoff_c:
                pairs.append((e1, 1))
                added = True
            if e2 < cutoff_c:
                pairs.append((e2, -1))
                added = True
        if not added and k > 0:
            break
        k += 1
    return _times_euler(GenSeries.from_terms(pairs, cutoff_c, backend))


def wrap_count_generating(
    params: CGParams, n_prime: float, cutoff=64, backend: Backend = Backend.EXACT
) -> GenSeries:
    """Partition function with winding loops reweighted by n'.

    Polynomial in n' of the flux degeneracies, so wrap-number distributions
    follow by finite differencing in n' (Chebyshev-basis inversion is the
    natural route; left to the caller)."""
    if not (-2.0 <= float(n_prime) <= 2.0):
        raise DomainError("wrap weight must satisfy |n'| <= 2")
    return partition_direct(
        params, wrap_weight(params.phase, n_prime), cutoff, backend
    )


def saw_loop_dilute(cutoff=64, backend: Backend = Backend.EXACT) -> GenSeries:
    """Single wrapping self-avoiding loop, dilute point (g = 3/2); ~ q^{5/8}."""
    cutoff_c = Fraction(cutoff) if backend is Backend.EXACT else float(cutoff)
    pairs = []
    k = 1
    while True:
        added = False
        for kk in (k, -k):
            e = Fraction(3 * kk * kk, 2) - kk + Fraction(1, 8)
            if e < cutoff_c:
                pairs.append((e, kk * (-1) ** ((kk - 1) % 2)))
                added = True
        if not added:
            break
        k += 1
    return _times_euler(GenSeries.from_terms(pairs, cutoff_c, backend))


def saw_loop_derivative_series(
    phase, cutoff=64, backend: Backend = Backend.EXACT
) -> GenSeries:
    """Termwise d/dn' of the n = 0 partition function at n' = 0.

    d/dn' [sin((p+1)chi')/sin chi'] at chi' = -+pi/2 equals
    -(p+1) cos((p+1) pi/2) / 2 on both branches, so only odd p contribute."""
    phase = as_phase(phase)
    params = params_from_n(0.0, phase)
    g = params.g_exact
    c24 = params.c_exact / 24
    cutoff_c = Fraction(cutoff) if backend is Backend.EXACT else float(cutoff)
    pairs = []
    p = 1
    while True:
        added = False
        for pp in (p, -p):
            e = g * pp * pp / 4 - (1 - g) * Fraction(pp, 2) - c24
            if e < cutoff_c:
                halfturns = (pp + 1) // 2
                coeff = -Fraction(pp + 1, 2) * (-1) ** (halfturns % 2)
                pairs.append((e, coeff))
                added = True
        if not added and p > 2:
            break
        p += 2
    return _times_euler(GenSeries.from_terms(pairs, cutoff_c, backend))


def saw_loop_dense(
    cutoff=64, backend: Backend = Backend.EXACT
) -> tuple[GenSeries, GenSeries]:
    """Single wrapping loop in the dense phase (g = 1/2); leading q^{-1/24}.

    Returns (alternating-sum form, half-odd-integer product form); the two
    are compared term by term and a mismatch raises IdentityError."""
    cutoff_c = Fraction(cutoff) if backend is Backend.EXACT else float(cutoff)
    c_shift = Fraction(1, 12)  # q^{-c/24} with c = -2
    pairs = []
    k = 0
    while True:
        added = False
        for kk in ((k, -k) if k else (0,)):
            e1 = 2 * kk * kk - Fraction(1, 8) + c_shift
            e2 = 2 * kk * kk - 2 * kk + Fraction(3, 8) + c_shift
            if e1 < cutoff_c:
                pairs.append((e1, 1))
                added = True
            if e2 < cutoff_c:
                pairs.append((e2, -1))
                added = True
        if not added and k > 0:
            break
        k += 1
    series = _times_euler(GenSeries.from_terms(pairs, cutoff_c, backend))

    closed = GenSeries.monomial(-Fraction(1, 24), 1, cutoff_c, backend)
    m = 1
    while Fraction(2 * m - 1, 2) + (-Fraction(1, 24)) < cutoff_c:
        half = Fraction(2 * m - 1, 2)
        factor = GenSeries.from_terms(
            [(0, 1), (half, -2), (2 * half, 1)], cutoff_c - closed.min_exponent, backend
        )
        closed = closed * factor
        m += 1

    eff = min(series.cutoff, closed.cutoff)
    same = (
        series.truncate(eff) == closed.truncate(eff)
        if backend is Backend.EXACT
        else max_abs_coeff_diff(series, closed) < 1e-9
    )
    if not same:
        raise IdentityError(
            "dense wrapping-loop forms disagree: Jacobi triple product "
            "instance failed"
        )
    return series, closed


def log_partition_exact_core(
    phase, cutoff=64, backend: Backend = Backend.EXACT, regrouped: bool = True
) -> GenSeries:
    """Rational part of the ln(q) coefficient at n = 0 (chain factor -+1/pi off).

    regrouped=True gives the null-pair form sum_k k(2k+1)(q^{a_k} - q^{a_k + p+1});
    regrouped=False the direct two-family form; they must agree termwise."""
    phase = as_phase(phase)
    cutoff_c = Fraction(cutoff) if backend is Backend.EXACT else float(cutoff)
    if phase is Phase.DILUTE:
        shift = Fraction(0)
        e_plus = lambda k: Fraction(6 * k * k + k)
        e_pair = lambda k: Fraction(6 * k * k + 5 * k + 1)
        e_alt = lambda k: Fraction(6 * k * k - 5 * k + 1)
    else:
        shift = Fraction(1, 12)  # q^{-c/24} with c = -2
        e_plus = lambda k: Fraction(2 * k * k - k)
        e_pair = lambda k: Fraction(2 * k * k + 3 * k + 1)
        e_alt = lambda k: Fraction(2 * k * k - 3 * k + 1)
    pairs = []
    k = 0
    while True:
        added = False
        for kk in ((k, -k) if k else (0,)):
            if regrouped:
                fam = [(e_plus(kk), kk * (2 * kk + 1)), (e_pair(kk), -kk * (2 * kk + 1))]
            else:
                fam = [(e_plus(kk), kk * (2 * kk + 1)), (e_alt(kk), -kk * (2 * kk - 1))]
            for e, cval in fam:
                if cval != 0 and e + shift < cutoff_c:
                    pairs.append((e + shift, cval))
                    added = True
        if not added and k > 1:
            break
        k += 1
    return _times_euler(GenSeries.from_terms(pairs, cutoff_c, backend))


def log_chain_scale(phase) -> float:
    """Exact chain-rule constant multiplying the rational log core: -+1/pi."""
    phase = as_phase(phase)
    return -1.0 / math.pi if phase is Phase.DILUTE else 1.0 / math.pi


def log_partition(phase, cutoff=64) -> GenSeries:
    """Full ln(q)-coefficient series of dZ/dn at n = 0 (floating backend)."""
    core = log_partition_exact_core(phase, cutoff, Backend.FLOAT)
    return core * log_chain_scale(phase)


# -- asymptote fitting ----------------------------------------------------------


@dataclass(frozen=True)
class AsymptoteFit:
    """Power-law fit value ~ prefactor * modulus^exponent over a window."""

    exponent_fit: float
    prefactor_fit: float
    sample_window: tuple[float, float]
    residual: float


def asymptote_fit(
    evaluator: Callable[[float], tuple[float, float]],
    window: tuple[float, float],
    npoints: int = 9,
) -> AsymptoteFit:
    """Least-squares power-law fit of ln(value) against ln(modulus).

    `evaluator` maps a modulus in (0,1) to (value, tail_bound); the fit is
    refused if any tail bound exceeds 1% of the value."""
    lo, hi = float(window[0]), float(window[1])
    if not (0.0 < lo < hi < 1.0):
        raise DomainError("fit window must satisfy 0 < lo < hi < 1")
    if npoints < 8:
        raise DomainError("need at least 8 sample points")
    xs = np.exp(np.linspace(math.log(lo), math.log(hi), npoints))
    vals = []
    for x in xs:
        v, tail = evaluator(float(x))
        if v <= 0.0:
            raise DomainError(f"power-law fit needs positive values, got {v} at {x}")
        if tail > 0.01 * abs(v):
            raise TailBoundError(
                f"tail bound {tail:.2e} exceeds 1% of value {v:.2e} at "
                f"modulus {x:.3e}; refusing to fit"
            )
        vals.append(v)
    lx, ly = np.log(xs), np.log(vals)
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = float(np.max(np.abs(ly - (slope * lx + intercept))))
    return AsymptoteFit(
        exponent_fit=float(slope),
        prefactor_fit=float(math.exp(intercept)),
        sample_window=(lo, hi),
        residual=resid,
    )
