r"""Annulus partition functions of the critical loop models, in both channels.

Direct channel (q = e^{-pi l/L}; l = circumference, L = width):

    Z = q^{-c/24} prod_{r>=1}(1-q^r)^{-1}
        sum_{p in Z} [sin((p+1)chi')/sin(chi')] q^{g p^2/4 - (1-g) p/2}

The sum over all integer flux p already carries the null-state subtraction:
the p <= -2 terms cancel the level-(p+1) null descendant of each p >= 0
sector, so the same series can be written over p >= 0 as
d_p (q^{h(p)} - q^{h(p)+p+1}).  Both forms are implemented and must agree.

The un-subtracted first guess (coefficients cos((p - m0) chi') instead) is
kept as `partition_naive`, purely to exhibit how it fails.

Crossed channel (qtilde = e^{-2 pi L/l}, so ln q * ln qtilde = 2 pi^2):

    Z = (2/g)^{1/2} qtilde^{-c/12} prod_{r>=1}(1-qtilde^{2r})^{-1}
        sum_{m in Z} [sin((chi'+2 pi m)/g)/sin(chi')]
        qtilde^{((chi'+2 pi m)^2 - chi^2)/(2 pi^2 g)}

obtained from the direct channel by Poisson resummation; `duality_check`
verifies the two numerically.  Stored exponents always include the
qtilde^{-c/12} prefactor so a GenSeries is self-contained.  At sin(chi') = 0
(wrap weight n' = +-2) the m and -m (or m and -1-m) terms are paired and the
limit taken; the pairing also produces ln(qtilde) terms proportional to
sin((chi'+2 pi m)/g), which vanish at g = 1 but not in general -- a series
cannot represent those, so they raise IdentityError when nonzero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError, IdentityError, TailBoundError
from .params import CGParams, WrapWeight, default_wrap
from .qseries import Backend, GenSeries, euler_inverse

_SIN_ZERO_TOL = 1e-9


@dataclass(frozen=True)
class ChannelEval:
    """One numerical channel-duality evaluation at aspect ratio l/L."""

    ratio: float
    q: float
    q_tilde: float
    direct_value: float
    crossed_value: float
    residual: float
    tail_bounds: tuple[float, float]

    def to_json_dict(self) -> dict:
        return {
            "ratio": self.ratio,
            "q": self.q,
            "q_tilde": self.q_tilde,
            "direct_value": self.direct_value,
            "crossed_value": self.crossed_value,
            "residual": self.residual,
            "tail_bounds": list(self.tail_bounds),
        }


# -- direct channel -----------------------------------------------------------


def _exact_exponent(params: CGParams, p: int) -> Fraction:
    return params.leg_exponent_exact(p) - params.c_exact / 24


def _float_exponent(params: CGParams, p: int) -> float:
    g = params.g
    return g * p * p / 4.0 - (1.0 - g) * p / 2.0 - params.c / 24.0


def _wrap_table(w: WrapWeight, pmax: int, parity: Optional[str], backend: Backend):
    """d_p for 0 <= p <= pmax as a lookup, exact where the backend demands it.

    Even-parity sums only ever touch even-index d_p, which close under the
    step-two recurrence d_{p+2} = (n'^2 - 2) d_p - d_{p-2}; that keeps e.g.
    n' = sqrt(Q) points exact even though n' itself is irrational.
    """
    def cheb(n_prime, one):
        table = [one, n_prime * one]
        for _ in range(pmax):
            table.append(n_prime * table[-1] - table[-2])
        return lambda p: table[p]

    if backend is Backend.FLOAT:
        return cheb(w.n_prime, 1.0)
    if w.n_prime_exact is not None:
        return cheb(w.n_prime_exact, Fraction(1))
    if parity == "even" and w.n_prime_sq_exact is not None:
        sq = w.n_prime_sq_exact
        even = [Fraction(1), sq - 1]
        for _ in range(pmax // 2):
            even.append((sq - 2) * even[-1] - even[-2])
        return lambda p: even[p // 2]
    raise DomainError(
        "exact backend needs a rational wrap weight (or rational n'^2 for the "
        "even-parity sector); use the floating backend for this point"
    )


def _signed_coeff(d, p: int):
    """sin((p+1)chi')/sin(chi') for any integer p via d_{p} for p >= 0."""
    if p >= 0:
        return d(p)
    if p == -1:
        return None  # exactly zero
    return -d(-p - 2)


def _flux_range(params: CGParams, cutoff, exponent) -> list[int]:
    """All p with total exponent below cutoff (exponent callable, quadratic)."""
    m0 = params.m0
    ps = []
    p = 0
    while True:
        e = exponent(p)
        if e < cutoff:
            ps.append(p)
        elif p > m0 + 1:
            break
        p += 1
    p = -1
    while True:
        e = exponent(p)
        if e < cutoff:
            ps.append(p)
        elif p < m0 - 1:
            break
        p -= 1
    return sorted(ps)


def flux_sum(
    params: CGParams,
    w: Optional[WrapWeight] = None,
    cutoff=64,
    parity: Optional[str] = None,
    backend: Backend = Backend.EXACT,
    form: str = "integer",
) -> GenSeries:
    """Theta-like flux sum of the direct channel, including q^{-c/24}.

    form="integer" sums over all p in Z (optionally parity-restricted);
    form="null_pairs" builds the equivalent p >= 0 combination
    d_p (q^{h(p)} - q^{h(p)+p+1}).  The Euler-inverse factor is *not*
    applied here.
    """
    if w is None:
        w = default_wrap(params)
    if parity not in (None, "even", "odd"):
        raise DomainError(f"parity must be 'even', 'odd' or None, got {parity!r}")
    if form not in ("integer", "null_pairs"):
        raise DomainError(f"unknown flux-sum form {form!r}")
    if form == "null_pairs" and parity is not None:
        raise DomainError("parity restriction applies to the integer-flux form only")
    if backend is Backend.EXACT and params.g_exact is None:
        raise DomainError(
            "exact backend requires an exact-registry coupling; "
            "use the floating backend for this parameter point"
        )
    exponent = (
        (lambda p: _exact_exponent(params, p))
        if backend is Backend.EXACT
        else (lambda p: _float_exponent(params, p))
    )
    cutoff_c = Fraction(cutoff) if backend is Backend.EXACT else float(cutoff)
    if not exponent(0) < cutoff_c:
        raise DomainError(
            f"cutoff {cutoff} excludes the p=0 identity term at exponent "
            f"{exponent(0)}; increase it"
        )
    ps = _flux_range(params, cutoff_c, exponent)
    pmax = max(abs(p) for p in ps) + 2
    d = _wrap_table(w, pmax, parity, backend)

    pairs = []
    if form == "integer":
        for p in ps:
            if parity == "even" and p % 2 != 0:
                continue
            if parity == "odd" and p % 2 == 0:
                continue
            coeff = _signed_coeff(d, p)
            if coeff is None:
                continue
            pairs.append((exponent(p), coeff))
    else:
        for p in ps:
            if p < 0:
                continue
            e = exponent(p)
            pairs.append((e, d(p)))
            pairs.append((e + p + 1, -d(p)))
    return GenSeries.from_terms(pairs, cutoff_c, backend)


def _times_euler_inverse(theta: GenSeries) -> GenSeries:
    if theta.is_zero:
        return theta
    eul = euler_inverse(theta.cutoff - theta.min_exponent, theta.backend)
    return theta * eul


def partition_direct(
    params: CGParams,
    w: Optional[WrapWeight] = None,
    cutoff=64,
    backend: Backend = Backend.EXACT,
) -> GenSeries:
    """Annulus partition function, direct channel, null states subtracted.

    The p = 0 sector is normalized to coefficient 1 (identity operator)."""
    return _times_euler_inverse(flux_sum(params, w, cutoff, None, backend))


def partition_direct_parity(
    params: CGParams,
    w: Optional[WrapWeight] = None,
    cutoff=64,
    parity: str = "even",
    backend: Backend = Backend.EXACT,
) -> GenSeries:
    """Direct-channel partition function restricted to even or odd flux p.

    In the Potts interpretation the even sector is free/free and the odd
    sector free/fixed-type boundary conditions."""
    if parity not in ("even", "odd"):
        raise DomainError("parity must be 'even' or 'odd'")
    return _times_euler_inverse(flux_sum(params, w, cutoff, parity, backend))


def partition_naive(
    params: CGParams, w: Optional[WrapWeight] = None, cutoff=64
) -> GenSeries:
    """Un-subtracted first-guess partition function (floating backend).

    Coefficients cos((p - m0) chi') in place of the Chebyshev factors; kept
    only to demonstrate its failure (a rogue p = -1 boundary exponent and the
    wrong crossed-channel structure)."""
    if w is None:
        w = default_wrap(params)
    cutoff_f = float(cutoff)
    exponent = lambda p: _float_exponent(params, p)
    if not exponent(0) < cutoff_f:
        raise DomainError("cutoff excludes the p=0 term; increase it")
    ps = _flux_range(params, cutoff_f, exponent)
    pairs = [
        (exponent(p), math.cos((p - params.m0) * w.chi_prime)) for p in ps
    ]
    theta = GenSeries.from_terms(pairs, cutoff_f, Backend.FLOAT)
    return _times_euler_inverse(theta)


# -- crossed channel ----------------------------------------------------------


def _crossed_exponent(params: CGParams, u: float) -> float:
    return -params.c / 12.0 + (u * u - params.chi**2) / (
        2.0 * math.pi**2 * params.g
    )


def partition_crossed(
    params: CGParams, w: Optional[WrapWeight] = None, cutoff=64
) -> GenSeries:
    """Crossed-channel partition function as a floating series in qtilde.

    Stored exponents include the qtilde^{-c/12} prefactor; with chi' = chi
    the exponent ladder is -c/12 + x_{2m} (even electric charges) and the
    m = 0 coefficient is the boundary-entropy factor b_0^2."""
    if w is None:
        w = default_wrap(params)
    g = params.g
    cutoff_f = float(cutoff)
    pref = math.sqrt(2.0 / g)
    s = math.sin(w.chi_prime)

    pairs: list[tuple[float, float]] = []
    if abs(s) > _SIN_ZERO_TOL:
        m = 0
        while True:
            added = False
            for mm in ((m, -m) if m else (0,)):
                u = w.chi_prime + 2.0 * math.pi * mm
                e = _crossed_exponent(params, u)
                if e < cutoff_f:
                    pairs.append((e, pref * math.sin(u / g) / s))
                    added = True
            if not added and m > 0:
                break
            m += 1
    else:
        pairs = _crossed_limit_pairs(params, w, cutoff_f, pref)
    if not pairs:
        raise DomainError("cutoff excludes the leading crossed-channel term")
    theta = GenSeries.from_terms(pairs, cutoff_f, Backend.FLOAT)
    e0 = theta.min_exponent
    eul2 = euler_inverse((cutoff_f - e0) / 2.0, Backend.FLOAT).dilate(2.0)
    return theta * eul2


def _crossed_limit_pairs(params, w, cutoff_f, pref):
    """sin(chi') = 0 (n' = +-2): paired-m limit of the crossed summand.

    Pairs (m, -m) at chi' = 0, (m, -1-m) at chi' = pi, (m, 1-m) at chi' = -pi;
    the surviving coefficient is 2 cos(u/g) / (g cos(chi')) per pair (half for
    the self-paired u = 0 term).  The accompanying ln(qtilde) coefficient
    2 u sin(u/g)/(pi^2 g cos(chi')) must vanish for a pure power series."""
    g = params.g
    s0 = math.cos(w.chi_prime)  # +1 at chi'=0, -1 at chi'=+-pi
    at_zero = abs(w.chi_prime) < 1.0
    us = []
    if at_zero:
        us.append(0.0)
    j = 0 if not at_zero else 1
    while True:
        u = (2.0 * math.pi * j) if at_zero else (math.pi * (2 * j + 1))
        if _crossed_exponent(params, u) >= cutoff_f and j > 0:
            break
        us.append(u)
        j += 1
    pairs = []
    for u in us:
        e = _crossed_exponent(params, u)
        if e >= cutoff_f:
            continue
        weight = 1.0 if u == 0.0 else 2.0
        ln_coeff = weight * u * math.sin(u / g) / (math.pi**2 * g * s0)
        if abs(ln_coeff) > 1e-9:
            raise IdentityError(
                f"crossed channel develops a ln(qtilde) term (coefficient "
                f"{ln_coeff:.3e}) at n' = {w.n_prime}; no pure power series "
                "exists -- evaluate in the direct channel"
            )
        pairs.append((e, pref * weight * math.cos(u / g) / (g * s0)))
    return pairs


def duality_check(
    params: CGParams,
    w: Optional[WrapWeight] = None,
    ratio: float = 1.0,
    cutoff=64,
    tol: float = 1e-8,
) -> ChannelEval:
    """Evaluate both channels at aspect ratio l/L and return the residual.

    Agreement validates the whole Poisson-resummation derivation; disagreement
    beyond tolerance would mean an inconsistent pair of series."""
    if w is None:
        w = default_wrap(params)
    if not (0.2 <= ratio <= 5.0):
        raise DomainError("ratio must lie in [0.2, 5] for both channels to converge")
    q = math.exp(-math.pi * ratio)
    qt = math.exp(-2.0 * math.pi / ratio)
    try:
        direct = partition_direct(params, w, cutoff, Backend.EXACT)
    except DomainError:
        direct = partition_direct(params, w, cutoff, Backend.FLOAT)
    crossed = partition_crossed(params, w, cutoff)
    dv, dt = direct.eval_at(q)
    cv, ct = crossed.eval_at(qt)
    if dt > tol or ct > tol:
        raise TailBoundError(
            f"tail bounds ({dt:.2e}, {ct:.2e}) exceed {tol:.1e} at order "
            f"{cutoff}; increase the cutoff"
        )
    return ChannelEval(
        ratio=float(ratio),
        q=q,
        q_tilde=qt,
        direct_value=dv,
        crossed_value=cv,
        residual=abs(dv - cv),
        tail_bounds=(dt, ct),
    )


# -- boundary data ------------------------------------------------------------


def boundary_g_factor(params: CGParams) -> float:
    """Identity-module boundary factor b_0^2 = -(2/g)^{1/2} sin(pi/g)/sin(pi g).

    At g = 1 the formula is 0/0; the analytic limit sqrt(2) is returned
    (series expansion of both sines about g = 1 gives ratio -1)."""
    g = params.g
    if abs(g - 1.0) < 1e-12:
        return math.sqrt(2.0)
    return -math.sqrt(2.0 / g) * math.sin(math.pi / g) / math.sin(math.pi * g)


def leading_asymptote(
    params: CGParams, w: Optional[WrapWeight] = None
) -> tuple[float, float]:
    """(prefactor, exponent) of the m = 0 crossed term relative to qtilde^{-c/12}:

        Z ~ (2/g)^{1/2} [sin(chi'/g)/sin(chi')] qtilde^{(chi'^2-chi^2)/(2 pi^2 g)}
    """
    if w is None:
        w = default_wrap(params)
    s = math.sin(w.chi_prime)
    if abs(s) < _SIN_ZERO_TOL:
        raise DomainError(
            "leading_asymptote requires sin(chi') != 0; at n' = +-2 take the "
            "paired limit via partition_crossed"
        )
    g, chi = params.g, params.chi
    pref = math.sqrt(2.0 / g) * math.sin(w.chi_prime / g) / s
    expo = (w.chi_prime**2 - chi**2) / (2.0 * math.pi**2 * g)
    return pref, expo
