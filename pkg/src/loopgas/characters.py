r"""Minimal-model Virasoro characters and partition-function decomposition.

For the minimal model M(p, p') (coprime, p < p') with central charge
c = 1 - 6 (p'-p)^2 / (p p'), the irreducible character of the Kac field
(r, s), normalized to include q^{-c/24}, is the Rocha-Caridi alternating sum

    chi_{r,s}(q) = prod_{n>=1}(1-q^n)^{-1}
        sum_{k in Z} ( q^{(2 p p' k + p' r - p s)^2/(4 p p') - 1/24}
                     - q^{(2 p p' k + p' r + p s)^2/(4 p p') - 1/24} ),

whose leading exponent is h_{r,s} - c/24 with
h_{r,s} = ((p' r - p s)^2 - (p'-p)^2)/(4 p p').

`decompose` peels a partition function into a non-negative combination of
characters by ascending leading exponent; with exact-rational series the
peel-off is unambiguous and a nonzero remainder is a hard error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BackendMismatchError, DecompositionError, DomainError
from .qseries import Backend, GenSeries, euler_inverse


@dataclass(frozen=True)
class CharacterSpec:
    """Identifies one minimal-model character by (p_minor, p_major, r, s)."""

    p_minor: int
    p_major: int
    r: int
    s: int

    def __post_init__(self):
        if not (0 < self.p_minor < self.p_major):
            raise DomainError("need 0 < p_minor < p_major")
        if math.gcd(self.p_minor, self.p_major) != 1:
            raise DomainError("p_minor and p_major must be coprime")
        if not (1 <= self.r < self.p_minor):
            raise DomainError(f"invalid Kac label r={self.r} for p_minor={self.p_minor}")
        if not (1 <= self.s < self.p_major):
            raise DomainError(f"invalid Kac label s={self.s} for p_major={self.p_major}")

    @property
    def central_charge(self) -> Fraction:
        d = self.p_major - self.p_minor
        return 1 - Fraction(6 * d * d, self.p_minor * self.p_major)

    @property
    def h(self) -> Fraction:
        num = (self.p_major * self.r - self.p_minor * self.s) ** 2
        num -= (self.p_major - self.p_minor) ** 2
        return Fraction(num, 4 * self.p_minor * self.p_major)

    @property
    def leading_exponent(self) -> Fraction:
        return self.h - self.central_charge / 24


def rocha_caridi(
    spec: CharacterSpec, cutoff=64, backend: Backend = Backend.EXACT
) -> GenSeries:
    """Irreducible Virasoro character of `spec`, q^{-c/24} included."""
    N = spec.p_minor * spec.p_major
    a = spec.p_major * spec.r - spec.p_minor * spec.s
    b = spec.p_major * spec.r + spec.p_minor * spec.s
    cutoff_c = Fraction(cutoff) if backend is Backend.EXACT else float(cutoff)

    def family(offset: int, sign: int):
        out = []
        k = 0
        while True:
            added = False
            for kk in ((k, -k) if k else (0,)):
                num = 2 * N * kk + offset
                e = Fraction(num * num, 4 * N) - Fraction(1, 24)
                if e < cutoff_c:
                    out.append((e, sign))
                    added = True
            if not added and k > 0:
                break
            k += 1
        return out

    theta = GenSeries.from_terms(
        family(a, 1) + family(b, -1), cutoff_c, backend
    )
    if theta.is_zero:
        raise DomainError("cutoff excludes every character term; increase it")
    eul = euler_inverse(theta.cutoff - theta.min_exponent, backend)
    out = theta * eul
    assert out.min_exponent == (
        spec.leading_exponent
        if backend is Backend.EXACT
        else float(spec.leading_exponent)
    )
    return out


def decompose(
    Z: GenSeries,
    basis: Sequence[CharacterSpec],
    cutoff=None,
) -> dict[CharacterSpec, object]:
    """Express Z as a combination of basis characters by greedy peel-off.

    Returns {spec: coefficient}; raises DecompositionError (carrying the
    residual series) if a nonzero remainder survives below the cutoff."""
    if not basis:
        raise DomainError("empty character basis")
    leadings = [spec.leading_exponent for spec in basis]
    if len(set(leadings)) != len(leadings):
        raise DomainError("basis characters must have distinct leading exponents")
    order = sorted(range(len(basis)), key=lambda i: leadings[i])

    eff = Z.cutoff if cutoff is None else min(Z.cutoff, cutoff)
    chars = {}
    for i in order:
        ch = rocha_caridi(basis[i], eff, Z.backend)
        if Z.backend is not ch.backend:
            raise BackendMismatchError("Z and characters must share a backend")
        chars[i] = ch
        eff = min(eff, ch.cutoff)

    remainder = Z.truncate(eff)
    coeffs: dict[CharacterSpec, object] = {}
    for i in order:
        spec = basis[i]
        coeff = remainder.coefficient(spec.leading_exponent)
        coeffs[spec] = coeff
        if coeff != 0:
            remainder = remainder - chars[i].truncate(eff) * coeff
    if not remainder.is_zero:
        raise DecompositionError(
            f"decomposition leaves a nonzero remainder with leading term "
            f"{remainder.terms[0]}",
            residual=remainder,
        )
    return coeffs


def decomposition_to_json(coeffs: dict[CharacterSpec, object]) -> dict:
    """JSON form: {"model": {"p": ..., "q": ...}, "terms": [{"r","s","coefficient"}]}."""
    if not coeffs:
        return {"model": None, "terms": []}
    specs = sorted(coeffs, key=lambda sp: sp.leading_exponent)
    model = {"p": specs[0].p_minor, "q": specs[0].p_major}
    terms = []
    for sp in specs:
        c = coeffs[sp]
        terms.append(
            {
                "r": sp.r,
                "s": sp.s,
                "coefficient": int(c)
                if isinstance(c, Fraction) and c.denominator == 1
                else (str(c) if isinstance(c, Fraction) else float(c)),
            }
        )
    return {"model": model, "terms": terms}
