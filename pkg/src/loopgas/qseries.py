r"""Truncated generalized power series in q with real or exact-rational exponents.

A :class:`GenSeries` is a finite list of (exponent, coefficient) terms with
strictly increasing exponents, together with a cutoff E: every term of the
underlying infinite series with exponent < E is represented exactly, nothing
is claimed beyond E.  Exponents need not be integers (q^{1/24}, q^{5/48}, ...)
and may be negative (q^{-c/24} prefactors), which is what distinguishes these
from ordinary Taylor series.

Two coefficient backends are supported:

* exact-rational -- exponents and coefficients are `fractions.Fraction`;
  identities like Euler's pentagonal cancellation hold term by term.
* floating -- doubles; terms whose exponents differ by less than 1e-9 are
  merged (distinct flux sectors can collide on one exponent at rational
  coupling, and float rounding must not split them).

The module also provides the standard building blocks used throughout:
the Euler product \prod_{r\ge1}(1-q^r), its inverse (the integer-partition
generating function), the Dedekind eta series q^{1/24}\prod(1-q^r), and a
numerical check of the eta modular transformation between conjugate moduli.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Union

from .errors import BackendMismatchError, DomainError, TailBoundError

Number = Union[int, float, Fraction]

#: Exponents in the floating backend closer than this are considered equal.
FLOAT_EXPONENT_TOL = 1e-9


class Backend(enum.Enum):
    EXACT = "exact-rational"
    FLOAT = "floating"


class SeriesTerm(NamedTuple):
    exponent: Number
    coefficient: Number


def _as_exact(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not x.is_integer():
            raise DomainError(
                f"cannot coerce non-integral float {x!r} into the exact backend"
            )
        return Fraction(int(x))
    raise DomainError(f"unsupported coefficient type {type(x).__name__}")


def _coerce(x: Number, backend: Backend) -> Number:
    return _as_exact(x) if backend is Backend.EXACT else float(x)


@dataclass(frozen=True)
class GenSeries:
    """Immutable truncated series: sum of coeff * q^exponent below ``cutoff``."""

    terms: tuple[SeriesTerm, ...]
    cutoff: Number
    backend: Backend

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_terms(
        pairs: Iterable[tuple[Number, Number]],
        cutoff: Number,
        backend: Backend = Backend.EXACT,
    ) -> "GenSeries":
        """Normalize arbitrary (exponent, coefficient) pairs into a GenSeries.

        Duplicate exponents are summed, zero coefficients dropped, and terms
        at or above the cutoff discarded.  In the floating backend, exponents
        within FLOAT_EXPONENT_TOL of each other are merged.
        """
        cutoff = _coerce(cutoff, backend)
        acc: dict[Number, Number] = {}
        for e, c in pairs:
            e = _coerce(e, backend)
            c = _coerce(c, backend)
            acc[e] = acc.get(e, _coerce(0, backend)) + c
        items = sorted(acc.items())
        if backend is Backend.FLOAT and items:
            merged: list[list[float]] = []
            for e, c in items:
                if merged and e - merged[-1][0] < FLOAT_EXPONENT_TOL:
                    merged[-1][1] += c
                else:
                    merged.append([e, c])
            items = [(e, c) for e, c in merged]
        out = tuple(
            SeriesTerm(e, c) for e, c in items if c != 0 and e < cutoff
        )
        return GenSeries(out, cutoff, backend)

    @staticmethod
    def zero(cutoff: Number, backend: Backend = Backend.EXACT) -> "GenSeries":
        return GenSeries((), _coerce(cutoff, backend), backend)

    @staticmethod
    def constant(
        value: Number, cutoff: Number, backend: Backend = Backend.EXACT
    ) -> "GenSeries":
        return GenSeries.from_terms([(0, value)], cutoff, backend)

    @staticmethod
    def monomial(
        exponent: Number,
        coefficient: Number,
        cutoff: Number,
        backend: Backend = Backend.EXACT,
    ) -> "GenSeries":
        return GenSeries.from_terms([(exponent, coefficient)], cutoff, backend)

    # -- inspection --------------------------------------------------------

    @property
    def min_exponent(self) -> Number:
        """Exponent of the first term; for the zero series, the cutoff
        (the first exponent at which an unknown term could appear)."""
        return self.terms[0].exponent if self.terms else self.cutoff

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: Number) -> Number:
        """Coefficient at an exponent (0 if absent; tolerant lookup for floats)."""
        if self.backend is Backend.EXACT:
            e = _as_exact(exponent)
            for te, tc in self.terms:
                if te == e:
                    return tc
            return Fraction(0)
        e = float(exponent)
        for te, tc in self.terms:
            if abs(te - e) < FLOAT_EXPONENT_TOL:
                return tc
        return 0.0

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:  # compact, for interactive use
        inner = " + ".join(f"({t.coefficient})*q^({t.exponent})" for t in self.terms[:6])
        if len(self.terms) > 6:
            inner += " + ..."
        return f"<GenSeries[{self.backend.value}] {inner or '0'} ; cutoff={self.cutoff}>"

    # -- ring operations ---------------------------------------------------

    def _check_backend(self, other: "GenSeries") -> None:
        if self.backend is not other.backend:
            raise BackendMismatchError(
                f"cannot combine {self.backend.value} with {other.backend.value}"
            )

    def __add__(self, other: "GenSeries") -> "GenSeries":
        self._check_backend(other)
        cutoff = min(self.cutoff, other.cutoff)
        return GenSeries.from_terms(
            [(t.exponent, t.coefficient) for t in self.terms]
            + [(t.exponent, t.coefficient) for t in other.terms],
            cutoff,
            self.backend,
        )

    def __neg__(self) -> "GenSeries":
        return GenSeries(
            tuple(SeriesTerm(e, -c) for e, c in self.terms), self.cutoff, self.backend
        )

    def __sub__(self, other: "GenSeries") -> "GenSeries":
        return self + (-other)

    def __mul__(self, other) -> "GenSeries":
        if isinstance(other, GenSeries):
            self._check_backend(other)
            # Cauchy product: a term e_a + e_b is complete iff every
            # contribution below it is known, which holds strictly below
            # min(cutoff_a + min_b, cutoff_b + min_a).
            cutoff = min(
                self.cutoff + other.min_exponent, other.cutoff + self.min_exponent
            )
            pairs = []
            for ea, ca in self.terms:
                for eb, cb in other.terms:
                    e = ea + eb
                    if e < cutoff:
                        pairs.append((e, ca * cb))
            return GenSeries.from_terms(pairs, cutoff, self.backend)
        # scalar
        c = _coerce(other, self.backend)
        if c == 0:
            return GenSeries.zero(self.cutoff, self.backend)
        return GenSeries(
            tuple(SeriesTerm(e, co * c) for e, co in self.terms),
            self.cutoff,
            self.backend,
        )

    __rmul__ = __mul__

    def shift(self, delta: Number) -> "GenSeries":
        """Multiply by q^delta (exponent shift)."""
        d = _coerce(delta, self.backend)
        return GenSeries(
            tuple(SeriesTerm(e + d, c) for e, c in self.terms),
            self.cutoff + d,
            self.backend,
        )

    def dilate(self, factor: Number) -> "GenSeries":
        """Substitute q -> q^factor (exponent scaling), factor > 0."""
        f = _coerce(factor, self.backend)
        if f <= 0:
            raise DomainError("dilate factor must be positive")
        return GenSeries(
            tuple(SeriesTerm(e * f, c) for e, c in self.terms),
            self.cutoff * f,
            self.backend,
        )

    def truncate(self, cutoff: Number) -> "GenSeries":
        c = _coerce(cutoff, self.backend)
        if c > self.cutoff:
            raise DomainError("cannot extend a series by truncating upward")
        return GenSeries(
            tuple(t for t in self.terms if t.exponent < c), c, self.backend
        )

    def to_float(self) -> "GenSeries":
        if self.backend is Backend.FLOAT:
            return self
        return GenSeries.from_terms(
            [(float(e), float(c)) for e, c in self.terms],
            float(self.cutoff),
            Backend.FLOAT,
        )

    # -- evaluation ----------------------------------------------------------

    def eval_at(self, q: float) -> tuple[float, float]:
        """Evaluate at 0 < q < 1; returns (value, tail_bound).

        The tail bound 4 |last coefficient| q^cutoff / (1-q) is a crude
        geometric heuristic; the factor 4 absorbs the sub-exponential growth
        of partition-type coefficients, which the bare geometric estimate
        undercounts.  The value is only meaningful when the bound is small.
        """
        q = float(q)
        if not (0.0 < q < 1.0):
            raise DomainError(
                f"eval_at requires 0 < q < 1, got {q!r}; near q=1 the series "
                "diverges -- evaluate in the crossed channel instead"
            )
        lnq = math.log(q)
        value = 0.0
        for e, c in self.terms:
            value += float(c) * math.exp(float(e) * lnq)
        last = abs(float(self.terms[-1].coefficient)) if self.terms else 1.0
        tail = 4.0 * last * math.exp(float(self.cutoff) * lnq) / (1.0 - q)
        return value, tail

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        enc = _encode_number
        return {
            "backend": self.backend.value,
            "cutoff": enc(self.cutoff),
            "terms": [
                {"exponent": enc(e), "coefficient": enc(c)} for e, c in self.terms
            ],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "GenSeries":
        backend = Backend(d["backend"])
        dec = _decode_number
        return GenSeries.from_terms(
            [(dec(t["exponent"]), dec(t["coefficient"])) for t in d["terms"]],
            dec(d["cutoff"]),
            backend,
        )

    def to_csv_rows(self) -> list[tuple[str, str]]:
        """Two-column (exponent, coefficient) rows, header excluded."""
        return [(format_number(e), format_number(c)) for e, c in self.terms]


def _encode_number(x: Number):
    if isinstance(x, Fraction):
        return str(x)
    return float(x)


def _decode_number(x) -> Number:
    if isinstance(x, str):
        return Fraction(x)
    return float(x)


def format_number(x: Number) -> str:
    """Round-trippable text: fractions as 'p/q', floats with 17 significant digits."""
    if isinstance(x, Fraction):
        return str(x)
    return format(float(x), ".17g")


# -- named series -------------------------------------------------------------


def euler_inverse(cutoff: Number, backend: Backend = Backend.EXACT) -> GenSeries:
    r"""\prod_{r\ge1}(1-q^r)^{-1} = \sum_k p(k) q^k with p(k) the partition numbers."""
    if cutoff <= 0:
        raise DomainError("euler_inverse requires cutoff > 0")
    kmax = max(math.ceil(float(cutoff)) - 1, 0)
    p = _partition_numbers(kmax)
    return GenSeries.from_terms(
        [(k, p[k]) for k in range(kmax + 1)], cutoff, backend
    )


def _partition_numbers(kmax: int) -> list[int]:
    """p(0..kmax) via the pentagonal-number recurrence."""
    p = [0] * (kmax + 1)
    p[0] = 1
    for k in range(1, kmax + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            g2 = j * (3 * j + 1) // 2
            if g1 > k:
                break
            sign = 1 if j % 2 == 1 else -1
            total += sign * p[k - g1]
            if g2 <= k:
                total += sign * p[k - g2]
            j += 1
        p[k] = total
    return p


def pentagonal_series(cutoff: Number, backend: Backend = Backend.EXACT) -> GenSeries:
    r"""\prod_{r\ge1}(1-q^r) = \sum_{k\in\mathbb Z}(-1)^k q^{k(3k-1)/2} (Euler)."""
    if cutoff <= 0:
        raise DomainError("pentagonal_series requires cutoff > 0")
    pairs = []
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = kk * (3 * kk - 1) // 2
            if e < cutoff:
                pairs.append((e, (-1) ** (kk % 2)))
                hit = True
        if not hit and k > 0:
            break
        k += 1
    return GenSeries.from_terms(pairs, cutoff, backend)


def euler_product(cutoff: Number, backend: Backend = Backend.EXACT) -> GenSeries:
    r"""\prod_{r\ge1}(1-q^r) by direct product expansion (independent of the
    pentagonal closed form; the two must agree exactly)."""
    if cutoff <= 0:
        raise DomainError("euler_product requires cutoff > 0")
    out = GenSeries.constant(1, cutoff, backend)
    r = 1
    while r < cutoff:
        out = out * GenSeries.from_terms([(0, 1), (r, -1)], cutoff, backend)
        r += 1
    return out


def dedekind_eta_series(cutoff: Number, backend: Backend = Backend.EXACT) -> GenSeries:
    r"""q^{1/24}\prod_{r\ge1}(1-q^r); leading term q^{1/24}."""
    shift = Fraction(1, 24) if backend is Backend.EXACT else 1.0 / 24.0
    if cutoff <= shift:
        raise DomainError("dedekind_eta_series requires cutoff > 1/24")
    return pentagonal_series(
        _coerce(cutoff, backend) - shift, backend
    ).shift(shift)


def eval_at(series: GenSeries, q: float) -> tuple[float, float]:
    """Module-level alias of :meth:`GenSeries.eval_at`."""
    return series.eval_at(q)


def eta_modular_check(
    tau_imag: float, order: int = 64, tol: float = 1e-10
) -> float:
    r"""Relative residual of the free-boson modular identity between channels.

    With delta = pi * tau_imag (tau_imag = l/L), q = e^{-delta} and
    qtilde = e^{-2 pi^2 / delta} the conjugate modulus, checks

        Z0(q) = q^{-1/24} prod (1-q^r)^{-1}
              = (delta/2 pi)^{1/2} qtilde^{-1/12} prod (1-qtilde^{2r})^{-1}.
    """
    if tau_imag <= 0:
        raise DomainError("tau_imag must be positive")
    delta = math.pi * float(tau_imag)
    q = math.exp(-delta)
    qt = math.exp(-2.0 * math.pi**2 / delta)

    z0_series = euler_inverse(order, Backend.FLOAT).shift(-1.0 / 24.0)
    lhs, tail_l = z0_series.eval_at(q)
    rhs_series = euler_inverse(order, Backend.FLOAT).dilate(2.0).shift(-1.0 / 12.0)
    rhs_val, tail_r = rhs_series.eval_at(qt)
    rhs = math.sqrt(delta / (2.0 * math.pi)) * rhs_val

    scale = max(abs(lhs), abs(rhs))
    if tail_l > tol * scale or tail_r > tol * scale:
        raise TailBoundError(
            f"truncation tails ({tail_l:.2e}, {tail_r:.2e}) exceed tolerance "
            f"{tol:.1e} at order {order}; increase the order"
        )
    return abs(lhs - rhs) / scale


def max_abs_coeff_diff(a: GenSeries, b: GenSeries) -> float:
    """Largest absolute coefficient difference between two series (common cutoff)."""
    cutoff = min(float(a.cutoff), float(b.cutoff))
    seen: dict[float, float] = {}
    for e, c in a.terms:
        if float(e) < cutoff:
            seen[float(e)] = seen.get(float(e), 0.0) + float(c)
    for e, c in b.terms:
        if float(e) < cutoff:
            seen[float(e)] = seen.get(float(e), 0.0) - float(c)
    return max((abs(v) for v in seen.values()), default=0.0)
