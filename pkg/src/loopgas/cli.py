"""Command-line front end: machine-readable tables for every computation.

Commands
--------
partition   direct-channel series (optionally parity-restricted or naive)
crossed     crossed-channel series in the conjugate modulus
duality     evaluate both channels at one aspect ratio, report the residual
characters  decompose a partition function into minimal-model characters
crossing    percolation crossing probability at one modulus
saw         single wrapping self-avoiding loop at one modulus
logcft      ln(q)-coefficient series of dZ/dn at n = 0
boundary    strip boundary-energy shifts and effective central charge
sweep       one output row per grid point for crossing / duality / saw

Output is JSON (default) or CSV, to stdout or --output PATH; a relative
--output is resolved against $LOOPGAS_OUTDIR when that is set.  Exit codes:
0 success, 2 usage error, 3 domain error, 4 identity/duality failure,
5 tail-bound failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import annulus, boundary, characters, observables
from .errors import DomainError, IdentityError, TailBoundError
from .params import Phase, as_phase, params_from_n, wrap_weight
from .qseries import Backend, GenSeries, format_number

OUTDIR_ENV = "LOOPGAS_OUTDIR"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IDENTITY = 4
EXIT_TAIL = 5


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by all subcommands."""

    command: str
    n: Optional[float] = None
    phase: Optional[Phase] = None
    n_prime: Optional[float] = None
    parity: Optional[str] = None
    ratio: Optional[float] = None
    q: Optional[float] = None
    order: int = 64
    backend: str = "auto"
    format: str = "json"
    output: Optional[str] = None

    def __post_init__(self):
        if self.order < 8:
            raise DomainError("truncation order must be at least 8")
        if self.command in ("crossing", "saw"):
            if (self.ratio is None) == (self.q is None):
                raise DomainError(
                    "evaluation commands need exactly one of --ratio / --q"
                )

    @property
    def modulus(self) -> float:
        if self.q is not None:
            return float(self.q)
        return math.exp(-math.pi * float(self.ratio))


def _resolve_backend(cfg: RunConfig, params) -> Backend:
    if cfg.backend == "exact":
        return Backend.EXACT
    if cfg.backend == "floating":
        return Backend.FLOAT
    return Backend.EXACT if params.g_exact is not None else Backend.FLOAT


def _series_payload(series: GenSeries, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(series.to_json_dict(), indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["exponent", "coefficient"])
    w.writerows(series.to_csv_rows())
    return buf.getvalue()


def _row_payload(row: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(row, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(row.keys())
    w.writerow(
        [format_number(v) if isinstance(v, float) else v for v in row.values()]
    )
    return buf.getvalue()


def _table_payload(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if rows:
        w.writerow(rows[0].keys())
        for row in rows:
            w.writerow(
                [format_number(v) if isinstance(v, float) else v for v in row.values()]
            )
    return buf.getvalue()


def _write(payload: str, cfg: RunConfig) -> None:
    if cfg.output is None:
        sys.stdout.write(payload)
        return
    path = cfg.output
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not os.path.isabs(path):
        path = os.path.join(outdir, path)
    with open(path, "w") as fh:
        fh.write(payload)


# -- subcommand bodies ----------------------------------------------------------


def _cmd_partition(cfg: RunConfig, naive: bool) -> str:
    params = params_from_n(cfg.n, cfg.phase)
    w = wrap_weight(cfg.phase, cfg.n_prime) if cfg.n_prime is not None else None
    if naive:
        series = annulus.partition_naive(params, w, cfg.order)
    elif cfg.parity is not None:
        series = annulus.partition_direct_parity(
            params, w, cfg.order, cfg.parity, _resolve_backend(cfg, params)
        )
    else:
        series = annulus.partition_direct(
            params, w, cfg.order, _resolve_backend(cfg, params)
        )
    return _series_payload(series, cfg.format)


def _cmd_crossed(cfg: RunConfig) -> str:
    params = params_from_n(cfg.n, cfg.phase)
    w = wrap_weight(cfg.phase, cfg.n_prime) if cfg.n_prime is not None else None
    return _series_payload(annulus.partition_crossed(params, w, cfg.order), cfg.format)


def _duality_row(cfg: RunConfig, ratio: float, tol: float) -> dict:
    params = params_from_n(cfg.n, cfg.phase)
    w = wrap_weight(cfg.phase, cfg.n_prime) if cfg.n_prime is not None else None
    ev = annulus.duality_check(params, w, ratio, cfg.order, tol)
    if ev.residual > tol:
        raise IdentityError(
            f"channel duality violated: residual {ev.residual:.3e} > {tol:.1e}"
        )
    row = ev.to_json_dict()
    dt, ct = row.pop("tail_bounds")
    row["tail_bound_direct"] = dt
    row["tail_bound_crossed"] = ct
    return row


def _minimal_model_basis(params) -> list[characters.CharacterSpec]:
    g = params.g_exact
    if g is None:
        raise DomainError(
            "character decomposition needs a rational coupling; this point "
            "is not in the exact registry"
        )
    frac = Fraction(g) if params.phase is Phase.DENSE else 1 / Fraction(g)
    p_minor, p_major = frac.numerator, frac.denominator
    if p_minor < 2:
        raise DomainError(
            f"coupling g={g} has no Kac labels (p_minor={p_minor}); "
            "no character basis exists"
        )
    return [
        characters.CharacterSpec(p_minor, p_major, 1, s)
        for s in range(1, p_major, 2)
    ]


def _cmd_characters(cfg: RunConfig) -> str:
    params = params_from_n(cfg.n, cfg.phase)
    basis = _minimal_model_basis(params)
    w = wrap_weight(cfg.phase, cfg.n_prime) if cfg.n_prime is not None else None
    if cfg.parity is not None:
        Z = annulus.partition_direct_parity(
            params, w, cfg.order, cfg.parity, Backend.EXACT
        )
    else:
        Z = annulus.partition_direct(params, w, cfg.order, Backend.EXACT)
    coeffs = characters.decompose(Z, basis)
    payload = characters.decomposition_to_json(coeffs)
    if cfg.format == "json":
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p_minor", "p_major", "r", "s", "coefficient"])
    for t in payload["terms"]:
        w.writerow(
            [payload["model"]["p"], payload["model"]["q"], t["r"], t["s"], t["coefficient"]]
        )
    return buf.getvalue()


def _crossing_row(order: int, q: float) -> dict:
    P = observables.crossing_probability(order, Backend.EXACT)
    v, tail = P.eval_at(q)
    return {"q": q, "P": v, "tail_bound": tail}


def _saw_row(phase: Phase, order: int, q: float, crossed: bool) -> dict:
    series = (
        observables.saw_loop_dilute(order)
        if phase is Phase.DILUTE
        else observables.saw_loop_dense(order)[0]
    )
    if crossed:
        qt = q
        qq = math.exp(2.0 * math.pi**2 / math.log(qt))
        v, tail = series.eval_at(qq)
        asym = abs(math.log(qt)) / (6.0 * math.pi)
        return {
            "q_tilde": qt,
            "q": qq,
            "Z1": v,
            "tail_bound": tail,
            "log_asymptote": asym,
            "ratio_to_log_asymptote": v / asym,
        }
    v, tail = series.eval_at(q)
    return {"q": q, "Z1": v, "tail_bound": tail}


def _cmd_logcft(cfg: RunConfig) -> str:
    return _series_payload(
        observables.log_partition(cfg.phase, cfg.order), cfg.format
    )


def _cmd_boundary(cfg: RunConfig, g, a1, a2, L, epsilons) -> str:
    b = boundary.BoundaryCoupling(g=g, alpha1=a1, alpha2=a2, L=L)
    finite, divergent = boundary.e1_cutoff(b, epsilons)
    row = {
        "g": g,
        "alpha1": a1,
        "alpha2": a2,
        "L": L,
        "e0_zeta": boundary.e0_zeta(L),
        "e1_zeta": boundary.e1_zeta(b),
        "e1_cutoff_finite": finite,
        "e1_cutoff_divergent": divergent,
        "c_effective": boundary.c_effective(b),
    }
    return _row_payload(row, cfg.format)


def _cmd_sweep(cfg: RunConfig, target: str, values: list[float], tol: float,
               crossed: bool) -> str:
    rows = []
    if target == "crossing":
        for q in values:
            rows.append(_crossing_row(cfg.order, q))
    elif target == "duality":
        if cfg.n is None or cfg.phase is None:
            raise DomainError("duality sweep requires --n and --phase")
        for ratio in values:
            rows.append(_duality_row(cfg, ratio, tol))
    elif target == "saw":
        if cfg.phase is None:
            raise DomainError("saw sweep requires --phase")
        for q in values:
            rows.append(_saw_row(cfg.phase, cfg.order, q, crossed))
    else:
        raise DomainError(f"unknown sweep target {target!r}")
    return _table_payload(rows, cfg.format)


# -- argument parsing -------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="loopgas",
        description="Annulus partition functions of critical loop models",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, model=True, modulus=False):
        p.add_argument("--order", type=int, default=64, help="truncation exponent")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--output", default=None, help="output path (default stdout)")
        if model:
            p.add_argument("--n", type=float, required=True, help="loop weight")
            p.add_argument("--phase", choices=["dilute", "dense"], required=True)
            p.add_argument("--n-prime", type=float, default=None,
                           help="winding-loop weight (default n)")
        if modulus:
            group = p.add_mutually_exclusive_group(required=True)
            group.add_argument("--q", type=float, default=None)
            group.add_argument("--ratio", type=float, default=None)

    p = sub.add_parser("partition", help="direct-channel series")
    common(p)
    p.add_argument("--parity", choices=["even", "odd"], default=None)
    p.add_argument("--naive", action="store_true",
                   help="un-subtracted first-guess form")
    p.add_argument("--backend", choices=["exact", "floating", "auto"], default="auto")

    p = sub.add_parser("crossed", help="crossed-channel series")
    common(p)

    p = sub.add_parser("duality", help="channel-duality residual at one ratio")
    common(p)
    p.add_argument("--ratio", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-8)

    p = sub.add_parser("characters", help="minimal-model decomposition")
    common(p)
    p.add_argument("--parity", choices=["even", "odd"], default=None)

    p = sub.add_parser("crossing", help="percolation crossing probability")
    common(p, model=False, modulus=True)

    p = sub.add_parser("saw", help="single wrapping self-avoiding loop")
    common(p, model=False, modulus=True)
    p.add_argument("--phase", choices=["dilute", "dense"], required=True)

    p = sub.add_parser("logcft", help="ln(q) coefficient of dZ/dn at n=0")
    common(p, model=False)
    p.add_argument("--phase", choices=["dilute", "dense"], required=True)

    p = sub.add_parser("boundary", help="strip boundary-energy shifts")
    common(p, model=False)
    p.add_argument("--g", type=float, required=True)
    p.add_argument("--alpha1", type=float, required=True)
    p.add_argument("--alpha2", type=float, required=True)
    p.add_argument("--L", type=float, default=1.0)
    p.add_argument("--epsilons", default="0.01,0.005,0.0025",
                   help="comma-separated regulator values")

    p = sub.add_parser("sweep", help="tabulate a target over a grid")
    common(p, model=False)
    p.add_argument("--target", choices=["crossing", "duality", "saw"], required=True)
    p.add_argument("--values", required=True,
                   help="comma-separated moduli (q, qtilde, or ratios)")
    p.add_argument("--n", type=float, default=None)
    p.add_argument("--phase", choices=["dilute", "dense"], default=None)
    p.add_argument("--n-prime", type=float, default=None)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--crossed", action="store_true",
                   help="saw target: treat values as conjugate moduli")
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            n=getattr(args, "n", None),
            phase=as_phase(args.phase) if getattr(args, "phase", None) else None,
            n_prime=getattr(args, "n_prime", None),
            parity=getattr(args, "parity", None),
            ratio=getattr(args, "ratio", None),
            q=getattr(args, "q", None),
            order=args.order,
            backend=getattr(args, "backend", "auto"),
            format=args.format,
            output=args.output,
        )
        if cfg.command == "partition":
            payload = _cmd_partition(cfg, args.naive)
        elif cfg.command == "crossed":
            payload = _cmd_crossed(cfg)
        elif cfg.command == "duality":
            payload = _row_payload(_duality_row(cfg, args.ratio, args.tol), cfg.format)
        elif cfg.command == "characters":
            payload = _cmd_characters(cfg)
        elif cfg.command == "crossing":
            payload = _row_payload(_crossing_row(cfg.order, cfg.modulus), cfg.format)
        elif cfg.command == "saw":
            payload = _row_payload(
                _saw_row(cfg.phase, cfg.order, cfg.modulus, False), cfg.format
            )
        elif cfg.command == "logcft":
            payload = _cmd_logcft(cfg)
        elif cfg.command == "boundary":
            eps = [float(x) for x in args.epsilons.split(",") if x]
            payload = _cmd_boundary(cfg, args.g, args.alpha1, args.alpha2, args.L, eps)
        elif cfg.command == "sweep":
            values = [float(x) for x in args.values.split(",") if x]
            payload = _cmd_sweep(cfg, args.target, values, args.tol, args.crossed)
        else:  # pragma: no cover - argparse enforces the choices
            print(f"unknown command {cfg.command!r}", file=sys.stderr)
            return EXIT_USAGE
        _write(payload, cfg)
        return EXIT_OK
    except TailBoundError as exc:
        print(f"tail-bound failure: {exc}", file=sys.stderr)
        return EXIT_TAIL
    except IdentityError as exc:
        print(f"identity failure: {exc}", file=sys.stderr)
        return EXIT_IDENTITY
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
