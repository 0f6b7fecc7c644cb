"""Percolation: the probability that a cluster joins the two annulus edges.

Setting the winding-loop weight to zero at the Q = 1 dense point kills every
non-crossing configuration's winding sectors, leaving exactly the crossing
probability.  The table below sweeps the aspect ratio across both channels
(the direct series converges for small q, the crossed one for small qtilde)
and the fits recover the 1/3 boundary power and the bulk magnetic 5/48.
"""

import math

from loopgas import (
    asymptote_fit,
    crossing_probability,
    params_from_n,
    partition_crossed,
    wrap_weight,
)

P = crossing_probability(64)
P_crossed = partition_crossed(
    params_from_n(1.0, "dense"), wrap_weight("dense", 0.0), 64
)

print("series head:", P.terms[:4])
print()
print(f"{'l/L':>6} {'q':>12} {'qtilde':>12} {'P':>16} {'channel':>8}")
for ratio in (0.1, 0.15, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0):
    q = math.exp(-math.pi * ratio)
    qt = math.exp(-2.0 * math.pi / ratio)
    if q <= 0.6:
        v, _ = P.eval_at(q)
        channel = "direct"
    else:
        v, _ = P_crossed.eval_at(qt)
        channel = "crossed"
    print(f"{ratio:>6} {q:>12.6f} {qt:>12.6f} {v:>16.12f} {channel:>8}")

print()
qt_to_q = lambda qt: math.exp(2.0 * math.pi**2 / math.log(qt))
fit = asymptote_fit(lambda qt: P.eval_at(qt_to_q(qt)), (1e-6, 1e-4))
print(
    f"crossed-channel fit over qtilde in [1e-6, 1e-4]: "
    f"P ~ {fit.prefactor_fit:.6f} * qtilde^{fit.exponent_fit:.6f}"
)
print(f"  exact magnetic exponent 5/48 = {5 / 48:.6f}, prefactor sqrt(3/2) = {math.sqrt(1.5):.6f}")

fit = asymptote_fit(lambda q: (1.0 - P.eval_at(q)[0], P.eval_at(q)[1]), (1e-6, 1e-4))
print(f"direct-channel fit: 1 - P ~ q^{fit.exponent_fit:.6f}  (exact power 1/3)")
