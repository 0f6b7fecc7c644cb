"""Tour of the Coulomb-gas parameter map and the exactly-solvable points.

The loop weight n = 2 cos(chi) fixes the height-model coupling g = 1 - chi/pi
(dilute branch chi < 0, dense branch chi > 0), the central charge, and the
background flux m0.  At six special couplings the annulus partition function
collapses to something recognizable, and the exact-rational backend proves
the collapse term by term rather than numerically.
"""

import math

from loopgas import (
    params_from_n,
    partition_direct,
    partition_direct_parity,
    vortex_marginality_check,
)

POINTS = [
    ("dilute polymers", 0.0, "dilute"),
    ("critical Ising", 1.0, "dilute"),
    ("XY / free boson", 2.0, "dilute"),
    ("3-state Potts", math.sqrt(3.0), "dense"),
    ("percolation hulls", 1.0, "dense"),
    ("dense polymers", 0.0, "dense"),
]

print("parameter map")
print(f"{'point':<18} {'n':>8} {'phase':<7} {'g':>10} {'c':>8} {'m0':>8} {'marginality':>12}")
for name, n, phase in POINTS:
    p = params_from_n(n, phase)
    g = str(p.g_exact) if p.g_exact is not None else f"{p.g:.4f}"
    c = str(p.c_exact) if p.c_exact is not None else f"{p.c:.4f}"
    print(
        f"{name:<18} {p.n:>8.4f} {phase:<7} {g:>10} {c:>8} "
        f"{p.m0:>8.4f} {vortex_marginality_check(p):>12.10f}"
    )

print()
print("exact series identities (order 40, every coefficient cancels):")
z = partition_direct(params_from_n(0.0, "dilute"), cutoff=40)
print(f"  dilute polymers:        Z = {z.terms}  (a single constant term)")
z = partition_direct(params_from_n(1.0, "dense"), cutoff=40)
print(f"  dense n=1 (Potts Q=1):  Z = {z.terms}")
z = partition_direct(params_from_n(0.0, "dense"), cutoff=40)
print(f"  dense polymers:         Z = {z.terms or '0 (empty series)'}")
z = partition_direct_parity(params_from_n(1.0, "dense"), cutoff=40, parity="even")
print(f"  Q=1, even flux sector:  Z = {z.terms}")

print()
print("Ising spectrum from the q-expansion (exponents relative to -c/24):")
z = partition_direct(params_from_n(1.0, "dilute"), cutoff=6)
base = z.terms[0].exponent
for e, c in z.terms:
    print(f"  q^({e})  coefficient {c}   boundary dimension {e - base}")
