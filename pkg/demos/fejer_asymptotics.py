"""
How fast does the asymptotic form converge?
===========================================

For fixed x and large n, L_n(x) is approximated by a cosine with a
(n+1)^(-1/4) envelope.  The leftover error should shrink like (n+1)^(-3/4),
so the error times (n+1)^(3/4) stays bounded as n runs over four decades.
"""

import math

import numpy as np

from landau import fejer_asymptotic, laguerre, laguerre_scaled, laguerre_sequence

for x in (1.0, 4.0, 8.0):
    row = []
    for n in (100, 1000, 10_000, 100_000):
        err = abs(laguerre_scaled(n, x) - math.exp(-x / 2) * fejer_asymptotic(n, x))
        row.append(err * (n + 1) ** 0.75)
    print(f"x = {x:g}: scaled error * (n+1)^(3/4) = " + ", ".join(f"{v:.3f}" for v in row))

# The plain polynomial overflows long before the scaled form does.
try:
    laguerre(5000, 3000.0)
except OverflowError as exc:
    print(f"plain L_n: {exc}")
print(f"scaled form at the same point: {laguerre_scaled(5000, 3000.0):.6e}")

# One recurrence pass gives every degree at once.
seq = laguerre_sequence(200, 2.0)
n = np.arange(150, 201)
gap = np.abs(seq[150:] - math.exp(-1.0) * fejer_asymptotic(n, 2.0)).max()
print(f"max gap for n in [150, 200] at x = 2: {gap:.2e}")
