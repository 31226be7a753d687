"""
Transition probability against level and intensity
==================================================

The probability of staying in level n is exp(-x) L_n(x)^2.  At fixed x it
decays like 1/sqrt(n) with a cosine modulation, so the transition probability
climbs toward 1 as n grows; at fixed n it oscillates in x and also tends to 1.
"""

import math

import numpy as np

from landau import survival_fejer, sweep_over_intensity, sweep_over_levels

# Transition probability versus n at x = 8, with the large-n asymptotic form
# alongside.  The gap closes as n grows.
x = 8.0
print(f"x = {x:g}")
print("    n   transition   asymptotic   envelope bound")
for n, p in sweep_over_levels(x, [0, 1, 2, 5, 10, 20, 50, 100, 130, 160]):
    bound = 1 - 1 / (math.pi * math.sqrt(x * (n + 1)))
    print(f"{n:5d}   {p:.6f}     {1 - survival_fejer(n, x):.6f}     {bound:.6f}")

# Transition probability versus x at n = 100.  The oscillation is visible in
# the survival column; beyond x = 10 the transition never drops below 0.98.
n = 100
xs = np.linspace(0.5, 30.0, 60)
probs = np.array([p for _, p in sweep_over_intensity(n, xs)])
print(f"\nn = {n}")
for xi, p in zip(xs[::4], probs[::4]):
    bar = "#" * int(60 * (1 - p) / 0.02) if p > 0.98 else "(below 0.98)"
    print(f"  x = {xi:5.2f}   transition {p:.5f}   survival {bar}")
print(f"min transition for x > 10: {probs[xs > 10].min():.5f}")
