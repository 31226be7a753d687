"""
Where does the population go?
=============================

The full row P(n -> m) is the squared modulus of a displacement-operator
matrix element.  From the vacuum it is a Poisson distribution with mean x;
from an excited level the distribution spreads both up and down the ladder.
"""

import math

from landau import transition_matrix

x = 4.0
for n in (0, 10, 40):
    table = transition_matrix(n, math.sqrt(x))
    peak = int(table.probabilities.argmax())
    print(
        f"n = {n:3d}: stay {table.diagonal:.4f}, up {table.up_mass:.4f}, down {table.down_mass:.4f}, "
        f"most likely final level {peak}, truncated at m = {table.m_max} (tail {table.tail_mass:.1e})"
    )

# Print the row from level 10 as a small histogram.
table = transition_matrix(10, math.sqrt(x))
for m, p in enumerate(table.probabilities[:26]):
    print(f"  m = {m:2d}  {p:.4f}  " + "#" * int(120 * p))

# Rotating alpha in the complex plane changes amplitudes but not probabilities.
rotated = transition_matrix(10, math.sqrt(x) * complex(math.cos(1.0), math.sin(1.0)), m_max=table.m_max)
print(f"max change under rotation of alpha: {abs(rotated.probabilities - table.probabilities).max():.1e}")
