"""
Checking the closed form by brute force
=======================================

The analytic route (Fourier integral, then Laguerre matrix elements) is
checked against a direct RK4 integration of the driven oscillator in a
truncated number basis.  The two share no code beyond the field itself.
"""

import math
from pathlib import Path

from landau import FieldSpec, GaussianPulse, PhysicalParams, WhiteNoise, derive_scales
from landau.config import load_config
from landau.oracle import compare_with_analytic, displacement_matrix
from landau.transitions import displacement_row

params = PhysicalParams()
scales = derive_scales(params)

# First the algebra alone: exponentiate the truncated generator with scipy
# and compare a column with the Laguerre formula.
alpha = 1.5 * complex(math.cos(0.4), math.sin(0.4))
D = displacement_matrix(alpha, 128)
print(f"column n=5, expm vs Laguerre: max diff {abs(D[:40, 5] - displacement_row(5, alpha, 39)).max():.1e}")

# Then the whole pipeline for a Gaussian pulse and a noisy field.
fields = {
    "gaussian pulse": FieldSpec([GaussianPulse(0.15, 6.0, 1.5, 1.0)], 0.0, 12.0),
    "white noise": FieldSpec([WhiteNoise(0.2, 0.5, seed=3), WhiteNoise(0.2, 0.5, seed=4, target="E2")], 0.0, 12.0),
}
for name, spec in fields.items():
    for n in (0, 3):
        report, numeric, analytic = compare_with_analytic(spec, params, scales, n, dimension=64, step=2e-3)
        print(
            f"{name:15s} n={n}: x = {report.x:.4f}, max |P_rk4 - P_exact| = {report.max_abs_prob_error:.1e}, "
            f"norm drift {report.norm_drift:.1e}"
        )

# The shipped sample configs run the same comparison through the CLI:
#     landau verify --config configs/gaussian_pulse.toml
cfg = load_config(Path(__file__).resolve().parents[1] / "configs" / "resonant_cosine.toml")
report, _, _ = compare_with_analytic(cfg.field, cfg.physics, scales, 3, cfg.oracle.dimension, cfg.oracle.step)
print(f"resonant cosine config, n=3: max error {report.max_abs_prob_error:.1e}")
