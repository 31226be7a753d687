"""
From an electric pulse to a transition intensity
================================================

A finite-duration planar field E(t) = E1 + i E2 enters the level dynamics only
through one complex number, the drive parameter u: the field's Fourier
component at the cyclotron frequency.  Here we build a resonant cosine and a
Gaussian pulse, compute u, and compare with the closed form.
"""

import math

import numpy as np

from landau import (
    Constant,
    FieldSpec,
    GaussianPulse,
    PhysicalParams,
    Sinusoid,
    compute_u,
    derive_scales,
    drift_path,
    phases,
    u_spectrum_sweep,
)

params = PhysicalParams()  # q = m = B = c = hbar = 1, so omega = 1
scales = derive_scales(params)
print(f"cyclotron frequency {scales.omega:g}, ladder coupling k = {scales.k:.6f}")

# A cosine at resonance for four cyclotron periods.  Its u grows linearly
# with duration: u = -(c E0 / 4B) T.
T = 8 * math.pi
resonant = FieldSpec([Sinusoid(amplitude=0.11, angular_frequency=1.0)], 0.0, T)
drive = compute_u(resonant, scales, params)
print(f"resonant cosine: u = {drive.u:.12f}, closed form {-0.11 * T / 4:.12f}")
print(f"  intensity x = |u k|^2 = {drive.x:.6f}")
print(f"  error estimate {drive.resolution_report.error_estimate:.1e} over {drive.resolution_report.panels} panels")

# A DC field over exactly one period does nothing.
dc = FieldSpec([Constant(0.7)], 0.0, 2 * math.pi)
print(f"constant field over one period: |u| = {abs(compute_u(dc, scales, params).u):.1e}")

# Only the spectral weight at omega matters: sweep omega across the pulse spectrum.
pulse = FieldSpec([GaussianPulse(0.2, center=6.0, width=1.5, carrier_angular_frequency=1.0)], 0.0, 12.0)
for omega, mag in u_spectrum_sweep(pulse, scales, params, None, np.linspace(0.0, 2.0, 9)):
    print(f"  omega = {omega:4.2f}   |u| = {mag:.5f}   " + "#" * int(200 * mag))

# The drift of the guiding center and the u-plane path carry the geometric
# phases beta and gamma.  They are pure phases and do not change probabilities.
drive = compute_u(pulse, scales, params)
path_R = drift_path(pulse, params, drive.u_path.t)
geo = phases(path_R, drive.u_path, params)
print(f"pulse: x = {drive.x:.5f}, gamma = {geo.gamma:.5f}, beta = {geo.beta:.5f}")
