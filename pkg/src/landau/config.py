"""Run configuration: TOML (or JSON) documents validated into a :class:`RunConfig`.

Grammar (every section optional, unknown keys rejected)::

    [physics]       q, m, B, c, hbar, k            # k pins the ladder coupling
    [field]         t_start, t_end
    [[field.components]]
                    kind = constant | sinusoid | gaussian_pulse | square_pulse
                           | white_noise | sampled
                    target = "E1" | "E2", plus the primitive's parameters
                    (sampled: path = "file.csv" relative to the config, or rows)
    [quadrature]    panels_per_period, nodes, t_initial, t_final
    [transitions]   n, alpha_re, alpha_im, x, m_max, tail_tolerance
    [oracle]        dimension, step, tolerance, levels
    [sweep]         omega_min, omega_max, points
    [figure1]       x, n_max
    [figure2]       n, x_max, points

Files ending in ``.json`` are read as JSON with the same structure.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field as dc_field, replace

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import ConfigError
from .fields import FieldSpec, WhiteNoise
from .fourier import QuadratureSettings
from .physics import PhysicalParams

__all__ = [
    "RunConfig",
    "TransitionSettings",
    "OracleSettings",
    "SweepSettings",
    "Figure1Settings",
    "Figure2Settings",
    "load_config",
    "config_from_dict",
    "FIGURE1_PRESETS",
]

# two intensities are in circulation for the n-sweep figure: x = 8 and x = 10
FIGURE1_PRESETS = {"body": 8.0, "caption": 10.0}


@dataclass(frozen=True)
class TransitionSettings:
    n: int = 0
    alpha_re: float | None = None
    alpha_im: float | None = None
    x: float | None = None
    m_max: int | None = None
    tail_tolerance: float = 1e-10


@dataclass(frozen=True)
class OracleSettings:
    dimension: int = 96
    step: float | None = None
    tolerance: float = 1e-6
    levels: tuple = (0,)


@dataclass(frozen=True)
class SweepSettings:
    omega_min: float = 0.5
    omega_max: float = 1.5
    points: int = 101


@dataclass(frozen=True)
class Figure1Settings:
    x: float | None = None
    n_max: int = 160


@dataclass(frozen=True)
class Figure2Settings:
    n: int = 100
    x_max: float = 30.0
    points: int = 600


@dataclass(frozen=True)
class RunConfig:
    physics: PhysicalParams = PhysicalParams()
    k_override: float | None = None
    field: FieldSpec | None = None
    quadrature: QuadratureSettings = QuadratureSettings()
    t_final: float | None = None
    transitions: TransitionSettings = TransitionSettings()
    oracle: OracleSettings = OracleSettings()
    sweep: SweepSettings = SweepSettings()
    figure1: Figure1Settings = Figure1Settings()
    figure2: Figure2Settings = Figure2Settings()
    source: str | None = dc_field(default=None, compare=False)

    def with_seed(self, seed: int) -> "RunConfig":
        """Re-seed every white-noise primitive: the i-th one gets ``seed + i``."""
        if self.field is None:
            return self
        comps, i = [], 0
        for c in self.field.components:
            if isinstance(c, WhiteNoise):
                c = replace(c, seed=seed + i)
                i += 1
            comps.append(c)
        return replace(self, field=FieldSpec(tuple(comps), self.field.t_start, self.field.t_end))


_SECTIONS = {"physics", "field", "quadrature", "transitions", "oracle", "sweep", "figure1", "figure2"}


def _section(data, name, allowed):
    body = data.get(name, {})
    if not isinstance(body, dict):
        raise ConfigError(f"[{name}] must be a table")
    unknown = set(body) - set(allowed)
    if unknown:
        raise ConfigError(f"unknown keys in [{name}]: {sorted(unknown)}")
    return dict(body)


def _build(cls, name, body):
    try:
        return cls(**body)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"[{name}]: {exc}") from None


def config_from_dict(data: dict, base_dir: str | None = None) -> RunConfig:
    unknown = set(data) - _SECTIONS
    if unknown:
        raise ConfigError(f"unknown sections: {sorted(unknown)}")

    physics = _section(data, "physics", {"q", "m", "B", "c", "hbar", "k"})
    k_override = physics.pop("k", None)
    params = PhysicalParams(**physics)

    field_spec = None
    if "field" in data:
        field_spec = FieldSpec.from_dict(data["field"], base_dir)

    quad = _section(data, "quadrature", {"panels_per_period", "nodes", "t_initial", "t_final"})
    t_final = quad.pop("t_final", None)
    quadrature = _build(QuadratureSettings, "quadrature", quad)

    trans = _build(
        TransitionSettings,
        "transitions",
        _section(data, "transitions", {"n", "alpha_re", "alpha_im", "x", "m_max", "tail_tolerance"}),
    )
    oracle_body = _section(data, "oracle", {"dimension", "step", "tolerance", "levels"})
    if "levels" in oracle_body:
        oracle_body["levels"] = tuple(int(v) for v in oracle_body["levels"])
    oracle = _build(OracleSettings, "oracle", oracle_body)
    sweep = _build(SweepSettings, "sweep", _section(data, "sweep", {"omega_min", "omega_max", "points"}))
    fig1 = _build(Figure1Settings, "figure1", _section(data, "figure1", {"x", "n_max"}))
    fig2 = _build(Figure2Settings, "figure2", _section(data, "figure2", {"n", "x_max", "points"}))
    return RunConfig(params, k_override, field_spec, quadrature, t_final, trans, oracle, sweep, fig1, fig2)


def load_config(path) -> RunConfig:
    """Read a TOML or JSON config file."""
    path = os.fspath(path)
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    try:
        if path.endswith(".json"):
            data = json.loads(raw.decode("utf-8"))
        else:
            data = tomllib.loads(raw.decode("utf-8"))
    except (ValueError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"{path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a table")
    cfg = config_from_dict(data, base_dir=os.path.dirname(os.path.abspath(path)))
    return replace(cfg, source=path)
