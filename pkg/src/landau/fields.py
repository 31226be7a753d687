"""Time-dependent planar electric fields with finite support.

A :class:`FieldSpec` is a window ``[t_start, t_end]`` plus a list of primitive
signals, each driving ``E1`` or ``E2``.  The field is the sum of the
primitives inside the window and exactly zero outside it.  Discontinuous
signals (square pulses, white noise, window edges) are allowed; every
primitive reports its jump points through ``breakpoints`` so that quadrature
and time stepping can split there.

White noise uses xorshift64* seeded through splitmix64, written out below so
sample paths are reproducible independently of numpy's generators:

    splitmix64:  s += 0x9E3779B97F4A7C15
                 z = s; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
                 z = (z ^ (z >> 27)) * 0x94D049BB133111EB
                 z = z ^ (z >> 31)
    xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27
                 out = x * 0x2545F4914F6CDD1D
    uniform:     (out >> 11) * 2**-53  in [0, 1)

(all arithmetic modulo 2**64).  Sample ``i`` of the noise is
``amplitude * (2 * uniform_i - 1)``, held constant on
``[t_start + i h, t_start + (i + 1) h)``.
"""

from __future__ import annotations

import csv
import hashlib
import json
import math
import os
from dataclasses import dataclass, field, fields as dc_fields
from functools import lru_cache
from typing import ClassVar

import numpy as np

from .errors import FieldParseError, FieldValidationError

__all__ = [
    "Constant",
    "Sinusoid",
    "GaussianPulse",
    "SquarePulse",
    "WhiteNoise",
    "Sampled",
    "SampledField",
    "FieldSpec",
    "eval_field",
    "complex_field",
    "load_sampled_field",
    "xorshift_uniform",
    "primitive_from_dict",
]

_MASK = (1 << 64) - 1


def _splitmix64(state):
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


@lru_cache(maxsize=64)
def _uniform_block(seed, count):
    _, x = _splitmix64(seed & _MASK)
    if x == 0:
        x = 0x9E3779B97F4A7C15
    out = np.empty(count)
    for i in range(count):
        x ^= x >> 12
        x ^= (x << 25) & _MASK
        x ^= x >> 27
        out[i] = (((x * 0x2545F4914F6CDD1D) & _MASK) >> 11) * 2.0**-53
    out.flags.writeable = False
    return out


def xorshift_uniform(seed: int, count: int) -> np.ndarray:
    """First ``count`` uniforms in [0, 1) of the seeded xorshift64* stream."""
    return _uniform_block(int(seed), int(count)).copy()


def _check_target(target):
    if target not in ("E1", "E2"):
        raise FieldValidationError(f"target must be 'E1' or 'E2', got {target!r}")


def _check_finite(obj, *names):
    for name in names:
        value = getattr(obj, name)
        if value is None:
            continue
        if not math.isfinite(value):
            raise FieldValidationError(f"{type(obj).__name__}.{name} must be finite, got {value}")


class _Primitive:
    """Shared behaviour: placement on E1/E2 and default (smooth) metadata."""

    kind: ClassVar[str] = ""

    def _real_values(self, t, t_start, t_end):
        raise NotImplementedError

    def complex_values(self, t, t_start, t_end):
        """Contribution to ``E1 + i E2`` at times ``t`` (array)."""
        values = self._real_values(t, t_start, t_end)
        return values + 0j if self.target == "E1" else 1j * values

    def breakpoints(self, t_start, t_end):
        return []

    @property
    def timescale(self):
        """Shortest time scale the integrand must resolve (inf if none)."""
        return math.inf

    def scaled(self, factor):
        return type(self)(**{**self._as_kwargs(), "amplitude": self.amplitude * factor})

    def _as_kwargs(self):
        return {f.name: getattr(self, f.name) for f in dc_fields(self)}

    def to_dict(self):
        return {"kind": self.kind, **self._as_kwargs()}


@dataclass(frozen=True)
class Constant(_Primitive):
    kind: ClassVar[str] = "constant"
    amplitude: float
    target: str = "E1"

    def __post_init__(self):
        _check_target(self.target)
        _check_finite(self, "amplitude")

    def _real_values(self, t, t_start, t_end):
        return np.full(np.shape(t), float(self.amplitude))


@dataclass(frozen=True)
class Sinusoid(_Primitive):
    """``amplitude * cos(angular_frequency * t + phase)`` on ``[start, stop)``."""

    kind: ClassVar[str] = "sinusoid"
    amplitude: float
    angular_frequency: float
    phase: float = 0.0
    start: float | None = None
    stop: float | None = None
    target: str = "E1"

    def __post_init__(self):
        _check_target(self.target)
        _check_finite(self, "amplitude", "angular_frequency", "phase", "start", "stop")

    def _real_values(self, t, t_start, t_end):
        values = self.amplitude * np.cos(self.angular_frequency * t + self.phase)
        if self.start is not None:
            values = np.where(t >= self.start, values, 0.0)
        if self.stop is not None:
            values = np.where(t < self.stop, values, 0.0)
        return values

    def breakpoints(self, t_start, t_end):
        return [b for b in (self.start, self.stop) if b is not None]

    @property
    def timescale(self):
        w = abs(self.angular_frequency)
        return 2 * math.pi / w if w > 0 else math.inf


@dataclass(frozen=True)
class GaussianPulse(_Primitive):
    """``A exp(-(t - center)**2 / (2 width**2)) cos(carrier (t - center) + carrier_phase)``."""

    kind: ClassVar[str] = "gaussian_pulse"
    amplitude: float
    center: float
    width: float
    carrier_angular_frequency: float = 0.0
    carrier_phase: float = 0.0
    target: str = "E1"

    def __post_init__(self):
        _check_target(self.target)
        _check_finite(self, "amplitude", "center", "width", "carrier_angular_frequency", "carrier_phase")
        if self.width <= 0:
            raise FieldValidationError(f"gaussian width must be positive, got {self.width}")

    def _real_values(self, t, t_start, t_end):
        s = t - self.center
        envelope = np.exp(-0.5 * (s / self.width) ** 2)
        return self.amplitude * envelope * np.cos(self.carrier_angular_frequency * s + self.carrier_phase)

    @property
    def timescale(self):
        w = abs(self.carrier_angular_frequency)
        return min(self.width, 2 * math.pi / w if w > 0 else math.inf)


@dataclass(frozen=True)
class SquarePulse(_Primitive):
    kind: ClassVar[str] = "square_pulse"
    amplitude: float
    start: float
    stop: float
    target: str = "E1"

    def __post_init__(self):
        _check_target(self.target)
        _check_finite(self, "amplitude", "start", "stop")
        if not self.start < self.stop:
            raise FieldValidationError("square pulse needs start < stop")

    def _real_values(self, t, t_start, t_end):
        return np.where((t >= self.start) & (t < self.stop), float(self.amplitude), 0.0)

    def breakpoints(self, t_start, t_end):
        return [self.start, self.stop]


@dataclass(frozen=True)
class WhiteNoise(_Primitive):
    """Piecewise-constant uniform noise in ``[-amplitude, amplitude]``, step ``sample_step``."""

    kind: ClassVar[str] = "white_noise"
    amplitude: float
    sample_step: float
    seed: int = 0
    target: str = "E1"

    def __post_init__(self):
        _check_target(self.target)
        _check_finite(self, "amplitude", "sample_step")
        if self.sample_step <= 0:
            raise FieldValidationError("white noise sample_step must be positive")
        if int(self.seed) != self.seed or self.seed < 0:
            raise FieldValidationError(f"seed must be a non-negative integer, got {self.seed!r}")

    def _count(self, t_start, t_end):
        return max(1, math.ceil((t_end - t_start) / self.sample_step - 1e-12))

    def samples(self, t_start, t_end):
        u = _uniform_block(int(self.seed), self._count(t_start, t_end))
        return self.amplitude * (2.0 * u - 1.0)

    def _real_values(self, t, t_start, t_end):
        values = self.samples(t_start, t_end)
        idx = np.floor((np.asarray(t, dtype=float) - t_start) / self.sample_step).astype(np.int64)
        idx = np.clip(idx, 0, len(values) - 1)
        return values[idx]

    def breakpoints(self, t_start, t_end):
        n = self._count(t_start, t_end)
        return list(t_start + self.sample_step * np.arange(1, n))


@dataclass(frozen=True)
class SampledField:
    """Tabulated ``(t, E1, E2)`` rows, linearly interpolated, zero outside the table."""

    t: np.ndarray
    e1: np.ndarray
    e2: np.ndarray
    source: str | None = field(default=None, compare=False)

    def __post_init__(self):
        arrays = [np.array(a, dtype=float) for a in (self.t, self.e1, self.e2)]
        if not (arrays[0].ndim == 1 and arrays[0].shape == arrays[1].shape == arrays[2].shape):
            raise FieldValidationError("sampled field columns must be 1-d and of equal length")
        if arrays[0].size < 2:
            raise FieldValidationError("sampled field needs at least two rows")
        if not all(np.all(np.isfinite(a)) for a in arrays):
            raise FieldValidationError("sampled field contains non-finite values")
        if np.any(np.diff(arrays[0]) <= 0):
            bad = int(np.argmax(np.diff(arrays[0]) <= 0)) + 1
            raise FieldValidationError(f"sample times must be strictly increasing (row {bad + 1})")
        for name, a in zip(("t", "e1", "e2"), arrays):
            a.flags.writeable = False
            object.__setattr__(self, name, a)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        inside = (t >= self.t[0]) & (t <= self.t[-1])
        e1 = np.where(inside, np.interp(t, self.t, self.e1), 0.0)
        e2 = np.where(inside, np.interp(t, self.t, self.e2), 0.0)
        return e1, e2

    def __hash__(self):
        return hash((self.t.tobytes(), self.e1.tobytes(), self.e2.tobytes()))

    def __eq__(self, other):
        if not isinstance(other, SampledField):
            return NotImplemented
        return all(np.array_equal(getattr(self, a), getattr(other, a)) for a in ("t", "e1", "e2"))


@dataclass(frozen=True)
class Sampled(_Primitive):
    """A tabulated field driving both components."""

    kind: ClassVar[str] = "sampled"
    table: SampledField
    scale: float = 1.0

    def complex_values(self, t, t_start, t_end):
        e1, e2 = self.table(t)
        return self.scale * (e1 + 1j * e2)

    def breakpoints(self, t_start, t_end):
        return list(self.table.t)

    def scaled(self, factor):
        return Sampled(self.table, self.scale * factor)

    def to_dict(self):
        return {
            "kind": self.kind,
            "rows": [[float(a), float(b), float(c)] for a, b, c in zip(self.table.t, self.table.e1, self.table.e2)],
            "scale": self.scale,
        }


_PRIMITIVES = {cls.kind: cls for cls in (Constant, Sinusoid, GaussianPulse, SquarePulse, WhiteNoise)}


def primitive_from_dict(data: dict, base_dir: str | os.PathLike | None = None):
    """Build a primitive from a config mapping with a ``kind`` key.

    Unknown keys are rejected.  ``sampled`` entries take ``path`` (relative to
    ``base_dir``) or inline ``rows``.
    """
    data = dict(data)
    kind = data.pop("kind", None)
    if kind == "sampled":
        scale = float(data.pop("scale", 1.0))
        path = data.pop("path", None)
        rows = data.pop("rows", None)
        if data.pop("interpolation", "linear") != "linear":
            raise FieldValidationError("only linear interpolation is supported")
        if data:
            raise FieldValidationError(f"unknown keys for sampled field: {sorted(data)}")
        if (path is None) == (rows is None):
            raise FieldValidationError("sampled field needs exactly one of 'path' or 'rows'")
        if path is not None:
            if base_dir is not None and not os.path.isabs(path):
                path = os.path.join(base_dir, path)
            table = load_sampled_field(path)
        else:
            arr = np.asarray(rows, dtype=float)
            if arr.ndim != 2 or arr.shape[1] != 3:
                raise FieldValidationError("inline rows must be (t, E1, E2) triples")
            table = SampledField(arr[:, 0], arr[:, 1], arr[:, 2])
        return Sampled(table, scale)
    if kind not in _PRIMITIVES:
        raise FieldValidationError(f"unknown field primitive kind {kind!r}; expected one of {sorted(_PRIMITIVES) + ['sampled']}")
    cls = _PRIMITIVES[kind]
    allowed = {f.name for f in dc_fields(cls)}
    unknown = set(data) - allowed
    if unknown:
        raise FieldValidationError(f"unknown keys for {kind}: {sorted(unknown)}")
    try:
        return cls(**data)
    except TypeError as exc:
        raise FieldValidationError(f"{kind}: {exc}") from None


@dataclass(frozen=True)
class FieldSpec:
    """Electric field ``(E1(t), E2(t))`` supported on ``[t_start, t_end]``."""

    components: tuple
    t_start: float
    t_end: float

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        for name in ("t_start", "t_end"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise FieldValidationError(f"{name} must be finite")
            object.__setattr__(self, name, value)
        if not self.t_start < self.t_end:
            raise FieldValidationError(f"window needs t_start < t_end, got [{self.t_start}, {self.t_end}]")
        for c in self.components:
            if not isinstance(c, _Primitive):
                raise FieldValidationError(f"not a field primitive: {c!r}")

    @classmethod
    def zero(cls, t_start=0.0, t_end=1.0):
        return cls((), t_start, t_end)

    def complex_values(self, t):
        t = np.asarray(t, dtype=float)
        total = np.zeros(t.shape, dtype=complex)
        inside = (t >= self.t_start) & (t <= self.t_end)
        if not np.any(inside):
            return total
        ti = t[inside]
        acc = np.zeros(ti.shape, dtype=complex)
        for c in self.components:
            acc += c.complex_values(ti, self.t_start, self.t_end)
        total[inside] = acc
        return total

    def breakpoints(self):
        """Sorted jump points inside the window, window edges included."""
        pts = {self.t_start, self.t_end}
        for c in self.components:
            for b in c.breakpoints(self.t_start, self.t_end):
                if self.t_start < b < self.t_end:
                    pts.add(float(b))
        return np.array(sorted(pts))

    @property
    def timescale(self):
        return min((c.timescale for c in self.components), default=math.inf)

    def scaled(self, factor):
        return FieldSpec(tuple(c.scaled(factor) for c in self.components), self.t_start, self.t_end)

    def __add__(self, other):
        if (self.t_start, self.t_end) != (other.t_start, other.t_end):
            raise FieldValidationError("can only add fields sharing a window")
        return FieldSpec(self.components + other.components, self.t_start, self.t_end)

    def to_dict(self):
        return {
            "t_start": self.t_start,
            "t_end": self.t_end,
            "components": [c.to_dict() for c in self.components],
        }

    @classmethod
    def from_dict(cls, data, base_dir=None):
        data = dict(data)
        unknown = set(data) - {"t_start", "t_end", "components"}
        if unknown:
            raise FieldValidationError(f"unknown keys in field section: {sorted(unknown)}")
        try:
            t_start, t_end = data["t_start"], data["t_end"]
        except KeyError as exc:
            raise FieldValidationError(f"field section missing {exc.args[0]!r}") from None
        comps = tuple(primitive_from_dict(c, base_dir) for c in data.get("components", []))
        return cls(comps, t_start, t_end)

    def digest(self) -> str:
        """Stable SHA-256 of the canonical JSON form."""
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def eval_field(spec: FieldSpec, t):
    """``(E1, E2)`` at time(s) ``t``; exactly zero outside the window."""
    values = spec.complex_values(t)
    if np.ndim(t) == 0:
        values = values[()]
        return float(values.real), float(values.imag)
    return values.real, values.imag


def complex_field(spec: FieldSpec, t):
    """``E1(t) + i E2(t)``."""
    values = spec.complex_values(t)
    return complex(values[()]) if np.ndim(t) == 0 else values


def load_sampled_field(path) -> SampledField:
    """Read a ``t,E1,E2`` CSV file (UTF-8, header line, ascending t)."""
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise FieldValidationError(f"{path}: empty file")
        if [h.strip() for h in header] != ["t", "E1", "E2"]:
            raise FieldParseError(f"expected header 't,E1,E2', got {','.join(header)!r}", line=1)
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 3:
                raise FieldParseError(f"expected 3 columns, got {len(row)}", line=lineno)
            try:
                rows.append(tuple(float(cell) for cell in row))
            except ValueError:
                raise FieldParseError(f"non-numeric value in {row!r}", line=lineno) from None
    if not rows:
        raise FieldValidationError(f"{path}: no data rows")
    arr = np.array(rows)
    return SampledField(arr[:, 0], arr[:, 1], arr[:, 2], source=os.fspath(path))
