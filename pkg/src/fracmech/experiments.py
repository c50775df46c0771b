"""Parameter sweeps over the one-dimensional benchmark motions.

Configuration files are INI text with a single ``[experiment]`` section::

    [experiment]
    motion = exponential          ; linear | exponential | identity | translation
    beta = 0.2                    ; linear motion only
    shift = 0.1, 0, 0             ; translation only
    alpha = 0.3, 0.6, 0.9, 1.0
    ell = 0.5, 0.05, 0.005
    ratio = 1, 3, 9               ; ell_L / ell_R at fixed ell = (ell_L + ell_R) / 2
    x_min = 0.5
    x_max = 1.5
    x_count = 21
    m = 100                       ; optional, default 100
    families = classical, frac_material
    output = strains.csv          ; optional
    clamp_boundary = false
    body_lower = -inf             ; body box along X_1
    body_upper = inf

Lists are comma separated. Points are ``(X_1, 0, 0)``; only ``X_1`` is
bounded by the body box, the transverse directions are unbounded.
"""

from __future__ import annotations

import configparser
import csv
import dataclasses
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import motion as motions
from .errors import ConfigError, NumericalError
from .frac_core import DEFAULT_M, affine_scale_factor
from .kinematics import (
    BodyBox,
    BoundaryPolicy,
    GradientKind,
    NonlocalHorizon,
    OrderField,
    classical_F,
    composite_F,
)
from .strains import StrainFamily, strain_pair_from_gradient

SECTION = "experiment"
MOTIONS = ("linear", "exponential", "identity", "translation")


@dataclass(frozen=True)
class ExperimentConfig:
    motion: str = "exponential"
    alpha_values: Tuple[float, ...] = (0.3, 0.6, 0.9, 1.0)
    ell_values: Tuple[float, ...] = (0.5,)
    anisotropy_ratios: Tuple[float, ...] = (1.0,)
    x_grid: Tuple[float, float, int] = (0.5, 1.5, 21)
    m: int = DEFAULT_M
    strain_families: Tuple[StrainFamily, ...] = (StrainFamily.CLASSICAL, StrainFamily.FRAC_MATERIAL)
    output_path: Optional[str] = None
    beta: float = 0.2
    shift: Tuple[float, float, float] = (0.1, 0.0, 0.0)
    clamp_boundary: bool = False
    body_lower: float = -math.inf
    body_upper: float = math.inf

    def __post_init__(self):
        problems = validate(self)
        if problems:
            raise ConfigError(problems)

    @property
    def xs(self) -> np.ndarray:
        lo, hi, n = self.x_grid
        return np.linspace(lo, hi, int(n))

    def build_motion(self) -> motions.Motion:
        if self.motion == "linear":
            return motions.linear_stretch(self.beta)
        if self.motion == "exponential":
            return motions.exponential_stretch()
        if self.motion == "translation":
            return motions.translation(self.shift)
        return motions.identity()

    def box(self) -> BodyBox:
        policy = BoundaryPolicy.CLAMP if self.clamp_boundary else BoundaryPolicy.ERROR
        return BodyBox((self.body_lower, -math.inf, -math.inf),
                       (self.body_upper, math.inf, math.inf), policy)

    def replace(self, **changes) -> "ExperimentConfig":
        return dataclasses.replace(self, **changes)


def validate(cfg: ExperimentConfig) -> List[str]:
    """Every violation in ``cfg``; empty when the config is usable."""
    problems = []
    if cfg.motion not in MOTIONS:
        problems.append(f"motion: expected one of {', '.join(MOTIONS)}, got {cfg.motion!r}")
    if not cfg.alpha_values:
        problems.append("alpha: at least one value required")
    for a in cfg.alpha_values:
        if not (0.0 < a <= 1.0):
            problems.append(f"alpha: {a} outside (0, 1]")
    if not cfg.ell_values:
        problems.append("ell: at least one value required")
    for ell in cfg.ell_values:
        if not (ell > 0 and math.isfinite(ell)):
            problems.append(f"ell: {ell} must be positive")
    if not cfg.anisotropy_ratios:
        problems.append("ratio: at least one value required")
    for r in cfg.anisotropy_ratios:
        if not (r > 0 and math.isfinite(r)):
            problems.append(f"ratio: {r} must be positive")
    lo, hi, n = cfg.x_grid
    if int(n) != n or n < 2:
        problems.append(f"x_count: need an integer >= 2, got {n}")
    if not (math.isfinite(lo) and math.isfinite(hi) and lo <= hi):
        problems.append(f"x_min/x_max: need finite x_min <= x_max, got {lo}, {hi}")
    if isinstance(cfg.m, bool) or int(cfg.m) != cfg.m or cfg.m < 2:
        problems.append(f"m: need an integer >= 2, got {cfg.m}")
    if not cfg.strain_families:
        problems.append("families: at least one strain family required")
    if cfg.motion == "linear" and not (1.0 + cfg.beta > 0):
        problems.append(f"beta: need 1 + beta > 0, got {cfg.beta}")
    if not cfg.body_lower < cfg.body_upper:
        problems.append("body_lower/body_upper: need body_lower < body_upper")
    if not problems and not cfg.clamp_boundary:
        for ell in cfg.ell_values:
            for r in cfg.anisotropy_ratios:
                h = NonlocalHorizon.from_ratio(ell, r)
                lL, lR = float(h.ell_L[0, 0]), float(h.ell_R[0, 0])
                if lo - lL < cfg.body_lower or hi + lR > cfg.body_upper:
                    problems.append(
                        f"ell={ell}, ratio={r}: interval ({lo - lL:g}, {hi + lR:g}) leaves the "
                        f"body box [{cfg.body_lower:g}, {cfg.body_upper:g}]; enable clamp_boundary")
    return problems


def _floats(raw: str) -> Tuple[float, ...]:
    return tuple(float(v) for v in raw.replace(";", ",").split(",") if v.strip())


_PARSERS = {
    "motion": lambda raw: raw.strip().lower(),
    "beta": float,
    "shift": _floats,
    "alpha": _floats,
    "ell": _floats,
    "ratio": _floats,
    "x_min": float,
    "x_max": float,
    "x_count": int,
    "m": int,
    "families": lambda raw: tuple(StrainFamily(v.strip().lower())
                                  for v in raw.split(",") if v.strip()),
    "output": lambda raw: raw.strip() or None,
    "clamp_boundary": None,  # handled via getboolean
    "body_lower": float,
    "body_upper": float,
}


def parse_config(path, **overrides) -> ExperimentConfig:
    """Read and validate an INI experiment file.

    All problems are gathered into one :class:`ConfigError`. Keyword
    ``overrides`` (config field names) are applied before validation.
    """
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except OSError as exc:
        raise ConfigError([f"{path}: {exc.strerror or exc}"]) from exc
    except configparser.Error as exc:
        raise ConfigError([f"{path}: {exc}"]) from exc
    if not parser.has_section(SECTION):
        raise ConfigError([f"{path}: missing [{SECTION}] section"])
    sec = parser[SECTION]
    problems, values = [], {}
    for key in sec:
        if key not in _PARSERS:
            problems.append(f"{key}: unknown key")
            continue
        try:
            values[key] = sec.getboolean(key) if key == "clamp_boundary" else _PARSERS[key](sec[key])
        except ValueError as exc:
            problems.append(f"{key}: cannot parse {sec[key]!r} ({exc})")
    if problems:
        raise ConfigError([f"{path}: {p}" for p in problems])

    defaults = ExperimentConfig()
    x_grid = (values.get("x_min", defaults.x_grid[0]), values.get("x_max", defaults.x_grid[1]),
              values.get("x_count", defaults.x_grid[2]))
    kwargs = dict(
        motion=values.get("motion", defaults.motion),
        alpha_values=values.get("alpha", defaults.alpha_values),
        ell_values=values.get("ell", defaults.ell_values),
        anisotropy_ratios=values.get("ratio", defaults.anisotropy_ratios),
        x_grid=x_grid,
        m=values.get("m", DEFAULT_M),
        strain_families=values.get("families", defaults.strain_families),
        output_path=values.get("output"),
        beta=values.get("beta", defaults.beta),
        shift=values.get("shift", defaults.shift),
        clamp_boundary=values.get("clamp_boundary", False),
        body_lower=values.get("body_lower", defaults.body_lower),
        body_upper=values.get("body_upper", defaults.body_upper),
    )
    kwargs.update({k: v for k, v in overrides.items() if v is not None})
    if len(kwargs["shift"]) != 3:
        raise ConfigError([f"{path}: shift: need three components"])
    try:
        return ExperimentConfig(**kwargs)
    except ConfigError as exc:
        raise ConfigError([f"{path}: {p}" for p in exc.violations]) from None


@dataclass(frozen=True)
class ResultRow:
    X: float
    alpha: float
    ell: float
    ell_L: float
    ell_R: float
    family: str
    E11: float
    E22: float
    E33: float
    e11: float
    e22: float
    e33: float


@dataclass(frozen=True)
class Example1Row:
    X: float
    alpha: float
    ell: float
    ell_L: float
    ell_R: float
    M: float
    F11: float
    F22: float
    F33: float
    E11: float
    E22: float
    E33: float
    discrepancy: float


def _finite(values: Iterable[float], what: str):
    values = list(values)
    if not all(math.isfinite(v) for v in values):
        raise NumericalError(f"non-finite values in {what}: {values}")
    return values


class _Gradients:
    """Lazily computed gradients at one point, shared by the strain families."""

    def __init__(self, cfg: ExperimentConfig, motion, X, alpha, horizon):
        self.args = dict(t=0.0, orders=OrderField.uniform(alpha), horizon=horizon, m=cfg.m)
        self.motion, self.X, self.box = motion, np.asarray(X, dtype=float), cfg.box()
        self.cache: Dict[GradientKind, object] = {}

    def get(self, kind: GradientKind):
        if kind not in self.cache:
            if kind is GradientKind.ALPHA_COMPOSITE:
                F = self.get(GradientKind.CLASSICAL)
                self.cache[kind] = (self.get(GradientKind.FRAC_MATERIAL) @ F.inv()
                                    @ self.get(GradientKind.FRAC_SPATIAL).inv())
            elif kind is GradientKind.CLASSICAL:
                self.cache[kind] = classical_F(self.motion, self.X)
            else:
                self.cache[kind] = composite_F(kind, self.motion, self.X, box=self.box,
                                               **self.args)
        return self.cache[kind]


_FAMILY_KIND = {
    StrainFamily.CLASSICAL: GradientKind.CLASSICAL,
    StrainFamily.FRAC_MATERIAL: GradientKind.FRAC_MATERIAL,
    StrainFamily.FRAC_SPATIAL: GradientKind.FRAC_SPATIAL,
    StrainFamily.ALPHA: GradientKind.ALPHA_COMPOSITE,
}


def strain_rows(cfg: ExperimentConfig) -> List[ResultRow]:
    """One row per ``(X, alpha, ell, ratio, family)``, in that nesting order."""
    motion = cfg.build_motion()
    rows = []
    for X1 in cfg.xs:
        X = (float(X1), 0.0, 0.0)
        for alpha in cfg.alpha_values:
            for ell in cfg.ell_values:
                for ratio in cfg.anisotropy_ratios:
                    horizon = NonlocalHorizon.from_ratio(ell, ratio)
                    grads = _Gradients(cfg, motion, X, alpha, horizon)
                    for family in cfg.strain_families:
                        pair = strain_pair_from_gradient(family, grads.get(_FAMILY_KIND[family]))
                        E, e = np.diag(pair.E.array), np.diag(pair.e.array)
                        _finite(list(E) + list(e), f"strains at X={X1}, alpha={alpha}")
                        rows.append(ResultRow(
                            float(X1), float(alpha), float(ell), float(horizon.ell_L[0, 0]),
                            float(horizon.ell_R[0, 0]), family.value, *map(float, E), *map(float, e)))
    return rows


def run_example2(cfg: ExperimentConfig, path=None) -> List[ResultRow]:
    """Strain curves for ``x = exp(X_1) e_1 + X_2 e_2 + X_3 e_3``.

    Writes the CSV to ``path`` (or ``cfg.output_path``) when one is given.
    """
    if cfg.motion != "exponential":
        raise ConfigError([f"motion: example2 needs the exponential motion, got {cfg.motion!r}"])
    rows = strain_rows(cfg)
    out = path if path is not None else cfg.output_path
    if out:
        emit_csv(rows, out)
    return rows


def run_sweep(cfg: ExperimentConfig, path=None) -> List[ResultRow]:
    """Same table as :func:`run_example2` for any configured motion."""
    rows = strain_rows(cfg)
    out = path if path is not None else cfg.output_path
    if out:
        emit_csv(rows, out)
    return rows


def run_example1(cfg: ExperimentConfig, path=None) -> List[Example1Row]:
    """Numeric ``F~_X`` and ``E~_X`` of the linear motion next to the closed form.

    ``discrepancy`` is the largest entrywise gap between the numeric ``F~_X``
    and ``M diag(1 + beta, 1, 1)``.
    """
    if cfg.motion != "linear":
        raise ConfigError([f"motion: example1 needs the linear motion, got {cfg.motion!r}"])
    motion = cfg.build_motion()
    stretch = np.diag([1.0 + cfg.beta, 1.0, 1.0])
    rows = []
    for X1 in cfg.xs:
        for alpha in cfg.alpha_values:
            for ell in cfg.ell_values:
                for ratio in cfg.anisotropy_ratios:
                    horizon = NonlocalHorizon.from_ratio(ell, ratio)
                    lL, lR = float(horizon.ell_L[0, 0]), float(horizon.ell_R[0, 0])
                    grads = _Gradients(cfg, motion, (float(X1), 0.0, 0.0), alpha, horizon)
                    FX = grads.get(GradientKind.FRAC_MATERIAL)
                    E = strain_pair_from_gradient(StrainFamily.FRAC_MATERIAL, FX).E
                    M = affine_scale_factor(alpha, lL, lR, ell)
                    gap = float(np.max(np.abs(FX.array - M * stretch)))
                    vals = [M, *np.diag(FX.array), *np.diag(E.array), gap]
                    _finite(vals, f"example 1 at alpha={alpha}")
                    rows.append(Example1Row(float(X1), float(alpha), float(ell), lL, lR,
                                            *map(float, vals)))
    out = path if path is not None else cfg.output_path
    if out:
        emit_csv(rows, out, Example1Row)
    return rows


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def emit_csv(rows: Sequence, path, row_type=ResultRow) -> None:
    """Write rows as RFC 4180 CSV (CRLF line ends, 17 significant digits)."""
    fields = [f.name for f in dataclasses.fields(row_type)]
    with open(Path(path), "w", newline="", encoding="utf-8") as fh:
        write_csv(rows, fh, fields)


def write_csv(rows: Sequence, fh, fields: Sequence[str]) -> None:
    writer = csv.writer(fh, lineterminator="\r\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_fmt(getattr(row, name)) for name in fields])


def read_csv(path, row_type=ResultRow) -> List:
    """Inverse of :func:`emit_csv`."""
    types = {f.name: f.type for f in dataclasses.fields(row_type)}
    with open(Path(path), newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        return [row_type(**{k: (v if types[k] in ("str", str) else float(v))
                            for k, v in rec.items()}) for rec in reader]


EXAMPLE1_DEFAULTS = ExperimentConfig(
    motion="linear", beta=0.2, alpha_values=(0.3, 0.5, 0.7, 0.9, 1.0), ell_values=(0.5,),
    anisotropy_ratios=(1.0, 3.0, 9.0), x_grid=(0.5, 1.5, 3), m=1000,
    strain_families=(StrainFamily.FRAC_MATERIAL,))

EXAMPLE2_DEFAULTS = ExperimentConfig(
    motion="exponential", alpha_values=(0.3, 0.6, 0.9, 1.0), ell_values=(0.5, 0.05, 0.005),
    anisotropy_ratios=(1.0, 3.0, 9.0), x_grid=(0.5, 1.5, 21), m=DEFAULT_M)
