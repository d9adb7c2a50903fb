"""
YAML problem description for the command-line driver.

Example (the first published benchmark)::

    components: 2
    vapor:
      a: [200, 300]
      d: [0, 0]            # optional, defaults to zeros
    liquid:
      a: [500, 400]
      d: [-1.495e8, -6.35e7]
    w0: 0                  # optional, default 0
    left:  {chi: -0.95, rho: [2.5, 7.5], v: 0}
    right: {chi: 0.5, rho: [600, 800], v: 0}
    solver:                # optional block
      mode: paper-literal  # or rh-consistent (default)
      tol_rel: 1.0e-12
      max_iter: 200
    sample:                # optional; enables the CSV profile
      xi_min: -500
      xi_max: 600
      count: 101

Validation reports every violation at once, each naming its key.
"""
import math
from dataclasses import dataclass

import yaml

from .eos import EosParameters
from .errors import ConfigError
from .state import RiemannState
from .wave_curves import ShockMode

TOP_KEYS = {"components", "vapor", "liquid", "w0", "left", "right", "solver", "sample"}
PHASE_KEYS = {"a", "d"}
STATE_KEYS = {"chi", "rho", "v"}
SOLVER_KEYS = {"mode", "tol_rel", "max_iter"}
SAMPLE_KEYS = {"xi_min", "xi_max", "count"}


class ConfigParseError(ConfigError):
    def __init__(self, message, line=None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__([f"{where}{message}"])


@dataclass(frozen=True)
class SampleSpec:
    xi_min: float
    xi_max: float
    count: int


@dataclass(frozen=True)
class SolveConfig:
    params: EosParameters
    left: RiemannState
    right: RiemannState
    mode: ShockMode = ShockMode.RH_CONSISTENT
    tol_rel: float = 1e-12
    max_iter: int = 200
    sample: SampleSpec = None

    @property
    def components(self):
        return self.params.n


class _Validator:
    def __init__(self):
        self.errors = []

    def fail(self, key, msg):
        self.errors.append(f"{key}: {msg}")

    def number(self, value, key):
        if isinstance(value, bool):
            self.fail(key, "expected a number, got a boolean")
            return None
        if isinstance(value, str):
            # YAML 1.1 reads "1e-12" as a string
            try:
                value = float(value)
            except ValueError:
                self.fail(key, f"expected a number, got {value!r}")
                return None
        if not isinstance(value, (int, float)):
            self.fail(key, f"expected a number, got {type(value).__name__}")
            return None
        value = float(value)
        if not math.isfinite(value):
            self.fail(key, "must be finite")
            return None
        return value

    def integer(self, value, key):
        x = self.number(value, key)
        if x is None:
            return None
        if x != int(x):
            self.fail(key, f"expected an integer, got {value!r}")
            return None
        return int(x)

    def array(self, value, key, n, positive=False):
        if not isinstance(value, list):
            self.fail(key, "expected a list of numbers")
            return None
        out = [self.number(v, f"{key}[{i}]") for i, v in enumerate(value)]
        if any(x is None for x in out):
            return None
        if n is not None and len(out) != n:
            self.fail(key, f"has {len(out)} entries, expected {n} (components)")
            return None
        if positive and any(x <= 0.0 for x in out):
            self.fail(key, "all entries must be > 0")
            return None
        return out

    def mapping(self, value, key, allowed):
        if not isinstance(value, dict):
            self.fail(key, "expected a mapping")
            return None
        for k in value:
            if k not in allowed:
                self.fail(f"{key}.{k}" if key else str(k), "unknown key")
        return value

    def require(self, block, key, prefix):
        full = f"{prefix}.{key}" if prefix else key
        if block is None or key not in block:
            self.fail(full, "missing required key")
            return None, full
        return block[key], full


def _parse_state(v, raw, name, n):
    block = v.mapping(raw, name, STATE_KEYS)
    if block is None:
        return None
    chi, key = v.require(block, "chi", name)
    chi = v.number(chi, key) if chi is not None else None
    rho, key = v.require(block, "rho", name)
    rho = v.array(rho, key, n, positive=True) if rho is not None else None
    vel, key = v.require(block, "v", name)
    vel = v.number(vel, key) if vel is not None else None
    if None in (chi, rho, vel):
        return None
    return RiemannState(chi, tuple(rho), vel)


def validate(data):
    """Turn a parsed YAML document into a :class:`SolveConfig`."""
    v = _Validator()
    top = v.mapping(data, "", TOP_KEYS)
    if top is None:
        raise ConfigError(v.errors or ["document must be a mapping"])

    n = None
    raw, key = v.require(top, "components", "")
    if raw is not None:
        n = v.integer(raw, key)
        if n is not None and n < 1:
            v.fail(key, "must be >= 1")
            n = None

    arrays = {}
    for phase in ("vapor", "liquid"):
        block = v.mapping(top.get(phase), phase, PHASE_KEYS) if phase in top else None
        if phase not in top:
            v.fail(phase, "missing required key")
        raw, key = v.require(block, "a", phase)
        arrays[f"{phase}.a"] = v.array(raw, key, n, positive=True) if raw is not None else None
        if phase == "vapor" and (block is None or "d" not in block):
            arrays["vapor.d"] = [0.0] * n if n is not None else None
        else:
            raw, key = v.require(block, "d", phase)
            arrays[f"{phase}.d"] = v.array(raw, key, n) if raw is not None else None

    w0 = 0.0
    if "w0" in top:
        w0 = v.number(top["w0"], "w0")
        if w0 is not None and w0 < 0.0:
            v.fail("w0", "must be >= 0")
            w0 = None

    states = {}
    for name in ("left", "right"):
        if name not in top:
            v.fail(name, "missing required key")
            states[name] = None
        else:
            states[name] = _parse_state(v, top[name], name, n)

    mode, tol_rel, max_iter = ShockMode.RH_CONSISTENT, 1e-12, 200
    if "solver" in top:
        block = v.mapping(top["solver"], "solver", SOLVER_KEYS)
        if block is not None:
            if "mode" in block:
                try:
                    mode = ShockMode(block["mode"])
                except ValueError:
                    v.fail("solver.mode", f"must be one of "
                           f"{', '.join(m.value for m in ShockMode)}, got {block['mode']!r}")
            if "tol_rel" in block:
                tol_rel = v.number(block["tol_rel"], "solver.tol_rel")
                if tol_rel is not None and not 0.0 < tol_rel < 1.0:
                    v.fail("solver.tol_rel", "must lie in (0, 1)")
            if "max_iter" in block:
                max_iter = v.integer(block["max_iter"], "solver.max_iter")
                if max_iter is not None and max_iter < 1:
                    v.fail("solver.max_iter", "must be >= 1")

    sample = None
    if "sample" in top:
        block = v.mapping(top["sample"], "sample", SAMPLE_KEYS)
        if block is not None:
            vals = {}
            for k in ("xi_min", "xi_max", "count"):
                raw, key = v.require(block, k, "sample")
                if raw is not None:
                    vals[k] = v.integer(raw, key) if k == "count" else v.number(raw, key)
            if len(vals) == 3 and None not in vals.values():
                if vals["xi_min"] >= vals["xi_max"]:
                    v.fail("sample.xi_max", "must exceed sample.xi_min")
                elif vals["count"] < 2:
                    v.fail("sample.count", "must be >= 2")
                else:
                    sample = SampleSpec(**vals)

    if v.errors:
        raise ConfigError(v.errors)
    params = EosParameters(a_v=arrays["vapor.a"], a_l=arrays["liquid.a"],
                           d_l=arrays["liquid.d"], d_v=arrays["vapor.d"], w0=w0)
    return SolveConfig(params=params, left=states["left"], right=states["right"],
                       mode=mode, tol_rel=tol_rel, max_iter=max_iter, sample=sample)


def parse_config(text):
    """Parse and validate YAML text; raises :class:`ConfigError`."""
    try:
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        line = mark.line + 1 if mark is not None else None
        raise ConfigParseError(exc.problem or str(exc), line) from exc
    except yaml.YAMLError as exc:
        raise ConfigParseError(str(exc)) from exc
    return validate(data)


def load_config(path):
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
