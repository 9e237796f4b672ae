"""JSON configuration: module descriptors, probe caps, grids and suite list.

Every object is parsed strictly; an unknown key is a :class:`ConfigError`.
Scalars may be JSON integers or strings ``"p"`` / ``"p/q"``; floats are
rejected.
"""
import json
from dataclasses import dataclass, field

from ..errors import ConfigError, MHVError
from ..liealg.automorphism import AutomorphismSpec
from ..liealg.scalars import as_scalar
from ..liealg.whittaker import WhittakerFunctionD, WhittakerFunctionH, WhittakerFunctionV
from ..modops.modules import (LiftModule, OmegaModule, SugawaraModule, TensorModule,
                              TwistedModule, whittaker_module)
from ..analysis.probe import ProbeCaps

SUITE_TYPES = ("axioms", "sugawara", "decomposition", "criteria-grid", "probe", "iso")

_MODULE_KEYS = {
    "omega": ({"lambda0"}, {"alpha", "beta", "virasoro_only"}),
    "whittakerD": ({"m"}, {"d", "h", "c", "l"}),
    "whittakerH": (set(), {"h", "l"}),
    "whittakerV": ({"m"}, {"d", "c"}),
    "sugawara": ({"l"}, {"h"}),
    "lift": ({"inner"}, set()),
    "twisted": ({"inner", "a"}, set()),
    "tensor": ({"left", "right"}, set()),
}

_SUITE_KEYS = {
    "axioms": {"window", "max_degree", "modules", "random_cases"},
    "sugawara": {"module", "window"},
    "decomposition": {"modules", "max_degree"},
    "criteria-grid": {"families"},
    "probe": {"module", "seed", "expect"},
    "iso": {"pairs"},
}

DEFAULT_GRID = {
    "m": [1, 2],
    "slots": ["0", "1", "2"],
    "l": ["0", "1"],
    "lambda0": ["1", "2"],
    "alpha_beta": [["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]],
}


def _check_keys(obj, required, optional, where):
    if not isinstance(obj, dict):
        raise ConfigError(f"{where}: expected an object")
    missing = required - obj.keys()
    if missing:
        raise ConfigError(f"{where}: missing key(s) {sorted(missing)}")
    extra = obj.keys() - required - optional
    if extra:
        raise ConfigError(f"{where}: unknown key(s) {sorted(extra)}")


def scalar(value, where):
    try:
        return as_scalar(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{where}: {exc}") from None


def _int(value, where, minimum=None):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ConfigError(f"{where}: expected an integer")
    if minimum is not None and value < minimum:
        raise ConfigError(f"{where}: must be >= {minimum}")
    return value


def _scalar_map(obj, where, keyfn=str):
    if obj is None:
        return {}
    if not isinstance(obj, dict):
        raise ConfigError(f"{where}: expected an object")
    return {keyfn(k): scalar(v, f"{where}[{k}]") for k, v in obj.items()}


def _int_key(k):
    try:
        return int(k)
    except ValueError:
        raise ConfigError(f"{k!r} is not an integer index") from None


def build_module(desc, named=None, where="module"):
    """Module for a descriptor; a string refers to an already-built named module."""
    named = named or {}
    if isinstance(desc, str):
        if desc not in named:
            raise ConfigError(f"{where}: unknown module name {desc!r}")
        return named[desc]
    if not isinstance(desc, dict) or desc.get("type") not in _MODULE_KEYS:
        raise ConfigError(f"{where}: expected a module descriptor with a known 'type'")
    kind = desc["type"]
    required, optional = _MODULE_KEYS[kind]
    _check_keys(desc, required | {"type"}, optional, where)
    try:
        if kind == "omega":
            vo = desc.get("virasoro_only", False)
            if not isinstance(vo, bool):
                raise ConfigError(f"{where}.virasoro_only: expected a boolean")
            return OmegaModule(scalar(desc["lambda0"], f"{where}.lambda0"),
                               scalar(desc.get("alpha", 0), f"{where}.alpha"),
                               scalar(desc.get("beta", 0), f"{where}.beta"), vo)
        if kind == "whittakerD":
            phi = WhittakerFunctionD.make(
                _int(desc["m"], f"{where}.m", 0),
                _scalar_map(desc.get("d"), f"{where}.d", _int_key),
                _scalar_map(desc.get("h"), f"{where}.h"),
                scalar(desc.get("c", 0), f"{where}.c"), scalar(desc.get("l", 0), f"{where}.l"))
            return whittaker_module(phi)
        if kind == "whittakerH":
            return whittaker_module(WhittakerFunctionH.make(
                _scalar_map(desc.get("h"), f"{where}.h"), scalar(desc.get("l", 0), f"{where}.l")))
        if kind == "whittakerV":
            return whittaker_module(WhittakerFunctionV.make(
                _int(desc["m"], f"{where}.m", 0),
                _scalar_map(desc.get("d"), f"{where}.d", _int_key),
                scalar(desc.get("c", 0), f"{where}.c")))
        if kind == "sugawara":
            return SugawaraModule(WhittakerFunctionH.make(
                _scalar_map(desc.get("h"), f"{where}.h"), scalar(desc["l"], f"{where}.l")))
        if kind == "lift":
            return LiftModule(build_module(desc["inner"], named, f"{where}.inner"))
        if kind == "twisted":
            spec = AutomorphismSpec(_scalar_map(desc["a"], f"{where}.a", _int_key))
            return TwistedModule(build_module(desc["inner"], named, f"{where}.inner"), spec)
        return TensorModule(build_module(desc["left"], named, f"{where}.left"),
                            build_module(desc["right"], named, f"{where}.right"))
    except ConfigError:
        raise
    except (MHVError, ValueError, TypeError) as exc:
        raise ConfigError(f"{where}: {exc}") from None


@dataclass
class Config:
    modules: dict = field(default_factory=dict)
    descriptors: dict = field(default_factory=dict)
    caps: ProbeCaps = field(default_factory=ProbeCaps)
    grid: dict = field(default_factory=lambda: dict(DEFAULT_GRID))
    suites: list = field(default_factory=list)
    seed: int = None
    out: str = None


def _parse_grid(obj):
    grid = dict(DEFAULT_GRID)
    if obj is None:
        return grid
    _check_keys(obj, set(), set(DEFAULT_GRID), "grid")
    for k, v in obj.items():
        if not isinstance(v, list) or not v:
            raise ConfigError(f"grid.{k}: expected a non-empty list")
        grid[k] = v
    for m in grid["m"]:
        _int(m, "grid.m", 1)
    for k in ("slots", "l", "lambda0"):
        for x in grid[k]:
            scalar(x, f"grid.{k}")
    for pair in grid["alpha_beta"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ConfigError("grid.alpha_beta: expected [alpha, beta] pairs")
        for x in pair:
            scalar(x, "grid.alpha_beta")
    return grid


def _parse_suite(obj, i, modules):
    where = f"suites[{i}]"
    if not isinstance(obj, dict) or obj.get("type") not in SUITE_TYPES:
        raise ConfigError(f"{where}: expected a suite with type in {list(SUITE_TYPES)}")
    _check_keys(obj, {"type"}, _SUITE_KEYS[obj["type"]], where)
    kind = obj["type"]
    for key in ("window", "max_degree", "random_cases"):
        if key in obj:
            _int(obj[key], f"{where}.{key}", 0)
    for key in ("module",):
        if key in obj and obj[key] not in modules:
            raise ConfigError(f"{where}.{key}: unknown module {obj[key]!r}")
    if "modules" in obj:
        if not isinstance(obj["modules"], list) or any(n not in modules for n in obj["modules"]):
            raise ConfigError(f"{where}.modules: expected a list of module names")
    if kind == "probe":
        for key in ("module", "seed"):
            if key not in obj:
                raise ConfigError(f"{where}: missing key {key!r}")
        if obj.get("expect") not in (None, "CyclicEvidence", "ProperWitness"):
            raise ConfigError(f"{where}.expect: must be CyclicEvidence or ProperWitness")
    if kind == "sugawara" and "module" not in obj:
        raise ConfigError(f"{where}: missing key 'module'")
    if kind == "criteria-grid":
        fams = obj.get("families", ["whittakerD", "omega", "tensor"])
        if not isinstance(fams, list) or any(f not in ("whittakerD", "omega", "tensor") for f in fams):
            raise ConfigError(f"{where}.families: subset of whittakerD, omega, tensor")
    if kind == "iso":
        pairs = obj.get("pairs", [])
        if not isinstance(pairs, list):
            raise ConfigError(f"{where}.pairs: expected a list")
        for p in pairs:
            if (not isinstance(p, list) or len(p) != 3 or p[0] not in modules
                    or p[1] not in modules or not isinstance(p[2], bool)):
                raise ConfigError(f"{where}.pairs: expected [name, name, expected_bool] entries")
    return dict(obj)


def parse_config(obj):
    _check_keys(obj, set(), {"modules", "caps", "grid", "suites", "seed", "out"}, "config")
    cfg = Config()
    mods = obj.get("modules", {})
    if not isinstance(mods, dict):
        raise ConfigError("modules: expected an object of named descriptors")
    for name, desc in mods.items():
        cfg.modules[name] = build_module(desc, cfg.modules, f"modules.{name}")
        cfg.descriptors[name] = desc
    if "caps" in obj:
        c = obj["caps"]
        _check_keys(c, set(), {"index_window", "max_word_length", "max_dimension"}, "caps")
        vals = {k: _int(v, f"caps.{k}", 1) for k, v in c.items()}
        cfg.caps = ProbeCaps(**vals)
    cfg.grid = _parse_grid(obj.get("grid"))
    suites = obj.get("suites", [])
    if not isinstance(suites, list):
        raise ConfigError("suites: expected a list")
    cfg.suites = [_parse_suite(s, i, cfg.modules) for i, s in enumerate(suites)]
    if "seed" in obj:
        cfg.seed = _int(obj["seed"], "seed")
    if "out" in obj:
        if not isinstance(obj["out"], str):
            raise ConfigError("out: expected a path string")
        cfg.out = obj["out"]
    return cfg


def load_config(path):
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from None
    return parse_config(obj)


def _reject_float(text):
    raise ConfigError(f"floating-point literal {text} is not allowed; use \"p/q\" strings")
