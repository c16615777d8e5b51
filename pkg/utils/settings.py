# utils/settings.py
from __future__ import annotations
from typing import Any, Dict
import copy, logging, os

import yaml

log = logging.getLogger(__name__)

DEFAULT_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "config", "settings.yaml")

DEFAULTS: Dict[str, Any] = {
    "app": {"name": "equidist"},
    "engine": {"bound": 500, "heronian_only": False},
    "witness": {"precision": 50},
    "numtheory": {"seed": 20240601, "trial_limit": 1_000_000, "max_bits": 128},
    "logging": {"level": "INFO", "file": "/tmp/equidist.log"},
}

# env var -> (section, key, type)
ENV_OVERRIDES = {
    "EQUIDIST_BOUND": ("engine", "bound", int),
    "EQUIDIST_PRECISION": ("witness", "precision", int),
    "EQUIDIST_SEED": ("numtheory", "seed", int),
    "EQUIDIST_LOG_LEVEL": ("logging", "level", str),
}

def _merge(base: Dict[str, Any], extra: Dict[str, Any]) -> Dict[str, Any]:
    out = copy.deepcopy(base)
    for k, v in (extra or {}).items():
        if isinstance(v, dict) and isinstance(out.get(k), dict):
            out[k] = _merge(out[k], v)
        else:
            out[k] = v
    return out

def load_settings(path: str | None = None, env: Dict[str, str] | None = None) -> Dict[str, Any]:
    """settings.yaml over built-in defaults, then EQUIDIST_* environment overrides."""
    env = os.environ if env is None else env
    path = path or env.get("EQUIDIST_SETTINGS") or DEFAULT_PATH
    try:
        with open(path, "r", encoding="utf-8") as f:
            cfg = _merge(DEFAULTS, yaml.safe_load(f) or {})
    except (OSError, yaml.YAMLError) as e:
        log.warning("settings: %s unreadable (%s); using defaults", path, e)
        cfg = copy.deepcopy(DEFAULTS)
    for var, (section, key, typ) in ENV_OVERRIDES.items():
        raw = env.get(var)
        if raw is None or str(raw).strip() == "":
            continue
        try:
            cfg[section][key] = typ(raw)
        except ValueError:
            log.warning("settings: ignoring %s=%r (not %s)", var, raw, typ.__name__)
    return cfg

def apply_settings(cfg: Dict[str, Any]) -> None:
    """Push loaded settings into the module-level config dicts."""
    from engine.config import ENGINE
    from numtheory.config import NT
    ENGINE["bound"] = int(cfg["engine"]["bound"])
    ENGINE["heronian_only"] = bool(cfg["engine"].get("heronian_only", False))
    ENGINE["precision"] = int(cfg["witness"]["precision"])
    NT["seed"] = int(cfg["numtheory"]["seed"])
    NT["trial_limit"] = int(cfg["numtheory"]["trial_limit"])
    NT["max_bits"] = int(cfg["numtheory"]["max_bits"])
