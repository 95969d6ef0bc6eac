"""Run configuration: defaults, config files and command-line overrides.

Precedence is flags > config file > defaults. Config files are YAML (which
also reads JSON) or plain ``key=value`` lines.
"""

import logging
import os
import re
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

import yaml
from dotenv import load_dotenv

from susy_crystal.export import OutputFormat
from susy_crystal.numeric import SlicingSpec
from susy_crystal.params import CrystalParams, derive_params
from susy_crystal.profile import PotentialKind
from susy_crystal.spectra import Method, MomentumGrid, resolve_threads

logger = logging.getLogger(__name__)

CONFIG_FILENAME = "susy_crystal.yaml"


class ConfigError(ValueError):
    """A configuration value is missing, malformed or out of range."""


def _expand_env_vars(obj: Any) -> Any:
    """Recursively expand ${VAR} patterns in strings using environment variables."""
    if isinstance(obj, str):
        pattern = re.compile(r"\$\{([^}]+)\}|\$([A-Za-z_][A-Za-z0-9_]*)")

        def replace_var(match: re.Match) -> str:
            var_name = match.group(1) or match.group(2)
            return os.environ.get(var_name, match.group(0))

        return pattern.sub(replace_var, obj)
    elif isinstance(obj, dict):
        return {k: _expand_env_vars(v) for k, v in obj.items()}
    elif isinstance(obj, list):
        return [_expand_env_vars(item) for item in obj]
    return obj


def _parse_key_value(text: str) -> dict[str, str]:
    data = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"line {number}: expected key=value, got {raw!r}")
        data[key.strip()] = value.strip()
    return data


def _as_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _as_int(value: Any) -> int:
    if isinstance(value, bool):
        raise ValueError(f"not an integer: {value!r}")
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"not an integer: {value!r}")
        return int(value)
    return int(str(value).strip())


def _optional(convert):
    def wrapped(value: Any):
        if value is None or (isinstance(value, str) and value.strip().lower() in ("", "none")):
            return None
        return convert(value)
    return wrapped


_CONVERTERS = {
    "epsilon": float,
    "k0": float,
    "N": _as_int,
    "profile": str,
    "method": str,
    "pmin": _optional(float),
    "pmax": _optional(float),
    "points": _as_int,
    "slices": _as_int,
    "tol": float,
    "max_doublings": _as_int,
    "extrapolate": _as_bool,
    "threads": _optional(_as_int),
    "out": _optional(str),
    "format": str,
    "samples": _as_int,
}


@dataclass
class RunConfig:
    """Everything one command needs; fully deterministic, no seeds."""

    epsilon: float = 0.01
    k0: float = 1.0
    N: int = 100
    profile: str = PotentialKind.SUSY_CRYSTAL.value
    method: str = Method.ANALYTIC.value
    pmin: float | None = None
    pmax: float | None = None
    points: int = 2001
    slices: int = 64
    tol: float = 1e-6
    max_doublings: int = 8
    extrapolate: bool = True
    threads: int | None = None
    out: str | None = None
    format: str = OutputFormat.CSV.value
    samples: int = 512
    # Keys set by a config file or flag, as opposed to left at their defaults.
    source_keys: frozenset[str] = field(default_factory=frozenset, compare=False, repr=False)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunConfig":
        """Create config from a dictionary, converting values to field types."""
        return cls().merged(data)

    @classmethod
    def from_file(cls, path: str | Path) -> "RunConfig":
        """Load config from a YAML, JSON or key=value file.

        Also loads .env file from the same directory and expands
        ${VAR} patterns in config values.
        """
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {path}")

        load_dotenv(path.parent / ".env")

        text = path.read_text()
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError:
            data = None
        if not isinstance(data, dict):
            data = _parse_key_value(text) if text.strip() else {}

        data = _expand_env_vars(data)
        logger.debug("Loaded config from %s: %s", path, sorted(data))
        return cls.from_dict(data)

    @classmethod
    def find_and_load(cls, start_dir: str | Path | None = None) -> "RunConfig | None":
        """Find and load config from standard locations.

        Searches for susy_crystal.yaml in:
        1. Current directory
        2. .susy_crystal/config.yaml in current directory
        3. ~/.config/susy_crystal/config.yaml

        Returns:
            RunConfig if found, None otherwise
        """
        if start_dir is None:
            start_dir = Path.cwd()
        start_dir = Path(start_dir)

        search_paths = [
            start_dir / CONFIG_FILENAME,
            start_dir / ".susy_crystal" / "config.yaml",
            Path.home() / ".config" / "susy_crystal" / "config.yaml",
        ]

        for path in search_paths:
            if path.exists():
                return cls.from_file(path)

        return None

    def merged(self, overrides: dict[str, Any]) -> "RunConfig":
        """A copy with every key of ``overrides`` whose value is not None applied."""
        changes: dict[str, Any] = {}
        for key, value in overrides.items():
            if key not in _CONVERTERS:
                logger.warning("Ignoring unknown config key: %s", key)
                continue
            if value is None:
                continue
            try:
                changes[key] = _CONVERTERS[key](value)
            except (TypeError, ValueError) as e:
                raise ConfigError(f"invalid value for {key}: {value!r} ({e})") from None
        return replace(self, source_keys=self.source_keys | set(changes), **changes)

    def validate(self) -> CrystalParams:
        """Check every field and derive the crystal parameters.

        Raises:
            DomainError: crystal parameters out of range.
            ConfigError: any other invalid setting.
        """
        params = derive_params(self.epsilon, self.k0, self.N)
        for name, enum in (("profile", PotentialKind), ("method", Method),
                           ("format", OutputFormat)):
            value = getattr(self, name)
            allowed = [member.value for member in enum]
            if value not in allowed:
                raise ConfigError(f"{name} must be one of {allowed}, got {value!r}")
        if self.profile == PotentialKind.CUSTOM_SAMPLED.value:
            raise ConfigError("profile 'custom' is only available through the library")
        if self.points < 2:
            raise ConfigError("points must be >= 2")
        if self.samples < 1:
            raise ConfigError("samples must be >= 1")
        try:
            self.slicing()
            self.grid()
            self.resolved_threads()
        except ValueError as e:
            raise ConfigError(str(e)) from None
        return params

    @property
    def band(self) -> tuple[float, float]:
        low = 0.6 * self.k0 if self.pmin is None else self.pmin
        high = 1.4 * self.k0 if self.pmax is None else self.pmax
        return low, high

    def grid(self, refine_centers: tuple[float, ...] = ()) -> MomentumGrid:
        low, high = self.band
        return MomentumGrid(
            p_min=low, p_max=high, points=self.points, refine_centers=refine_centers
        )

    def slicing(self) -> SlicingSpec:
        return SlicingSpec(
            slices_per_period=self.slices,
            convergence_tol=self.tol,
            max_doublings=self.max_doublings,
            extrapolate=self.extrapolate,
        )

    def resolved_threads(self) -> int:
        """--threads, then config file, then SUSY_CRYSTAL_THREADS, then CPU count."""
        return resolve_threads(self.threads)

    def output_format(self) -> OutputFormat:
        return OutputFormat(self.format)

    def configured(self, *names: str) -> dict[str, Any]:
        """Values of ``names`` that a config file or flag actually set."""
        return {
            name: getattr(self, name)
            for name in names
            if name in self.source_keys and getattr(self, name) is not None
        }
