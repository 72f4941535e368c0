"""
Run configuration for the CLI and the acceptance runner.

Values come from three layers: dataclass defaults, the YAML file
(`config/config.yml` by default) and the environment (GTSIJ_ELEMENT_BUDGET).
CLI flags are applied last by the caller.
"""
import logging
import os
from dataclasses import dataclass, field, fields
from typing import Optional, Tuple

import yaml

from gtsij.errors import InterfaceError

DEFAULT_CONFIG_PATH = os.path.join("config", "config.yml")
BUDGET_ENV_VAR = "GTSIJ_ELEMENT_BUDGET"
DEFAULT_ELEMENT_BUDGET = 10 ** 6


@dataclass
class RunConfig:
    """Run configuration settings"""
    element_budget: int = DEFAULT_ELEMENT_BUDGET   # Max support elements per signed set
    n_max: int = 4                                 # Largest row length in acceptance grids
    value_min: int = 0                             # Smallest entry of k in grids
    value_max: int = 4                             # Largest entry of k in grids
    x_offsets: Tuple[int, ...] = (0, 1, 3)         # Offsets past X+ / X- for stabilization checks
    output_format: str = "text"                    # text, json or dot
    parallelism: int = 1                           # Worker processes for the acceptance runner
    report_dir: Optional[str] = None               # Where acceptance reports are written
    report_format: str = "csv"                     # csv or json
    extra: dict = field(default_factory=dict)      # Unrecognised keys from the YAML file

    def __post_init__(self):
        if isinstance(self.element_budget, bool) or int(self.element_budget) < 1:
            raise InterfaceError(f"element_budget must be >= 1, got {self.element_budget}")
        self.element_budget = int(self.element_budget)
        if not 1 <= int(self.n_max) <= 5:
            raise InterfaceError(f"n_max must lie in 1..5, got {self.n_max}")
        if self.value_min > self.value_max:
            raise InterfaceError(f"value_min {self.value_min} exceeds value_max {self.value_max}")
        if self.output_format not in ("text", "json", "dot"):
            raise InterfaceError(f"Unsupported output format: {self.output_format}")
        if self.report_format not in ("csv", "json"):
            raise InterfaceError(f"Unsupported report format: {self.report_format}")
        if int(self.parallelism) < 1:
            raise InterfaceError(f"parallelism must be >= 1, got {self.parallelism}")
        self.x_offsets = tuple(int(v) for v in self.x_offsets)


def load_config(path: Optional[str] = None) -> RunConfig:
    """Load a RunConfig from YAML and the environment.

    Args:
        path (str, optional): YAML file. Defaults to config/config.yml when it exists.

    Returns:
        RunConfig: The merged configuration.
    """
    values = {}
    if path is None and os.path.exists(DEFAULT_CONFIG_PATH):
        path = DEFAULT_CONFIG_PATH
    if path is not None:
        if not os.path.exists(path):
            raise InterfaceError(f"Config file not found: {path}")
        with open(path, "r") as f:
            loaded = yaml.safe_load(f) or {}
        if not isinstance(loaded, dict):
            raise InterfaceError(f"Config file {path} must hold a mapping")
        values = dict(loaded.get("run", loaded))
        logging.debug(f"Loaded configuration from {path}")

    known = {f.name for f in fields(RunConfig)} - {"extra"}
    extra = {key: values.pop(key) for key in list(values) if key not in known}
    if extra:
        logging.warning(f"Ignoring unknown config keys: {sorted(extra)}")

    env_budget = os.environ.get(BUDGET_ENV_VAR)
    if env_budget:
        try:
            values["element_budget"] = int(env_budget)
        except ValueError:
            raise InterfaceError(f"{BUDGET_ENV_VAR} must be an integer, got {env_budget!r}")

    if "x_offsets" in values:
        values["x_offsets"] = tuple(values["x_offsets"])
    return RunConfig(extra=extra, **values)
