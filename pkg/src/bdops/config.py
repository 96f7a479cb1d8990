"""Run configuration shared by the CLI, the suites and the scripts."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from .series import DEFAULT_SERIES_CAP

OUTPUT_DIR_ENV = "BDOPS_OUTPUT_DIR"


@dataclass
class RunConfig:
    backend: str = "exact"  # "exact" | "float"
    digits: int = 30
    include_constants: bool = False
    k_window: tuple[int, int] = (100, 2000)
    exact_k0_window: tuple[int, int] = (0, 40)
    series_k: int = 1
    series_cap: int = DEFAULT_SERIES_CAP
    output_dir: str = ""
    seed: int = 42
    grid: tuple[float, float, int] = (-6.0, 6.0, 121)
    # criterion 5/6 sampling
    index_sets_per_case: int = 10
    max_index: int = 12
    # criterion 9 sampling
    instances_per_case: int = 3

    def __post_init__(self):
        self.k_window = tuple(self.k_window)
        self.exact_k0_window = tuple(self.exact_k0_window)
        self.grid = (float(self.grid[0]), float(self.grid[1]), int(self.grid[2]))
        if not self.output_dir:
            self.output_dir = os.environ.get(OUTPUT_DIR_ENV, ".")
        self.validate()

    def validate(self) -> None:
        if self.backend not in ("exact", "float"):
            raise ValueError(f"backend must be 'exact' or 'float', got {self.backend!r}")
        if self.backend == "float" and self.digits < 15:
            raise ValueError("float backend needs digits >= 15")
        if not 0 <= self.series_k <= self.series_cap:
            raise ValueError(f"series K={self.series_k} outside [0, {self.series_cap}]")
        lo, hi = self.k_window
        if not 0 < lo < hi:
            raise ValueError(f"bad k window {self.k_window}")

    @classmethod
    def from_file(cls, path: str | Path, **overrides) -> RunConfig:
        data = json.loads(Path(path).read_text())
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**data)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("output_dir")
        return d
