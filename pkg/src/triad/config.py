"""Run-time knobs shared by the command line and the experiment scripts."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace

from .lie import DEFAULT_CAP


@dataclass(frozen=True)
class Config:
    rank: int | None = None
    window: int = 8
    cap: int = DEFAULT_CAP
    seed: int = 0
    json: bool = False

    @classmethod
    def from_file(cls, path: str) -> "Config":
        with open(path) as fh:
            data = json.load(fh)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    def override(self, **kw) -> "Config":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})
