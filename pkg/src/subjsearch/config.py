"""Engine configuration: a flat key = value text file over fixed defaults."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path


@dataclass(frozen=True)
class EngineConfig:
    tau: float = 0.35       # direct-match threshold for predicate interpretation
    delta: float = 2.0      # marker degree decay distance
    alpha: float = 0.5      # significance vs relevance blend for facts/tips
    theta: float = 0.5      # dedup similarity threshold
    rho: float = 3.0        # informative-token frequency ratio
    c_min: int = 3          # informative-token minimum count
    snippet_k: int = 3      # review snippets per summary
    seed: int = 13          # snippet sampling seed
    tnorm: str = "product"  # conjunction operator: product | min


def load_config(path: str | Path | None = None) -> EngineConfig:
    """Parse `key = value` lines; '#' starts a comment; unknown keys fail."""
    cfg = EngineConfig()
    if path is None:
        return cfg
    types = {f.name: f.type for f in fields(EngineConfig)}
    overrides: dict[str, object] = {}
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep or not key or not value:
                raise ValueError(f"{path}: line {lineno}: expected 'key = value'")
            if key not in types:
                raise ValueError(f"{path}: line {lineno}: unknown config key '{key}'")
            if key == "tnorm":
                if value not in ("product", "min"):
                    raise ValueError(f"{path}: line {lineno}: tnorm must be product or min")
                overrides[key] = value
            elif key in ("c_min", "snippet_k", "seed"):
                overrides[key] = int(value)
            else:
                overrides[key] = float(value)
    return replace(cfg, **overrides)
