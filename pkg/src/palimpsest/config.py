"""Runtime configuration.

Settings come from a flat `palimpsest.toml`-style key/value file, overridden
by the PALIMPSEST_ROOT environment variable for the corpus root. The parser
accepts `key = value` lines with quoted strings, integers, floats and
booleans; # starts a comment.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .windows import DetectionParams

ENV_ROOT = "PALIMPSEST_ROOT"
DEFAULT_CONFIG_NAME = "palimpsest.toml"


@dataclass
class Config:
    corpus_root: Path = Path("corpora")
    language: str = "fr"
    params: DetectionParams = field(default_factory=DetectionParams)
    stoplist_path: Optional[Path] = None
    strength_overrides_path: Optional[Path] = None
    weak_df: float = 0.5
    weak_rank: int = 200
    rank_min_freq: int = 10
    overlap_theta: float = 0.1
    host: str = "127.0.0.1"
    port: int = 8343


def _parse_value(raw: str):
    raw = raw.strip()
    if raw.startswith('"') and raw.endswith('"') and len(raw) >= 2:
        return raw[1:-1]
    if raw.startswith("'") and raw.endswith("'") and len(raw) >= 2:
        return raw[1:-1]
    if raw.lower() in ("true", "false"):
        return raw.lower() == "true"
    try:
        return int(raw)
    except ValueError:
        pass
    try:
        return float(raw)
    except ValueError:
        pass
    return raw


def parse_config_file(path: Union[str, Path]) -> dict:
    values: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped or stripped.startswith("["):
                continue
            if "=" not in stripped:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, raw = stripped.split("=", 1)
            values[key.strip()] = _parse_value(raw)
    return values


def load_config(path: Optional[Union[str, Path]] = None) -> Config:
    """Build a Config from an optional file plus environment overrides."""
    cfg = Config()
    if path is None and Path(DEFAULT_CONFIG_NAME).is_file():
        path = DEFAULT_CONFIG_NAME
    if path is not None:
        values = parse_config_file(path)
        if "corpus_root" in values:
            cfg.corpus_root = Path(str(values["corpus_root"]))
        cfg.language = str(values.get("language", cfg.language))
        cfg.params = DetectionParams(
            n_w=int(values.get("nw", cfg.params.n_w)),
            n_h=int(values.get("nh", cfg.params.n_h)),
            s_min=int(values.get("smin", cfg.params.s_min)),
            splice_gap=(
                None
                if str(values.get("splice_gap", "auto")).lower() == "auto"
                else int(values["splice_gap"])
            ),
        )
        if "stoplist" in values:
            cfg.stoplist_path = Path(str(values["stoplist"]))
        if "strength_overrides" in values:
            cfg.strength_overrides_path = Path(str(values["strength_overrides"]))
        cfg.weak_df = float(values.get("weak_df", cfg.weak_df))
        cfg.weak_rank = int(values.get("weak_rank", cfg.weak_rank))
        cfg.rank_min_freq = int(values.get("rank_min_freq", cfg.rank_min_freq))
        cfg.overlap_theta = float(values.get("overlap_theta", cfg.overlap_theta))
        cfg.host = str(values.get("host", cfg.host))
        cfg.port = int(values.get("port", cfg.port))
    env_root = os.environ.get(ENV_ROOT)
    if env_root:
        cfg.corpus_root = Path(env_root)
    return cfg
