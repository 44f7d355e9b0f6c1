"""Content-addressed on-disk cache for built Coxeter complexes."""
from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

from . import __version__
from .complex import SimplicialComplex
from .coxeter import CoxeterComplex, RootSystem, build_coxeter_complex
from .errors import CacheCorrupt

log = logging.getLogger(__name__)

ENV_VAR = "TORICREP_CACHE"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "toricrep"


def cache_key(kind: str, label: str) -> str:
    return hashlib.sha256(f"{kind}:{label}:{__version__}".encode()).hexdigest()[:32]


def _digest(payload: str) -> str:
    return hashlib.sha256(payload.encode()).hexdigest()


def _encode(c: CoxeterComplex) -> dict:
    return {
        "root_system": c.root_system.label,
        "complex": c.complex.to_json(),
        "ray_coords": [list(x) for x in c.ray_coords],
        "generator_perms": [list(p) for p in c.generator_perms],
    }


def _decode(data: dict) -> CoxeterComplex:
    return CoxeterComplex(
        RootSystem.of(data["root_system"]),
        SimplicialComplex.from_json(data["complex"]),
        tuple(tuple(x) for x in data["ray_coords"]),
        tuple(tuple(p) for p in data["generator_perms"]),
    )


class ComplexCache:
    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def store(self, key: str, c: CoxeterComplex) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = json.dumps(_encode(c), separators=(",", ":"), sort_keys=True)
        record = json.dumps({"key": key, "sha256": _digest(payload), "payload": payload})
        target = self.path(key)
        tmp = target.with_suffix(".tmp")
        tmp.write_text(record)
        tmp.replace(target)
        return target

    def load(self, key: str) -> CoxeterComplex | None:
        """The cached complex, ``None`` when absent; ``CacheCorrupt`` on a bad file."""
        target = self.path(key)
        if not target.exists():
            return None
        try:
            record = json.loads(target.read_text())
            payload = record["payload"]
            ok = record.get("key") == key and record.get("sha256") == _digest(payload)
        except (ValueError, KeyError, TypeError) as exc:
            raise CacheCorrupt(f"{target}: {exc}") from exc
        if not ok:
            raise CacheCorrupt(f"{target}: checksum mismatch")
        try:
            return _decode(json.loads(payload))
        except (ValueError, KeyError, TypeError) as exc:
            raise CacheCorrupt(f"{target}: {exc}") from exc

    def coxeter_complex(self, r: RootSystem, limit: int) -> CoxeterComplex:
        key = cache_key("coxeter", r.label)
        try:
            hit = self.load(key)
        except CacheCorrupt as exc:
            log.warning("ignoring corrupt cache entry (%s); recomputing", exc)
            hit = None
        if hit is not None:
            return hit
        built = build_coxeter_complex(r, limit)
        try:
            self.store(key, built)
        except OSError as exc:
            log.warning("could not write cache entry: %s", exc)
        return built
