"""Content-addressed on-disk cache of invariant vectors.

One JSON file per graph, stored under ``root/ab/cd/abcd....json`` where
the name is the SHA-256 of the canonical form and the version stamp.
The cache is advisory: removing it only costs recomputation.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from . import __version__

ENV_VAR = "COXRIGID_CACHE_DIR"


def default_root() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "coxrigid"


class InvariantCache:
    """Map canonical forms to serialised invariant vectors.

    Parameters
    ----------
    root : path-like, optional
        Cache directory; defaults to ``$COXRIGID_CACHE_DIR`` or
        ``~/.cache/coxrigid``.
    version : str, optional
        Stamp mixed into every key so results from other versions are
        never reused.
    """

    def __init__(self, root=None, version: str = __version__):
        self.root = Path(root) if root is not None else default_root()
        self.version = version

    def path_for(self, key: bytes) -> Path:
        h = hashlib.sha256(self.version.encode() + b"\0" + key).hexdigest()
        return self.root / h[:2] / h[2:4] / f"{h}.json"

    def get(self, key: bytes) -> dict | None:
        p = self.path_for(key)
        try:
            data = json.loads(p.read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return None
        if data.get("version") != self.version or data.get("key") != key.decode():
            return None
        return data["payload"]

    def put(self, key: bytes, payload: dict) -> None:
        p = self.path_for(key)
        p.parent.mkdir(parents=True, exist_ok=True)
        body = json.dumps({"version": self.version, "key": key.decode(), "payload": payload},
                          sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=p.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(body)
            os.replace(tmp, p)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
