"""Engine fingerprint: a short hash over the source of the modules that
determine computed values.  Cache records and CLI output carry it so
stale results are never mixed with current ones."""

from __future__ import annotations

import hashlib
from functools import lru_cache
from pathlib import Path

_CORE = (
    "combinatorics.py",
    "hopf.py",
    "tensorspace.py",
    "exactla.py",
    "presentations.py",
    "decompose.py",
)


@lru_cache(maxsize=1)
def engine_version() -> str:
    here = Path(__file__).parent
    digest = hashlib.sha256()
    for name in _CORE:
        digest.update(name.encode())
        digest.update((here / name).read_bytes())
    return digest.hexdigest()[:12]
