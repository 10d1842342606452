"""Certificates distributed with the package."""
from __future__ import annotations

from importlib import resources
from pathlib import Path

from .certificate import WitnessCertificate, load_certificate

SHIPPED = {
    "sl2": "sl2.cert.json",
    "a1_z2": "a1_z2.cert.json",
    "toy_poly1": "toy_poly1.cert.json",
}


def shipped_path(key: str) -> Path:
    if key not in SHIPPED:
        raise KeyError(f"no shipped certificate {key!r}; choose from {sorted(SHIPPED)}")
    return Path(str(resources.files("ncbirat") / "data" / SHIPPED[key]))


def shipped_certificate(key: str) -> WitnessCertificate:
    return load_certificate(shipped_path(key))
