"""Dataset readers: manifest validation first, then plain CSV loading."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

SUPPORTED_SCHEMA_VERSION = 1


class FigureInputError(RuntimeError):
    """The input directory does not hold a usable, intact dataset."""


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def load_manifest(input_dir, figure: str) -> dict:
    """Load <figure>_manifest.json after checking schema and file digests.

    Every data file the manifest lists must exist and hash to the recorded
    sha256; any mismatch fails here, before a single plot element is drawn.
    """
    input_dir = Path(input_dir)
    path = input_dir / f"{figure}_manifest.json"
    if not path.exists():
        raise FigureInputError(
            f"no manifest for {figure} in {input_dir} "
            f"(expected {path.name}; run the matching cca-decay figure pipeline first)"
        )
    try:
        manifest = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise FigureInputError(f"{path} is not valid JSON: {exc}") from exc
    version = manifest.get("schema_version")
    if version != SUPPORTED_SCHEMA_VERSION:
        raise FigureInputError(
            f"{path} carries schema_version {version!r}; this reader understands "
            f"{SUPPORTED_SCHEMA_VERSION}"
        )
    if manifest.get("figure") != figure:
        raise FigureInputError(
            f"{path} describes {manifest.get('figure')!r}, not {figure!r}"
        )
    files = manifest.get("files") or {}
    if not files:
        raise FigureInputError(f"{path} lists no data files")
    for name, digest in files.items():
        fpath = input_dir / name
        if not fpath.exists():
            raise FigureInputError(f"{fpath} is listed in the manifest but missing")
        if _sha256(fpath) != digest:
            raise FigureInputError(
                f"{fpath} does not match its manifest digest (dataset edited or truncated?)"
            )
    return manifest


def read_table(path):
    """One-header-row CSV to (column names, 2-D float array)."""
    path = Path(path)
    with open(path) as fh:
        header = fh.readline().strip().split(",")
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    if data.shape[1] != len(header):
        raise FigureInputError(
            f"{path}: header names {len(header)} columns but rows have {data.shape[1]}"
        )
    return header, data
