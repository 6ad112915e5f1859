"""JSON file formats shared by the library and the CLI.

All files carry ``"schema": "topoctl/1"``.  Instance files hold
``{"dim": d, "points": [[...], ...]}``; assignment files hold
``{"radii": [...]}`` plus optional construction metadata (``levels`` and
``rounds`` for layered builds, a ``build`` block for CLI provenance).
Writes are atomic (temp file + rename).
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .geometry import Instance

SCHEMA = "topoctl/1"


def _check_schema(doc: dict, path) -> None:
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise ValueError(f"{path}: unsupported schema {schema!r}")


def write_json(path, payload: dict) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_json(path) -> dict:
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: expected a JSON object")
    _check_schema(doc, path)
    return doc


def save_instance(path, instance: Instance) -> None:
    write_json(path, {
        "schema": SCHEMA,
        "dim": instance.dim,
        "points": [[float(x) for x in row] for row in instance.points],
    })


def load_instance(path) -> Instance:
    doc = read_json(path)
    if "dim" not in doc or "points" not in doc:
        raise ValueError(f"{path}: instance file needs 'dim' and 'points'")
    return Instance(dim=int(doc["dim"]), points=np.asarray(doc["points"], dtype=np.float64))


def save_assignment(path, radii, extra: dict | None = None) -> None:
    payload = {"schema": SCHEMA, "radii": [float(r) for r in radii]}
    if extra:
        payload.update(extra)
    write_json(path, payload)


def load_assignment(path) -> tuple[np.ndarray, dict]:
    doc = read_json(path)
    if "radii" not in doc:
        raise ValueError(f"{path}: assignment file needs 'radii'")
    radii = np.asarray(doc["radii"], dtype=np.float64)
    meta = {k: v for k, v in doc.items() if k not in ("schema", "radii")}
    return radii, meta
