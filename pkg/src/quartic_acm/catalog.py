"""Lattice interchange format and the shipped catalog.

A lattice file is a single JSON document with integer-only content:

    {"name": "line", "gram": [[4, 1], [1, -2]], "polarization": [1, 0],
     "search_bound_degree": 32}

``search_bound_degree`` is optional (default 32).  Loading validates
admissibility and refuses inadmissible lattices with the validator's report;
use ``read_lattice_file`` + ``validate_admissible`` to inspect a bad one.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .lattice import AdmissibilityReport, DivisorClass, PolarizedK3Lattice, validate_admissible

CATALOG_NAMES = ("rank1", "line", "conic", "cubic", "gen6", "quartel")


class LatticeLoadError(ValueError):
    """Malformed lattice file or inadmissible lattice."""

    def __init__(self, message: str, report: AdmissibilityReport | None = None):
        super().__init__(message)
        self.report = report


def lattice_from_dict(data: dict) -> PolarizedK3Lattice:
    try:
        gram = tuple(tuple(int(v) for v in row) for row in data["gram"])
        polarization = DivisorClass(tuple(int(v) for v in data["polarization"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise LatticeLoadError(f"malformed lattice document: {exc}") from exc
    name = str(data.get("name", ""))
    bound = int(data.get("search_bound_degree", 32))
    try:
        return PolarizedK3Lattice(
            gram=gram, polarization=polarization, search_bound_degree=bound, name=name
        )
    except ValueError as exc:
        raise LatticeLoadError(f"malformed lattice document: {exc}") from exc


def read_lattice_file(path: str | Path) -> PolarizedK3Lattice:
    """Parse a lattice file without checking admissibility."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise LatticeLoadError(f"cannot read lattice file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise LatticeLoadError(f"lattice file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise LatticeLoadError(f"lattice file {path} must contain a JSON object")
    return lattice_from_dict(data)


def load_lattice(path: str | Path) -> PolarizedK3Lattice:
    """Parse and validate; inadmissible lattices are refused with the report."""
    lat = read_lattice_file(path)
    report = validate_admissible(lat)
    if not report.ok:
        raise LatticeLoadError(
            f"lattice {lat.name or path} is not admissible: " + "; ".join(report.violations),
            report=report,
        )
    return lat


def builtin(name: str) -> PolarizedK3Lattice:
    """One of the shipped catalog lattices, by name."""
    if name not in CATALOG_NAMES:
        raise LatticeLoadError(f"unknown catalog lattice {name!r}; catalog: {CATALOG_NAMES}")
    ref = resources.files(__package__).joinpath(f"data/{name}.json")
    return lattice_from_dict(json.loads(ref.read_text()))


def resolve(spec: str | Path) -> PolarizedK3Lattice:
    """CLI-facing lookup: an existing file path, or a catalog name."""
    p = Path(spec)
    if p.exists():
        return load_lattice(p)
    if str(spec) in CATALOG_NAMES:
        return builtin(str(spec))
    raise LatticeLoadError(f"no such lattice file or catalog name: {spec}")


def resolve_unvalidated(spec: str | Path) -> PolarizedK3Lattice:
    """Like resolve, but skips the admissibility gate (for the validator)."""
    p = Path(spec)
    if p.exists():
        return read_lattice_file(p)
    if str(spec) in CATALOG_NAMES:
        return builtin(str(spec))
    raise LatticeLoadError(f"no such lattice file or catalog name: {spec}")
