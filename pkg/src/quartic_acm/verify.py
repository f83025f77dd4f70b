"""Bounded enumeration of effective classes and the equivalence scan.

For every non-zero effective class up to a degree bound, the scan compares
the numeric classification against the independent twist-vanishing oracle
combined with initializedness.  The report is fully deterministic: classes
are sorted by (degree, coordinates), serialization has no timestamps, and
fanning the per-class work out to worker processes cannot change a byte.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .acm import classify_numeric, is_acm_oracle, is_initialized
from .cone import candidate_classes, is_effective
from .lattice import DivisorClass, PolarizedK3Lattice

TSV_COLUMNS = ("coords", "sq", "deg", "eff", "init", "case", "acm", "agree")
CASE_KEYS = ("A", "B", "C", "D", "none")


@dataclass(frozen=True)
class ClassRecord:
    """Per-class facts gathered by the equivalence scan."""

    coords: tuple[int, ...]
    square: int
    degree: int
    effective: bool
    initialized: bool
    case: str  # "A".."D" or "none"
    acm: bool
    agree: bool


@dataclass(frozen=True)
class VerificationReport:
    lattice: str
    max_degree: int
    records: tuple[ClassRecord, ...]
    case_counts: tuple[tuple[str, int], ...]
    disagreements: tuple[tuple[int, ...], ...]

    @property
    def all_agree(self) -> bool:
        return not self.disagreements

    @property
    def verdict(self) -> str:
        return "all-agree" if self.all_agree else "disagree"

    def to_json(self) -> str:
        payload = {
            "lattice": self.lattice,
            "max_degree": self.max_degree,
            "verdict": self.verdict,
            "case_counts": dict(self.case_counts),
            "disagreements": [list(c) for c in self.disagreements],
            "classes": [
                {
                    "coords": list(r.coords),
                    "sq": r.square,
                    "deg": r.degree,
                    "eff": r.effective,
                    "init": r.initialized,
                    "case": r.case,
                    "acm": r.acm,
                    "agree": r.agree,
                }
                for r in self.records
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def to_tsv(self) -> str:
        lines = ["\t".join(TSV_COLUMNS)]
        for r in self.records:
            lines.append(
                "\t".join(
                    (
                        ",".join(str(c) for c in r.coords),
                        str(r.square),
                        str(r.degree),
                        str(int(r.effective)),
                        str(int(r.initialized)),
                        r.case,
                        str(int(r.acm)),
                        str(int(r.agree)),
                    )
                )
            )
        return "\n".join(lines) + "\n"


def enumerate_effective(lattice: PolarizedK3Lattice, max_degree: int) -> list[DivisorClass]:
    """All non-zero effective classes with 1 <= D.H <= max_degree.

    Complete within the certified candidate boxes; sorted by
    (degree, lexicographic coordinates).
    """
    if max_degree < 1:
        raise ValueError("max_degree must be positive")
    out = []
    for e in range(1, max_degree + 1):
        for d in candidate_classes(lattice, e):
            if is_effective(lattice, d):
                out.append(d)
    return out


def class_record(lattice: PolarizedK3Lattice, d: DivisorClass) -> ClassRecord:
    classification = classify_numeric(lattice, d)
    case = classification.case.value if classification.case else "none"
    acm = is_acm_oracle(lattice, d)
    initialized = is_initialized(lattice, d)
    agree = (acm and initialized) == classification.matched
    return ClassRecord(
        coords=d.coords,
        square=lattice.square(d),
        degree=lattice.degree(d),
        effective=is_effective(lattice, d),
        initialized=initialized,
        case=case,
        acm=acm,
        agree=agree,
    )


def _record_task(args: tuple[PolarizedK3Lattice, DivisorClass]) -> ClassRecord:
    return class_record(*args)


def verify_theorem(
    lattice: PolarizedK3Lattice, max_degree: int, jobs: int = 1
) -> VerificationReport:
    """Run the classification-vs-oracle equivalence over all effective classes.

    Disagreements are report content, not errors.  ``jobs`` > 1 fans the
    per-class work out to processes; aggregation is order-preserving, so the
    report is identical for any worker count.
    """
    classes = enumerate_effective(lattice, max_degree)
    if jobs > 1 and len(classes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = tuple(
                pool.map(
                    _record_task,
                    [(lattice, d) for d in classes],
                    chunksize=max(1, len(classes) // (4 * jobs)),
                )
            )
    else:
        records = tuple(class_record(lattice, d) for d in classes)
    counts = {key: 0 for key in CASE_KEYS}
    for r in records:
        counts[r.case] += 1
    disagreements = tuple(r.coords for r in records if not r.agree)
    return VerificationReport(
        lattice=lattice.name,
        max_degree=max_degree,
        records=records,
        case_counts=tuple((k, counts[k]) for k in CASE_KEYS),
        disagreements=disagreements,
    )
