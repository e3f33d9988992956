"""Compare winding histograms with Ehrhart h*-vectors over parameter sweeps."""

from __future__ import annotations

import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import ehrhart
from .partitions import (
    FamilySpec,
    InvalidFamily,
    Kind,
    enumerate_partitions,
    modular_section,
    trim,
    unwind,
    validate,
    winding_vector,
)

DIAGNOSTIC_LIMIT = 20


class InvalidRange(ValueError):
    pass


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    family: FamilySpec
    histogram: tuple[int, ...]
    hstar: tuple[int, ...]
    match: bool
    total_count: int
    expected_count: Optional[int]
    checks: list[Check]
    elapsed: float = 0.0
    diagnostics: dict[int, list[str]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.match and all(c.passed for c in self.checks)

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "family": {"kind": self.family.kind.value, **self.family.params},
            "histogram": list(self.histogram),
            "hstar": list(self.hstar),
            "match": self.match,
            "total_count": self.total_count,
            "expected_count": self.expected_count,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
            "passed": self.passed,
        }
        if self.diagnostics:
            d["diagnostics"] = {str(k): v for k, v in sorted(self.diagnostics.items())}
        if timing:
            d["elapsed"] = self.elapsed
        return d


def expected_count(family: FamilySpec) -> Optional[int]:
    if family.kind is Kind.HYPERSIMPLEX:
        return ehrhart.eulerian(family.n - 1, family.total - 1)
    if family.kind is Kind.SIMPLEX:
        return family.r ** (family.n - 1)
    return None


def ehrhart_side(family: FamilySpec) -> tuple[int, ...]:
    r, s, n = family.slice_params
    return ehrhart.hstar_slice(r, s, n)


@dataclass
class BijectionOutcome:
    passed: bool
    image_size: int
    section_size: int
    missing: Optional[tuple[int, ...]] = None
    extra: Optional[tuple[int, ...]] = None


def check_bijection_simplex(r: int, n: int) -> BijectionOutcome:
    """Compare winding vectors of simplicial partitions with the modular section.

    ``missing`` is a section point with no partition, ``extra`` a winding
    vector outside the section.
    """
    family = FamilySpec.simplex(r, n)
    image = [winding_vector(p, family).winding_vector for p in enumerate_partitions(family)]
    image_set = set(image)
    section = modular_section(r, n)
    missing = min(section - image_set, default=None)
    extra = min(image_set - section, default=None)
    passed = missing is None and extra is None and len(image) == len(image_set)
    return BijectionOutcome(passed, len(image_set), len(section), missing, extra)


def verify_instance(family: FamilySpec) -> VerificationReport:
    start = time.perf_counter()
    a = family.winding_modulus
    hist = [0] * family.n
    by_class: dict[int, list[str]] = defaultdict(list)
    seen = set()
    divisible = injective = round_trip = valid = bounded = True
    total = 0
    for p in enumerate_partitions(family):
        total += 1
        try:
            validate(p)
        except ValueError:
            valid = False
        wd = winding_vector(p, family)
        if wd.level % a:
            divisible = False
        if not 0 <= wd.winding_number <= family.n - 1:
            bounded = False
            continue
        if wd.winding_vector in seen:
            injective = False
        seen.add(wd.winding_vector)
        if unwind(wd.winding_vector, a) != p:
            round_trip = False
        hist[wd.winding_number] += 1
        if len(by_class[wd.winding_number]) < DIAGNOSTIC_LIMIT:
            by_class[wd.winding_number].append(p.to_text())

    histogram = trim(hist)
    hstar = trim(ehrhart_side(family))
    expected = expected_count(family)
    checks = [
        Check("partition-validity", valid),
        Check("level-divisibility", divisible),
        Check("winding-bound", bounded),
        Check("injectivity", injective),
        Check("round-trip", round_trip),
        Check("histogram-total", sum(hist) == total),
    ]
    if expected is not None:
        checks.append(Check("count-identity", total == expected, f"{total} vs {expected}"))
    if family.kind is Kind.SIMPLEX:
        bij = check_bijection_simplex(family.r, family.n)
        detail = "" if bij.passed else f"missing={bij.missing} extra={bij.extra}"
        checks.append(Check("modular-section-bijection", bij.passed, detail))
    match = histogram == hstar
    report = VerificationReport(
        family, histogram, hstar, match, total, expected, checks,
        elapsed=time.perf_counter() - start,
    )
    if not report.passed:
        report.diagnostics = dict(by_class)
    return report


@dataclass(frozen=True)
class SweepRange:
    """Parameter box for one family; ``None`` pins nothing.

    Hypersimplices take every ``a`` in ``1..n-1`` unless ``a`` is given,
    slices every ``s`` in ``1..rn-1`` unless ``s`` is given.
    """

    kind: Kind
    n_min: int = 2
    n_max: int = 2
    r_min: int = 1
    r_max: int = 1
    a: Optional[int] = None
    s: Optional[int] = None

    def instances(self) -> list[FamilySpec]:
        kind = Kind(self.kind)
        if self.n_min < 1 or self.r_min < 1:
            raise InvalidRange("n and r must be positive")
        if kind in (Kind.HYPERSIMPLEX, Kind.SIMPLEX) and self.n_min < 2:
            raise InvalidRange("n must be at least 2")
        out = []
        try:
            for n in range(self.n_min, self.n_max + 1):
                if kind is Kind.HYPERSIMPLEX:
                    for a in ([self.a] if self.a is not None else range(1, n)):
                        out.append(FamilySpec.hypersimplex(a, n - a))
                    continue
                for r in range(self.r_min, self.r_max + 1):
                    if kind is Kind.SIMPLEX:
                        out.append(FamilySpec.simplex(r, n))
                    else:
                        for s in ([self.s] if self.s is not None else range(1, r * n)):
                            out.append(FamilySpec.slice(r, n, s))
        except InvalidFamily as exc:
            raise InvalidRange(str(exc)) from exc
        return sorted(out, key=FamilySpec.sort_key)


def default_jobs() -> int:
    env = os.environ.get("OSPWIND_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def sweep(families: Iterable[FamilySpec] | SweepRange, workers: int = 1) -> list[VerificationReport]:
    """Verify every instance; result order is canonical whatever ``workers`` is."""
    if workers < 1:
        raise InvalidRange("workers must be positive")
    if isinstance(families, SweepRange):
        families = families.instances()
    families = sorted(families, key=FamilySpec.sort_key)
    if workers == 1 or len(families) <= 1:
        return [verify_instance(f) for f in families]
    with ProcessPoolExecutor(max_workers=min(workers, len(families))) as pool:
        return list(pool.map(verify_instance, families, chunksize=1))
