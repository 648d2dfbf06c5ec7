"""Exhaustive verifiers for the counting and character identities.

Every verifier enumerates both sides of its identity independently (counts of
reduced walls always come from enumeration, never from the strict-partition
DP, so no check is circular) and returns a report.  A failing report carries
the smallest offending cell and, where applicable, the lexicographically
smallest offending object, so failures reproduce deterministically.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from .bijections import phi, phi_inv, psi, psi_inv
from .characters import virtual_character
from .partitions import (
    Partition,
    count_odd,
    count_partitions,
    count_strict,
    enumerate_partitions,
    enumerate_strict,
)
from .series import series_product_odd, series_product_strict
from .walls import (
    WallParams,
    enumerate_proper,
    enumerate_reduced,
    has_removable_delta,
    is_reduced,
    weight,
)


@dataclass
class VerificationReport:
    """Outcome of one identity check over a parameter range."""

    check: str
    params: dict[str, Any]
    passed: bool
    counterexample: dict[str, Any] | None = None
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self, include_elapsed: bool = False) -> dict[str, Any]:
        """JSON-ready form; elapsed time is diagnostics and off by default."""
        out: dict[str, Any] = {
            "check": self.check,
            "params": self.params,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return out


def _report(
    check: str,
    params: dict[str, Any],
    failures: list[dict[str, Any]],
    started: float,
) -> VerificationReport:
    witness = min(failures, key=_witness_key) if failures else None
    return VerificationReport(
        check=check,
        params=params,
        passed=not failures,
        counterexample=witness,
        elapsed=time.perf_counter() - started,
    )


def _witness_key(failure: dict[str, Any]) -> tuple:
    """Order failures by cell first, then by offending object."""
    return (failure.get("m", 0), failure.get("partition", ()))


def verify_euler(max_degree: int) -> VerificationReport:
    """Strict-parts and odd-parts products agree with each other and with
    the counting DPs at every degree up to the bound."""
    started = time.perf_counter()
    strict_series = series_product_strict(max_degree)
    odd_series = series_product_odd(max_degree)
    failures = []
    for m in range(max_degree + 1):
        values = {
            "strict_series": strict_series[m],
            "odd_series": odd_series[m],
            "strict_count": count_strict(m),
            "odd_count": count_odd(m),
        }
        if len(set(values.values())) != 1:
            failures.append({"m": m, **values})
    return _report("euler", {"max_degree": max_degree}, failures, started)


def verify_count_identity(params: WallParams, max_m: int) -> VerificationReport:
    """Reduced walls with m blocks are equinumerous with strict partitions
    of m, the reduced side produced by enumeration."""
    started = time.perf_counter()
    failures = []
    for m in range(max_m + 1):
        reduced = len(enumerate_reduced(params, m))
        strict = count_strict(m)
        if reduced != strict:
            failures.append({"m": m, "reduced": reduced, "strict": strict})
    return _report(
        "counts", {"n": params.n, "max_m": max_m}, failures, started
    )


def verify_fock(params: WallParams, max_m: int) -> VerificationReport:
    """Proper walls with m blocks decompose as reduced walls with
    m - 2*delta*k blocks weighted by the partition numbers P(k)."""
    started = time.perf_counter()
    period = params.period
    failures = []
    for m in range(max_m + 1):
        lhs = len(enumerate_proper(params, m))
        rhs = sum(
            len(enumerate_reduced(params, m - period * k)) * count_partitions(k)
            for k in range(m // period + 1)
        )
        if lhs != rhs:
            failures.append({"m": m, "proper": lhs, "decomposition": rhs})
    return _report("fock", {"n": params.n, "max_m": max_m}, failures, started)


def verify_vch_identity(params: WallParams, max_m: int) -> VerificationReport:
    """Strict partitions and reduced walls with m blocks carry identical
    weight multisets."""
    started = time.perf_counter()
    failures = []
    for m in range(max_m + 1):
        strict_vch = virtual_character(enumerate_strict(m), params)
        reduced_vch = virtual_character(enumerate_reduced(params, m), params)
        if strict_vch != reduced_vch:
            diff = strict_vch - reduced_vch
            failures.append(
                {
                    "m": m,
                    "strict_only": {str(k): v for k, v in diff.items()},
                    "reduced_only": {
                        str(k): v for k, v in (reduced_vch - strict_vch).items()
                    },
                }
            )
    return _report("vch", {"n": params.n, "max_m": max_m}, failures, started)


def verify_reduced_equivalence(params: WallParams, max_m: int) -> VerificationReport:
    """The gap characterization of reducedness matches the removable-segment
    definition on every proper wall up to the block bound."""
    started = time.perf_counter()
    failures = []
    for m in range(max_m + 1):
        for lam in enumerate_proper(params, m):
            if is_reduced(lam, params) != (not has_removable_delta(lam, params)):
                failures.append({"m": m, "partition": lam.parts})
    return _report(
        "reduced-equivalence", {"n": params.n, "max_m": max_m}, failures, started
    )


def _codomain(
    family, params: WallParams, m: int
) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (family member of size m - 2*delta*k, partition of k) pairs, k >= 1."""
    period = params.period
    pairs = set()
    for k in range(1, m // period + 1):
        members = family(params, m - period * k)
        hats = enumerate_partitions(k)
        for member in members:
            for hat in hats:
                pairs.add((member.parts, hat.parts))
    return pairs


def _strict_family(params: WallParams, m: int) -> list[Partition]:
    return enumerate_strict(m)


def verify_bijections(params: WallParams, max_m: int) -> VerificationReport:
    """Both reduction maps are total on their domains, invert exactly, hit
    their full codomains injectively, and shift every color count by 2k."""
    started = time.perf_counter()
    failures = []
    n_colors = params.n + 1
    jobs = (
        ("psi", psi, psi_inv, is_reduced, enumerate_reduced),
        ("phi", phi, phi_inv, lambda lam, p: lam.is_strict(), _strict_family),
    )
    for m in range(max_m + 1):
        proper = enumerate_proper(params, m)
        for name, forward, inverse, in_target, family in jobs:
            images = set()
            domain = [lam for lam in proper if not in_target(lam, params)]
            for lam in domain:
                try:
                    result = forward(lam, params)
                    rebuilt = inverse(result.reduced_part, result.hat_part, params)
                except (ValueError, AssertionError) as exc:
                    failures.append({"m": m, "map": name, "partition": lam.parts,
                                     "error": str(exc)})
                    continue
                if rebuilt != lam:
                    failures.append({"m": m, "map": name, "partition": lam.parts,
                                     "error": "round trip mismatch"})
                    continue
                full = weight(lam, params)
                target = weight(result.reduced_part, params)
                shift = 2 * result.k
                if any(full[c] - target[c] != shift for c in range(n_colors)):
                    failures.append({"m": m, "map": name, "partition": lam.parts,
                                     "error": "weight shift mismatch"})
                    continue
                images.add((result.reduced_part.parts, result.hat_part.parts))
            expected = _codomain(family, params, m)
            if len(images) != len(domain) or images != expected:
                failures.append({"m": m, "map": name,
                                 "error": "image does not match codomain"})
    return _report(
        "bijections", {"n": params.n, "max_m": max_m}, failures, started
    )


#: Check names accepted by run_checks, in canonical execution order.
ALL_CHECKS = (
    "euler",
    "counts",
    "fock",
    "vch",
    "bijections",
    "reduced-equivalence",
)

_N_INDEPENDENT = {"euler"}


def run_checks(
    n_values: tuple[int, ...],
    max_m: int,
    euler_degree: int,
    checks: tuple[str, ...] = ALL_CHECKS,
) -> list[VerificationReport]:
    """Run the selected checks over all ranks; reports come back ordered by
    (check, n) so identical invocations produce identical output."""
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    runners = {
        "counts": verify_count_identity,
        "fock": verify_fock,
        "vch": verify_vch_identity,
        "bijections": verify_bijections,
        "reduced-equivalence": verify_reduced_equivalence,
    }
    reports = []
    for check in ALL_CHECKS:
        if check not in checks:
            continue
        if check in _N_INDEPENDENT:
            reports.append(verify_euler(euler_degree))
            continue
        for n in n_values:
            reports.append(runners[check](WallParams(n), max_m))
    return reports
