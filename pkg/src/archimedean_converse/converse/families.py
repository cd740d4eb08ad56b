"""
families.py

Desk-scale verification universe: enumerate every normalized parameter in a
bounded box, keep the generic ones, and check the converse statements on all
of them.
"""

from __future__ import annotations

import time
import dataclasses
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Dict, Iterator, List, Optional, Tuple

from archimedean_converse.auto_config.logging_config import logger
from archimedean_converse.converse.oracle import ParameterOracle, SearchBounds
from archimedean_converse.converse.reconstruct import reconstruct
from archimedean_converse.converse.separation import find_distinguishing_twist
from archimedean_converse.factors.genericity import genericity_cross_check, is_generic_comb
from archimedean_converse.factors.local_factors import (
    gamma_param_direct,
    gamma_param_fe,
    gamma_twisted,
)
from archimedean_converse.gamma.numeric import ge_eq
from archimedean_converse.parameters.constituents import CharC, CharR, Constituent, Disc2R, Field
from archimedean_converse.parameters.parameter import Parameter, normalize
from archimedean_converse.utils.parallel import fan_out

CHECKS = ("functional_equation", "cross_check", "round_trip", "separation")


def parameter_sort_key(p: Parameter):
    return (p.dim, len(p), tuple(c.sort_key() for c in p))


def constituent_universe(field: Field, bounds: SearchBounds) -> List[Constituent]:
    if field is Field.COMPLEX:
        return [CharC(N, t) for N in range(bounds.max_n + 1) for t in bounds.t_grid]
    lams = [CharR(eps, t) for eps in (0, 1) for t in bounds.t_grid]
    phis = [Disc2R(N, t) for N in range(bounds.max_n + 1) for t in bounds.t_grid]
    return lams + phis


def enumerate_parameters(field: Field, n_max: int, bounds: SearchBounds) -> List[Parameter]:
    """Every normalized parameter of dimension 1..n_max built from the universe, once each."""
    universe = constituent_universe(field, bounds)
    seen = set()
    for size in range(1, n_max + 1):
        for combo in combinations_with_replacement(universe, size):
            if sum(c.dim for c in combo) <= n_max:
                seen.add(normalize(field, combo))
    return sorted(seen, key=parameter_sort_key)


def enumerate_generic(field: Field, n_max: int, bounds: SearchBounds) -> Iterator[Parameter]:
    """Generic members of the family; each is certified by both genericity routes."""
    for p in enumerate_parameters(field, n_max, bounds):
        genericity_cross_check(p)
        if is_generic_comb(p).generic:
            yield p


@dataclass
class FamilyReport:
    field: Field
    n_max: int
    bounds: SearchBounds
    members: int = 0
    generic: int = 0
    passed: Dict[str, int] = dataclasses.field(default_factory=lambda: {c: 0 for c in CHECKS})
    total: Dict[str, int] = dataclasses.field(default_factory=lambda: {c: 0 for c in CHECKS})
    failures: List[Dict[str, str]] = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, check: str, success: bool, parameter: Parameter,
               detail: str = "", other: Optional[Parameter] = None) -> None:
        self.total[check] += 1
        if success:
            self.passed[check] += 1
            return
        failure = {"check": check, "parameter": str(parameter), "detail": detail}
        if other is not None:
            failure["other"] = str(other)
        logger.warning(f"{check} failed for {failure['parameter']}: {detail}")
        self.failures.append(failure)

    def to_dict(self) -> dict:
        failures = sorted(
            self.failures, key=lambda f: (f["check"], f["parameter"], f.get("other", ""))
        )
        return {
            "field": self.field.value,
            "nMax": self.n_max,
            "bounds": {
                "maxN": self.bounds.max_n,
                "tGrid": [str(t) for t in self.bounds.t_grid],
                "maxTwistOffset": self.bounds.max_twist_offset,
            },
            "members": self.members,
            "generic": self.generic,
            "checks": {c: {"passed": self.passed[c], "total": self.total[c]} for c in CHECKS},
            "failures": failures,
            "ok": self.ok,
        }

    def summary_lines(self) -> List[str]:
        lines = [
            f"Family over {self.field.value}, nMax={self.n_max}, maxN={self.bounds.max_n}, "
            f"{len(self.bounds.t_grid)} t values: {self.members} members, {self.generic} generic",
        ]
        for c in CHECKS:
            lines.append(f"  {c}: {self.passed[c]}/{self.total[c]}")
        lines.extend(f"  FAIL {f['check']}: {f['parameter']} {f.get('other', '')} {f['detail']}".rstrip()
                     for f in self.failures)
        return lines


def _member_checks(p: Parameter, bounds: SearchBounds) -> Tuple[bool, bool, Optional[Parameter]]:
    """(functional equation holds, generic, reconstruction result when generic)."""
    fe_ok = ge_eq(gamma_param_direct(p), gamma_param_fe(p))
    genericity_cross_check(p)
    generic = is_generic_comb(p).generic
    rebuilt = reconstruct(ParameterOracle(p), bounds) if generic else None
    return fe_ok, generic, rebuilt


def _separates(pair: Tuple[Parameter, Parameter], bounds: SearchBounds) -> bool:
    p, q = pair
    chi = find_distinguishing_twist(p, q, bounds)
    return chi is not None and not ge_eq(gamma_twisted(p, chi), gamma_twisted(q, chi))


def verify_family(
    field: Field,
    n_max: int,
    bounds: SearchBounds,
    max_workers: Optional[int] = None,
) -> FamilyReport:
    started = time.perf_counter()
    report = FamilyReport(field, n_max, bounds)
    members = enumerate_parameters(field, n_max, bounds)
    report.members = len(members)

    generic: List[Parameter] = []
    outcomes = fan_out(lambda p: _member_checks(p, bounds), members, max_workers, label="member")
    for outcome in outcomes:
        p = outcome.item
        if not outcome.ok:
            check = "cross_check" if isinstance(outcome.error, AssertionError) else "round_trip"
            report.record(check, False, p, detail=str(outcome.error))
            continue
        fe_ok, is_generic, rebuilt = outcome.result
        report.record("functional_equation", fe_ok, p, detail="direct and functional-equation gamma differ")
        report.record("cross_check", True, p)
        if is_generic:
            generic.append(p)
            report.record("round_trip", rebuilt == p, p, detail=f"reconstructed {rebuilt}")
    report.generic = len(generic)

    pairs = list(combinations(generic, 2))
    for outcome in fan_out(lambda pq: _separates(pq, bounds), pairs, max_workers, label="pair"):
        p, q = outcome.item
        detail = str(outcome.error) if not outcome.ok else "twisted gamma factors agree"
        report.record("separation", outcome.ok and outcome.result, p, detail=detail, other=q)

    logger.info(f"verify_family over {field.value} finished in {time.perf_counter() - started:.1f}s "
                f"({len(report.failures)} failure(s))")
    return report
