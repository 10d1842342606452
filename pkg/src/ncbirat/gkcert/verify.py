"""Exact verification of witness certificates and the verification report."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..ncalg import AlgebraElement, filtration_piece, growth_exponent
from ..orefrac import (LeftFraction, NoSolutionAtBound, commutator, frac_add, frac_eq,
                       frac_mul)
from ..polycore import Poly, format_poly, linalg
from .certificate import WitnessCertificate

PASS, FAIL, INCONCLUSIVE, SKIPPED = "pass", "fail", "inconclusive", "skipped"
REPORT_VERSION = "gkreport/1"
GROWTH_JMAX = 16
GROWTH_TOLERANCE = 0.5
GENERATION_DEPTH = 2


@dataclass
class CheckResult:
    name: str
    status: str
    details: List[str] = field(default_factory=list)
    failure: Optional[str] = None
    bound: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        out = {"status": self.status, "details": list(self.details)}
        if self.failure is not None:
            out["failure"] = self.failure
        if self.bound is not None:
            out["bound"] = self.bound
        return out


@dataclass
class VerificationReport:
    family: str
    domain: str
    checks: Dict[str, CheckResult]
    advisory: Dict[str, CheckResult]
    bounds: Tuple[int, int]

    @property
    def verdict(self) -> str:
        states = [c.status for c in self.checks.values()]
        if FAIL in states:
            return FAIL
        if INCONCLUSIVE in states or SKIPPED in states:
            return INCONCLUSIVE
        return PASS

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def first_failure(self) -> Optional[str]:
        for c in self.checks.values():
            if c.status == FAIL:
                return c.failure
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": REPORT_VERSION,
            "family": self.family,
            "domain": self.domain,
            "verdict": self.verdict,
            "bounds": {"initial": self.bounds[0], "ceiling": self.bounds[1]},
            "checks": {k: v.to_dict() for k, v in self.checks.items()},
            "advisory": {k: v.to_dict() for k, v in self.advisory.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        labels = {"dagger": "dagger (†)", "ddagger": "ddagger (‡)", "center": "center",
                  "generation": "generation"}
        lines = [f"family: {self.family} over {self.domain}"]
        for key, c in list(self.checks.items()) + list(self.advisory.items()):
            head = f"{labels.get(key, key):<14} {c.status}"
            if c.bound is not None:
                head += f"  (bound {c.bound})"
            lines.append(head)
            for d in c.details:
                lines.append(f"    {d}")
            if c.failure:
                lines.append(f"    FAILED: {c.failure}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


class _Escalator:
    """Runs a fraction computation at bounds initial, 2*initial, ... up to the ceiling."""

    def __init__(self, bounds: Tuple[int, int]):
        self.initial, self.ceiling = bounds
        self.used = self.initial

    def run(self, fn: Callable[[int], Any]):
        b = max(self.used, self.initial)
        while True:
            try:
                out = fn(b)
                self.used = max(self.used, b)
                return out
            except NoSolutionAtBound:
                if b >= self.ceiling:
                    raise
                b = min(self.ceiling, max(1, 2 * b))


def _expected_bracket(a: int, b: int, m: int) -> int:
    """[w_b, w_a] for a < b: 1 when b = a + m pairs a position with its partner."""
    return 1 if a < m and b == a + m else 0


def verify_dagger(cert: WitnessCertificate, ceiling: Optional[int] = None) -> CheckResult:
    esc = _Escalator((cert.bounds[0], ceiling if ceiling is not None else cert.bounds[1]))
    w = cert.witnesses
    m = cert.m
    res = CheckResult("dagger", PASS)
    try:
        for a in range(2 * m):
            for b in range(a + 1, 2 * m):
                val = esc.run(lambda B: commutator(w[b], w[a], B))
                want = _expected_bracket(a, b, m)
                ok = esc.run(lambda B: frac_eq(val, LeftFraction.of(cert.family.scalar(want)), B))
                shown = val.as_element()
                text = f"[w{b + 1}, w{a + 1}] = {shown if shown is not None else val}"
                if not ok:
                    res.status = FAIL
                    res.failure = f"{text}, expected {want}"
                    res.bound = esc.used
                    return res
                res.details.append(text)
    except NoSolutionAtBound as exc:
        res.status = INCONCLUSIVE
        res.failure = str(exc)
    res.bound = esc.used
    return res


class RecoveryEvaluator:
    """Evaluates recovery polynomials with each monomial read as the ordered
    product z^a * w1^b1 * ... * w2m^b2m inside the fraction field."""

    def __init__(self, cert: WitnessCertificate, bound: int):
        self.cert = cert
        self.bound = bound
        self._powers: Dict[Tuple[int, int], LeftFraction] = {}

    def power(self, k: int, e: int) -> LeftFraction:
        key = (k, e)
        hit = self._powers.get(key)
        if hit is None:
            if e == 1:
                hit = self.cert.witnesses[k].normalized()
            else:
                hit = frac_mul(self.power(k, e - 1), self.cert.witnesses[k], self.bound)
            self._powers[key] = hit
        return hit

    def __call__(self, poly: Poly) -> LeftFraction:
        cert = self.cert
        fam = cert.family
        l = cert.l
        total = LeftFraction.of(fam.zero())
        for exps in sorted(poly.terms):
            coef = poly.terms[exps]
            z = fam.scalar(coef)
            for k in range(l):
                if exps[k]:
                    z = z * cert.centers[k] ** exps[k]
            term = LeftFraction.of(z)
            for k in range(2 * cert.m):
                e = exps[l + k]
                if e:
                    term = frac_mul(term, self.power(k, e), self.bound)
            total = frac_add(total, term, self.bound)
        return total


def verify_ddagger(cert: WitnessCertificate, ceiling: Optional[int] = None) -> CheckResult:
    esc = _Escalator((cert.bounds[0], ceiling if ceiling is not None else cert.bounds[1]))
    res = CheckResult("ddagger", PASS)
    names = cert.variable_names
    try:
        for i, (g, (q, p)) in enumerate(zip(cert.generators, cert.recovery)):
            def check(B):
                ev = RecoveryEvaluator(cert, B)
                Q = ev(q)
                P = ev(p)
                if Q.is_zero():
                    return None
                return frac_eq(frac_mul(Q, LeftFraction.of(g), B), P, B)

            ok = esc.run(check)
            text = f"({format_poly(q, names=names)}) * ({g}) = {format_poly(p, names=names)}"
            if not ok:
                res.status = FAIL
                why = "q evaluates to 0" if ok is None else "identity fails"
                res.failure = f"generator {i + 1} ({g}): {text}: {why}"
                res.bound = esc.used
                return res
            res.details.append(text)
    except NoSolutionAtBound as exc:
        res.status = INCONCLUSIVE
        res.failure = str(exc)
    res.bound = esc.used
    return res


def verify_generation(cert: WitnessCertificate, depth: int = GENERATION_DEPTH) -> CheckResult:
    """Products of at most k generators span the filtration piece of degree k*gd, k <= depth."""
    fam = cert.family
    gd = cert.generator_degree
    res = CheckResult("generation", PASS)
    level = [fam.one()]
    products = [fam.one()]
    for k in range(1, depth + 1):
        level = [a * g for a in level for g in cert.generators]
        products.extend(level)
        piece = filtration_piece(fam, k * gd)
        cols: Dict[tuple, int] = {}
        rows = []
        for a in products:
            rows.append({cols.setdefault(e, len(cols)): c for e, c in a.terms.items()})
        r = linalg.rank(rows, fam.domain)
        outside = [a for a in products if not piece.contains(a)]
        if outside or r != piece.dimension:
            res.status = FAIL
            res.failure = (f"products of <= {k} generators span dimension {r}, "
                           f"filtration piece {k * gd} has dimension {piece.dimension}")
            return res
        res.details.append(f"A_{k * gd} spanned by products of <= {k} generators "
                           f"(dimension {r})")
    return res


def verify_center(cert: WitnessCertificate) -> CheckResult:
    res = CheckResult("center", PASS)
    if not cert.centers:
        res.details.append("no central elements (l = 0)")
        return res
    gens = cert.family.algebra_generators()
    for k, phi in enumerate(cert.centers):
        for g in gens:
            br = phi.commutator(g)
            if br:
                res.status = FAIL
                res.failure = f"[z{k + 1}, {g}] = {br}"
                return res
        res.details.append(f"z{k + 1} = {phi} commutes with all generators")
    return res


def growth_advisory(cert: WitnessCertificate, jmax: int = GROWTH_JMAX) -> CheckResult:
    est = growth_exponent(cert.family, jmax)
    ok = abs(est - cert.expected_tdeg) <= GROWTH_TOLERANCE
    return CheckResult("growth", PASS if ok else "warn",
                       [f"growth exponent {est:.2f} at jmax {jmax}, "
                        f"expected {cert.expected_tdeg}"])


def verify_certificate(cert: WitnessCertificate, ceiling: Optional[int] = None,
                       growth: bool = True) -> VerificationReport:
    checks: Dict[str, CheckResult] = {}
    checks["dagger"] = verify_dagger(cert, ceiling)
    if checks["dagger"].status == PASS:
        checks["ddagger"] = verify_ddagger(cert, ceiling)
    else:
        checks["ddagger"] = CheckResult("ddagger", SKIPPED, ["needs the dagger relations"])
    checks["generation"] = verify_generation(cert)
    checks["center"] = verify_center(cert)
    advisory = {"growth": growth_advisory(cert)} if growth else {}
    top = ceiling if ceiling is not None else cert.bounds[1]
    return VerificationReport(cert.family.spec_string(), cert.domain.name, checks, advisory,
                              (cert.bounds[0], top))
