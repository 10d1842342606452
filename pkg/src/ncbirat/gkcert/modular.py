"""Reduction of characteristic-0 certificates modulo primes."""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, List, Optional

from ..ncalg import AlgebraElement
from ..orefrac import LeftFraction
from ..polycore import GF, BadReduction, is_prime
from .certificate import WitnessCertificate
from .verify import VerificationReport, verify_certificate


class BadPrime(ValueError):
    """The certificate does not survive reduction modulo ``p``."""

    def __init__(self, p: int, location: str, reason: str = ""):
        msg = f"p = {p} is bad: {location}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)
        self.p = p
        self.location = location
        self.reason = reason


def _reduce_el(a: AlgebraElement, F, p: int, where: str) -> AlgebraElement:
    try:
        return a.reduce(F)
    except BadReduction as exc:
        raise BadPrime(p, where, f"denominator of {exc.value}") from exc


def reduce_mod_p(cert: WitnessCertificate, p: int) -> WitnessCertificate:
    """The certificate over GF(p), or :class:`BadPrime` naming the first obstruction."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if cert.domain.characteristic != 0:
        raise ValueError("only characteristic-0 certificates can be reduced")
    F = GF(p)
    fam = cert.family
    if fam.kind == "weylInvariants" and len(fam.weyl_group) % p == 0:
        raise BadPrime(p, "family", f"p divides |W| = {len(fam.weyl_group)}")
    witnesses = []
    for k, w in enumerate(cert.witnesses):
        den = _reduce_el(w.den, F, p, f"witnesses[{k}] denominator")
        num = _reduce_el(w.num, F, p, f"witnesses[{k}] numerator")
        if not den:
            raise BadPrime(p, f"witnesses[{k}] denominator", "reduces to 0")
        witnesses.append(LeftFraction(den, num))
    centers = [_reduce_el(c, F, p, f"centers[{k}]") for k, c in enumerate(cert.centers)]
    gens = []
    for k, g in enumerate(cert.generators):
        g2 = _reduce_el(g, F, p, f"generators[{k}]")
        if not g2:
            raise BadPrime(p, f"generators[{k}]", "reduces to 0")
        gens.append(g2)
    recovery = []
    for k, (q, pp) in enumerate(cert.recovery):
        try:
            q2 = q.change_domain(F)
            p2 = pp.change_domain(F)
        except BadReduction as exc:
            raise BadPrime(p, f"recovery[{k}]", f"denominator of {exc.value}") from exc
        if not q2:
            raise BadPrime(p, f"recovery[{k}].q", "reduces to 0")
        recovery.append((q2, p2))
    return replace(cert, family=fam.with_domain(F), witnesses=witnesses, centers=centers,
                   generators=gens, recovery=recovery)


@dataclass
class PrimeResult:
    p: int
    status: str  # pass / fail / inconclusive / bad
    detail: str = ""
    report: Optional[VerificationReport] = None


def check_prime(cert: WitnessCertificate, p: int, ceiling: Optional[int] = None) -> PrimeResult:
    try:
        red = reduce_mod_p(cert, p)
    except BadPrime as exc:
        return PrimeResult(p, "bad", str(exc))
    rep = verify_certificate(red, ceiling, growth=False)
    return PrimeResult(p, rep.verdict, rep.first_failure() or "", rep)


def modular_sweep(cert: WitnessCertificate, primes: Iterable[int],
                  ceiling: Optional[int] = None) -> List[PrimeResult]:
    return [check_prime(cert, p, ceiling) for p in primes]


def bad_primes(cert: WitnessCertificate, up_to: int) -> List[int]:
    """Primes p <= up_to at which reduction is refused."""
    out = []
    for p in range(2, up_to + 1):
        if is_prime(p):
            try:
                reduce_mod_p(cert, p)
            except BadPrime:
                out.append(p)
    return out
