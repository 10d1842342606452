"""Left fractions ``b^-1 a`` in the skew field of an Ore domain.

Every operation reduces to one linear problem: given nonzero ``b1, b2`` find
nonzero ``c, d`` of bounded degree with ``c*b1 = d*b2``.  The unknown
coefficient vectors of ``c`` and ``d`` range over a filtration piece and the
identity is expanded monomial by monomial, so the solve is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from .ncalg import AlgebraElement, FamilyInstance, FamilyMismatch, filtration_piece
from .polycore import linalg
from .polycore.parse import ParseError

# bound used by the arithmetic operators when the caller gives none
AUTO_BOUND = 12


class NoSolutionAtBound(ArithmeticError):
    """No Ore pair of degree <= bound exists; retry with a larger bound."""

    def __init__(self, bound: int, what: str = ""):
        super().__init__(f"no Ore solution of degree <= {bound}" + (f" for {what}" if what else ""))
        self.bound = bound


@dataclass(frozen=True)
class OreSolution:
    c: AlgebraElement
    d: AlgebraElement
    level: int


def _same_family(a: AlgebraElement, b: AlgebraElement):
    if a.family.zalg is not b.family.zalg or a.family.domain != b.family.domain:
        raise FamilyMismatch(f"{a.family} vs {b.family}")


def _solve_at(fam: FamilyInstance, b1: AlgebraElement, b2: AlgebraElement, D: int):
    basis = filtration_piece(fam, D).basis
    n = len(basis)
    rows: Dict[tuple, Dict[int, object]] = {}
    for k, v in enumerate(basis):
        for sign, b, col in ((1, b1, k), (-1, b2, n + k)):
            for e, c in (v * b).terms.items():
                rows.setdefault(e, {})[col] = c if sign > 0 else -c
    null = linalg.nullspace(list(rows.values()), 2 * n, fam.domain)
    if not null:
        return None
    vec = max(null, key=min)
    c = fam.zero()
    d = fam.zero()
    for k, val in vec.items():
        if k < n:
            c = c + basis[k].scale(val)
        else:
            d = d + basis[k - n].scale(val)
    return c, d


def solve_ore(b1: AlgebraElement, b2: AlgebraElement, bound: int) -> OreSolution:
    """Nonzero ``(c, d)`` with ``c*b1 = d*b2`` and ``deg c, deg d <= bound``.

    The first level ``D`` with a solution is used; among its solutions the
    one whose ``c`` has the smallest leading monomial is returned.
    """
    _same_family(b1, b2)
    if not b1 or not b2:
        raise ZeroDivisionError("Ore condition needs nonzero elements")
    fam = b1.family
    for D in range(bound + 1):
        got = _solve_at(fam, b1, b2, D)
        if got is None:
            continue
        c, d = got
        if not c or not d or c * b1 != d * b2:
            raise ArithmeticError("Ore solution failed its re-check")
        return OreSolution(c, d, D)
    raise NoSolutionAtBound(bound, f"{b1} and {b2}")


def left_quotient(b: AlgebraElement, a: AlgebraElement) -> Optional[AlgebraElement]:
    """``q`` with ``b*q = a`` if one exists in the family, else ``None``."""
    _same_family(a, b)
    if not a:
        return a.family.zero()
    k = a.degree() - b.degree()
    if k < 0:
        return None
    fam = a.family
    basis = filtration_piece(fam, k).basis
    rows: Dict[tuple, Dict[int, object]] = {}
    for j, v in enumerate(basis):
        for e, c in (b * v).terms.items():
            rows.setdefault(e, {})[j] = c
    for e in a.terms:
        rows.setdefault(e, {})
    keys = list(rows)
    sol = linalg.solve_affine([rows[e] for e in keys], [a.coefficient(e) for e in keys],
                              len(basis), fam.domain)
    if sol is None:
        return None
    q = fam.zero()
    for j, val in sol.items():
        q = q + basis[j].scale(val)
    return q if b * q == a else None


class LeftFraction:
    """``den^-1 * num``.  Stored as given; arithmetic returns normalized results."""

    __slots__ = ("den", "num")

    def __init__(self, den: AlgebraElement, num: AlgebraElement):
        _same_family(den, num)
        if not den:
            raise ZeroDivisionError("fraction with zero denominator")
        self.den = den
        self.num = num

    @classmethod
    def of(cls, a: AlgebraElement) -> "LeftFraction":
        return cls(a.family.one(), a)

    @property
    def family(self) -> FamilyInstance:
        return self.den.family

    def is_zero(self) -> bool:
        return not self.num

    def normalized(self) -> "LeftFraction":
        """Zero becomes ``1^-1 0``; exact left quotients are cancelled;
        otherwise the denominator's leading coefficient is scaled to one."""
        fam = self.family
        if not self.num:
            return LeftFraction(fam.one(), fam.zero())
        if self.den.is_scalar():
            return LeftFraction(fam.one(), self.num.scale(fam.domain.one / self.den.scalar_value()))
        q = left_quotient(self.den, self.num)
        if q is not None:
            return LeftFraction(fam.one(), q)
        inv = fam.domain.one / self.den.leading()[1]
        return LeftFraction(self.den.scale(inv), self.num.scale(inv))

    def as_element(self) -> Optional[AlgebraElement]:
        n = self.normalized()
        return n.num if n.den == n.family.one() else None

    def reduce(self, domain) -> "LeftFraction":
        return LeftFraction(self.den.reduce(domain), self.num.reduce(domain))

    def __neg__(self):
        return LeftFraction(self.den, -self.num)

    def __add__(self, other):
        return frac_add(self, _lift(self, other))

    def __sub__(self, other):
        return frac_add(self, -_lift(self, other))

    def __mul__(self, other):
        return frac_mul(self, _lift(self, other))

    def __rmul__(self, other):
        return frac_mul(_lift(self, other), self)

    def __eq__(self, other):
        if isinstance(other, (LeftFraction, AlgebraElement, int)):
            return frac_eq(self, _lift(self, other))
        return NotImplemented

    __hash__ = None

    def __str__(self):
        return format_fraction(self)

    def __repr__(self):
        return f"LeftFraction({format_fraction(self)})"


def _lift(u: LeftFraction, v) -> LeftFraction:
    if isinstance(v, LeftFraction):
        return v
    if isinstance(v, AlgebraElement):
        return LeftFraction.of(v)
    return LeftFraction.of(u.family.scalar(v))


def _bound(bound: Optional[int]) -> int:
    return AUTO_BOUND if bound is None else bound


def frac_add(u: LeftFraction, v: LeftFraction, bound: Optional[int] = None) -> LeftFraction:
    _same_family(u.den, v.den)
    if u.is_zero():
        return v.normalized()
    if v.is_zero():
        return u.normalized()
    sol = solve_ore(u.den, v.den, _bound(bound))
    return LeftFraction(sol.c * u.den, sol.c * u.num + sol.d * v.num).normalized()


def frac_mul(u: LeftFraction, v: LeftFraction, bound: Optional[int] = None) -> LeftFraction:
    """``b1^-1 a1 * b2^-1 a2 = (s b1)^-1 (t a2)`` where ``s a1 = t b2``."""
    _same_family(u.den, v.den)
    fam = u.family
    if u.is_zero() or v.is_zero():
        return LeftFraction(fam.one(), fam.zero())
    sol = solve_ore(u.num, v.den, _bound(bound))
    return LeftFraction(sol.c * u.den, sol.d * v.num).normalized()


def frac_eq(u: LeftFraction, v: LeftFraction, bound: Optional[int] = None) -> bool:
    _same_family(u.den, v.den)
    if u.is_zero() or v.is_zero():
        return u.is_zero() and v.is_zero()
    sol = solve_ore(u.den, v.den, _bound(bound))
    return sol.c * u.num == sol.d * v.num


def frac_inverse(u: LeftFraction) -> LeftFraction:
    if u.is_zero():
        raise ZeroDivisionError("zero has no inverse")
    return LeftFraction(u.num, u.den).normalized()


def commutator(u: LeftFraction, v: LeftFraction, bound: Optional[int] = None) -> LeftFraction:
    uv = frac_mul(u, v, bound)
    vu = frac_mul(v, u, bound)
    return frac_add(uv, -vu, bound)


# ---------------------------------------------------------------------------
# literal syntax: inv(<element>) * (<element>), or a bare element
# ---------------------------------------------------------------------------

def _matching(text: str, open_pos: int) -> int:
    depth = 0
    for k in range(open_pos, len(text)):
        if text[k] == "(":
            depth += 1
        elif text[k] == ")":
            depth -= 1
            if depth == 0:
                return k
    raise ParseError("unbalanced parenthesis", text, open_pos)


def parse_fraction(fam: FamilyInstance, text: str,
                   centers: Sequence[AlgebraElement] = ()) -> LeftFraction:
    s = text.strip()
    lead = len(text) - len(text.lstrip())
    if not s.startswith("inv"):
        return LeftFraction.of(fam.parse(text, centers))
    k = 3
    while k < len(s) and s[k].isspace():
        k += 1
    if k >= len(s) or s[k] != "(":
        raise ParseError("expected '(' after inv", text, lead + k)
    close = _matching(s, k)
    den_text = s[k + 1:close]
    k = close + 1
    while k < len(s) and s[k].isspace():
        k += 1
    if k >= len(s):
        num = fam.one()
    else:
        if s[k] != "*":
            raise ParseError("expected '*' after inv(...)", text, lead + k)
        k += 1
        while k < len(s) and s[k].isspace():
            k += 1
        if k >= len(s) or s[k] != "(":
            raise ParseError("expected '(' before the numerator", text, lead + k)
        close2 = _matching(s, k)
        if s[close2 + 1:].strip():
            raise ParseError("trailing text after fraction", text, lead + close2 + 1)
        num = fam.parse(s[k + 1:close2], centers)
    den = fam.parse(den_text, centers)
    if not den:
        raise ParseError("zero denominator", text, lead)
    return LeftFraction(den, num)


def format_fraction(u: LeftFraction) -> str:
    return f"inv({u.den}) * ({u.num})"
