"""Sparse multivariate polynomials over a coefficient domain."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .domains import QQ, Domain, DomainError

Exps = Tuple[int, ...]


class Monomial(tuple):
    """Exponent vector with its total degree cached."""

    def __new__(cls, exps: Iterable[int]):
        self = super().__new__(cls, exps)
        if any(e < 0 for e in self):
            raise ValueError("negative exponent")
        self.degree = sum(self)
        return self

    def divides(self, other: Sequence[int]) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def lcm(self, other: Sequence[int]) -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self, other))

    def __mul__(self, other):
        return Monomial(a + b for a, b in zip(self, other))

    def quotient(self, other: Sequence[int]) -> "Monomial":
        return Monomial(a - b for a, b in zip(self, other))


@dataclass(frozen=True)
class MonomialOrder:
    """``lex`` or ``grevlex``; ``perm[k]`` is the variable ranked k-th (most significant)."""

    tag: str = "grevlex"
    perm: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.tag not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order {self.tag!r}")

    def key(self, exps: Sequence[int]):
        e = exps if self.perm is None else tuple(exps[i] for i in self.perm)
        if self.tag == "lex":
            return tuple(e)
        return (sum(e), tuple(-x for x in reversed(e)))


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


class Poly:
    """Immutable polynomial: a map from exponent tuples to nonzero coefficients."""

    __slots__ = ("nvars", "domain", "terms", "_hash")

    def __init__(self, nvars: int, domain: Domain, terms: Optional[Mapping[Exps, object]] = None,
                 _clean: bool = False):
        self.nvars = nvars
        self.domain = domain
        if terms is None:
            self.terms: Dict[Exps, object] = {}
        elif _clean:
            self.terms = dict(terms)
        else:
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise DomainError(f"monomial {e} has arity {len(e)}, expected {nvars}")
                c = domain.convert(c)
                if c:
                    clean[e] = clean.get(e, domain.zero) + c
                    if not clean[e]:
                        del clean[e]
            self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, domain: Domain = QQ) -> "Poly":
        return cls(nvars, domain)

    @classmethod
    def constant(cls, c, nvars: int, domain: Domain = QQ) -> "Poly":
        return cls(nvars, domain, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int, domain: Domain = QQ) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, domain, {tuple(e): 1})

    @classmethod
    def gens(cls, nvars: int, domain: Domain = QQ):
        return [cls.var(i, nvars, domain) for i in range(nvars)]

    # -- predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self.domain.zero)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def variables(self) -> set:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise DomainError(f"arity mismatch: {self.nvars} vs {other.nvars}")
        if other.domain != self.domain:
            raise DomainError(f"domain mismatch: {self.domain} vs {other.domain}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(other, self.nvars, self.domain)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.nvars, self.domain, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, self.domain, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: Dict[Exps, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly(self.nvars, self.domain, {e: c for e, c in out.items() if c}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(1, self.nvars, self.domain)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = self.domain.convert(c)
        if not c:
            return Poly(self.nvars, self.domain)
        return Poly(self.nvars, self.domain, {e: v * c for e, v in self.terms.items()}, _clean=True)

    def mul_term(self, exps: Exps, c) -> "Poly":
        return Poly(self.nvars, self.domain,
                    {tuple(a + b for a, b in zip(e, exps)): v * c for e, v in self.terms.items()},
                    _clean=True)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (self.nvars == other.nvars and self.domain == other.domain
                    and self.terms == other.terms)
        if isinstance(other, (int,)):
            return self == Poly.constant(other, self.nvars, self.domain)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.domain.name, frozenset(self.terms.items())))
        return self._hash

    # -- ordering helpers ----------------------------------------------------
    def leading(self, order: MonomialOrder = GREVLEX):
        """(exponents, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Poly":
        _, c = self.leading(order)
        return self.scale(self.domain.one / c)

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- conversions ---------------------------------------------------------
    def change_domain(self, domain: Domain) -> "Poly":
        conv = {}
        for e, c in self.terms.items():
            conv[e] = domain.convert(self.domain.to_fraction(c) if domain.characteristic == 0 else c)
        return Poly(self.nvars, domain, conv)

    def extend(self, nvars: int) -> "Poly":
        pad = (0,) * (nvars - self.nvars)
        return Poly(nvars, self.domain, {e + pad: c for e, c in self.terms.items()}, _clean=True)

    def evaluate(self, point: Sequence):
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x ** k
            total = total + t
        return total

    def subs(self, var: int, value: "Poly") -> "Poly":
        """Substitute ``value`` for variable ``var``."""
        self._check(value)
        by_power: Dict[int, Dict[Exps, object]] = {}
        for e, c in self.terms.items():
            k = e[var]
            rest = e[:var] + (0,) + e[var + 1:]
            by_power.setdefault(k, {})[rest] = c
        out = Poly(self.nvars, self.domain)
        powers = {0: Poly.constant(1, self.nvars, self.domain)}
        for k in sorted(by_power):
            if k not in powers:
                top = max(powers)
                p = powers[top]
                for j in range(top + 1, k + 1):
                    p = p * value
                    powers[j] = p
            out = out + Poly(self.nvars, self.domain, by_power[k], _clean=True) * powers[k]
        return out

    def __str__(self):
        from .parse import format_poly
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.nvars}, {self.domain}, {str(self)!r})"


def poly_arith(a: Poly, b: Poly, kind: str) -> Poly:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")
