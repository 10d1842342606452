"""Family instances (an integral algebra plus a coefficient domain) and their elements."""
from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..polycore.domains import QQ, Domain, DomainError, domain_from_name
from ..polycore.parse import RingBuilder, format_terms, parse_with
from ..rootsys import (SIGN_CONVENTION, ChevalleyBasis, RootSystem, WeylGroupElement,
                       build_root_system, weyl_group)
from .algebra import (ZAlgebra, commutative_zalgebra, enveloping_zalgebra, weyl_zalgebra)

Exps = Tuple[int, ...]

KINDS = ("enveloping", "weylInvariants", "weylFull", "commutative")


class FamilyMismatch(DomainError):
    pass


def mono_key(e: Exps):
    """Sort key for normal-form monomials: total degree, then exponent tuple."""
    return (sum(e), e)


class FamilyInstance:
    """One member A_k of a Z-compatible family.

    ``kind`` is one of ``enveloping`` (U(g) for a root system), ``weylInvariants``
    (A_n^W with the crystallographic action), ``weylFull`` (A_n) or
    ``commutative`` (a polynomial ring, used for toy sentences).
    """

    def __init__(self, kind: str, zalg: ZAlgebra, domain: Domain, *,
                 root_system: Optional[RootSystem] = None,
                 chevalley: Optional[ChevalleyBasis] = None,
                 central: int = 0, nvars: int = 0):
        if kind not in KINDS:
            raise ValueError(f"unknown family kind {kind!r}")
        self.kind = kind
        self.zalg = zalg
        self.domain = domain
        self.root_system = root_system
        self.chevalley = chevalley
        self.central = central
        self.nvars = nvars
        self._pieces: Dict[Tuple[int, str], object] = {}

    # -- identity ------------------------------------------------------------
    @property
    def key(self):
        return (self.kind, self.zalg.name, self.domain.name)

    def __eq__(self, other):
        return isinstance(other, FamilyInstance) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"FamilyInstance({self.descriptor()}, {self.domain})"

    @property
    def sign_convention(self) -> Optional[str]:
        return self.chevalley.sign_convention if self.chevalley else None

    def descriptor(self) -> dict:
        if self.kind in ("enveloping", "weylInvariants"):
            return {"kind": self.kind, "type": self.root_system.label}
        return {"kind": self.kind, "n": self.nvars}

    def spec_string(self) -> str:
        d = self.descriptor()
        return f"{d['kind']}:{d.get('type', d.get('n'))}"

    @cached_property
    def weyl_group(self) -> List[WeylGroupElement]:
        if self.root_system is None:
            raise ValueError(f"{self.kind} family has no Weyl group")
        return weyl_group(self.root_system)

    def with_domain(self, domain: Domain) -> "FamilyInstance":
        if domain == self.domain:
            return self
        return FamilyInstance(self.kind, self.zalg, domain, root_system=self.root_system,
                              chevalley=self.chevalley, central=self.central, nvars=self.nvars)

    @property
    def generator_degree(self) -> int:
        """Filtration level whose non-scalar part generates the algebra (default)."""
        return 2 if self.kind == "weylInvariants" else 1

    def transcendence_degree(self) -> int:
        """Tdeg of the fraction field: dim g, 2n, or n."""
        if self.kind == "enveloping":
            return self.root_system.dimension
        if self.kind == "weylInvariants":
            return 2 * self.root_system.rank
        if self.kind == "weylFull":
            return 2 * self.nvars
        return self.nvars

    # -- element construction --------------------------------------------------
    @property
    def ngens(self) -> int:
        return self.zalg.ngens

    def element(self, terms: Mapping[Exps, object]) -> "AlgebraElement":
        dom = self.domain
        out = {}
        for e, c in terms.items():
            c = dom.convert(c)
            if c:
                e = tuple(e)
                if len(e) != self.ngens:
                    raise DomainError(f"monomial {e} has wrong arity")
                s = out.get(e)
                s = c if s is None else s + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return AlgebraElement(self, out)

    def scalar(self, c) -> "AlgebraElement":
        return self.element({(0,) * self.ngens: c})

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return self.scalar(1)

    def gen(self, name: str) -> "AlgebraElement":
        k = self.zalg.index[name]
        return AlgebraElement(self, {self.zalg.unit(k): self.domain.one})

    def gens(self) -> List["AlgebraElement"]:
        return [self.gen(g) for g in self.zalg.generators]

    def monomial(self, e: Exps) -> "AlgebraElement":
        return AlgebraElement(self, {tuple(e): self.domain.one})

    def parse(self, text: str, centers: Optional[Sequence["AlgebraElement"]] = None
              ) -> "AlgebraElement":
        """Parse the canonical element syntax (``x1``, ``y2``, ``e.3``, ``h.1``,
        ``f.2``; ``z1..zl`` name the supplied central elements)."""
        return parse_with(text, _ElementRing(self, centers or ()))

    def algebra_generators(self) -> List["AlgebraElement"]:
        """Generators that every central element must commute with."""
        if self.kind == "weylInvariants":
            from .filtration import filtration_piece
            piece = filtration_piece(self, self.generator_degree)
            return [v for v in piece.basis if v.degree() > 0]
        return self.gens()


class _ElementRing(RingBuilder):
    def __init__(self, fam: FamilyInstance, centers):
        self.fam = fam
        self.centers = centers

    def const(self, value):
        return self.fam.scalar(value)

    def var(self, name):
        m = re.fullmatch(r"z(\d+)", name)
        if m and name not in self.fam.zalg.index:
            k = int(m.group(1))
            if not 1 <= k <= len(self.centers):
                raise KeyError(name)
            return self.centers[k - 1]
        return self.fam.gen(name)

    def pow(self, a, k):
        return a ** k


class AlgebraElement:
    """Element in normal form: ordered monomial exponents -> nonzero coefficient."""

    __slots__ = ("family", "terms", "_hash")

    def __init__(self, family: FamilyInstance, terms: Dict[Exps, object]):
        self.family = family
        self.terms = terms
        self._hash = None

    def _check(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if other.family.zalg is not self.family.zalg or other.family.domain != self.family.domain:
            raise FamilyMismatch(f"{self.family} vs {other.family}")

    def _lift(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        return self.family.scalar(other)

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
        return AlgebraElement(self.family, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.family, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        zalg = self.family.zalg
        dom = self.family.domain
        out: Dict[Exps, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                c = c1 * c2
                for e, k in zalg.mono_times_mono(e1, e2).items():
                    s = out.get(e)
                    out[e] = c * k if s is None else s + c * k
        return AlgebraElement(self.family, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.family.one()
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> "AlgebraElement":
        c = self.family.domain.convert(c)
        if not c:
            return self.family.zero()
        return AlgebraElement(self.family, {e: v * c for e, v in self.terms.items()})

    def commutator(self, other: "AlgebraElement") -> "AlgebraElement":
        return self * other - other * self

    # -- inspection ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Filtration degree; -1 for zero."""
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self):
        e = max(self.terms, key=mono_key)
        return e, self.terms[e]

    def is_scalar(self) -> bool:
        return all(not any(e) for e in self.terms)

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError("not a scalar")
        return self.terms.get((0,) * self.family.ngens, self.family.domain.zero)

    def coefficient(self, e: Exps):
        return self.terms.get(tuple(e), self.family.domain.zero)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return (self.family.zalg is other.family.zalg
                    and self.family.domain == other.family.domain
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction)):
            return self == self.family.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.family.zalg.name, frozenset(self.terms.items())))
        return self._hash

    def reduce(self, domain: Domain) -> "AlgebraElement":
        """Base change to ``domain`` (for example QQ -> GF(p))."""
        fam = self.family.with_domain(domain)
        src = self.family.domain
        return fam.element({e: (src.to_fraction(c) if domain.characteristic == 0 else c)
                            for e, c in self.terms.items()})

    def denominators(self) -> List[int]:
        return [Fraction(c).denominator for c in self.terms.values()
                if isinstance(c, (int, Fraction))]

    def __str__(self):
        names = self.family.zalg.generators

        def mono(e):
            bits = []
            for n, k in zip(names, e):
                if k == 1:
                    bits.append(n)
                elif k > 1:
                    bits.append(f"{n}^{k}")
            return "*".join(bits)

        items = sorted(self.terms.items(), key=lambda t: mono_key(t[0]), reverse=True)
        return format_terms(items, mono)

    def __repr__(self):
        return f"<{self.family.spec_string()} {self}>"


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def weyl_family(n: int, domain: Domain = QQ) -> FamilyInstance:
    return FamilyInstance("weylFull", weyl_zalgebra(n), domain, nvars=n)


def commutative_family(n: int, domain: Domain = QQ) -> FamilyInstance:
    return FamilyInstance("commutative", commutative_zalgebra(n), domain, nvars=n)


def enveloping_family(label: str, domain: Domain = QQ) -> FamilyInstance:
    zalg, cb = enveloping_zalgebra(label.upper())
    rs = cb.root_system
    return FamilyInstance("enveloping", zalg, domain, root_system=rs, chevalley=cb,
                          central=rs.rank)


def invariant_family(label: str, domain: Domain = QQ) -> FamilyInstance:
    rs = build_root_system(label)
    return FamilyInstance("weylInvariants", weyl_zalgebra(rs.rank), domain, root_system=rs,
                          central=0, nvars=rs.rank)


def family_from_descriptor(desc: Mapping, domain: Domain = QQ) -> FamilyInstance:
    kind = desc.get("kind")
    if kind == "enveloping":
        return enveloping_family(desc["type"], domain)
    if kind == "weylInvariants":
        return invariant_family(desc["type"], domain)
    if kind == "weylFull":
        return weyl_family(int(desc["n"]), domain)
    if kind == "commutative":
        return commutative_family(int(desc["n"]), domain)
    raise ValueError(f"unknown family kind {kind!r}")


_ALIASES = {
    "enveloping": "enveloping", "u": "enveloping",
    "invariants": "weylInvariants", "weylinvariants": "weylInvariants",
    "weyl": "weylFull", "weylfull": "weylFull",
    "commutative": "commutative", "poly": "commutative",
}


def family_from_string(spec: str, domain: Domain = QQ) -> FamilyInstance:
    """``enveloping:A1``, ``invariants:A1``, ``weyl:2`` or ``commutative:1``."""
    if ":" not in spec:
        raise ValueError(f"family spec must look like kind:arg, got {spec!r}")
    kind, arg = spec.split(":", 1)
    kind = _ALIASES.get(kind.strip().lower())
    if kind is None:
        raise ValueError(f"unknown family kind in {spec!r}")
    if kind in ("enveloping", "weylInvariants"):
        return family_from_descriptor({"kind": kind, "type": arg.strip()}, domain)
    return family_from_descriptor({"kind": kind, "n": int(arg)}, domain)
