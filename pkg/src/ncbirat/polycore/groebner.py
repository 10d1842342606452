"""Buchberger's algorithm with Gebauer-Moeller pair elimination, multivariate
division, Rabinowitsch radical membership and nonemptiness of locally closed
sets over the algebraic closure of the prime field."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .domains import Domain, DomainError
from .poly import GREVLEX, MonomialOrder, Poly

Exps = Tuple[int, ...]


class ResourceLimit(RuntimeError):
    """A Groebner computation exceeded its configured pair or size budget."""


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exps, b: Exps) -> Exps:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: Exps, b: Exps) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class _Lead:
    """Polynomial with its leading term cached for one order."""

    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms: Dict[Exps, object], key):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]


def _check_field(polys: Sequence[Poly]):
    if not polys:
        return
    dom = polys[0].domain
    n = polys[0].nvars
    for p in polys:
        if p.domain != dom or p.nvars != n:
            raise DomainError("generators must share arity and coefficient domain")
    if not dom.is_field:
        raise DomainError(f"Groebner bases need a field, got {dom}")


def _reduce_terms(f: Dict[Exps, object], basis: List[_Lead], key, full: bool = True):
    """Remainder of ``f`` modulo ``basis``.  If ``full`` is false, stop at the
    first irreducible leading term (top reduction only)."""
    f = dict(f)
    rem: Dict[Exps, object] = {}
    while f:
        lm = max(f, key=key)
        lc = f[lm]
        for g in basis:
            if _divides(g.lm, lm):
                q = tuple(a - b for a, b in zip(lm, g.lm))
                factor = lc / g.lc
                for e, c in g.terms.items():
                    t = tuple(a + b for a, b in zip(e, q))
                    v = f.get(t)
                    v = -factor * c if v is None else v - factor * c
                    if v:
                        f[t] = v
                    else:
                        f.pop(t, None)
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[lm] = lc
            del f[lm]
    return rem


def _spoly(f: _Lead, g: _Lead) -> Dict[Exps, object]:
    lcm = _lcm(f.lm, g.lm)
    qf = tuple(a - b for a, b in zip(lcm, f.lm))
    qg = tuple(a - b for a, b in zip(lcm, g.lm))
    out: Dict[Exps, object] = {}
    for e, c in f.terms.items():
        t = tuple(a + b for a, b in zip(e, qf))
        out[t] = c / f.lc
    for e, c in g.terms.items():
        t = tuple(a + b for a, b in zip(e, qg))
        v = out.get(t)
        v = -c / g.lc if v is None else v - c / g.lc
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _update(G: List[int], B: List[Tuple[int, int]], h: int, polys: List[_Lead]):
    """Gebauer-Moeller UPDATE (Becker-Weispfenning)."""
    lh = polys[h].lm
    C = [(h, g) for g in G]
    D: List[Tuple[int, int]] = []
    while C:
        pair = C.pop(0)
        g1 = pair[1]
        l1 = _lcm(lh, polys[g1].lm)
        if _coprime(lh, polys[g1].lm):
            D.append(pair)
            continue
        redundant = False
        for (_, g2) in C + D:
            if _divides(_lcm(lh, polys[g2].lm), l1):
                redundant = True
                break
        if not redundant:
            D.append(pair)
    E = [(a, b) for (a, b) in D if not _coprime(lh, polys[b].lm)]
    B_new = []
    for (g1, g2) in B:
        l12 = _lcm(polys[g1].lm, polys[g2].lm)
        if (_divides(lh, l12) and _lcm(polys[g1].lm, lh) != l12
                and _lcm(lh, polys[g2].lm) != l12):
            continue
        B_new.append((g1, g2))
    B_new.extend(E)
    G_new = [g for g in G if not _divides(lh, polys[g].lm)]
    G_new.append(h)
    return G_new, B_new


def groebner_basis(ideal: Sequence[Poly], order: MonomialOrder = GREVLEX,
                   max_pairs: Optional[int] = None) -> List[Poly]:
    """Reduced Groebner basis, monic, sorted by decreasing leading monomial."""
    ideal = [p for p in ideal]
    if not ideal:
        raise ValueError("empty generator list")
    _check_field(ideal)
    nvars, dom = ideal[0].nvars, ideal[0].domain
    key = order.key
    gens = [p for p in ideal if p]
    if not gens:
        return []
    polys: List[_Lead] = []
    G: List[int] = []
    B: List[Tuple[int, int]] = []
    for p in gens:
        r = _reduce_terms(p.terms, [polys[g] for g in G], key)
        if not r:
            continue
        polys.append(_Lead(r, key))
        G, B = _update(G, B, len(polys) - 1, polys)
    processed = 0
    while B:
        # normal selection strategy: smallest lcm first
        B.sort(key=lambda pr: key(_lcm(polys[pr[0]].lm, polys[pr[1]].lm)))
        i, j = B.pop(0)
        processed += 1
        if max_pairs is not None and processed > max_pairs:
            raise ResourceLimit(f"more than {max_pairs} critical pairs")
        s = _spoly(polys[i], polys[j])
        if not s:
            continue
        r = _reduce_terms(s, [polys[g] for g in G], key)
        if not r:
            continue
        polys.append(_Lead(r, key))
        if not any(r.keys() - {(0,) * nvars}):
            # unit ideal
            return [Poly.constant(1, nvars, dom)]
        G, B = _update(G, B, len(polys) - 1, polys)
    return _reduced([polys[g] for g in G], nvars, dom, key)


def _reduced(basis: List[_Lead], nvars: int, dom: Domain, key) -> List[Poly]:
    minimal = [g for g in basis
               if not any(h is not g and _divides(h.lm, g.lm) and (h.lm != g.lm or id(h) < id(g))
                          for h in basis)]
    out: List[_Lead] = []
    for g in minimal:
        others = [h for h in minimal if h is not g]
        tail = dict(g.terms)
        del tail[g.lm]
        r = _reduce_terms(tail, others, key)
        r[g.lm] = g.lc
        inv = dom.one / g.lc
        out.append(_Lead({e: c * inv for e, c in r.items()}, key))
    out.sort(key=lambda h: key(h.lm), reverse=True)
    return [Poly(nvars, dom, h.terms, _clean=True) for h in out]


def normal_form(f: Poly, basis: Sequence[Poly], order: MonomialOrder = GREVLEX) -> Poly:
    """Remainder of ``f`` on division by ``basis``."""
    for g in basis:
        f._check(g)
    key = order.key
    leads = [_Lead(g.terms, key) for g in basis if g]
    return Poly(f.nvars, f.domain, _reduce_terms(f.terms, leads, key), _clean=True)


def is_unit_ideal(basis: Sequence[Poly]) -> bool:
    return any(g.is_constant() and g for g in basis)


def in_ideal(f: Poly, ideal: Sequence[Poly], order: MonomialOrder = GREVLEX) -> bool:
    ideal = [g for g in ideal if g]
    if not ideal:
        return f.is_zero()
    return normal_form(f, groebner_basis(ideal, order), order).is_zero()


def in_radical(f: Poly, ideal: Sequence[Poly], max_pairs: Optional[int] = None) -> bool:
    """Rabinowitsch: ``f`` lies in the radical iff ``1`` lies in ``I + <1 - t f>``."""
    for g in ideal:
        f._check(g)
    if not f.domain.is_field:
        raise DomainError(f"radical membership needs a field, got {f.domain}")
    if f.is_zero():
        return True
    n = f.nvars + 1
    t = Poly.var(n - 1, n, f.domain)
    gens = [g.extend(n) for g in ideal] + [1 - t * f.extend(n)]
    return is_unit_ideal(groebner_basis(gens, GREVLEX, max_pairs=max_pairs))


@dataclass(frozen=True)
class LocallyClosedSystem:
    """Common zeros of ``equations`` where at least one inequation is nonzero.

    With no inequations the set is just the zero set of the equations.
    """

    nvars: int
    equations: Tuple[Poly, ...] = ()
    inequations: Tuple[Poly, ...] = ()
    characteristic: int = 0

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(self.equations))
        object.__setattr__(self, "inequations", tuple(self.inequations))
        for p in self.equations + self.inequations:
            if p.nvars != self.nvars:
                raise DomainError(f"polynomial arity {p.nvars} != {self.nvars}")
            if p.domain.characteristic != self.characteristic:
                raise DomainError(
                    f"coefficients in {p.domain} for a characteristic {self.characteristic} system")

    def is_satisfied_by(self, point: Sequence) -> bool:
        if any(p.evaluate(point) != 0 for p in self.equations):
            return False
        return not self.inequations or any(g.evaluate(point) != 0 for g in self.inequations)


def decide_locally_closed_nonempty(sys: LocallyClosedSystem,
                                   max_pairs: Optional[int] = None) -> bool:
    """True iff the system has a point over the algebraic closure."""
    eqs = [p for p in sys.equations if p]
    if sys.inequations:
        return any(not in_radical(g, eqs, max_pairs=max_pairs) for g in sys.inequations)
    if not eqs:
        return True
    return not is_unit_ideal(groebner_basis(eqs, GREVLEX, max_pairs=max_pairs))
