"""Sparse integer polynomials over a large variable catalogue.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable;
a polynomial is a dict from monomials to nonzero coefficients.  Dense
exponent tuples would be wasteful with thousands of unknowns, so
:class:`ncbirat.polycore.Poly` is only built once a system is small enough
to decide.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

from ..polycore import Domain, Poly
from ..polycore.parse import RingBuilder, format_terms, parse_with

Mono = Tuple[Tuple[int, int], ...]
SPoly = Dict[Mono, object]

ONE: Mono = ()


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    out: Dict[int, int] = dict(a)
    for v, k in b:
        out[v] = out.get(v, 0) + k
    return tuple(sorted(out.items()))


def mono_degree(m: Mono) -> int:
    return sum(k for _, k in m)


def variable(v: int) -> Mono:
    return ((v, 1),)


def add_term(p: SPoly, m: Mono, c) -> None:
    s = p.get(m, 0) + c
    if s:
        p[m] = s
    else:
        p.pop(m, None)


def add_into(p: SPoly, q: Mapping[Mono, object], scale=1) -> None:
    for m, c in q.items():
        add_term(p, m, c * scale)


def mul(p: Mapping[Mono, object], q: Mapping[Mono, object]) -> SPoly:
    out: SPoly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            add_term(out, mono_mul(m1, m2), c1 * c2)
    return out


def power(p: Mapping[Mono, object], k: int) -> SPoly:
    out: SPoly = {ONE: 1}
    for _ in range(k):
        out = mul(out, p)
    return out


def degree(p: Mapping[Mono, object]) -> int:
    return max((mono_degree(m) for m in p), default=-1)


def variables_of(p: Mapping[Mono, object]) -> set:
    return {v for m in p for v, _ in m}


def evaluate(p: Mapping[Mono, object], values: Mapping[int, object], zero=0):
    """Evaluate at ``values`` (missing variables count as ``zero``)."""
    total = zero
    for m, c in p.items():
        t = c
        for v, k in m:
            x = values.get(v, zero)
            if not x:
                t = zero
                break
            t = t * x ** k
        if t:
            total = total + t
    return total


def substitute(p: Mapping[Mono, object], v: int, q: Mapping[Mono, object]) -> SPoly:
    """Replace variable ``v`` by the polynomial ``q``."""
    out: SPoly = {}
    cache: Dict[int, SPoly] = {}
    for m, c in p.items():
        k = 0
        rest = []
        for w, e in m:
            if w == v:
                k = e
            else:
                rest.append((w, e))
        if not k:
            add_term(out, m, c)
            continue
        qk = cache.get(k)
        if qk is None:
            qk = cache[k] = power(q, k)
        base = tuple(rest)
        for m2, c2 in qk.items():
            add_term(out, mono_mul(base, m2), c * c2)
    return out


def is_integral(p: Mapping[Mono, object]) -> bool:
    return all(isinstance(c, int) and not isinstance(c, bool) for c in p.values())


def _order_key(m: Mono):
    return (-mono_degree(m), m)


def format_spoly(p: Mapping[Mono, object], names: Sequence[str]) -> str:
    def mono(m):
        return "*".join(names[v] if k == 1 else f"{names[v]}^{k}" for v, k in m)

    items = sorted(p.items(), key=lambda t: _order_key(t[0]))
    return format_terms(items, mono)


class _SparseRing(RingBuilder):
    def __init__(self, index: Mapping[str, int]):
        self.index = index

    def const(self, value: Fraction):
        v = int(value) if value.denominator == 1 else value
        return {ONE: v} if v else {}

    def var(self, name):
        return {variable(self.index[name]): 1}

    def add(self, a, b):
        out = dict(a)
        add_into(out, b)
        return out

    def sub(self, a, b):
        out = dict(a)
        add_into(out, b, -1)
        return out

    def mul(self, a, b):
        return mul(a, b)

    def neg(self, a):
        return {m: -c for m, c in a.items()}

    def pow(self, a, k):
        return power(a, k)


def parse_spoly(text: str, index: Mapping[str, int]) -> SPoly:
    return parse_with(text, _SparseRing(index))


def to_poly(p: Mapping[Mono, object], renumber: Mapping[int, int], nvars: int,
            domain: Domain) -> Poly:
    terms = {}
    for m, c in p.items():
        e = [0] * nvars
        for v, k in m:
            e[renumber[v]] = k
        terms[tuple(e)] = c
    return Poly(nvars, domain, terms)
