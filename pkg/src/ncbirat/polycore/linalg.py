"""Exact sparse linear algebra over QQ and GF(p).

Rows are dictionaries ``column -> value``.  Over QQ every row is scaled to a
primitive integer vector and eliminated without fractions; the rational
normalization happens only when the reduced rows are handed back.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence, Tuple

from .domains import Domain, DomainError, ModInt

Row = Dict[int, object]


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {k: v // g for k, v in row.items()}
    return row


def _int_row(row: Row) -> Dict[int, int]:
    den = 1
    for v in row.values():
        d = v.denominator if isinstance(v, Fraction) else 1
        den = den * d // gcd(den, d)
    out = {}
    for k, v in row.items():
        iv = int(v * den) if isinstance(v, Fraction) else int(v) * den
        if iv:
            out[k] = iv
    return out


def _combine_int(a: Dict[int, int], ca: int, b: Dict[int, int], cb: int) -> Dict[int, int]:
    """ca*a - cb*b."""
    out = {k: ca * v for k, v in a.items()} if ca != 1 else dict(a)
    for k, v in b.items():
        w = out.get(k, 0) - cb * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _combine_mod(a: Dict[int, int], b: Dict[int, int], cb: int, p: int) -> Dict[int, int]:
    """a - cb*b (mod p)."""
    out = dict(a)
    for k, v in b.items():
        w = (out.get(k, 0) - cb * v) % p
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def rref(rows: Sequence[Row], domain: Domain) -> Tuple[List[Row], List[int]]:
    """Reduced row echelon form; returns (rows with pivot 1, pivot columns ascending)."""
    if not domain.is_field:
        raise DomainError(f"row reduction needs a field, got {domain}")
    p = domain.characteristic
    piv: Dict[int, Dict[int, int]] = {}
    for raw in rows:
        if p:
            r = {k: int(v) % p for k, v in raw.items() if int(v) % p}
        else:
            r = _int_row(raw)
        while r:
            c = min(r)
            if c not in piv:
                if p:
                    inv = pow(r[c], -1, p)
                    r = {k: v * inv % p for k, v in r.items()}
                else:
                    r = _primitive(r)
                piv[c] = r
                break
            pr = piv[c]
            if p:
                r = _combine_mod(r, pr, r[c], p)
            else:
                a, b = pr[c], r[c]
                g = gcd(a, b)
                r = _combine_int(r, a // g, pr, b // g)
                if r:
                    r = _primitive(r)
    cols = sorted(piv)
    for c in reversed(cols):
        pr = piv[c]
        for c2 in cols:
            if c2 >= c:
                break
            other = piv[c2]
            if c in other:
                if p:
                    piv[c2] = _combine_mod(other, pr, other[c], p)
                else:
                    a, b = pr[c], other[c]
                    g = gcd(a, b)
                    piv[c2] = _primitive(_combine_int(other, a // g, pr, b // g))
    out = []
    for c in cols:
        r = piv[c]
        if p:
            out.append({k: ModInt(v, p) for k, v in r.items()})
        else:
            lead = r[c]
            out.append({k: Fraction(v, lead) for k, v in r.items()})
    return out, cols


def rank(rows: Sequence[Row], domain: Domain) -> int:
    return len(rref(rows, domain)[1])


def nullspace(rows: Sequence[Row], ncols: int, domain: Domain) -> List[Dict[int, object]]:
    """Basis of ``{v : A v = 0}`` in reduced form.

    Each basis vector has its first nonzero coordinate at a distinct free
    column, equal to 1, and vanishes at every other vector's leading column.
    Vectors are returned sorted by leading column.
    """
    rev = [{ncols - 1 - k: v for k, v in r.items()} for r in rows]
    red, pivots = rref(rev, domain)
    pivset = set(pivots)
    one = domain.one
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = {f: one}
        for r, c in zip(red, pivots):
            val = r.get(f)
            if val:
                v[c] = -val
        basis.append({ncols - 1 - k: x for k, x in v.items()})
    basis.sort(key=lambda v: min(v))
    return basis


def solve_affine(rows: Sequence[Row], rhs: Sequence, ncols: int, domain: Domain):
    """One solution of ``A v = rhs`` (free variables zero), or ``None``."""
    aug = []
    for r, b in zip(rows, rhs):
        row = dict(r)
        if b:
            row[ncols] = b
        aug.append(row)
    red, pivots = rref(aug, domain)
    if pivots and pivots[-1] == ncols:
        return None
    sol = {}
    for r, c in zip(red, pivots):
        val = r.get(ncols)
        if val:
            sol[c] = val
    return sol
