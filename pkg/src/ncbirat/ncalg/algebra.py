"""Integral PBW-type algebras: ordered generators u_0 < u_1 < ... with
commutation rules ``u_i u_j = u_j u_i + [u_i, u_j]`` for ``i > j`` where each
bracket is an integer combination of 1 and the generators.

Weyl algebras, enveloping algebras of Chevalley Z-forms and polynomial rings
are all of this shape.  Normal forms are ordered monomials stored as exponent
tuples; products are computed once over the integers and cached, so every
coefficient domain shares the same straightening work.
"""
from __future__ import annotations

import sys
from functools import lru_cache
from typing import Dict, Mapping, Optional, Sequence, Tuple

from ..rootsys import ChevalleyBasis, build_root_system, chevalley_constants

Exps = Tuple[int, ...]
IntElem = Dict[Exps, int]

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


def _acc(out: IntElem, src: Mapping[Exps, int], c: int = 1):
    for e, v in src.items():
        w = out.get(e, 0) + c * v
        if w:
            out[e] = w
        else:
            out.pop(e, None)


class ZAlgebra:
    """Ordered generators and an integral commutation table, with product caches."""

    def __init__(self, name: str, generators: Sequence[str],
                 brackets: Mapping[Tuple[int, int], Mapping[Exps, int]]):
        self.name = name
        self.generators = tuple(generators)
        self.ngens = len(self.generators)
        # keep only i > j; values are integral elements of degree <= 1
        self.brackets: Dict[Tuple[int, int], IntElem] = {}
        for (i, j), v in brackets.items():
            if i > j and v:
                self.brackets[(i, j)] = {tuple(e): int(c) for e, c in v.items() if c}
        self.commutative = not self.brackets
        self._gen_cache: Dict[Tuple[Exps, int], IntElem] = {}
        self._mono_cache: Dict[Tuple[Exps, Exps], IntElem] = {}
        self.index = {g: k for k, g in enumerate(self.generators)}

    def unit(self, k: int) -> Exps:
        return tuple(1 if i == k else 0 for i in range(self.ngens))

    def mono_times_gen(self, m: Exps, g: int) -> IntElem:
        key = (m, g)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        u = -1
        for k in range(self.ngens - 1, -1, -1):
            if m[k]:
                u = k
                break
        if u <= g or (self.commutative):
            e = list(m)
            e[g] += 1
            out = {tuple(e): 1}
        else:
            mp = list(m)
            mp[u] -= 1
            mp = tuple(mp)
            out: IntElem = {}
            # m * g = (m' * g) * u + m' * [u, g]
            for t, c in self.mono_times_gen(mp, g).items():
                _acc(out, self.mono_times_gen(t, u), c)
            br = self.brackets.get((u, g))
            if br:
                for e, c in br.items():
                    _acc(out, self.mono_times_mono(mp, e), c)
        self._gen_cache[key] = out
        return out

    def mono_times_mono(self, m1: Exps, m2: Exps) -> IntElem:
        if not any(m2):
            return {m1: 1}
        if not any(m1):
            return {m2: 1}
        key = (m1, m2)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        last = max(k for k in range(self.ngens) if m1[k])
        first = min(k for k in range(self.ngens) if m2[k])
        if self.commutative or last <= first:
            out = {tuple(a + b for a, b in zip(m1, m2)): 1}
        else:
            cur: IntElem = {m1: 1}
            for g in range(self.ngens):
                for _ in range(m2[g]):
                    nxt: IntElem = {}
                    for t, c in cur.items():
                        _acc(nxt, self.mono_times_gen(t, g), c)
                    cur = nxt
            out = cur
        self._mono_cache[key] = out
        return out

    def __repr__(self):
        return f"ZAlgebra({self.name})"


@lru_cache(maxsize=None)
def weyl_zalgebra(n: int) -> ZAlgebra:
    """A_n(Z): generators x1..xn, y1..yn with y_i x_i = x_i y_i + 1."""
    gens = [f"x{i + 1}" for i in range(n)] + [f"y{i + 1}" for i in range(n)]
    zero = (0,) * (2 * n)
    brackets = {(n + i, i): {zero: 1} for i in range(n)}
    return ZAlgebra(f"A{n}(Z)", gens, brackets)


@lru_cache(maxsize=None)
def commutative_zalgebra(n: int) -> ZAlgebra:
    gens = [f"x{i + 1}" for i in range(n)]
    return ZAlgebra(f"Z[x1..x{n}]", gens, {})


@lru_cache(maxsize=None)
def enveloping_zalgebra(label: str) -> Tuple[ZAlgebra, ChevalleyBasis]:
    """U(g_Z) with PBW order e's < h's < f's."""
    rs = build_root_system(label)
    cb = chevalley_constants(rs)
    d = cb.dimension
    brackets = {}
    for (i, j), val in cb.bracket.items():
        if i > j:
            brackets[(i, j)] = {tuple(1 if t == k else 0 for t in range(d)): c
                                for k, c in val.items()}
    return ZAlgebra(f"U({rs.label})_Z", cb.symbols, brackets), cb
