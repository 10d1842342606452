"""Filtration pieces, the Weyl group action on A_n, fixed subspaces, the sl2
Casimir and growth diagnostics."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, gcd
from typing import Dict, List, Optional, Sequence, Tuple

from ..polycore import linalg
from ..polycore.domains import DomainError
from ..rootsys import WeylGroupElement, simple_reflection_matrix
from .family import AlgebraElement, FamilyInstance, mono_key

Exps = Tuple[int, ...]


class AveragingUnavailable(DomainError):
    """Averaging over W needs |W| invertible in the coefficient domain."""


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> Tuple[Exps, ...]:
    """Exponent tuples of total degree ``d``, in decreasing order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


def monomials_up_to(nvars: int, j: int) -> List[Exps]:
    """All monomials of degree <= j, decreasing under (degree, exponents)."""
    out = []
    for d in range(j, -1, -1):
        out.extend(monomials_of_degree(nvars, d))
    return out


@dataclass
class FiltrationPiece:
    family: FamilyInstance
    level: int
    basis: List[AlgebraElement]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def leading_monomials(self) -> List[Exps]:
        return [b.leading()[0] for b in self.basis]

    def contains(self, a: AlgebraElement) -> bool:
        if a.degree() > self.level:
            return False
        if self.family.kind != "weylInvariants":
            return True
        return is_invariant(a)

    def coordinates(self, a: AlgebraElement) -> List:
        """Coordinates of ``a`` in this basis (raises if ``a`` is outside)."""
        return _coords_in(self.basis, a)


def _coords_in(basis: Sequence[AlgebraElement], a: AlgebraElement) -> List:
    fam = a.family
    dom = fam.domain
    # echelon structure: each basis vector has a distinct leading monomial
    rem = a
    coords = [dom.zero] * len(basis)
    lead_index = {b.leading()[0]: k for k, b in enumerate(basis)}
    while rem:
        e, c = rem.leading()
        k = lead_index.get(e)
        if k is None:
            raise ValueError(f"element {a} is not in the span of the basis")
        b = basis[k]
        f = c / b.terms[e]
        coords[k] = coords[k] + f
        rem = rem - b.scale(f)
    return coords


# ---------------------------------------------------------------------------
# Weyl group action on A_n
# ---------------------------------------------------------------------------

def _int_inverse(m: Sequence[Sequence[int]]) -> List[List[int]]:
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [v / pv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = [[a[i][n + j] for j in range(n)] for i in range(n)]
    if any(v.denominator != 1 for row in inv for v in row):
        raise ValueError("matrix is not invertible over Z")
    return [[int(v) for v in row] for row in inv]


class GroupAction:
    """Linear action of a Weyl group element on A_n by conjugation.

    ``g(x_i) = sum_r M[r][i] x_r`` where column i of ``M`` is ``g(alpha_i)``;
    the y's transform by the inverse transpose so ``[y_i, x_j] = delta_ij`` is kept.
    """

    def __init__(self, family: FamilyInstance, g: WeylGroupElement):
        self.family = family
        self.element = g
        n = family.root_system.rank
        M = g.matrix
        Minv = _int_inverse(M)
        xs = [family.gen(f"x{i + 1}") for i in range(n)]
        ys = [family.gen(f"y{i + 1}") for i in range(n)]
        self.images: List[AlgebraElement] = []
        for i in range(n):
            img = family.zero()
            for r in range(n):
                if M[r][i]:
                    img = img + xs[r].scale(M[r][i])
            self.images.append(img)
        for i in range(n):
            img = family.zero()
            for r in range(n):
                # (M^{-T})[r][i] = Minv[i][r]
                if Minv[i][r]:
                    img = img + ys[r].scale(Minv[i][r])
            self.images.append(img)
        self._cache: Dict[Exps, AlgebraElement] = {}
        self._check_relations(n)

    def _check_relations(self, n: int):
        im = self.images
        one = self.family.one()
        for i in range(n):
            for j in range(n):
                if im[i].commutator(im[j]) or im[n + i].commutator(im[n + j]):
                    raise ValueError("action does not preserve commuting generators")
                want = one if i == j else self.family.zero()
                if im[n + i].commutator(im[j]) != want:
                    raise ValueError("action does not preserve [y_i, x_j] = delta_ij")

    def on_monomial(self, e: Exps) -> AlgebraElement:
        hit = self._cache.get(e)
        if hit is None:
            hit = self.family.one()
            for k, p in enumerate(e):
                for _ in range(p):
                    hit = hit * self.images[k]
            self._cache[e] = hit
        return hit

    def __call__(self, a: AlgebraElement) -> AlgebraElement:
        out = self.family.zero()
        for e, c in a.terms.items():
            out = out + self.on_monomial(e).scale(c)
        return out


_ACTIONS: Dict[Tuple, GroupAction] = {}


def group_action(family: FamilyInstance, g: WeylGroupElement) -> GroupAction:
    if family.root_system is None or family.zalg.name != f"A{family.root_system.rank}(Z)":
        raise ValueError(f"no Weyl group action defined on {family}")
    key = (family.key, g.matrix)
    act_ = _ACTIONS.get(key)
    if act_ is None:
        act_ = _ACTIONS[key] = GroupAction(family, g)
    return act_


def act(g: WeylGroupElement, a: AlgebraElement) -> AlgebraElement:
    return group_action(a.family, g)(a)


def simple_reflections(family: FamilyInstance) -> List[WeylGroupElement]:
    rs = family.root_system
    return [WeylGroupElement(simple_reflection_matrix(rs, i), (i,)) for i in range(rs.rank)]


def is_invariant(a: AlgebraElement) -> bool:
    return all(act(s, a) == a for s in simple_reflections(a.family))


# ---------------------------------------------------------------------------
# fixed subspaces and filtration pieces
# ---------------------------------------------------------------------------

def _primitive_integral(vec: Dict[int, object]) -> Dict[int, object]:
    fr = {k: Fraction(v) for k, v in vec.items()}
    den = 1
    for v in fr.values():
        den = den * v.denominator // gcd(den, v.denominator)
    ints = {k: int(v * den) for k, v in fr.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = ints[min(ints)]
    if lead < 0:
        g = -g
    return {k: Fraction(v // g) for k, v in ints.items()}


def _fixed_basis_degree(family: FamilyInstance, d: int, method: str) -> List[AlgebraElement]:
    monos = monomials_of_degree(family.ngens, d)
    col = {e: k for k, e in enumerate(monos)}
    dom = family.domain
    order = len(family.weyl_group)
    if method == "auto":
        method = "average" if dom.characteristic == 0 or order % dom.characteristic else "fixed"
    if method == "average":
        if dom.characteristic and order % dom.characteristic == 0:
            raise AveragingUnavailable(f"characteristic {dom.characteristic} divides |W| = {order}")
        inv = dom.one / dom.convert(order)
        rows = []
        for e in monos:
            total: Dict[int, object] = {}
            for g in family.weyl_group:
                for t, c in group_action(family, g).on_monomial(e).terms.items():
                    k = col[t]
                    total[k] = total.get(k, dom.zero) + c
            row = {k: v * inv for k, v in total.items() if v}
            if row:
                rows.append(row)
        vecs, _ = linalg.rref(rows, dom)
    elif method == "fixed":
        rows = []
        for s in simple_reflections(family):
            act_ = group_action(family, s)
            eqs: Dict[int, Dict[int, object]] = {}
            for j, e in enumerate(monos):
                img = dict(act_.on_monomial(e).terms)
                img[e] = img.get(e, dom.zero) - dom.one
                for t, c in img.items():
                    if c:
                        eqs.setdefault(col[t], {})[j] = c
            rows.extend(eqs.values())
        vecs = linalg.nullspace(rows, len(monos), dom)
    else:
        raise ValueError(f"unknown method {method!r}")
    out = []
    for v in vecs:
        if dom.characteristic == 0:
            v = _primitive_integral(v)
        out.append(family.element({monos[k]: c for k, c in v.items()}))
    out.sort(key=lambda b: mono_key(b.leading()[0]), reverse=True)
    return out


def graded_dimension(family: FamilyInstance, d: int) -> int:
    """Dimension of the degree-d part of the associated graded algebra."""
    if family.kind == "weylInvariants":
        return len(_invariant_degree(family, d, "auto"))
    return comb(d + family.ngens - 1, family.ngens - 1)


def _invariant_degree(family: FamilyInstance, d: int, method: str) -> List[AlgebraElement]:
    key = (d, method)
    hit = family._pieces.get(key)
    if hit is None:
        hit = family._pieces[key] = _fixed_basis_degree(family, d, method)
    return hit


def filtration_piece(family: FamilyInstance, j: int, method: str = "auto") -> FiltrationPiece:
    """Basis of the j-th filtration piece, ordered by decreasing leading monomial."""
    if j < 0:
        raise ValueError("filtration level must be nonnegative")
    if family.kind == "weylInvariants":
        basis = []
        for d in range(j, -1, -1):
            basis.extend(_invariant_degree(family, d, method))
        return FiltrationPiece(family, j, basis)
    basis = [family.monomial(e) for e in monomials_up_to(family.ngens, j)]
    return FiltrationPiece(family, j, basis)


def piece_dimension(family: FamilyInstance, j: int) -> int:
    return sum(graded_dimension(family, d) for d in range(j + 1))


# ---------------------------------------------------------------------------
# Casimir and growth
# ---------------------------------------------------------------------------

def casimir(family: FamilyInstance) -> AlgebraElement:
    """c = ef + fe + h^2/2 in U(sl2), checked central."""
    if family.kind != "enveloping" or family.root_system.label != "A1":
        raise ValueError("the quadratic Casimir is provided for U(sl2) only")
    if family.domain.characteristic == 2:
        raise DomainError("the Casimir needs 1/2")
    e, h, f = family.gen("e.1"), family.gen("h.1"), family.gen("f.1")
    c = e * f + f * e + (h * h).scale(family.domain.one / 2)
    for g in (e, h, f):
        if c.commutator(g):
            raise RuntimeError("Casimir failed the centrality check")
    return c


def _slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx


def growth_exponent(family: FamilyInstance, jmax: int, iterations: int = 25) -> float:
    """Estimate of the GK dimension from the growth of dim B_j for j in [jmax/2, jmax].

    A plain log-log slope is biased low at small j because dim B_j behaves
    like ``(j + (d+1)/2)^d / d!``.  The slope is therefore refit against
    ``log(j + s)`` with the shift ``s = (d+1)/2`` taken from the previous
    estimate, until it settles.  Advisory only.
    """
    if jmax < 4:
        raise ValueError("jmax must be at least 4")
    js = list(range(max(1, jmax // 2), jmax + 1))
    dims = []
    running = 0
    for d in range(jmax + 1):
        running += graded_dimension(family, d)
        if d >= js[0]:
            dims.append(running)
    ly = [math.log(v) for v in dims]
    est = _slope([math.log(j) for j in js], ly)
    for _ in range(iterations):
        shift = max(0.0, (est + 1) / 2)
        est = _slope([math.log(j + shift) for j in js], ly)
    return est
