"""Root systems of types A-G, Chevalley structure constants over the integers,
and Weyl groups acting on the simple-root lattice.

Conventions: roots are integer tuples in the basis of simple roots;
``cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``,
so the simple reflection ``s_i`` sends ``alpha_j`` to ``alpha_j - cartan[j][i] alpha_i``.
Simple roots follow Bourbaki numbering.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

SIGN_CONVENTION = "extraspecial-height-lex/v1"
MAX_RANK = 8
DEFAULT_WEYL_CAP = 10**6

Vec = Tuple[int, ...]


class RootSystemError(ValueError):
    pass


class GroupTooLarge(RootSystemError):
    pass


class JacobiViolation(RuntimeError):
    pass


def _gram(typ: str, n: int) -> List[List[int]]:
    """Gram matrix of the simple roots, scaled so all entries are integers."""
    g = [[0] * n for _ in range(n)]

    if typ == "A":
        for i in range(n):
            g[i][i] = 2
        for i in range(n - 1):
            g[i][i + 1] = g[i + 1][i] = -1
    elif typ == "B":
        # alpha_n short
        for i in range(n):
            g[i][i] = 4 if i < n - 1 else 2
        for i in range(n - 1):
            g[i][i + 1] = g[i + 1][i] = -2
    elif typ == "C":
        # alpha_n long
        for i in range(n):
            g[i][i] = 2 if i < n - 1 else 4
        for i in range(n - 1):
            g[i][i + 1] = g[i + 1][i] = -1 if i < n - 2 else -2
    elif typ == "D":
        for i in range(n):
            g[i][i] = 2
        for i in range(n - 2):
            g[i][i + 1] = g[i + 1][i] = -1
        g[n - 3][n - 1] = g[n - 1][n - 3] = -1
    elif typ == "E":
        for i in range(n):
            g[i][i] = 2
        edges = [(0, 2), (2, 3), (1, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for a, b in edges:
            g[a][b] = g[b][a] = -1
    elif typ == "F":
        lens = [4, 4, 2, 2]
        for i in range(4):
            g[i][i] = lens[i]
        g[0][1] = g[1][0] = -2
        g[1][2] = g[2][1] = -2
        g[2][3] = g[3][2] = -1
    elif typ == "G":
        # alpha_1 short, alpha_2 long
        g[0][0], g[1][1] = 2, 6
        g[0][1] = g[1][0] = -3
    return g


_VALID = {
    "A": lambda n: 1 <= n,
    "B": lambda n: 2 <= n,
    "C": lambda n: 2 <= n,
    "D": lambda n: 4 <= n,
    "E": lambda n: 6 <= n <= 8,
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def parse_label(label: str) -> Tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", label)
    if not m:
        raise RootSystemError(f"not a Dynkin label: {label!r}")
    return m.group(1).upper(), int(m.group(2))


@dataclass(frozen=True)
class RootSystem:
    type: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    gram: Tuple[Tuple[int, ...], ...]
    roots: Tuple[Vec, ...]
    positive: Tuple[Vec, ...]

    @property
    def label(self) -> str:
        return f"{self.type}{self.rank}"

    @property
    def num_positive(self) -> int:
        return len(self.positive)

    @property
    def dimension(self) -> int:
        """Dimension of the simple Lie algebra: 2N + n."""
        return 2 * len(self.positive) + self.rank

    @cached_property
    def root_set(self):
        return frozenset(self.roots)

    @cached_property
    def positive_index(self) -> Dict[Vec, int]:
        return {a: i for i, a in enumerate(self.positive)}

    def inner(self, a: Sequence[int], b: Sequence[int]) -> int:
        n = self.rank
        return sum(a[i] * self.gram[i][j] * b[j] for i in range(n) for j in range(n) if a[i] and b[j])

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        """<a, b^vee> = 2 (a, b) / (b, b)."""
        return Fraction(2 * self.inner(a, b), self.inner(b, b))

    def height(self, a: Sequence[int]) -> int:
        return sum(a)

    def reflect(self, i: int, v: Sequence[int]) -> Vec:
        c = sum(v[j] * self.cartan[j][i] for j in range(self.rank))
        out = list(v)
        out[i] -= c
        return tuple(out)

    def coroot_coefficients(self, a: Sequence[int]) -> Vec:
        """alpha^vee in the basis of simple coroots."""
        aa = self.inner(a, a)
        out = []
        for i in range(self.rank):
            k = Fraction(a[i] * self.gram[i][i], aa)
            if k.denominator != 1:
                raise RootSystemError("non-integral coroot")
            out.append(int(k))
        return tuple(out)

    def string_p(self, alpha: Vec, beta: Vec) -> int:
        """Largest p with beta - p*alpha a root."""
        p = 0
        while tuple(b - (p + 1) * a for a, b in zip(alpha, beta)) in self.root_set:
            p += 1
        return p


def build_root_system(typ: str, rank: Optional[int] = None) -> RootSystem:
    if rank is None:
        typ, rank = parse_label(typ)
    typ = typ.upper()
    if typ not in _VALID or not _VALID[typ](rank):
        raise RootSystemError(f"invalid Dynkin datum {typ}{rank}")
    if rank > MAX_RANK:
        raise RootSystemError(f"rank {rank} exceeds cap {MAX_RANK}")
    gram = _gram(typ, rank)
    cartan = tuple(
        tuple(Fraction(2 * gram[i][j], gram[j][j]) for j in range(rank)) for i in range(rank))
    if any(c.denominator != 1 for row in cartan for c in row):
        raise RootSystemError("non-integral Cartan matrix")
    cartan = tuple(tuple(int(c) for c in row) for row in cartan)
    simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    seen = set(simple)
    queue = deque(simple)
    proto = RootSystem(typ, rank, cartan, tuple(map(tuple, gram)), (), ())
    while queue:
        v = queue.popleft()
        for i in range(rank):
            w = proto.reflect(i, v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    positive = sorted((r for r in seen if all(c >= 0 for c in r)),
                      key=lambda r: (sum(r), tuple(-c for c in r)))
    roots = tuple(positive) + tuple(tuple(-c for c in r) for r in positive)
    rs = RootSystem(typ, rank, cartan, tuple(map(tuple, gram)), roots, tuple(positive))
    if len(seen) != 2 * len(positive):
        raise RootSystemError("root closure is not symmetric")
    return rs


# ---------------------------------------------------------------------------
# Chevalley basis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChevalleyBasis:
    """Integer bracket table on the ordered basis e_alpha (alpha > 0), h_i, f_alpha.

    ``bracket[(i, j)]`` is a dict ``k -> int`` giving ``[b_i, b_j]``; absent pairs bracket to 0.
    """

    root_system: RootSystem
    symbols: Tuple[str, ...]
    bracket: Dict[Tuple[int, int], Dict[int, int]]
    structure: Dict[Tuple[Vec, Vec], int]
    sign_convention: str = SIGN_CONVENTION

    @property
    def dimension(self) -> int:
        return len(self.symbols)

    def index_of_root(self, alpha: Vec) -> int:
        rs = self.root_system
        N = rs.num_positive
        if alpha in rs.positive_index:
            return rs.positive_index[alpha]
        return N + rs.rank + rs.positive_index[tuple(-c for c in alpha)]

    def bracket_of(self, i: int, j: int) -> Dict[int, int]:
        return self.bracket.get((i, j), {})

    def jacobi_defects(self):
        """Yield basis triples (i, j, k), i < j < k, where the Jacobi identity fails."""
        d = self.dimension

        def br(x: Dict[int, int], k: int) -> Dict[int, int]:
            out: Dict[int, int] = {}
            for i, c in x.items():
                for t, v in self.bracket.get((i, k), {}).items():
                    out[t] = out.get(t, 0) + c * v
            return out

        for i in range(d):
            for j in range(i + 1, d):
                bij = self.bracket.get((i, j), {})
                for k in range(j + 1, d):
                    total: Dict[int, int] = {}
                    for x, z in ((bij, k), (self.bracket.get((j, k), {}), i),
                                 (self.bracket.get((k, i), {}), j)):
                        for t, v in br(x, z).items():
                            total[t] = total.get(t, 0) + v
                    if any(total.values()):
                        yield (i, j, k)

    def reduce_mod(self, p: int) -> Dict[Tuple[int, int], Dict[int, int]]:
        return {k: {t: v % p for t, v in row.items() if v % p} for k, row in self.bracket.items()}


def _structure_constants(rs: RootSystem) -> Dict[Tuple[Vec, Vec], int]:
    """N_{a,b} for all roots a, b with a + b a root, via extraspecial pairs."""
    pos = rs.positive
    order = {a: i for i, a in enumerate(pos)}
    roots = rs.root_set
    table: Dict[Tuple[Vec, Vec], int] = {}

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(a):
        return tuple(-x for x in a)

    def is_pos(a):
        return a in order

    def N(a: Vec, b: Vec) -> Fraction:
        s = add(a, b)
        if s not in roots:
            return Fraction(0)
        if is_pos(a) and is_pos(b):
            return Fraction(table[(a, b)])
        if not is_pos(a) and not is_pos(b):
            return -N(neg(a), neg(b))
        c = neg(s)
        # a + b + c = 0; N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
        if is_pos(b) == is_pos(c):
            return Fraction(rs.inner(c, c), rs.inner(a, a)) * N(b, c)
        return Fraction(rs.inner(c, c), rs.inner(b, b)) * N(c, a)

    for xi in pos:
        if sum(xi) == 1:
            continue
        pairs = [(a, tuple(x - y for x, y in zip(xi, a))) for a in pos]
        pairs = [(a, b) for a, b in pairs if b in order]
        special = sorted(((a, b) for a, b in pairs if order[a] < order[b]),
                         key=lambda ab: order[ab[0]])
        ea, eb = special[0]
        table[(ea, eb)] = rs.string_p(ea, eb) + 1
        table[(eb, ea)] = -table[(ea, eb)]
        xx = rs.inner(xi, xi)
        for g, d in special[1:]:
            # quadruple (ea, eb, -g, -d) sums to zero
            t1 = Fraction(0)
            s1 = tuple(x - y for x, y in zip(eb, g))
            if s1 in roots:
                t1 = N(eb, neg(g)) * N(ea, neg(d)) / rs.inner(s1, s1)
            t2 = Fraction(0)
            s2 = tuple(x - y for x, y in zip(ea, g))
            if s2 in roots:
                t2 = N(neg(g), ea) * N(eb, neg(d)) / rs.inner(s2, s2)
            val = xx * (t1 + t2) / table[(ea, eb)]
            # val = N_{g,d} since N_{-g,-d} = -N_{g,d}
            if val.denominator != 1:
                raise JacobiViolation(f"non-integral structure constant at {g}, {d}")
            table[(g, d)] = int(val)
            table[(d, g)] = -int(val)
    full: Dict[Tuple[Vec, Vec], int] = {}
    for a in rs.roots:
        for b in rs.roots:
            if add(a, b) in roots:
                v = N(a, b)
                if v.denominator != 1:
                    raise JacobiViolation("non-integral structure constant")
                full[(a, b)] = int(v)
    return full


def chevalley_constants(rs: RootSystem, verify: bool = True) -> ChevalleyBasis:
    n = rs.rank
    N = rs.num_positive
    pos = rs.positive
    symbols = ([f"e.{k + 1}" for k in range(N)] + [f"h.{i + 1}" for i in range(n)]
               + [f"f.{k + 1}" for k in range(N)])
    struct = _structure_constants(rs)

    def root_of(idx):
        if idx < N:
            return pos[idx]
        if idx >= N + n:
            return tuple(-c for c in pos[idx - N - n])
        return None

    bracket: Dict[Tuple[int, int], Dict[int, int]] = {}

    def put(i, j, val: Dict[int, int]):
        val = {k: v for k, v in val.items() if v}
        if val:
            bracket[(i, j)] = val
            bracket[(j, i)] = {k: -v for k, v in val.items()}

    dim = 2 * N + n
    for i in range(dim):
        for j in range(i + 1, dim):
            a, b = root_of(i), root_of(j)
            if a is None and b is None:
                continue
            if a is None or b is None:
                # [h_k, e_alpha] = <alpha, alpha_k^vee> e_alpha
                k = (i if a is None else j) - N
                alpha = b if a is None else a
                ridx = j if a is None else i
                c = sum(alpha[t] * rs.cartan[t][k] for t in range(n))
                val = {ridx: c}
                if a is None:
                    put(i, j, val)
                else:
                    put(i, j, {ridx: -c})
                continue
            s = tuple(x + y for x, y in zip(a, b))
            if not any(s):
                # [e_a, e_{-a}] = h_a when a > 0
                co = rs.coroot_coefficients(a if a in rs.positive_index else b)
                hv = {N + t: co[t] for t in range(n)}
                if a in rs.positive_index:
                    put(i, j, hv)
                else:
                    put(i, j, {k: -v for k, v in hv.items()})
            elif (a, b) in struct:
                k = (rs.positive_index[s] if s in rs.positive_index
                     else N + n + rs.positive_index[tuple(-c for c in s)])
                put(i, j, {k: struct[(a, b)]})
    cb = ChevalleyBasis(rs, tuple(symbols), bracket, struct)
    if verify:
        bad = next(cb.jacobi_defects(), None)
        if bad is not None:
            raise JacobiViolation(f"Jacobi identity fails on basis triple {bad}")
    return cb


# ---------------------------------------------------------------------------
# Weyl group
# ---------------------------------------------------------------------------

Matrix = Tuple[Tuple[int, ...], ...]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def simple_reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    """Column j holds the coordinates of s_i(alpha_j)."""
    n = rs.rank
    cols = [rs.reflect(i, tuple(1 if k == j else 0 for k in range(n))) for j in range(n)]
    return tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))


@dataclass(frozen=True)
class WeylGroupElement:
    matrix: Matrix
    word: Tuple[int, ...] = ()

    def apply(self, v: Sequence[int]) -> Vec:
        n = len(self.matrix)
        return tuple(sum(self.matrix[r][c] * v[c] for c in range(n)) for r in range(n))

    def __mul__(self, other: "WeylGroupElement") -> "WeylGroupElement":
        return WeylGroupElement(_matmul(self.matrix, other.matrix), self.word + other.word)

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return all(self.matrix[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def weyl_group(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP) -> List[WeylGroupElement]:
    """All elements by breadth-first closure; identity first, words are shortlex-minimal."""
    n = rs.rank
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    gens = [simple_reflection_matrix(rs, i) for i in range(n)]
    seen = {ident: ()}
    out = [WeylGroupElement(ident, ())]
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for i, s in enumerate(gens):
            w = _matmul(m, s)
            if w not in seen:
                seen[w] = seen[m] + (i,)
                if len(seen) > cap:
                    raise GroupTooLarge(f"|W| exceeds cap {cap}")
                out.append(WeylGroupElement(w, seen[w]))
                queue.append(w)
    return out


def crystallographic_matrices(W: Sequence[WeylGroupElement]) -> List[Matrix]:
    return [g.matrix for g in W]


def info_table(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP) -> str:
    W = weyl_group(rs, cap)
    lines = [
        f"type      {rs.label}",
        f"roots     {len(rs.roots)}",
        f"positive  {rs.num_positive}",
        f"dim g     {rs.dimension}",
        f"|W|       {len(W)}",
        "cartan",
    ]
    for row in rs.cartan:
        lines.append("  " + " ".join(f"{c:>3d}" for c in row))
    return "\n".join(lines) + "\n"
