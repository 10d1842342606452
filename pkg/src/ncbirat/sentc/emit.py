"""Emission of the existential sentence for a family at explicit bounds.

Every unknown element is a coordinate vector over a filtration-piece basis.
Identities between such elements are expanded monomial by monomial using the
family's integral structure constants, which gives one polynomial equation
with integer coefficients per ambient monomial.  All equations have degree
at most two: products of more than two unknowns are cut into chains of
composite unknowns.

Layout (``w_i = b_i^-1 a_i``, ``1 <= i <= 2m``):

* chains: for a node ``pi = pi' + (i,)`` with ``w_pi' = B_pi'^-1 A_pi'`` the
  multipliers satisfy ``b_pi A_pi' = a_pi b_i`` and then
  ``A_pi = a_pi a_i``, ``B_pi = b_pi B_pi'``, so ``w_pi = B_pi^-1 A_pi``;
* commutators: ``c_ij B_ji = d_ij B_ij`` and
  ``c_ij A_ji - d_ij A_ij = delta c_ij B_ji`` encode ``[w_j, w_i] = delta``;
* center: ``phi_k`` commute with the algebra generators, ``Phi_nu`` are
  their monomials;
* recovery: ``U_pi B_pi = D``, ``G_pi = U_pi A_pi``, ``H_{pi,nu} = Phi_nu G_pi``
  and for each generator ``x_k``: ``Q_k = sum mu H``, ``Q_k x_k = sum lambda H``;
* nonvanishing of ``b_i``, chain ``b_pi``, ``c_ij``, ``D`` and ``Q_k``: the
  first vector becomes the inequation list (some coordinate nonzero), every
  other one gets auxiliary scalars ``t`` with ``sum t_s X_s = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..ncalg import AlgebraElement, FamilyInstance, filtration_piece
from .profile import BoundProfile, Node
from .sparse import ONE, SPoly, add_term, mono_mul, variable

SCHEMA_VERSION = "sentc/1"


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Variable:
    name: str
    role: str
    index: Tuple[int, ...]


@dataclass
class ExistentialSentence:
    family: str
    profile: BoundProfile
    variables: List[Variable]
    equations: List[SPoly]
    inequations: List[SPoly]
    labels: List[str] = field(default_factory=list, compare=False)

    @property
    def N(self) -> int:
        return len(self.variables)

    def names(self) -> List[str]:
        return [v.name for v in self.variables]

    def index_of(self) -> Dict[str, int]:
        return {v.name: k for k, v in enumerate(self.variables)}


class Vec:
    """An unknown element: fresh variables ``ids`` over ``basis``."""

    def __init__(self, name: str, basis: Sequence[AlgebraElement], ids: Sequence[int]):
        self.name = name
        self.basis = list(basis)
        self.ids = list(ids)

    def factor(self):
        return [(variable(v), b) for v, b in zip(self.ids, self.basis)]


def _const(a: AlgebraElement):
    return [(ONE, a)]


def _as_factor(x):
    return x.factor() if isinstance(x, Vec) else _const(x)


def _fmt(parts) -> str:
    return "".join(f"_{p}" for p in parts)


class _Builder:
    def __init__(self, fam: FamilyInstance, profile: BoundProfile):
        self.fam = fam
        self.profile = profile
        self.variables: List[Variable] = []
        self.equations: List[SPoly] = []
        self.labels: List[str] = []
        self.nonzero: List[Vec] = []
        self._prod: Dict[Tuple[int, int], AlgebraElement] = {}
        self._pieces: Dict[int, list] = {}

    # -- catalogue ----------------------------------------------------------------
    def _new(self, name, role, index) -> int:
        if len(self.variables) >= self.profile.cap:
            raise CapExceeded(f"more than {self.profile.cap} unknowns; raise the cap or "
                              f"lower the bounds")
        self.variables.append(Variable(name, role, tuple(index)))
        return len(self.variables) - 1

    def basis(self, degree: int):
        hit = self._pieces.get(degree)
        if hit is None:
            hit = self._pieces[degree] = filtration_piece(self.fam, degree).basis
        return hit

    def vec(self, role: str, head: Sequence, degree: int, suffix: Sequence = (),
            index: Optional[Sequence[int]] = None) -> Vec:
        prefix = role + _fmt(head) + (("_n" + "_".join(map(str, suffix))) if suffix else "")
        idx = list(index if index is not None else head)
        ids = [self._new(f"{prefix}_s{s}", role, idx + [s])
               for s in range(len(self.basis(degree)))]
        return Vec(prefix, self.basis(degree), ids)

    def scalar(self, role: str, name: str, index: Sequence[int]) -> int:
        return self._new(name, role, index)

    # -- symbolic elements ----------------------------------------------------------
    def _mul(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        key = (id(a), id(b))
        hit = self._prod.get(key)
        if hit is None:
            hit = self._prod[key] = a * b
        return hit

    def term(self, sym, x, y=None, scale: int = 1, scalar: Optional[int] = None):
        """Add ``scale * [scalar] * x * y`` to ``sym`` (``x``, ``y`` are Vecs or elements)."""
        fx = _as_factor(x)
        fy = _as_factor(y) if y is not None else [(ONE, None)]
        lead = variable(scalar) if scalar is not None else ONE
        for m1, e1 in fx:
            for m2, e2 in fy:
                el = e1 if e2 is None else self._mul(e1, e2)
                mono = mono_mul(lead, mono_mul(m1, m2))
                for ex, c in el.terms.items():
                    if c.denominator != 1:
                        raise ValueError("non-integral structure constant")
                    poly = sym.setdefault(ex, {})
                    add_term(poly, mono, scale * int(c))

    def emit(self, sym, label: str):
        for ex in sorted(sym):
            poly = sym[ex]
            if poly:
                self.equations.append(poly)
                self.labels.append(label)


def _family_generators(fam: FamilyInstance) -> List[AlgebraElement]:
    piece = filtration_piece(fam, fam.generator_degree)
    return [v for v in piece.basis if v.degree() > 0]


@dataclass
class _Layout:
    """Handles to every unknown vector, shared with the assignment builder."""
    a: Dict[Node, Vec] = field(default_factory=dict)
    b: Dict[Node, Vec] = field(default_factory=dict)
    A: Dict[Node, object] = field(default_factory=dict)
    B: Dict[Node, object] = field(default_factory=dict)
    c: Dict[Tuple[int, int], Vec] = field(default_factory=dict)
    d: Dict[Tuple[int, int], Vec] = field(default_factory=dict)
    phi: List[Vec] = field(default_factory=list)
    Phi: Dict[Tuple[int, ...], object] = field(default_factory=dict)
    D: Optional[Vec] = None
    U: Dict[Node, Vec] = field(default_factory=dict)
    G: Dict[Node, object] = field(default_factory=dict)
    H: Dict[Tuple[Node, Tuple[int, ...]], object] = field(default_factory=dict)
    Q: List[Vec] = field(default_factory=list)
    lam: Dict[Tuple[int, Node, Tuple[int, ...]], int] = field(default_factory=dict)
    mu: Dict[Tuple[int, Node, Tuple[int, ...]], int] = field(default_factory=dict)
    t: List[Tuple[Vec, List[int]]] = field(default_factory=list)
    inequation_vec: Optional[Vec] = None
    generators: List[AlgebraElement] = field(default_factory=list)


def _check_family(fam: FamilyInstance, profile: BoundProfile):
    if fam.domain.characteristic != 0:
        raise ValueError("sentences are emitted for the characteristic-0 family")


def build(fam: FamilyInstance, profile: BoundProfile):
    _check_family(fam, profile)
    P = profile
    bld = _Builder(fam, P)
    L = _Layout()
    one = fam.one()
    L.A[()] = one
    L.B[()] = one

    # witnesses and chains
    for node in P.chain_nodes():
        if len(node) == 1:
            i = node[0]
            L.a[node] = bld.vec("a", node, P.d_witness)
            L.b[node] = bld.vec("b", node, P.d_witness)
            L.A[node] = L.a[node]
            L.B[node] = L.b[node]
            bld.nonzero.append(L.b[node])
    for node in P.chain_nodes():
        if len(node) < 2:
            continue
        prev, i = node[:-1], (node[-1],)
        L.a[node] = bld.vec("a", node, P.d_mult)
        L.b[node] = bld.vec("b", node, P.d_mult)
        L.A[node] = bld.vec("A", node, P.deg_A(node))
        L.B[node] = bld.vec("B", node, P.deg_B(node))
        bld.nonzero.append(L.b[node])
        s = {}
        bld.term(s, L.b[node], L.A[prev])
        bld.term(s, L.a[node], L.b[i], scale=-1)
        bld.emit(s, f"chain {node}: b A' = a b_i")
        s = {}
        bld.term(s, L.A[node])
        bld.term(s, L.a[node], L.a[i], scale=-1)
        bld.emit(s, f"chain {node}: A = a a_i")
        s = {}
        bld.term(s, L.B[node])
        bld.term(s, L.b[node], L.B[prev], scale=-1)
        bld.emit(s, f"chain {node}: B = b B'")

    # commutators [w_j, w_i] = delta
    for i, j in P.pairs():
        c = L.c[(i, j)] = bld.vec("c", (i, j), P.d_mult)
        d = L.d[(i, j)] = bld.vec("d", (i, j), P.d_mult)
        bld.nonzero.append(c)
        delta = 1 if i <= P.m and j == i + P.m else 0
        s = {}
        bld.term(s, c, L.B[(j, i)])
        bld.term(s, d, L.B[(i, j)], scale=-1)
        bld.emit(s, f"commutator {(i, j)}: c B_ji = d B_ij")
        s = {}
        bld.term(s, c, L.A[(j, i)])
        bld.term(s, d, L.A[(i, j)], scale=-1)
        if delta:
            bld.term(s, c, L.B[(j, i)], scale=-delta)
        bld.emit(s, f"commutator {(i, j)}: [w_{j}, w_{i}] = {delta}")

    # central elements and their monomials
    alg_gens = fam.algebra_generators()
    for k in range(P.l):
        phi = bld.vec("phi", (k + 1,), P.d_center)
        L.phi.append(phi)
        for g in alg_gens:
            s = {}
            bld.term(s, phi, g)
            bld.term(s, g, phi, scale=-1)
            bld.emit(s, f"phi_{k + 1} central")
    for nu in P.center_exponents():
        deg = sum(nu)
        if deg == 0:
            L.Phi[nu] = one
        elif deg == 1:
            L.Phi[nu] = L.phi[nu.index(1)]
        else:
            k = next(t for t, e in enumerate(nu) if e)
            prev = tuple(e - (t == k) for t, e in enumerate(nu))
            v = bld.vec("Phi", (), deg * P.d_center, suffix=nu, index=list(nu))
            L.Phi[nu] = v
            s = {}
            bld.term(s, v)
            bld.term(s, L.Phi[prev], L.phi[k], scale=-1)
            bld.emit(s, f"Phi {nu}")

    # common denominator
    L.D = bld.vec("D", (), P.d_den)
    bld.nonzero.append(L.D)
    L.G[()] = L.D
    for node in P.recovery_nodes()[1:]:
        U = L.U[node] = bld.vec("U", node, P.d_den)
        G = L.G[node] = bld.vec("G", node, P.deg_G(node))
        s = {}
        bld.term(s, U, L.B[node])
        bld.term(s, L.D, scale=-1)
        bld.emit(s, f"denominator {node}: U B = D")
        s = {}
        bld.term(s, G)
        bld.term(s, U, L.A[node], scale=-1)
        bld.emit(s, f"numerator {node}: G = U A")
    for node in P.recovery_nodes():
        for nu in P.center_exponents():
            if not any(nu):
                L.H[(node, nu)] = L.G[node]
                continue
            v = bld.vec("H", node, P.deg_H(node, nu), suffix=nu, index=list(node) + list(nu))
            L.H[(node, nu)] = v
            s = {}
            bld.term(s, v)
            bld.term(s, L.Phi[nu], L.G[node], scale=-1)
            bld.emit(s, f"H {node} {nu}")

    # recovery of each generator
    L.generators = _family_generators(fam)
    keys = [(node, nu) for node in P.recovery_nodes() for nu in P.center_exponents()]
    for k, x in enumerate(L.generators, start=1):
        for node, nu in keys:
            tail = _fmt(node) + "_n" + "_".join(map(str, nu)) if nu else _fmt(node)
            L.lam[(k, node, nu)] = bld.scalar("lambda", f"lam_{k}{tail}",
                                              [k] + list(node) + list(nu))
            L.mu[(k, node, nu)] = bld.scalar("mu", f"mu_{k}{tail}",
                                             [k] + list(node) + list(nu))
        Q = bld.vec("Q", (k,), P.deg_Q())
        L.Q.append(Q)
        bld.nonzero.append(Q)
        s = {}
        bld.term(s, Q)
        for node, nu in keys:
            bld.term(s, L.H[(node, nu)], scale=-1, scalar=L.mu[(k, node, nu)])
        bld.emit(s, f"Q_{k} = sum mu H")
        s = {}
        bld.term(s, Q, x)
        for node, nu in keys:
            bld.term(s, L.H[(node, nu)], scale=-1, scalar=L.lam[(k, node, nu)])
        bld.emit(s, f"Q_{k} x_{k} = sum lambda H")

    # nonvanishing
    inequations: List[SPoly] = []
    for n, v in enumerate(bld.nonzero):
        if n == 0:
            L.inequation_vec = v
            inequations = [{variable(x): 1} for x in v.ids]
            continue
        ts = [bld.scalar("t", f"t_{v.name}_s{s}", [n, s]) for s in range(len(v.ids))]
        L.t.append((v, ts))
        poly: SPoly = {}
        for tv, xv in zip(ts, v.ids):
            add_term(poly, mono_mul(variable(tv), variable(xv)), 1)
        add_term(poly, ONE, -1)
        bld.equations.append(poly)
        bld.labels.append(f"{v.name} nonzero")

    sent = ExistentialSentence(fam.spec_string(), P, bld.variables, bld.equations,
                               inequations, bld.labels)
    return sent, L


def emit_sentence(fam: FamilyInstance, profile: BoundProfile) -> ExistentialSentence:
    return build(fam, profile)[0]


def catalogue_size(fam: FamilyInstance, profile: BoundProfile) -> int:
    """Number of unknowns predicted from the bounds alone."""
    from ..ncalg import piece_dimension

    P = profile
    dim = lambda d: piece_dimension(fam, d)  # noqa: E731
    nodes = P.chain_nodes()
    singles = [n for n in nodes if len(n) == 1]
    longer = [n for n in nodes if len(n) > 1]
    rec = P.recovery_nodes()
    exps = P.center_exponents()
    ngen = piece_dimension(fam, fam.generator_degree) - 1
    vec_dims = []
    vec_dims += [dim(P.d_witness)] * 2 * len(singles)                    # a_i, b_i
    for n in longer:
        vec_dims += [dim(P.d_mult)] * 2 + [dim(P.deg_A(n)), dim(P.deg_B(n))]
    vec_dims += [dim(P.d_mult)] * 2 * len(P.pairs())                     # c, d
    vec_dims += [dim(P.d_center)] * P.l                                  # phi
    vec_dims += [dim(sum(nu) * P.d_center) for nu in exps if sum(nu) >= 2]
    vec_dims += [dim(P.d_den)]                                           # D
    for n in rec[1:]:
        vec_dims += [dim(P.d_den), dim(P.deg_G(n))]                      # U, G
    vec_dims += [dim(P.deg_H(n, nu)) for n in rec for nu in exps if any(nu)]
    vec_dims += [dim(P.deg_Q())] * ngen                                  # Q
    total = sum(vec_dims) + 2 * ngen * len(rec) * len(exps)              # + lambda, mu
    # t scalars: every nonvanishing vector except the first
    nonzero = ([dim(P.d_witness)] * len(singles) + [dim(P.d_mult)] * len(longer)
               + [dim(P.d_mult)] * len(P.pairs()) + [dim(P.d_den)] + [dim(P.deg_Q())] * ngen)
    return total + sum(nonzero[1:])
