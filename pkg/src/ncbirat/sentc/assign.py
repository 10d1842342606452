"""From a verified certificate to a point of the emitted sentence."""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..gkcert import WitnessCertificate, verify_certificate
from ..ncalg import AlgebraElement, filtration_piece
from ..orefrac import NoSolutionAtBound, solve_ore
from .emit import ExistentialSentence, Vec, build, catalogue_size
from .profile import DEFAULT_CAP, BoundProfile, Node
from .sparse import evaluate


class BoundsMismatch(ValueError):
    """The certificate does not fit the requested bound profile."""


class NotVerified(ValueError):
    pass


@dataclass
class WitnessData:
    A: Dict[Node, AlgebraElement]
    B: Dict[Node, AlgebraElement]
    a: Dict[Node, AlgebraElement]
    b: Dict[Node, AlgebraElement]
    c: Dict[Tuple[int, int], AlgebraElement]
    d: Dict[Tuple[int, int], AlgebraElement]
    D: AlgebraElement
    U: Dict[Node, AlgebraElement]
    mult_level: int


def _ore(x: AlgebraElement, y: AlgebraElement, bound: int, what: str):
    try:
        return solve_ore(x, y, bound)
    except NoSolutionAtBound as exc:
        raise BoundsMismatch(f"{what}: no Ore multipliers of degree <= {bound}") from exc


def witness_data(cert: WitnessCertificate, profile: BoundProfile, d_mult: int,
                 d_den: int) -> WitnessData:
    fam = cert.family
    one = fam.one()
    A: Dict[Node, AlgebraElement] = {(): one}
    B: Dict[Node, AlgebraElement] = {(): one}
    a, b = {}, {}
    level = 0
    for node in profile.chain_nodes():
        if len(node) == 1:
            w = cert.witnesses[node[0] - 1]
            a[node], b[node] = w.num, w.den
            A[node], B[node] = w.num, w.den
    for node in profile.chain_nodes():
        if len(node) < 2:
            continue
        prev, i = node[:-1], (node[-1],)
        if not A[prev]:
            b[node], a[node] = one, fam.zero()
        else:
            sol = _ore(A[prev], b[i], d_mult, f"chain {node}")
            b[node], a[node] = sol.c, sol.d
            level = max(level, sol.level)
        A[node] = a[node] * a[i]
        B[node] = b[node] * B[prev]
    c, d = {}, {}
    for i, j in profile.pairs():
        sol = _ore(B[(j, i)], B[(i, j)], d_mult, f"commutator {(i, j)}")
        c[(i, j)], d[(i, j)] = sol.c, sol.d
        level = max(level, sol.level)
    D = one
    U: Dict[Node, AlgebraElement] = {}
    for node in profile.recovery_nodes()[1:]:
        sol = _ore(D, B[node], d_den, f"common denominator at {node}")
        D = sol.c * D
        for k in U:
            U[k] = sol.c * U[k]
        U[node] = sol.d
    return WitnessData(A, B, a, b, c, d, D, U, level)


def _degree(x: AlgebraElement) -> int:
    return max(0, x.degree())


def profile_from_certificate(cert: WitnessCertificate, cap: Optional[int] = None
                             ) -> BoundProfile:
    """Smallest bounds under which :func:`witness_to_assignment` succeeds."""
    l = cert.l
    M = 1
    cdeg = 0
    for q, p in cert.recovery:
        for poly in (q, p):
            for e in poly.terms:
                M = max(M, sum(e[l:]))
                cdeg = max(cdeg, sum(e[:l]))
    d_witness = max([_degree(w.den) for w in cert.witnesses]
                    + [_degree(w.num) for w in cert.witnesses], default=0)
    d_center = max([_degree(z) for z in cert.centers], default=0)
    probe = BoundProfile(cert.m, l, M, M, cdeg, d_witness, 0, d_center, 0,
                         **({"cap": cap} if cap else {}))
    top = cert.bounds[1]
    data = witness_data(cert, probe, top, top)
    d_mult = data.mult_level
    d_den = _degree(data.D)
    out = BoundProfile(cert.m, l, M, M, cdeg, d_witness, d_mult, d_center, d_den,
                       cap=cap or DEFAULT_CAP)
    if cap is None:
        # certificate-induced bounds get exactly the room they need
        need = catalogue_size(cert.family, out)
        if need > out.cap:
            out = replace(out, cap=need)
    return out


def _coords(fam, degree: int, x: AlgebraElement, what: str):
    if x.degree() > degree:
        raise BoundsMismatch(f"{what} has degree {x.degree()} > {degree}")
    try:
        return filtration_piece(fam, degree).coordinates(x)
    except ValueError as exc:
        raise BoundsMismatch(f"{what} is outside its filtration piece") from exc


def _recovery_coefficients(cert: WitnessCertificate, profile: BoundProfile):
    """{(k, node, nu): (lambda, mu)} read off the recovery polynomials."""
    l = cert.l
    out: Dict[Tuple[int, Node, Tuple[int, ...]], List[Fraction]] = {}
    nodes = set(profile.recovery_nodes())
    exps = set(profile.center_exponents())
    for k, (q, p) in enumerate(cert.recovery, start=1):
        for slot, poly in ((0, p), (1, q)):
            for e, c in poly.terms.items():
                nu = tuple(e[:l])
                node = tuple(i + 1 for i, a in enumerate(e[l:]) for _ in range(a))
                if node not in nodes or nu not in exps:
                    raise BoundsMismatch(f"recovery[{k - 1}] monomial outside the bounds")
                out.setdefault((k, node, nu), [Fraction(0), Fraction(0)])[slot] += Fraction(c)
    return out


def witness_to_assignment(cert: WitnessCertificate, profile: Optional[BoundProfile] = None,
                          check_verified: bool = True
                          ) -> Tuple[ExistentialSentence, Dict[int, Fraction]]:
    """Emit the sentence for the certificate's family and the point given by the certificate."""
    if cert.domain.characteristic != 0:
        raise ValueError("certificates are mapped to assignments in characteristic 0")
    if check_verified:
        rep = verify_certificate(cert, growth=False)
        if not rep.passed:
            raise NotVerified(f"certificate verdict is {rep.verdict}")
    P = profile or profile_from_certificate(cert)
    if (P.m, P.l) != (cert.m, cert.l):
        raise BoundsMismatch("profile m, l differ from the certificate")
    fam = cert.family
    sent, L = build(fam, P)
    data = witness_data(cert, P, P.d_mult, P.d_den)
    val: Dict[int, Fraction] = {}

    def put(vec: Vec, x: AlgebraElement, degree: int):
        for v, c in zip(vec.ids, _coords(fam, degree, x, vec.name)):
            if c:
                val[v] = Fraction(c)

    elements: Dict[str, AlgebraElement] = {}

    def put_named(vec, x, degree):
        if isinstance(vec, Vec):
            put(vec, x, degree)
            elements[vec.name] = x

    for node, vec in L.a.items():
        put_named(vec, data.a[node], P.d_witness if len(node) == 1 else P.d_mult)
    for node, vec in L.b.items():
        put_named(vec, data.b[node], P.d_witness if len(node) == 1 else P.d_mult)
    for node in P.chain_nodes():
        if len(node) > 1:
            put_named(L.A[node], data.A[node], P.deg_A(node))
            put_named(L.B[node], data.B[node], P.deg_B(node))
    for key, vec in L.c.items():
        put_named(vec, data.c[key], P.d_mult)
        put_named(L.d[key], data.d[key], P.d_mult)
    Phi: Dict[Tuple[int, ...], AlgebraElement] = {}
    for k, vec in enumerate(L.phi):
        put_named(vec, cert.centers[k], P.d_center)
    for nu in P.center_exponents():
        x = fam.one()
        for k, e in enumerate(nu):
            x = x * cert.centers[k] ** e
        Phi[nu] = x
        put_named(L.Phi[nu], x, sum(nu) * P.d_center)
    put_named(L.D, data.D, P.d_den)
    G = {(): data.D}
    for node in P.recovery_nodes()[1:]:
        put_named(L.U[node], data.U[node], P.d_den)
        G[node] = data.U[node] * data.A[node]
        put_named(L.G[node], G[node], P.deg_G(node))
    H = {}
    for node in P.recovery_nodes():
        for nu in P.center_exponents():
            H[(node, nu)] = Phi[nu] * G[node]
            put_named(L.H[(node, nu)], H[(node, nu)], P.deg_H(node, nu))

    coeffs = _recovery_coefficients(cert, P)
    order = {}
    for k, x in enumerate(L.generators, start=1):
        try:
            j = next(t for t, g in enumerate(cert.generators) if g == x)
        except StopIteration:
            raise BoundsMismatch(f"generator {x} missing from the certificate") from None
        order[k] = j + 1
    for k in range(1, len(L.generators) + 1):
        Q = fam.zero()
        for node in P.recovery_nodes():
            for nu in P.center_exponents():
                lam, mu = coeffs.get((order[k], node, nu), (0, 0))
                if lam:
                    val[L.lam[(k, node, nu)]] = Fraction(lam)
                if mu:
                    val[L.mu[(k, node, nu)]] = Fraction(mu)
                    Q = Q + H[(node, nu)].scale(mu)
        put_named(L.Q[k - 1], Q, P.deg_Q())

    for vec, ts in L.t:
        x = elements[vec.name]
        coords = [val.get(v, Fraction(0)) for v in vec.ids]
        s0 = next((s for s, c in enumerate(coords) if c), None)
        if s0 is None:
            raise BoundsMismatch(f"{vec.name} vanishes")
        val[ts[s0]] = 1 / coords[s0]
    return sent, val


@dataclass
class AssignmentCheck:
    equations_ok: bool
    inequation_ok: bool
    first_failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.equations_ok and self.inequation_ok


def check_assignment(sent: ExistentialSentence, values, zero=0) -> AssignmentCheck:
    for k, eq in enumerate(sent.equations):
        if evaluate(eq, values, zero):
            label = sent.labels[k] if k < len(sent.labels) else f"equation {k}"
            return AssignmentCheck(False, False, label)
    ineq = not sent.inequations or any(evaluate(g, values, zero) for g in sent.inequations)
    return AssignmentCheck(True, ineq, None if ineq else "all inequations vanish")
