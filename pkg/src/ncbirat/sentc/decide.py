"""Deciding emitted sentences with the Groebner backend (toy scale)."""
from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from ..polycore import (LocallyClosedSystem, ResourceLimit, decide_locally_closed_nonempty,
                        field_for_characteristic, is_prime)
from .emit import ExistentialSentence
from .sparse import SPoly, add_term, substitute, to_poly, variables_of

SAT, UNSAT, INCONCLUSIVE = "SAT", "UNSAT", "INCONCLUSIVE"
DEFAULT_MAX_PAIRS = 20000
MAX_DECIDE_VARS = 60


def _reduce(p: SPoly, char: int) -> SPoly:
    if not char:
        return dict(p)
    return {m: c % char for m, c in p.items() if c % char}


def _unit_pivot(p: SPoly, char: int):
    """``(v, f)`` such that ``p = 0`` reads ``v = f * (p - coeff*v)``, with
    ``v`` occurring only linearly in one term whose coefficient is a unit."""
    counts: Dict[int, int] = {}
    for m in p:
        for v, _ in m:
            counts[v] = counts.get(v, 0) + 1
    for m, c in sorted(p.items()):
        if len(m) == 1 and m[0][1] == 1 and counts[m[0][0]] == 1:
            if char:
                return m[0][0], (-pow(c, -1, char)) % char
            if c in (1, -1):
                return m[0][0], -c
    return None


def presimplify(equations: List[SPoly], inequations: List[SPoly], char: int = 0,
                max_terms: int = 400) -> Tuple[List[SPoly], List[SPoly], bool]:
    """Eliminate variables that some equation defines as ``v = rest``.

    Only unit coefficients are used so the substitution is valid over every
    field of the given characteristic.  Returns ``(eqs, ineqs, contradiction)``.
    """
    eqs = [_reduce(e, char) for e in equations]
    ineqs = [_reduce(g, char) for g in inequations]
    changed = True
    while changed:
        changed = False
        eqs = [e for e in eqs if e]
        for k, e in enumerate(eqs):
            if len(e) == 1 and () in e:
                return [e], ineqs, True
            piv = _unit_pivot(e, char)
            if piv is None:
                continue
            v, f = piv
            rest: SPoly = {}
            for m, cc in e.items():
                if m != ((v, 1),):
                    add_term(rest, m, f * cc)
            rest = _reduce(rest, char)
            if len(rest) > max_terms:
                continue
            new = []
            for j, other in enumerate(eqs):
                if j == k:
                    continue
                new.append(_reduce(substitute(other, v, rest), char) if any(
                    w == v for m in other for w, _ in m) else other)
            ineqs = [_reduce(substitute(g, v, rest), char) for g in ineqs]
            eqs = new
            changed = True
            break
    for e in eqs:
        if len(e) == 1 and () in e:
            return [e], ineqs, True
    return eqs, ineqs, False


def decide_sentence(sent: ExistentialSentence, char: int = 0,
                    max_pairs: int = DEFAULT_MAX_PAIRS,
                    max_vars: int = MAX_DECIDE_VARS) -> str:
    """SAT, UNSAT or INCONCLUSIVE (resource limits) over the algebraic closure."""
    if char and not is_prime(char):
        raise ValueError(f"characteristic must be 0 or a prime, got {char}")
    eqs, ineqs, contradiction = presimplify(sent.equations, sent.inequations, char)
    if contradiction:
        return UNSAT
    if sent.inequations and not any(ineqs):
        return UNSAT
    if any(len(g) == 1 and () in g for g in ineqs):
        ineqs = [g for g in ineqs if len(g) == 1 and () in g][:1]
        if not eqs:
            return SAT
    used = set()
    for p in eqs + ineqs:
        used |= variables_of(p)
    if len(used) > max_vars:
        return INCONCLUSIVE
    renumber = {v: k for k, v in enumerate(sorted(used))}
    n = max(1, len(renumber))
    dom = field_for_characteristic(char)
    system = LocallyClosedSystem(n, [to_poly(e, renumber, n, dom) for e in eqs],
                                 [to_poly(g, renumber, n, dom) for g in ineqs if g], char)
    try:
        return SAT if decide_locally_closed_nonempty(system, max_pairs=max_pairs) else UNSAT
    except ResourceLimit:
        return INCONCLUSIVE
