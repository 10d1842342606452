"""Degree bounds for the existential sentence."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Any, Dict, List, Mapping, Tuple, Union

DEFAULT_CAP = 5000

Node = Tuple[int, ...]


class ProfileError(ValueError):
    def __init__(self, message: str, field_name: str = ""):
        super().__init__(f"{field_name}: {message}" if field_name else message)
        self.field = field_name


@dataclass(frozen=True)
class BoundProfile:
    """Bounds for one sentence.

    ``M`` caps the w-degree of recovery monomials and ``tuple_cap`` the length
    of product chains; ``center_degree`` caps the degree of recovery
    coefficients in the central elements.  The ``d_*`` fields are filtration
    degrees: witnesses, Ore multipliers, central elements and the common
    denominator.  Composite elements get their degrees from these.
    """

    m: int
    l: int
    M: int = 1
    tuple_cap: int = 1
    center_degree: int = 1
    d_witness: int = 1
    d_mult: int = 1
    d_center: int = 1
    d_den: int = 1
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise ProfileError("must be an integer", f.name)
            if v < 0:
                raise ProfileError("must be nonnegative", f.name)
        for name in ("M", "tuple_cap", "cap"):
            if getattr(self, name) < 1:
                raise ProfileError("must be at least 1", name)
        if self.l == 0 and self.center_degree:
            object.__setattr__(self, "center_degree", 0)

    # -- node sets -------------------------------------------------------------
    @property
    def chain_length(self) -> int:
        return min(self.M, self.tuple_cap)

    def recovery_nodes(self) -> List[Node]:
        """The empty product and every ordered w-monomial w_{i1} ... w_{ik}, i1 <= ... <= ik."""
        out: List[Node] = [()]
        for k in range(1, self.chain_length + 1):
            out.extend(combinations_with_replacement(range(1, 2 * self.m + 1), k))
        return out

    def pairs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(1, 2 * self.m + 1) for j in range(i + 1, 2 * self.m + 1)]

    def chain_nodes(self) -> List[Node]:
        """Nonempty nodes: recovery monomials plus both orders of every pair."""
        nodes = set(self.recovery_nodes()[1:])
        for i, j in self.pairs():
            nodes.update({(i,), (j,), (i, j), (j, i)})
        return sorted(nodes, key=lambda t: (len(t), t))

    def center_exponents(self) -> List[Tuple[int, ...]]:
        out = []
        for k in range(self.center_degree + 1):
            for combo in combinations_with_replacement(range(self.l), k):
                nu = [0] * self.l
                for c in combo:
                    nu[c] += 1
                out.append(tuple(nu))
        return out

    # -- element degrees ---------------------------------------------------------
    def deg_A(self, node: Node) -> int:
        if not node:
            return 0
        return self.d_witness if len(node) == 1 else self.d_mult + self.d_witness

    def deg_B(self, node: Node) -> int:
        if not node:
            return 0
        return self.d_witness + (len(node) - 1) * self.d_mult

    def deg_G(self, node: Node) -> int:
        return self.d_den + self.deg_A(node)

    def deg_H(self, node: Node, nu: Tuple[int, ...]) -> int:
        return sum(nu) * self.d_center + self.deg_G(node)

    def deg_Q(self) -> int:
        return max(self.deg_H(n, nu) for n in self.recovery_nodes()
                   for nu in self.center_exponents())

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


def profile_from_dict(doc: Mapping[str, Any]) -> BoundProfile:
    if not isinstance(doc, Mapping):
        raise ProfileError("bound profile must be a JSON object")
    known = {f.name for f in fields(BoundProfile)}
    for req in ("m", "l"):
        if req not in doc:
            raise ProfileError("missing required field", req)
    extra = set(doc) - known - {"N"}
    if extra:
        raise ProfileError(f"unknown field(s) {sorted(extra)}")
    return BoundProfile(**{k: v for k, v in doc.items() if k in known})


def load_profile(path: Union[str, Path]) -> BoundProfile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ProfileError(f"cannot read bound profile {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProfileError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
                           str(path)) from exc
    return profile_from_dict(doc)
